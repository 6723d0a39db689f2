#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <torch/torch.h>

#include "genviews/digest.hpp"

namespace genviews {

// Little-endian byte serialization shared by the binary containers.
class ByteWriter {
 public:
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void str(std::string_view s);
  void raw(const void* data, std::size_t size);
  void digest(const Digest& d) { raw(d.bytes.data(), d.bytes.size()); }

  const std::vector<std::uint8_t>& bytes() const { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  std::string str(std::size_t max_len = 1 << 20);
  void raw(void* out, std::size_t size);
  Digest digest();

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return size_ - pos_; }

 private:
  void need(std::size_t n) const;

  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

std::uint32_t crc32_of(const std::uint8_t* data, std::size_t size);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

// Versioned weight container: spec header followed by named float32 arrays.
struct Checkpoint {
  static constexpr std::uint32_t kVersion = 1;

  std::string kind;
  std::uint32_t blocks = 0;
  std::uint32_t dims = 0;
  std::uint32_t resolution = 0;
  std::uint32_t channels = 0;
  Digest config_digest;
  std::map<std::string, std::string> meta;
  std::vector<std::pair<std::string, torch::Tensor>> arrays;

  const torch::Tensor& array(std::string_view name) const;
  const std::string& meta_value(std::string_view key) const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

// Parameters and buffers of a module as named arrays, and the reverse.
std::vector<std::pair<std::string, torch::Tensor>> module_arrays(const torch::nn::Module& module);
void load_module_arrays(torch::nn::Module& module, const Checkpoint& ckpt);

// Digest over every parameter and buffer value of a module.
Digest module_digest(const torch::nn::Module& module);

}  // namespace genviews
