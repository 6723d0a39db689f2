#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace genviews {

// SHA-256 digest identifying a configuration or an artifact.
struct Digest {
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const;
  static Digest from_hex(std::string_view hex);

  friend bool operator==(const Digest&, const Digest&) = default;
};

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(std::string_view text);

// Incremental hashing over mixed content.
class DigestBuilder {
 public:
  DigestBuilder();
  ~DigestBuilder();
  DigestBuilder(const DigestBuilder&) = delete;
  DigestBuilder& operator=(const DigestBuilder&) = delete;

  DigestBuilder& add(std::string_view key, std::string_view value);
  DigestBuilder& add(std::string_view key, double value);
  DigestBuilder& add(std::string_view key, std::int64_t value);
  DigestBuilder& add(std::string_view key, const Digest& value);
  DigestBuilder& add_bytes(std::span<const std::uint8_t> data);
  Digest finish();

 private:
  void* ctx_;
};

}  // namespace genviews
