#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "genviews/projection.hpp"

namespace genviews {

// Append-only store of projected latents for one dataset split, keyed by
// (image id, projection config digest). Safe to share between threads and
// between processes appending to the same file.
class LatentCache {
 public:
  struct Report {
    std::int64_t records = 0;
    std::int64_t corrupt = 0;        // records skipped on checksum failure
    std::int64_t trailing_bytes = 0;  // unparseable tail
    std::vector<std::string> problems;
  };

  // Creates the file with a header if absent. Throws CorruptFile on a bad
  // header and InvalidDimension if B or D disagree with the file.
  LatentCache(std::filesystem::path path, std::int64_t blocks, std::int64_t dims);

  void store(const ProjectionResult& result);
  std::optional<ProjectionResult> load(const std::string& image_id, const Digest& config_digest);

  Report report();
  const std::filesystem::path& path() const { return path_; }

 private:
  struct Entry {
    std::vector<float> w;
    float pixel, perceptual, latent;
    std::uint32_t steps;
  };

  void refresh_locked();

  std::filesystem::path path_;
  std::int64_t blocks_;
  std::int64_t dims_;
  std::mutex mutex_;
  std::uint64_t scanned_ = 0;  // bytes of the file already indexed
  std::map<std::string, Entry> index_;
  Report report_;
};

}  // namespace genviews
