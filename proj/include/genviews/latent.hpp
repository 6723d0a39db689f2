#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <torch/torch.h>

namespace genviews {

// Half-open range of style blocks [begin, end).
struct BlockRange {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t size() const { return end - begin; }
  bool contains(std::int64_t row) const { return row >= begin && row < end; }
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

enum class Granularity { Coarse, Middle, Fine };

std::string_view to_string(Granularity g);
Granularity parse_granularity(std::string_view name);

// Coarse / middle / fine subdivision of the style blocks.
struct BlockPartition {
  BlockRange coarse;
  BlockRange middle;
  BlockRange fine;

  const BlockRange& range(Granularity g) const;
  std::int64_t blocks() const { return fine.end; }

  // Throws InvalidDimension unless the ranges are non-empty, contiguous and
  // cover exactly [0, blocks).
  void validate(std::int64_t blocks) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

// 4:6:8 split (exact for 18 blocks), largest-remainder rounding otherwise,
// every range forced non-empty.
BlockPartition default_partition(std::int64_t blocks);

// B x D matrix of per-block style codes, stored as a contiguous float32 CPU
// tensor. Instances are immutable: every operation returns a new latent.
class StyleLatent {
 public:
  StyleLatent() = default;
  // Validates shape (B >= 3, D >= 1) and finiteness; copies the data.
  explicit StyleLatent(const torch::Tensor& values);

  static StyleLatent zeros(std::int64_t blocks, std::int64_t dims);

  std::int64_t blocks() const { return values_.size(0); }
  std::int64_t dims() const { return values_.size(1); }
  bool empty() const { return !values_.defined(); }

  // Read-only view; callers must not write through it.
  const torch::Tensor& tensor() const { return values_; }
  float at(std::int64_t row, std::int64_t col) const;

  bool bit_equal(const StyleLatent& other) const;

 private:
  torch::Tensor values_;
};

// Rows in p.range(g) come from w_rand, all others from w_star.
StyleLatent style_mix(const StyleLatent& w_star, const StyleLatent& w_rand, Granularity g,
                      const BlockPartition& p);

// Adds `delta` to the rows in `rows`. `delta` is either a D-vector broadcast
// over the rows, a rows.size() x D block, or a full B x D matrix whose rows in
// `rows` are used.
StyleLatent add_block_delta(const StyleLatent& w, const torch::Tensor& delta, BlockRange rows);

}  // namespace genviews
