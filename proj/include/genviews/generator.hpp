#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <torch/torch.h>

#include "genviews/digest.hpp"
#include "genviews/latent.hpp"

namespace genviews {

struct GeneratorSpec {
  std::int64_t blocks = 0;      // B
  std::int64_t dims = 0;        // D
  std::int64_t resolution = 0;  // pixels per side
  std::int64_t channels = 0;    // image channels
  BlockPartition partition;

  std::int64_t pixels() const { return channels * resolution * resolution; }
  // Throws InvalidDimension on a non power-of-two resolution below 16, bad
  // block/channel counts or an inconsistent partition.
  void validate() const;
};

// Mapping network plus synthesis network. Implementations must be
// deterministic and safe for concurrent const use.
class Generator {
 public:
  virtual ~Generator() = default;

  virtual const GeneratorSpec& spec() const = 0;

  // z [n, D] -> w [n, B, D] with identical rows per sample. Differentiable.
  virtual torch::Tensor map_batch(const torch::Tensor& z) const = 0;

  // w [n, B, D] -> images [n, C, R, R] before clamping. Differentiable in w;
  // may compute in a wider dtype than float32.
  virtual torch::Tensor synthesize_raw(const torch::Tensor& w) const = 0;

  // Identifies weights and architecture; used in cache digests.
  virtual Digest digest() const = 0;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

// `count` standard-normal D-vectors as a [count, D] tensor; deterministic in
// (seed, count).
torch::Tensor sample_z(const Generator& g, std::uint64_t seed, std::int64_t count);

StyleLatent map_to_w(const Generator& g, const torch::Tensor& z);

// Clamped float32 image [C, R, R]. Always evaluated as a batch of one so the
// result does not depend on what else is being synthesized.
torch::Tensor synthesize(const Generator& g, const StyleLatent& w);
torch::Tensor synthesize_all(const Generator& g, const std::vector<StyleLatent>& ws);

// Mean of map_to_w over `num_samples` sampled codes.
StyleLatent mean_w(const Generator& g, std::int64_t num_samples, std::uint64_t seed);

// Affine generator x = A vec(w) + b with identity mapping (rows of w equal z).
// Computes in float64; used as a closed-form projection oracle.
class LinearOracleGenerator final : public Generator {
 public:
  // A: [P, B*D], b: [P] with P = channels * resolution^2. Throws
  // InvalidDimension on shape mismatch or if A lacks full column rank.
  LinearOracleGenerator(GeneratorSpec spec, torch::Tensor A, torch::Tensor b);

  // Gaussian A scaled so outputs stay near b = 0.5.
  static std::shared_ptr<LinearOracleGenerator> random(std::int64_t blocks, std::int64_t dims,
                                                       std::int64_t resolution, std::int64_t channels,
                                                       std::uint64_t seed);

  const GeneratorSpec& spec() const override { return spec_; }
  torch::Tensor map_batch(const torch::Tensor& z) const override;
  torch::Tensor synthesize_raw(const torch::Tensor& w) const override;
  Digest digest() const override;

  const torch::Tensor& matrix() const { return A_; }
  const torch::Tensor& offset() const { return b_; }

 private:
  GeneratorSpec spec_;
  torch::Tensor A_;
  torch::Tensor b_;
};

}  // namespace genviews
