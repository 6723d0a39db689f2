#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/generator.hpp"
#include "genviews/latent.hpp"
#include "genviews/pca.hpp"

namespace genviews {

enum class PerturbationMethod { Isotropic, PCA, StyleMix };
std::string_view to_string(PerturbationMethod m);
PerturbationMethod parse_perturbation(std::string_view name);

struct PerturbationSpec {
  PerturbationMethod method = PerturbationMethod::StyleMix;
  Granularity granularity = Granularity::Fine;
  double sigma = 0.0;       // isotropic std, or PCA coefficient range
  std::int64_t n = 20;      // PCA components to draw from
  std::uint64_t seed = 0;

  void validate() const;
  Digest digest() const;
};

// w* + sigma * eps on the selected rows; eps standard normal per entry.
std::vector<StyleLatent> sample_isotropic(const StyleLatent& w_star, const PerturbationSpec& spec,
                                          const BlockPartition& partition, std::int64_t count);

// w* + beta * lambda_d * v_d on the selected rows, d uniform over the top n
// components and beta uniform in [-sigma, sigma].
std::vector<StyleLatent> sample_pca(const StyleLatent& w_star, const PCABasis& basis, const PerturbationSpec& spec,
                                    const BlockPartition& partition, std::int64_t count);

// Rows of the selected granularity replaced by those of a freshly mapped code.
std::vector<StyleLatent> sample_stylemix(const StyleLatent& w_star, const Generator& g, const PerturbationSpec& spec,
                                         const BlockPartition& partition, std::int64_t count, std::uint64_t seed);

// Dispatches on spec.method; `basis` is required for PCA. Sample i depends
// only on (spec.seed, i).
std::vector<StyleLatent> perturb(const StyleLatent& w_star, const Generator& g, const PerturbationSpec& spec,
                                 std::int64_t count, const PCABasis* basis = nullptr);

// N synthesized views [N, C, R, R] of perturbed copies of w_star.
torch::Tensor generate_views(const StyleLatent& w_star, const Generator& g, const PerturbationSpec& spec,
                             std::int64_t N = 31, const PCABasis* basis = nullptr);

}  // namespace genviews
