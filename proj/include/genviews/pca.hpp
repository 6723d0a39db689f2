#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <torch/torch.h>

#include "genviews/generator.hpp"

namespace genviews {

struct PCABasis {
  torch::Tensor mean;         // [D] float64
  torch::Tensor directions;   // [n, D] float64, unit rows
  torch::Tensor eigenvalues;  // [n] float64, descending
  std::int64_t sample_count = 0;
  std::string warning;  // set when fewer than the requested components exist

  std::int64_t components() const { return directions.defined() ? directions.size(0) : 0; }
  std::int64_t dims() const { return directions.size(1); }

  void save(const std::filesystem::path& path, const Digest& config_digest) const;
  static PCABasis load(const std::filesystem::path& path);
};

// PCA of the rows of `samples` ([N, D]) using the unbiased sample covariance.
// Components whose eigenvalue is negligible relative to the largest are
// dropped with a warning. Directions are sign-normalised so the entry of
// largest magnitude is positive.
PCABasis fit_pca_samples(const torch::Tensor& samples, std::int64_t n);

// PCA of mapped latent rows M(z) for `num_samples` codes.
PCABasis fit_pca(const Generator& g, std::int64_t num_samples, std::int64_t n, std::uint64_t seed);

}  // namespace genviews
