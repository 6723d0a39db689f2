#pragma once

#include <vector>

#include <torch/torch.h>

#include "genviews/digest.hpp"

namespace genviews {

enum class DistanceMode { Absolute, Squared };

struct MetricConfig {
  double delta = 1e-3;                        // Charbonnier smoothing
  int pyramid_levels = 3;                     // scales 1, 1/2, 1/4
  std::vector<double> level_weights{1.0, 1.0, 1.0};
  DistanceMode mode = DistanceMode::Absolute;  // pixel term: Charbonnier or squared
  double pixel_weight = 1.0;
  double perceptual_weight = 1.0;

  void validate() const;
  Digest digest() const;
};

// Per-image loss components for a batch. Tensors are [n] and differentiable.
struct LossTerms {
  torch::Tensor pixel;
  torch::Tensor perceptual;
  torch::Tensor total;
};

// x, y: [n, C, H, W]; mask: [n, 1, H, W] or [1, H, W] (broadcast). Computes in
// y's dtype. Throws DegenerateMask if any image's mask has no positive entry.
LossTerms image_loss_terms(const torch::Tensor& x, const torch::Tensor& y, const torch::Tensor& mask,
                           const MetricConfig& cfg);

// Single-image helpers on [C, H, W] images and [1, H, W] masks.

// Mask-weighted mean of sqrt(d^2 + delta^2) - delta, normalised by mask mass.
double masked_l1(const torch::Tensor& x, const torch::Tensor& y, const torch::Tensor& mask, double delta);

// Weighted sum over pyramid levels of masked mean squared differences between
// mask-normalised low-pass, downsampled images.
double perceptual_distance(const torch::Tensor& x, const torch::Tensor& y, const torch::Tensor& mask,
                           const MetricConfig& cfg);

struct ImageLoss {
  double value = 0;
  double pixel = 0;
  double perceptual = 0;
  torch::Tensor grad;  // d value / d y, shaped like y
};

ImageLoss image_loss(const torch::Tensor& x, const torch::Tensor& y, const torch::Tensor& mask,
                     const MetricConfig& cfg);

}  // namespace genviews
