#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/classifier.hpp"
#include "genviews/encoder.hpp"
#include "genviews/perturbation.hpp"
#include "genviews/projection.hpp"

namespace genviews {

enum class AttackKind { FGSM, PGD };
std::string_view to_string(AttackKind k);
AttackKind parse_attack(std::string_view name);

struct AttackConfig {
  AttackKind kind = AttackKind::PGD;
  double epsilon = 8.0 / 255.0;  // l-inf budget in [0, 1] pixel units
  std::int64_t steps = 10;
  double step_size = 2.0 / 255.0;
  std::uint64_t seed = 0;

  void validate() const;
  Digest digest() const;
};

// Gradient of the cross-entropy loss wrt one [C, R, R] image.
torch::Tensor input_gradient(const Classifier& c, const torch::Tensor& image, std::int64_t label);

// clamp(x + eps * sign(grad), 0, 1), with |x' - x| <= eps exactly.
torch::Tensor fgsm(const Classifier& c, const torch::Tensor& image, std::int64_t label, double epsilon);

// Iterates x <- Proj(x + step_size * sign(grad)) onto the eps ball and [0, 1].
// When `iterates` is given every iterate is appended to it.
torch::Tensor pgd(const Classifier& c, const torch::Tensor& image, std::int64_t label, const AttackConfig& cfg,
                  std::vector<torch::Tensor>* iterates = nullptr);

torch::Tensor attack(const Classifier& c, const torch::Tensor& image, std::int64_t label, const AttackConfig& cfg);

// Largest |a - b| evaluated in float64.
double linf_distance(const torch::Tensor& a, const torch::Tensor& b);

enum class CorruptionKind { GaussianBlur, GaussianNoise };
std::string_view to_string(CorruptionKind k);
CorruptionKind parse_corruption(std::string_view name);

// Normalised 1-D kernel exp(-i^2 / (2 sigma^2)) for i in [-r, r], r = ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);

// Blur uses replicate padding; noise adds sigma * N(0, 1) and clamps to [0, 1].
// sigma = 0 returns the input unchanged.
torch::Tensor corrupt(const torch::Tensor& image, CorruptionKind kind, double sigma, std::uint64_t seed);

struct DefenseConfig {
  ProjectionConfig projection;
  PerturbationSpec views;  // style-mixing by default
  std::int64_t N = 31;
  double alpha = 0.5;
  std::int64_t image_crops = 16;
  std::int64_t view_crops = 16;
  CropConfig crops;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kDefenseConditions[4] = {"image", "reconstruction", "stylemix_ensemble", "combined"};

struct DefenseResult {
  std::map<std::string, torch::Tensor> logits;  // condition -> [L] float64
  ProjectionResult projection;
};

// Works only from the corrupted input and its validity mask (may be
// undefined): projects it (or takes `precomputed`, a projection of the same
// input), then classifies the input,
// its reconstruction, the style-mix ensemble and the crop-mixed ensemble.
DefenseResult defend_and_ensemble(const torch::Tensor& corrupted, const torch::Tensor& mask, const Generator& g, const Encoder* encoder,
                                  const Classifier& c, const DefenseConfig& cfg, const std::string& image_id = "",
                                  const ProjectionResult* precomputed = nullptr);

// condition,accuracy
std::string robustness_csv(const std::vector<std::pair<std::string, double>>& rows, const std::string& config_digest,
                           std::uint64_t seed);

}  // namespace genviews
