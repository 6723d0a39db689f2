#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/encoder.hpp"
#include "genviews/generator.hpp"
#include "genviews/metrics.hpp"
#include "genviews/minimize.hpp"

namespace genviews {

enum class InitMode { Encoder, MeanW, Zeros };
std::string_view to_string(InitMode m);
InitMode parse_init_mode(std::string_view name);

struct ProjectionConfig {
  double lambda = 0.5;
  InitMode init = InitMode::Encoder;
  MinimizerConfig optimizer;  // optimizer.max_iterations is the step budget
  MetricConfig metric;
  std::int64_t chunk_size = 50;  // images optimised together
  std::int64_t mean_w_samples = 10000;
  std::uint64_t mean_w_seed = 3;

  std::int64_t steps() const { return optimizer.max_iterations; }
  void validate() const;
  // Covers everything that influences w*: settings, generator and encoder.
  Digest digest(const Generator& g, const Encoder* encoder) const;
};

struct ProjectionLosses {
  double pixel = 0;
  double perceptual = 0;
  double latent = 0;  // unweighted mean squared distance to w_init
  double image = 0;   // weighted pixel + perceptual
};

// Iterate recorded at a snapshot iteration count, reported like a final result.
struct ProjectionSnapshot {
  StyleLatent w;
  ProjectionLosses losses;
  std::int64_t steps = 0;
};

struct ProjectionResult {
  std::string image_id;
  StyleLatent w_star;
  StyleLatent w_init;  // empty when loaded from a cache
  ProjectionLosses initial;
  ProjectionLosses final;
  std::int64_t steps = 0;
  Termination status = Termination::MaxIterations;
  torch::Tensor mask;  // [1, R, R]; undefined when loaded from a cache
  Digest config_digest;
  // Iterates at optimizer.snapshots counts; each equals the result of a run
  // whose step budget is that count.
  std::map<std::int64_t, ProjectionSnapshot> snapshots;
};

// Projects every image in `images` ([n, C, R, R]) with masks [n, 1, R, R].
// Images are optimised in chunks of cfg.chunk_size, each with its own
// optimizer state.
std::vector<ProjectionResult> project_batch(const torch::Tensor& images, const torch::Tensor& masks,
                                            const std::vector<std::string>& ids, const Generator& g,
                                            const ProjectionConfig& cfg, const Encoder* encoder);

ProjectionResult project(const torch::Tensor& image, const torch::Tensor& mask, const Generator& g,
                         const ProjectionConfig& cfg, const Encoder* encoder, const std::string& image_id = "");

// image_id,init_loss,final_l1,final_perceptual,final_latent,steps
std::string projection_csv(const std::vector<ProjectionResult>& results);

}  // namespace genviews
