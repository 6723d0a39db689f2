#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include <torch/torch.h>

#include "genviews/generator.hpp"

namespace genviews {

struct ToyGeneratorConfig {
  std::int64_t dims = 64;
  std::int64_t resolution = 32;
  std::int64_t channels = 3;
  std::int64_t mapping_layers = 3;
  std::int64_t max_features = 64;

  // Style blocks implied by the synthesis layout: one conv at 4x4, two per
  // higher resolution, plus the output layer.
  std::int64_t blocks() const;
  Digest digest() const;
};

// Modulated 3x3 (or 1x1) convolution: the input is scaled by a per-sample
// style, convolved with a shared kernel and optionally demodulated.
class ModulatedConvImpl : public torch::nn::Module {
 public:
  ModulatedConvImpl(std::int64_t in, std::int64_t out, std::int64_t kernel, std::int64_t style_dims, bool demodulate,
                    bool activate);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& style);

 private:
  torch::nn::Linear affine_{nullptr};
  torch::Tensor weight_;
  torch::Tensor bias_;
  std::int64_t kernel_;
  bool demodulate_;
  bool activate_;
};
TORCH_MODULE(ModulatedConv);

class MappingNetworkImpl : public torch::nn::Module {
 public:
  MappingNetworkImpl(std::int64_t dims, std::int64_t layers);
  torch::Tensor forward(const torch::Tensor& z);

 private:
  torch::nn::ModuleList layers_;
};
TORCH_MODULE(MappingNetwork);

class SynthesisNetworkImpl : public torch::nn::Module {
 public:
  explicit SynthesisNetworkImpl(const ToyGeneratorConfig& cfg);
  // w: [n, B, D] -> [n, C, R, R], unclamped.
  torch::Tensor forward(const torch::Tensor& w);

 private:
  torch::Tensor constant_;
  torch::nn::ModuleList convs_;
  std::vector<bool> upsample_before_;
  ModulatedConv to_rgb_{nullptr};
};
TORCH_MODULE(SynthesisNetwork);

class ToyStyleNetImpl : public torch::nn::Module {
 public:
  explicit ToyStyleNetImpl(const ToyGeneratorConfig& cfg);
  MappingNetwork mapping{nullptr};
  SynthesisNetwork synthesis{nullptr};
};
TORCH_MODULE(ToyStyleNet);

// Style-based toy generator. Holds frozen weights; const methods are safe to
// call concurrently.
class ToyStyleGenerator final : public Generator {
 public:
  explicit ToyStyleGenerator(const ToyGeneratorConfig& cfg, std::uint64_t init_seed = 0);

  const GeneratorSpec& spec() const override { return spec_; }
  torch::Tensor map_batch(const torch::Tensor& z) const override;
  torch::Tensor synthesize_raw(const torch::Tensor& w) const override;
  Digest digest() const override;

  const ToyGeneratorConfig& config() const { return cfg_; }
  ToyStyleNet& net() { return net_; }
  const ToyStyleNet& net() const { return net_; }

  // Recomputes the cached digest after weights change.
  void refresh_digest();

  void save(const std::filesystem::path& path, const Digest& training_digest) const;
  static std::shared_ptr<ToyStyleGenerator> load(const std::filesystem::path& path);

 private:
  ToyGeneratorConfig cfg_;
  GeneratorSpec spec_;
  ToyStyleNet net_{nullptr};
  Digest digest_;
};

class DiscriminatorImpl : public torch::nn::Module {
 public:
  DiscriminatorImpl(std::int64_t channels, std::int64_t resolution, std::int64_t max_features);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::Sequential body_{nullptr};
};
TORCH_MODULE(Discriminator);

struct GeneratorTrainingConfig {
  std::int64_t steps = 4000;
  std::int64_t batch_size = 32;
  double learning_rate = 2e-3;
  double r1_gamma = 1.0;
  double ema_decay = 0.995;
  double mixing_probability = 0.5;
  std::uint64_t seed = 1;
  std::int64_t log_every = 50;

  Digest digest() const;
};

struct GeneratorTrainingResult {
  std::shared_ptr<ToyStyleGenerator> generator;
  std::string log_csv;  // step,d_loss,g_loss,r1
};

// Adversarial training (non-saturating loss, R1 penalty on reals, EMA of the
// generator weights) on `images` [N, C, R, R]. Zero steps returns the
// initialised generator. Non-finite losses raise Divergence after writing the
// last finite state to `abort_checkpoint` when given.
GeneratorTrainingResult train_toy_generator(const torch::Tensor& images, const ToyGeneratorConfig& arch,
                                            const GeneratorTrainingConfig& cfg,
                                            const std::filesystem::path& abort_checkpoint = {});

}  // namespace genviews
