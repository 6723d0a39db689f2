#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include <torch/torch.h>

#include "genviews/generator.hpp"
#include "genviews/metrics.hpp"

namespace genviews {

// Convolutional network: (masked image, mask) -> B x D latent, predicted as an
// offset from the generator's mean latent.
class EncoderNetImpl : public torch::nn::Module {
 public:
  EncoderNetImpl(const GeneratorSpec& spec, std::int64_t features);
  // images [n, C, R, R], masks [n, 1, R, R] -> [n, B, D]
  torch::Tensor forward(const torch::Tensor& images, const torch::Tensor& masks);

  torch::Tensor w_avg;

 private:
  torch::nn::Sequential features_{nullptr};
  torch::nn::Sequential head_{nullptr};
  std::int64_t blocks_;
  std::int64_t dims_;
};
TORCH_MODULE(EncoderNet);

class Encoder {
 public:
  Encoder(const GeneratorSpec& spec, std::int64_t features, const StyleLatent& w_avg, std::uint64_t init_seed);

  const GeneratorSpec& spec() const { return spec_; }
  std::int64_t features() const { return features_; }
  Digest digest() const { return digest_; }
  EncoderNet& net() { return net_; }

  // Batched, no gradient. masks may be undefined (all pixels valid).
  torch::Tensor encode_batch(const torch::Tensor& images, const torch::Tensor& masks) const;

  void refresh_digest();
  void save(const std::filesystem::path& path, const Digest& training_digest) const;
  static std::shared_ptr<Encoder> load(const std::filesystem::path& path);

 private:
  GeneratorSpec spec_;
  std::int64_t features_;
  EncoderNet net_{nullptr};
  Digest digest_;
};

using EncoderPtr = std::shared_ptr<const Encoder>;

// Single image [C, R, R], evaluated as a batch of one; mask optional.
StyleLatent encode(const Encoder& encoder, const torch::Tensor& image, const torch::Tensor& mask = {});

struct EncoderTrainingConfig {
  std::int64_t steps = 2000;
  std::int64_t batch_size = 32;
  double learning_rate = 1e-3;
  double lambda = 1.0;              // latent supervision weight
  double mixing_probability = 0.5;  // style-mixed training latents
  std::int64_t max_border = 6;      // widest masked-out border strip
  std::int64_t features = 32;
  std::int64_t mean_w_samples = 10000;
  MetricConfig metric;
  std::uint64_t seed = 2;
  std::int64_t log_every = 50;

  Digest digest() const;
};

struct EncoderTrainingResult {
  std::shared_ptr<Encoder> encoder;
  std::string log_csv;  // step,loss,image_loss,latent_loss
};

// Minimises image_loss(x, G(E(x))) + lambda * mean((w - E(x))^2) over freshly
// sampled latents w and images x = G(w) with random missing-border masks.
EncoderTrainingResult train_encoder(const GeneratorPtr& generator, const EncoderTrainingConfig& cfg);

}  // namespace genviews
