#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/generator.hpp"
#include "genviews/perturbation.hpp"
#include "genviews/rng.hpp"

namespace genviews {

enum class ClassifierArch { CNN, Linear };
std::string_view to_string(ClassifierArch a);
ClassifierArch parse_arch(std::string_view name);

struct ClassifierSpec {
  std::int64_t classes = 3;
  std::int64_t channels = 3;
  std::int64_t resolution = 32;
  ClassifierArch arch = ClassifierArch::CNN;
  std::int64_t features = 16;  // first conv stage width, doubled per stage up to 4x

  Digest digest() const;
};

class ClassifierNetImpl : public torch::nn::Module {
 public:
  explicit ClassifierNetImpl(const ClassifierSpec& spec);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::Sequential body_{nullptr};
};
TORCH_MODULE(ClassifierNet);

class Classifier {
 public:
  Classifier(const ClassifierSpec& spec, std::uint64_t init_seed);
  Classifier(const Classifier& other);  // deep copy of weights
  Classifier& operator=(const Classifier&) = delete;

  const ClassifierSpec& spec() const { return spec_; }
  ClassifierNet& net() { return net_; }
  Digest digest() const { return digest_; }
  const Digest& training_digest() const { return training_digest_; }
  void set_training_digest(const Digest& d) { training_digest_ = d; }

  // Differentiable logits for a batch; training mode is left to the caller.
  torch::Tensor forward(const torch::Tensor& images) const;

  void refresh_digest();
  void save(const std::filesystem::path& path) const;
  static std::shared_ptr<Classifier> load(const std::filesystem::path& path);

 private:
  ClassifierSpec spec_;
  ClassifierNet net_{nullptr};
  Digest digest_;
  Digest training_digest_;
};

using ClassifierPtr = std::shared_ptr<const Classifier>;

// [L] float32 logits of one [C, R, R] image, evaluated as a batch of one.
torch::Tensor predict_logits(const Classifier& c, const torch::Tensor& image);
// [n, L] logits, each image evaluated on its own.
torch::Tensor predict_all(const Classifier& c, const torch::Tensor& images);

struct CropConfig {
  double scale_min = 0.8;  // crop area fraction
  double scale_max = 1.0;
  bool flip = true;
};

// Square crop of side round(R * sqrt(scale)) at a uniform position, resized
// back to R with bilinear interpolation, optionally flipped.
torch::Tensor random_resized_crop(const torch::Tensor& image, const CropConfig& cfg, Rng& rng);

// Logits [count, L] for seeded random resized crops of `image`.
torch::Tensor predict_crops(const Classifier& c, const torch::Tensor& image, std::int64_t count, std::uint64_t seed,
                            const CropConfig& cfg = {});

struct LabeledImages {
  torch::Tensor images;  // [n, C, R, R]
  torch::Tensor labels;  // [n] int64
  std::vector<std::string> ids;

  std::int64_t size() const { return images.defined() ? images.size(0) : 0; }
};

// Images standing in for the real ones of a batch: indices into the training
// set and a per-batch seed -> [k, C, R, R].
using ImageProvider = std::function<torch::Tensor(const std::vector<std::int64_t>& indices, std::uint64_t seed)>;

enum class SourceKind { Real, Reconstruction, Perturbed };
std::string_view to_string(SourceKind k);
SourceKind parse_source(std::string_view name);

struct TrainSource {
  SourceKind kind = SourceKind::Real;
  double mix_ratio = 0.5;  // probability a finetuning batch is generated
  PerturbationSpec perturbation;

  Digest digest() const;
};

// Provider synthesizing G(w*) or G(w~) for training images. Throws
// MissingInputs naming every image without a latent.
ImageProvider make_view_provider(const GeneratorPtr& g, const std::vector<std::optional<StyleLatent>>& latents,
                                 const std::vector<std::string>& ids, const TrainSource& source,
                                 const PCABasis* basis = nullptr);

struct ClassifierTrainingConfig {
  ClassifierSpec spec;
  std::int64_t epochs = 40;
  std::int64_t batch_size = 64;
  double learning_rate = 1e-3;
  std::int64_t patience = 5;  // epochs without validation improvement
  CropConfig augment;
  bool augment_enabled = true;
  std::uint64_t seed = 4;

  Digest digest() const;
};

struct ClassifierTrainingResult {
  std::shared_ptr<Classifier> classifier;
  std::string log_csv;  // epoch,train_loss,val_acc
  double best_val_accuracy = 0;
  std::int64_t best_epoch = 0;
};

double accuracy(const Classifier& c, const LabeledImages& data);

// Cross-entropy training from scratch. Every batch comes from `provider` when
// source is not real. The weights with the best validation accuracy are
// returned; without validation data the final weights are.
ClassifierTrainingResult train_classifier(const LabeledImages& train, const LabeledImages& val,
                                          const ClassifierTrainingConfig& cfg, SourceKind source = SourceKind::Real,
                                          const ImageProvider& provider = {});

// Continues training a copy of `base`; each batch is generated with
// probability mix_ratio.
ClassifierTrainingResult finetune_on_views(const Classifier& base, const LabeledImages& train, const LabeledImages& val,
                                           const ClassifierTrainingConfig& cfg, double mix_ratio,
                                           const ImageProvider& provider);

}  // namespace genviews
