#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genviews/classifier.hpp"
#include "genviews/config.hpp"
#include "genviews/dataset.hpp"
#include "genviews/encoder.hpp"
#include "genviews/ensemble.hpp"
#include "genviews/pca.hpp"
#include "genviews/perturbation.hpp"
#include "genviews/projection.hpp"
#include "genviews/robustness.hpp"
#include "genviews/toy_generator.hpp"

namespace genviews {

struct PipelineOptions {
  bool force = false;  // recompute even when cached artifacts match
  int workers = 1;
  std::ostream* log = nullptr;  // progress messages; silent when null
};

struct ProjectStats {
  std::int64_t computed = 0;  // images optimised in this run
  std::int64_t cached = 0;    // images served from the latent cache
  std::int64_t optimizer_steps = 0;
};

// A perturbation choice as written in the config: method:granularity:sigma.
struct ViewMethod {
  PerturbationMethod method = PerturbationMethod::StyleMix;
  Granularity granularity = Granularity::Fine;
  double sigma = 0;

  std::string tag() const;
};
ViewMethod parse_view_method(const std::string& text);

// Runs the experiment stages on artifacts under the configured output
// directory. Every stage checks its inputs, skips work whose outputs already
// match the configuration and records the digests it used.
class Pipeline {
 public:
  Pipeline(ExperimentConfig cfg, PipelineOptions opts = {});

  const ExperimentConfig& config() const { return cfg_; }
  const std::filesystem::path& out() const { return out_; }
  std::uint64_t seed() const { return seed_; }

  void synth_data();
  void train_generator();
  void train_encoder();
  ProjectStats project();
  void fit_pca();
  void train_classifier();
  void finetune_classifier();
  void eval_ensemble();
  void sweep(const std::string& dimension);  // alpha | sigma | steps | ensemble-size
  void attack_eval();
  void report();

  // Artifacts. Missing ones raise MissingInputs, stale ones DigestMismatch.
  const Dataset& dataset();
  std::shared_ptr<ToyStyleGenerator> generator();
  std::shared_ptr<Encoder> encoder();
  std::shared_ptr<Classifier> classifier();
  const PCABasis& pca();

  Digest data_digest() const;
  Digest generator_digest() const;
  Digest encoder_digest() const;
  Digest classifier_digest() const;
  Digest pca_digest() const;

  LabelTask task() const;
  ProjectionConfig projection_config() const;
  ViewMethod primary_method() const;
  PerturbationSpec perturbation_spec(const ViewMethod& m) const;
  // Classifier input: object centred, borders replicated.
  torch::Tensor classifier_image(const ShapeSample& s) const;
  LabeledImages labeled(Split split);
  // Projections of a split at the given step budget (default: configured).
  std::vector<ProjectionResult> projections(Split split, std::optional<std::int64_t> steps = std::nullopt);
  // Image and view logits for every image of a split, cached on disk.
  std::vector<LogitsRecord> records(Split split, const ViewMethod& m, std::optional<std::int64_t> steps = std::nullopt);

 private:
  void say(const std::string& msg) const;
  bool stamp_matches(const std::string& stage, const Digest& d) const;
  void write_stamp(const std::string& stage, const Digest& d) const;
  void write_report(const std::string& name, const std::string& text) const;
  void write_plot(const std::string& name, const std::vector<double>& xs, const std::vector<double>& ys) const;
  Digest eval_digest() const;
  std::vector<double> alpha_grid() const;

  ExperimentConfig cfg_;
  PipelineOptions opts_;
  std::filesystem::path out_;
  std::uint64_t seed_;
  std::optional<Dataset> dataset_;
  std::shared_ptr<ToyStyleGenerator> generator_;
  std::shared_ptr<Encoder> encoder_;
  std::shared_ptr<Classifier> classifier_;
  std::optional<PCABasis> pca_;
};

}  // namespace genviews
