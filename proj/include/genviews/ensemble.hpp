#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <torch/torch.h>

namespace genviews {

struct LogitsRecord {
  std::string image_id;
  torch::Tensor image_logits;  // [L]
  torch::Tensor view_logits;   // [N, L]
  double recon_distance = 0;   // perceptual distance of the reconstruction
  std::int64_t label = 0;
};

// (1 - alpha) * y_img + alpha * mean(views), in float64. alpha = 0 returns
// y_img and alpha = 1 the view mean exactly.
torch::Tensor ensemble_logits(const torch::Tensor& image_logits, const torch::Tensor& view_logits, double alpha);

// Index of the first maximal entry.
std::int64_t argmax_label(const torch::Tensor& logits);

// Accuracy with the ensemble formed from the first `views` views of every
// record (all views when negative). views == 0 gives standard accuracy.
double ensemble_accuracy(const std::vector<LogitsRecord>& records, double alpha, std::int64_t views = -1);
double standard_accuracy(const std::vector<LogitsRecord>& records);

std::vector<double> default_alpha_grid();  // 0, 0.1, ..., 1

struct AlphaSelection {
  double alpha = 0;
  double accuracy = 0;
  std::vector<double> alphas;
  std::vector<double> accuracies;
};

// Highest accuracy over the grid; ties go to the smallest alpha.
AlphaSelection select_alpha(const std::vector<LogitsRecord>& records, const std::vector<double>& grid);

struct AlphaCutoffSelection {
  double alpha = 0;
  double percentile = 1;
  double accuracy = 0;
  std::vector<double> alphas;
  std::vector<double> percentiles;
  std::vector<std::vector<double>> grid;  // accuracy [alpha][percentile]
};

// Ensembled accuracy when only the round(p * n) records with the smallest
// reconstruction distance use the ensemble and the rest keep y_img.
double cutoff_accuracy(const std::vector<LogitsRecord>& records, double alpha, double percentile);

// Ties go to the smallest alpha, then the largest percentile.
AlphaCutoffSelection select_alpha_2d(const std::vector<LogitsRecord>& records, const std::vector<double>& alphas,
                                     const std::vector<double>& percentiles);

// (1 - alpha) * mean(image crops) + alpha * mean(view crops), in float64.
torch::Tensor mixed_crop_ensemble(const torch::Tensor& image_crop_logits, const torch::Tensor& view_crop_logits,
                                  double alpha);

// Sample standard deviation of the mean over `resamples` with-replacement
// resamples of `elements`. Resample r draws elements.size() indices in order
// from Rng(seed).below(elements.size()).
double bootstrap_stderr(const std::vector<double>& elements, int resamples = 20, std::uint64_t seed = 0);

// Same draw scheme applied to the views of an ensemble: each resample picks N
// view indices (shared by all records) and recomputes ensembled accuracy.
double bootstrap_ensemble_stderr(const std::vector<LogitsRecord>& records, double alpha, int resamples = 20,
                                 std::uint64_t seed = 0);

struct SplitReport {
  double standard_accuracy = 0;
  double ensembled_accuracy = 0;
  double delta = 0;
  double standard_error = 0;
};

SplitReport evaluate_split(const std::vector<LogitsRecord>& records, double alpha, int resamples = 20,
                           std::uint64_t seed = 0);

struct ReportRow {
  std::string method;
  std::string granularity;
  double sigma = 0;
  double alpha = 0;
  SplitReport split;
};

// Header comment lines carry the config digest and seed.
std::string report_csv(const std::vector<ReportRow>& rows, const std::string& config_digest, std::uint64_t seed);

// Two-column "x y" lines.
std::string plot_data(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace genviews
