#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/digest.hpp"

namespace genviews {

enum class MinimizerMethod { LBFGS, Adam };

std::string_view to_string(MinimizerMethod m);
MinimizerMethod parse_minimizer(std::string_view name);

struct MinimizerConfig {
  MinimizerMethod method = MinimizerMethod::LBFGS;
  std::int64_t max_iterations = 500;
  int history = 10;                 // L-BFGS memory
  double armijo = 1e-4;             // sufficient-decrease constant
  double shrink = 0.5;              // backtracking factor
  int max_line_search = 30;
  double gradient_tolerance = 1e-12;  // infinity norm
  double adam_learning_rate = 0.01;
  // Iteration counts at which to record the iterate (0 records the start).
  std::vector<std::int64_t> snapshots;

  Digest digest() const;
};

enum class Termination { MaxIterations, Converged, Stalled, NonFinite };

std::string_view to_string(Termination t);

// Evaluates a batch of independent problems. `x` is [k, dim] float64, `index`
// holds the k problem ids (int64). Must fill `f` ([k]) and `grad` ([k, dim]).
using BatchObjective =
    std::function<void(const torch::Tensor& x, const torch::Tensor& index, torch::Tensor& f, torch::Tensor& grad)>;

struct MinimizeResult {
  torch::Tensor x;   // [n, dim] best iterate per problem
  torch::Tensor f;   // [n] objective at x
  torch::Tensor f0;  // [n] objective at the start
  std::vector<std::int64_t> iterations;
  std::vector<Termination> status;
  std::int64_t evaluations = 0;  // problem-evaluations summed over the batch
  std::map<std::int64_t, torch::Tensor> snapshots;
};

// Minimises n independent objectives simultaneously. Each problem keeps its
// own L-BFGS history and line search; accepted steps satisfy the Armijo
// condition so f never increases. Non-finite trial values are rejected; a
// problem whose objective cannot be evaluated finitely stops with its last
// finite iterate.
MinimizeResult minimize(const BatchObjective& objective, const torch::Tensor& x0, const MinimizerConfig& cfg);

}  // namespace genviews
