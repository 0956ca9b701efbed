#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "switchtrack/bounds.hpp"
#include "switchtrack/simplex.hpp"

namespace switchtrack {

// Identifier of the random source, recorded in output metadata. The engine is
// mt19937_64 (stable bit stream per the standard); integer draws use rejection
// sampling and reals the top 53 bits, so streams are identical across stdlibs.
inline constexpr const char* kRngAlgorithm = "mt19937_64/rejection-int/shift53-real";

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform real in [0, 1).
  double uniform01();
  // Uniform real in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, bound); bound >= 1.
  std::size_t uniform_index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

// Uniform draw from the simplex (flat Dirichlet), strictly interior almost
// surely.
InteriorSimplexVector random_simplex_point(Rng& rng, std::size_t n);

// Hindsight comparator: T expert ids with exactly `switches` changes drawn
// from a pool of `pool` distinct experts.
struct ComparatorSequence {
  std::vector<std::size_t> ids;
  std::size_t switches;
  std::size_t pool;
};

ComparatorSequence generate_comparator(std::size_t n, std::size_t T, std::size_t k,
                                       std::size_t m, std::uint64_t seed);

enum class LossKind { log_loss, square_loss, mix_loss };

// Loss/prediction pairing with its realizability constants; c * eta = 1.
struct LossModel {
  LossKind kind;
  double c;
  double eta;

  static LossModel log_loss() { return {LossKind::log_loss, 1.0, 1.0}; }
  static LossModel square_loss() { return {LossKind::square_loss, 0.5, 2.0}; }
  static LossModel mix_loss() { return {LossKind::mix_loss, 1.0, 1.0}; }
};

double log_loss_value(double prediction, double outcome);
double square_loss_value(double prediction, double outcome);

// -c ln sum_i w_i e^(-eta loss_i), evaluated in log space.
double mix_loss_value(const SimplexVector& w, const std::vector<double>& losses, double c,
                      double eta);

// Synthetic trial data. losses is T x n; predictions/outcomes are filled for
// the prediction-based models (log loss predictions clipped to
// [1e-3, 1-1e-3]).
struct LossStream {
  std::vector<std::vector<double>> losses;
  std::vector<std::vector<double>> predictions;
  std::vector<double> outcomes;
};

// Binary outcomes; the comparator's expert of the trial predicts correctly
// with probability 1 - noise, every other expert with probability 1/2.
LossStream generate_losses(const ComparatorSequence& comparator, std::size_t n,
                           const LossModel& model, double noise, std::uint64_t seed);

enum class LearnerKind {
  ew,
  fixed_share,
  share,
  pods,
  specialists,
  mpp_uniform,
  mpp_power,
  mpp_geometric
};

struct LearnerSpec {
  LearnerKind kind;
  double alpha = 0.0;
  double theta = 0.0;
  double gamma_exponent = 1.0;
};

struct TrialRecord {
  double learner_loss;
  double comparator_loss;
  double l1_update_cost;
};

struct ExperimentResult {
  std::vector<TrialRecord> per_trial;
  double cumulative_regret;
  double bound_value;
  LearnerSpec spec;
  LossModel model;
  std::size_t n;
  std::size_t horizon;
  std::size_t switches;
  std::size_t pool;
};

// Runs the trial loop: predict, incur loss, update; records the L1 distance
// between the post-update weights and the posterior each trial. Realizability
// of (loss, prediction, c, eta) is asserted every trial.
ExperimentResult run_experiment(const LearnerSpec& spec, const LossStream& stream,
                                const ComparatorSequence& comparator, const LossModel& model);

// L1 move of projecting w-hat onto C(alpha v) versus sharing
// (1-alpha) w-hat + alpha v, from the common w-hat.
std::pair<double, double> matched_state_cost_compare(const InteriorSimplexVector& w_hat,
                                                     const InteriorSimplexVector& v,
                                                     double alpha);

// Max deviations from stepping twin algorithms on one loss stream: sharing
// versus the explicit geometric mixture, and the awake/asleep masses versus
// the sharing weights under the Markov-prior mapping.
struct EquivalenceDeviations {
  double share_mpp = 0.0;
  double specialists_w = 0.0;
  double specialists_v = 0.0;
  double specialists_mass = 0.0;

  double worst() const;
};

EquivalenceDeviations run_equivalence_pair(std::size_t n, std::size_t T, double alpha,
                                           double theta, double eta, std::uint64_t seed);

}  // namespace switchtrack
