#pragma once

#include <vector>

#include "switchtrack/schemes.hpp"
#include "switchtrack/simplex.hpp"

namespace switchtrack {

// Multiplicative weight update w-hat_i proportional to w_i e^(-eta loss_i),
// evaluated in log space. Strictly positive output whenever w is.
SimplexVector loss_update(const SimplexVector& w, const std::vector<double>& losses,
                          double eta);

// (1-alpha) w-hat + alpha uniform.
SimplexVector fixed_share_update(const SimplexVector& w_hat, double alpha);

// Weighted-average prediction w . x.
double predict(const SimplexVector& w, const std::vector<double>& expert_predictions);

struct EwState {
  SimplexVector w;
  double eta;

  static EwState initial(std::size_t n, double eta);
};
EwState ew_step(const EwState& state, const std::vector<double>& losses);

struct FixedShareState {
  SimplexVector w;
  double alpha;

  static FixedShareState initial(std::size_t n, double alpha);
};
FixedShareState fixed_share_step(const FixedShareState& state,
                                 const std::vector<double>& losses, double eta);

// Sharing to a decaying past average: w' = (1-alpha) w-hat + alpha v,
// v' = (1-theta) v + theta w-hat. The v update reads the pre-mix posterior.
struct ShareState {
  SimplexVector w;
  SimplexVector v;
  double alpha;
  double theta;

  static ShareState initial(std::size_t n, double alpha, double theta);
};
ShareState share_step(const ShareState& state, const std::vector<double>& losses, double eta);

// Projection twin of ShareState: w' = project(w-hat, beta) and
// beta' = (1-theta) beta + theta alpha w-hat, keeping sum(beta) = alpha.
struct PodsState {
  SimplexVector w;
  LowerBounds beta;
  double alpha;
  double theta;

  static PodsState initial(std::size_t n, double alpha, double theta);
};
PodsState pods_step(const PodsState& state, const std::vector<double>& losses, double eta);

// Awake/asleep mass vectors under a two-state Markov prior. Masses conserve
// sum(a) = pi_w and sum(s) = pi_s every trial; prediction normalizes a.
struct SpecialistState {
  std::vector<double> a;
  std::vector<double> s;
  double p_ww, p_ws, p_sw, p_ss;
  double pi_w, pi_s;

  // Mapping with P_sw = theta, P_ws = alpha, pi_w = theta/(alpha+theta);
  // requires 0 < alpha, theta < 1.
  static SpecialistState markov(std::size_t n, double alpha, double theta);

  SimplexVector awake_weights() const;
};
SpecialistState specialists_step(const SpecialistState& state,
                                 const std::vector<double>& losses, double eta);

// Explicit mixture over all past posteriors (verification path, O(n t) per
// step). history holds w-hat_0..w-hat_t with w-hat_0 uniform; w caches the
// current mixture weight.
struct MppState {
  std::vector<SimplexVector> history;
  MixingScheme scheme;
  SimplexVector w;

  static MppState initial(std::size_t n, MixingScheme scheme);
};
MppState mpp_step(MppState state, const std::vector<double>& losses, double eta);

}  // namespace switchtrack
