#include "switchtrack/learners.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "switchtrack/projection.hpp"

namespace switchtrack {

namespace {

void check_losses(std::size_t n, const std::vector<double>& losses) {
  if (losses.size() != n) throw ValidationError("loss vector dimension mismatch");
  for (double l : losses) {
    if (!std::isfinite(l)) throw ValidationError("non-finite loss");
  }
}

void check_rate(double eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw ValidationError("eta must be non-negative");
}

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw ValidationError(std::string(name) + " outside [0,1]");
}

}  // namespace

SimplexVector loss_update(const SimplexVector& w, const std::vector<double>& losses,
                          double eta) {
  std::size_t n = w.size();
  check_losses(n, losses);
  check_rate(eta);
  std::vector<double> logs(n);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    logs[i] = w[i] > 0.0 ? std::log(w[i]) - eta * losses[i]
                         : -std::numeric_limits<double>::infinity();
    top = std::max(top, logs[i]);
  }
  double sum = 0.0;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(logs[i] - top);
    sum += out[i];
  }
  if (!(sum > 0.0) || !std::isfinite(sum))
    throw NumericError("loss_update: all weights underflowed");
  for (double& x : out) x /= sum;
  return SimplexVector(std::move(out));
}

SimplexVector fixed_share_update(const SimplexVector& w_hat, double alpha) {
  check_unit(alpha, "alpha");
  std::size_t n = w_hat.size();
  double share = alpha / static_cast<double>(n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (1.0 - alpha) * w_hat[i] + share;
  return SimplexVector(std::move(out));
}

double predict(const SimplexVector& w, const std::vector<double>& expert_predictions) {
  if (expert_predictions.size() != w.size())
    throw ValidationError("predict: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * expert_predictions[i];
  return sum;
}

EwState EwState::initial(std::size_t n, double eta) {
  check_rate(eta);
  return EwState{SimplexVector::uniform(n), eta};
}

EwState ew_step(const EwState& state, const std::vector<double>& losses) {
  return EwState{loss_update(state.w, losses, state.eta), state.eta};
}

FixedShareState FixedShareState::initial(std::size_t n, double alpha) {
  check_unit(alpha, "alpha");
  return FixedShareState{SimplexVector::uniform(n), alpha};
}

FixedShareState fixed_share_step(const FixedShareState& state,
                                 const std::vector<double>& losses, double eta) {
  SimplexVector w_hat = loss_update(state.w, losses, eta);
  return FixedShareState{fixed_share_update(w_hat, state.alpha), state.alpha};
}

ShareState ShareState::initial(std::size_t n, double alpha, double theta) {
  check_unit(alpha, "alpha");
  check_unit(theta, "theta");
  return ShareState{SimplexVector::uniform(n), SimplexVector::uniform(n), alpha, theta};
}

ShareState share_step(const ShareState& state, const std::vector<double>& losses, double eta) {
  std::size_t n = state.w.size();
  if (state.v.size() != n) throw ValidationError("share_step: w/v dimension mismatch");
  SimplexVector w_hat = loss_update(state.w, losses, eta);
  std::vector<double> w2(n), v2(n);
  double alpha = state.alpha, theta = state.theta;
  for (std::size_t i = 0; i < n; ++i) {
    w2[i] = (1.0 - alpha) * w_hat[i] + alpha * state.v[i];
    v2[i] = (1.0 - theta) * state.v[i] + theta * w_hat[i];
  }
  return ShareState{SimplexVector(std::move(w2)), SimplexVector(std::move(v2)), alpha, theta};
}

PodsState PodsState::initial(std::size_t n, double alpha, double theta) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("pods: alpha must lie strictly inside (0,1)");
  check_unit(theta, "theta");
  std::vector<double> beta(n, alpha / static_cast<double>(n));
  return PodsState{SimplexVector::uniform(n), LowerBounds(std::move(beta)), alpha, theta};
}

PodsState pods_step(const PodsState& state, const std::vector<double>& losses, double eta) {
  std::size_t n = state.w.size();
  if (state.beta.size() != n) throw ValidationError("pods_step: w/beta dimension mismatch");
  SimplexVector w_hat = loss_update(state.w, losses, eta);
  ProjectionResult proj = project(InteriorSimplexVector(w_hat), state.beta);
  std::vector<double> beta2(n);
  double theta = state.theta, alpha = state.alpha;
  for (std::size_t i = 0; i < n; ++i)
    beta2[i] = (1.0 - theta) * state.beta[i] + theta * alpha * w_hat[i];
  return PodsState{std::move(proj.p), LowerBounds(std::move(beta2)), alpha, theta};
}

SpecialistState SpecialistState::markov(std::size_t n, double alpha, double theta) {
  if (n < 2) throw ValidationError("specialists: need n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0 && theta > 0.0 && theta < 1.0))
    throw ValidationError("specialists: mapping requires 0 < alpha, theta < 1");
  double pi_w = theta / (alpha + theta);
  double pi_s = alpha / (alpha + theta);
  SpecialistState st;
  st.a.assign(n, pi_w / static_cast<double>(n));
  st.s.assign(n, pi_s / static_cast<double>(n));
  st.p_ww = 1.0 - alpha;
  st.p_ws = alpha;
  st.p_sw = theta;
  st.p_ss = 1.0 - theta;
  st.pi_w = pi_w;
  st.pi_s = pi_s;
  return st;
}

SimplexVector SpecialistState::awake_weights() const { return normalize(a); }

SpecialistState specialists_step(const SpecialistState& state,
                                 const std::vector<double>& losses, double eta) {
  std::size_t n = state.a.size();
  check_losses(n, losses);
  double awake_mass = 0.0;
  for (double x : state.a) awake_mass += x;
  SimplexVector posterior = loss_update(normalize(state.a), losses, eta);
  SpecialistState next = state;
  for (std::size_t i = 0; i < n; ++i) {
    double shared = awake_mass * posterior[i];
    next.a[i] = state.p_ww * shared + state.p_sw * state.s[i];
    next.s[i] = state.p_ws * shared + state.p_ss * state.s[i];
  }
  return next;
}

MppState MppState::initial(std::size_t n, MixingScheme scheme) {
  SimplexVector u = SimplexVector::uniform(n);
  return MppState{{u}, scheme, u};
}

MppState mpp_step(MppState state, const std::vector<double>& losses, double eta) {
  std::size_t n = state.w.size();
  std::size_t t = state.history.size();  // trial index of the incoming loss
  SimplexVector w_hat = loss_update(state.w, losses, eta);
  state.history.push_back(w_hat);
  std::vector<double> gamma = scheme_weights(state.scheme, t);
  double total = 0.0;
  for (double g : gamma) total += g;
  if (std::fabs(total - 1.0) > kSimplexSumTolerance)
    throw ValidationError("mpp_step: scheme weights do not sum to 1");
  std::vector<double> mix(n, 0.0);
  for (std::size_t q = 0; q <= t; ++q) {
    const SimplexVector& past = state.history[q];
    for (std::size_t i = 0; i < n; ++i) mix[i] += gamma[q] * past[i];
  }
  state.w = SimplexVector(std::move(mix));
  return state;
}

}  // namespace switchtrack
