#include "switchtrack/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "switchtrack/learners.hpp"
#include "switchtrack/projection.hpp"
#include "switchtrack/schemes.hpp"

namespace switchtrack {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::size_t Rng::uniform_index(std::size_t bound) {
  if (bound == 0) throw ValidationError("uniform_index: empty range");
  std::uint64_t b = bound;
  std::uint64_t threshold = (0 - b) % b;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= threshold) return static_cast<std::size_t>(x % b);
  }
}

InteriorSimplexVector random_simplex_point(Rng& rng, std::size_t n) {
  std::vector<double> e(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = -std::log(1.0 - rng.uniform01());
    if (e[i] <= 0.0) e[i] = std::numeric_limits<double>::min();
    sum += e[i];
  }
  for (double& x : e) x /= sum;
  return InteriorSimplexVector(std::move(e));
}

ComparatorSequence generate_comparator(std::size_t n, std::size_t T, std::size_t k,
                                       std::size_t m, std::uint64_t seed) {
  if (n < 2 || T < 1) throw ValidationError("generate_comparator: need n >= 2, T >= 1");
  if (k > T - 1) throw ValidationError("generate_comparator: k exceeds T-1");
  if (m < 1 || m > n || m > k + 1)
    throw ValidationError("generate_comparator: m outside [1, min(n, k+1)]");
  if (k >= 1 && m < 2)
    throw ValidationError("generate_comparator: a pool of one expert admits no switch");

  Rng rng(seed);

  // Pool members: partial Fisher-Yates over [n].
  std::vector<std::size_t> experts(n);
  std::iota(experts.begin(), experts.end(), 0);
  for (std::size_t i = 0; i < m; ++i)
    std::swap(experts[i], experts[i + rng.uniform_index(n - i)]);
  std::vector<std::size_t> pool(experts.begin(), experts.begin() + m);

  // Switch positions: k draws without replacement from {1..T-1}, sorted.
  std::vector<std::size_t> slots(T - 1);
  std::iota(slots.begin(), slots.end(), 1);
  for (std::size_t i = 0; i < k; ++i)
    std::swap(slots[i], slots[i + rng.uniform_index(T - 1 - i)]);
  std::vector<std::size_t> cuts(slots.begin(), slots.begin() + k);
  std::sort(cuts.begin(), cuts.end());

  // Segment experts: the pool in first-appearance order, then uniform
  // revisits excluding the current expert.
  std::vector<std::size_t> segments(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    if (j < m) {
      segments[j] = pool[j];
    } else {
      std::size_t pick = rng.uniform_index(m - 1);
      std::size_t chosen = pool[pick];
      if (chosen == segments[j - 1]) chosen = pool[m - 1];
      segments[j] = chosen;
    }
  }

  ComparatorSequence out;
  out.ids.resize(T);
  out.switches = k;
  out.pool = m;
  std::size_t seg = 0;
  for (std::size_t t = 0; t < T; ++t) {
    if (seg < k && t == cuts[seg]) ++seg;
    out.ids[t] = segments[seg];
  }
  return out;
}

double log_loss_value(double prediction, double outcome) {
  return -(outcome * std::log(prediction) + (1.0 - outcome) * std::log(1.0 - prediction));
}

double square_loss_value(double prediction, double outcome) {
  double d = prediction - outcome;
  return d * d;
}

double mix_loss_value(const SimplexVector& w, const std::vector<double>& losses, double c,
                      double eta) {
  if (losses.size() != w.size()) throw ValidationError("mix_loss: dimension mismatch");
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) top = std::max(top, std::log(w[i]) - eta * losses[i]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) sum += std::exp(std::log(w[i]) - eta * losses[i] - top);
  }
  return -c * (top + std::log(sum));
}

namespace {

constexpr double kClip = 1e-3;

}  // namespace

LossStream generate_losses(const ComparatorSequence& comparator, std::size_t n,
                           const LossModel& model, double noise, std::uint64_t seed) {
  if (!(noise >= 0.0 && noise < 0.5))
    throw ValidationError("generate_losses: noise outside [0, 0.5)");
  std::size_t T = comparator.ids.size();
  for (std::size_t id : comparator.ids) {
    if (id >= n) throw ValidationError("generate_losses: comparator id out of range");
  }

  Rng rng(seed);
  LossStream stream;
  stream.losses.assign(T, std::vector<double>(n));
  stream.predictions.assign(T, std::vector<double>(n));
  stream.outcomes.assign(T, 0.0);

  for (std::size_t t = 0; t < T; ++t) {
    double y = rng.uniform01() < 0.5 ? 0.0 : 1.0;
    stream.outcomes[t] = y;
    for (std::size_t i = 0; i < n; ++i) {
      bool correct = i == comparator.ids[t] ? rng.uniform01() >= noise
                                            : rng.uniform01() < 0.5;
      double guess = correct ? y : 1.0 - y;
      double pred = guess;
      if (model.kind == LossKind::log_loss || model.kind == LossKind::mix_loss)
        pred = std::min(1.0 - kClip, std::max(kClip, guess));
      stream.predictions[t][i] = pred;
      switch (model.kind) {
        case LossKind::log_loss:
        case LossKind::mix_loss:
          stream.losses[t][i] = log_loss_value(pred, y);
          break;
        case LossKind::square_loss:
          stream.losses[t][i] = square_loss_value(pred, y);
          break;
      }
    }
  }
  return stream;
}

namespace {

struct LearnerRunner {
  LearnerSpec spec;
  double eta;
  std::size_t n;

  // One live state; unused members idle.
  EwState ew;
  FixedShareState fs;
  ShareState share;
  PodsState pods;
  SpecialistState specialists;
  MppState mpp;

  LearnerRunner(const LearnerSpec& s, std::size_t n_, double eta_)
      : spec(s),
        eta(eta_),
        n(n_),
        ew(EwState::initial(n_, eta_)),
        fs(FixedShareState::initial(n_, valid_alpha(s))),
        share(ShareState::initial(n_, valid_alpha(s), valid_theta(s))),
        pods(PodsState::initial(n_, pods_alpha(s), valid_theta(s))),
        specialists(make_specialists(s, n_)),
        mpp(MppState::initial(n_, make_scheme(s))) {}

  static double valid_alpha(const LearnerSpec& s) {
    if (!(s.alpha >= 0.0 && s.alpha <= 1.0))
      throw ValidationError("learner: alpha outside [0,1]");
    return s.alpha;
  }
  static double valid_theta(const LearnerSpec& s) {
    if (!(s.theta >= 0.0 && s.theta <= 1.0))
      throw ValidationError("learner: theta outside [0,1]");
    return s.theta;
  }
  static double pods_alpha(const LearnerSpec& s) {
    if (s.kind == LearnerKind::pods) {
      if (!(s.alpha > 0.0 && s.alpha < 1.0))
        throw ValidationError(
            "pods requires alpha strictly inside (0,1); use ew or fixed_share when the "
            "tuned alpha is 0");
      return s.alpha;
    }
    return 0.5;  // placeholder state, never stepped
  }
  static SpecialistState make_specialists(const LearnerSpec& s, std::size_t n_) {
    if (s.kind == LearnerKind::specialists) {
      if (!(s.alpha > 0.0 && s.alpha < 1.0 && s.theta > 0.0 && s.theta < 1.0))
        throw ValidationError(
            "specialists mapping requires alpha and theta strictly inside (0,1)");
      return SpecialistState::markov(n_, s.alpha, s.theta);
    }
    return SpecialistState::markov(n_, 0.5, 0.5);  // placeholder, never stepped
  }
  static MixingScheme make_scheme(const LearnerSpec& s) {
    switch (s.kind) {
      case LearnerKind::mpp_uniform:
        return MixingScheme::uniform_scheme(s.alpha);
      case LearnerKind::mpp_power:
        return MixingScheme::power_decay_scheme(s.alpha, s.gamma_exponent);
      default:
        return MixingScheme::geometric_scheme(s.alpha, s.theta);
    }
  }

  SimplexVector weights() const {
    switch (spec.kind) {
      case LearnerKind::ew: return ew.w;
      case LearnerKind::fixed_share: return fs.w;
      case LearnerKind::share: return share.w;
      case LearnerKind::pods: return pods.w;
      case LearnerKind::specialists: return specialists.awake_weights();
      default: return mpp.w;
    }
  }

  void step(const std::vector<double>& losses) {
    switch (spec.kind) {
      case LearnerKind::ew: ew = ew_step(ew, losses); break;
      case LearnerKind::fixed_share: fs = fixed_share_step(fs, losses, eta); break;
      case LearnerKind::share: share = share_step(share, losses, eta); break;
      case LearnerKind::pods: pods = pods_step(pods, losses, eta); break;
      case LearnerKind::specialists:
        specialists = specialists_step(specialists, losses, eta);
        break;
      default: mpp = mpp_step(std::move(mpp), losses, eta); break;
    }
  }
};

double l1_distance(const SimplexVector& a, const SimplexVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

// The weighted mean violates the square-loss mix bound, so predict the
// midpoint of the interval the bound forces at the two binary outcomes.
double square_substitution(const SimplexVector& w, const std::vector<double>& preds,
                           const LossModel& model) {
  std::size_t n = w.size();
  std::vector<double> at0(n), at1(n);
  for (std::size_t i = 0; i < n; ++i) {
    at0[i] = square_loss_value(preds[i], 0.0);
    at1[i] = square_loss_value(preds[i], 1.0);
  }
  double g0 = mix_loss_value(w, at0, model.c, model.eta);
  double g1 = mix_loss_value(w, at1, model.c, model.eta);
  double lo = 1.0 - std::sqrt(std::max(0.0, g1));
  double hi = std::sqrt(std::max(0.0, g0));
  return std::min(1.0, std::max(0.0, 0.5 * (lo + hi)));
}

double bound_for(const LearnerSpec& spec, const BoundInputs& inp) {
  switch (spec.kind) {
    case LearnerKind::ew:
      return inp.c * std::log(static_cast<double>(inp.n));
    case LearnerKind::fixed_share:
      return fixed_share_bound(inp);
    case LearnerKind::specialists:
      return specialists_bound(inp);
    case LearnerKind::mpp_uniform:
      return mpp_uniform_bound(inp);
    case LearnerKind::mpp_power:
      return mpp_decay_bound(inp);
    default:
      return pods_bound(inp);  // share, pods, mpp_geometric share one guarantee
  }
}

}  // namespace

ExperimentResult run_experiment(const LearnerSpec& spec, const LossStream& stream,
                                const ComparatorSequence& comparator, const LossModel& model) {
  std::size_t T = stream.losses.size();
  if (comparator.ids.size() != T)
    throw ValidationError("run_experiment: comparator/losses length mismatch");
  if (T == 0) throw ValidationError("run_experiment: empty loss stream");
  if (model.kind != LossKind::mix_loss &&
      (stream.predictions.size() != T || stream.outcomes.size() != T))
    throw ValidationError("run_experiment: prediction-based loss model needs predictions");
  std::size_t n = stream.losses.front().size();

  LearnerRunner runner(spec, n, model.eta);
  ExperimentResult result;
  result.per_trial.reserve(T);
  result.spec = spec;
  result.model = model;
  result.n = n;
  result.horizon = T;
  result.switches = comparator.switches;
  result.pool = comparator.pool;

  double regret = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    const std::vector<double>& losses = stream.losses[t];
    if (losses.size() != n) throw ValidationError("run_experiment: ragged loss matrix");
    SimplexVector w = runner.weights();

    double mix = mix_loss_value(w, losses, model.c, model.eta);
    double learner_loss;
    if (model.kind == LossKind::mix_loss) {
      learner_loss = mix;
    } else {
      double pred = model.kind == LossKind::square_loss
                        ? square_substitution(w, stream.predictions[t], model)
                        : predict(w, stream.predictions[t]);
      learner_loss = model.kind == LossKind::log_loss
                         ? log_loss_value(pred, stream.outcomes[t])
                         : square_loss_value(pred, stream.outcomes[t]);
      if (learner_loss > mix + 1e-9)
        throw NumericError("run_experiment: realizability violated");
    }

    SimplexVector posterior = loss_update(w, losses, model.eta);
    runner.step(losses);
    double cost = l1_distance(runner.weights(), posterior);

    double comparator_loss = losses[comparator.ids[t]];
    regret += learner_loss - comparator_loss;
    result.per_trial.push_back(TrialRecord{learner_loss, comparator_loss, cost});
  }

  result.cumulative_regret = regret;
  BoundInputs inp{n, std::max<std::size_t>(T, 2), comparator.switches, comparator.pool,
                  model.c};
  result.bound_value = bound_for(spec, inp);
  return result;
}

std::pair<double, double> matched_state_cost_compare(const InteriorSimplexVector& w_hat,
                                                     const InteriorSimplexVector& v,
                                                     double alpha) {
  if (w_hat.size() != v.size())
    throw ValidationError("matched_state_cost_compare: dimension mismatch");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("matched_state_cost_compare: alpha outside (0,1)");
  std::size_t n = w_hat.size();
  std::vector<double> beta(n);
  for (std::size_t i = 0; i < n; ++i) beta[i] = alpha * v[i];
  ProjectionResult proj = project(w_hat, LowerBounds(std::move(beta)));

  double proj_move = 0.0, share_move = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    proj_move += std::fabs(proj.p[i] - w_hat[i]);
    share_move += std::fabs((1.0 - alpha) * w_hat[i] + alpha * v[i] - w_hat[i]);
  }
  return {proj_move, share_move};
}

double EquivalenceDeviations::worst() const {
  return std::max(std::max(share_mpp, specialists_w),
                  std::max(specialists_v, specialists_mass));
}

EquivalenceDeviations run_equivalence_pair(std::size_t n, std::size_t T, double alpha,
                                           double theta, double eta, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0 && theta > 0.0 && theta < 1.0))
    throw ValidationError("equivalence suites require alpha, theta strictly inside (0,1)");
  Rng rng(seed);
  EquivalenceDeviations dev;

  ShareState share = ShareState::initial(n, alpha, theta);
  MppState mpp = MppState::initial(n, MixingScheme::geometric_scheme(alpha, theta));
  SpecialistState specialists = SpecialistState::markov(n, alpha, theta);

  for (std::size_t t = 0; t < T; ++t) {
    std::vector<double> losses(n);
    for (double& l : losses) l = rng.uniform01();

    share = share_step(share, losses, eta);
    mpp = mpp_step(std::move(mpp), losses, eta);
    specialists = specialists_step(specialists, losses, eta);

    double awake = 0.0, asleep = 0.0;
    for (double x : specialists.a) awake += x;
    for (double x : specialists.s) asleep += x;
    dev.specialists_mass = std::max(dev.specialists_mass,
                                    std::max(std::fabs(awake - specialists.pi_w),
                                             std::fabs(asleep - specialists.pi_s)));
    for (std::size_t i = 0; i < n; ++i) {
      dev.share_mpp = std::max(dev.share_mpp, std::fabs(share.w[i] - mpp.w[i]));
      dev.specialists_w =
          std::max(dev.specialists_w, std::fabs(specialists.a[i] / awake - share.w[i]));
      dev.specialists_v = std::max(
          dev.specialists_v, std::fabs(specialists.s[i] / specialists.pi_s - share.v[i]));
    }
  }
  return dev;
}

}  // namespace switchtrack
