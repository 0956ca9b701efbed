#include "switchtrack/schemes.hpp"

#include <algorithm>
#include <cmath>

namespace switchtrack {

MixingScheme::MixingScheme(Kind kind, double alpha, double theta, double gamma_exponent)
    : kind_(kind), alpha_(alpha), theta_(theta), gamma_exponent_(gamma_exponent) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("mixing scheme: alpha outside [0,1]");
  if (!(theta >= 0.0 && theta <= 1.0)) throw ValidationError("mixing scheme: theta outside [0,1]");
  if (!(gamma_exponent >= 0.0)) throw ValidationError("mixing scheme: negative decay exponent");
}

MixingScheme MixingScheme::uniform_scheme(double alpha) {
  return MixingScheme(Kind::uniform, alpha, 0.0, 0.0);
}

MixingScheme MixingScheme::power_decay_scheme(double alpha, double gamma_exponent) {
  return MixingScheme(Kind::power_decay, alpha, 0.0, gamma_exponent);
}

MixingScheme MixingScheme::geometric_scheme(double alpha, double theta) {
  return MixingScheme(Kind::geometric, alpha, theta, 0.0);
}

std::vector<double> scheme_weights(const MixingScheme& scheme, std::size_t t) {
  if (t < 1) throw ValidationError("scheme_weights: t must be >= 1");
  double alpha = scheme.alpha();
  std::vector<double> gamma(t + 1, 0.0);
  gamma[t] = 1.0 - alpha;

  switch (scheme.kind()) {
    case MixingScheme::Kind::uniform: {
      double share = alpha / static_cast<double>(t);
      for (std::size_t q = 0; q < t; ++q) gamma[q] = share;
      break;
    }
    case MixingScheme::Kind::power_decay: {
      double g = scheme.gamma_exponent();
      double z = 0.0;
      for (std::size_t d = 1; d <= t; ++d) z += std::pow(static_cast<double>(d), -g);
      for (std::size_t q = 0; q < t; ++q)
        gamma[q] = alpha * std::pow(static_cast<double>(t - q), -g) / z;
      break;
    }
    case MixingScheme::Kind::geometric: {
      // gamma_q = theta (1-theta)^(t-q-1) alpha for 1 <= q < t, and the
      // leftover (1-theta)^(t-1) alpha lands on q = 0. Powers kept as a
      // running product, refreshed from pow() every 64 steps.
      double theta = scheme.theta();
      double keep = 1.0 - theta;
      double power = 1.0;  // keep^(t-q-1), starting at q = t-1
      std::size_t exponent = 0;
      for (std::size_t q = t; q-- > 1;) {
        gamma[q] = theta * power * alpha;
        ++exponent;
        power = exponent % 64 == 0 ? std::pow(keep, static_cast<double>(exponent))
                                   : power * keep;
      }
      gamma[0] = power * alpha;  // power == keep^(t-1) here
      break;
    }
  }
  return gamma;
}

LowerBounds beta_from_scheme(const std::vector<SimplexVector>& history,
                             const MixingScheme& scheme) {
  if (history.empty()) throw ValidationError("beta_from_scheme: empty history");
  std::size_t t = history.size() - 1;
  if (t < 1) throw ValidationError("beta_from_scheme: needs at least two posteriors");
  std::vector<double> gamma = scheme_weights(scheme, t);
  std::size_t n = history.front().size();
  std::vector<double> beta(n, 0.0);
  for (std::size_t q = 0; q <= t; ++q) {
    if (history[q].size() != n) throw ValidationError("beta_from_scheme: ragged history");
    for (std::size_t i = 0; i < n; ++i)
      beta[i] = std::max(beta[i], gamma[q] * history[q][i]);
  }
  return LowerBounds(std::move(beta));
}

}  // namespace switchtrack
