#pragma once

#include <cstddef>
#include <vector>

#include "switchtrack/simplex.hpp"

namespace switchtrack {

// Mixing weights gamma_q^t over past posteriors q = 0..t. Every kind keeps
// gamma_t^t = 1 - alpha; the remaining alpha mass is spread uniformly, by
// power decay in the age t - q, or geometrically away from q = 0.
class MixingScheme {
 public:
  enum class Kind { uniform, power_decay, geometric };

  static MixingScheme uniform_scheme(double alpha);
  static MixingScheme power_decay_scheme(double alpha, double gamma_exponent);
  static MixingScheme geometric_scheme(double alpha, double theta);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double theta() const { return theta_; }
  double gamma_exponent() const { return gamma_exponent_; }

 private:
  MixingScheme(Kind kind, double alpha, double theta, double gamma_exponent);

  Kind kind_;
  double alpha_;
  double theta_;
  double gamma_exponent_;
};

// (gamma_0^t, ..., gamma_t^t) for trial t >= 1; sums to one.
std::vector<double> scheme_weights(const MixingScheme& scheme, std::size_t t);

// Componentwise beta_i = max_q gamma_q^t w-hat_{q,i} over the posterior
// history (w-hat_0 first). O(n t).
LowerBounds beta_from_scheme(const std::vector<SimplexVector>& history,
                             const MixingScheme& scheme);

}  // namespace switchtrack
