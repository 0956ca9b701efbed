#pragma once

#include <cstddef>
#include <vector>

#include "switchtrack/errors.hpp"

namespace switchtrack {

inline constexpr double kSimplexSumTolerance = 1e-9;
inline constexpr double kSimplexRenormTolerance = 1e-6;

// Probability vector of length n >= 2. Construction validates non-negativity
// and renormalizes when the sum is within 1e-6 of one; larger deviations are
// rejected. Immutable after construction.
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> values);

  static SimplexVector uniform(std::size_t n);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SimplexVector& other) const = default;

 protected:
  std::vector<double> values_;
};

// Simplex point with every component strictly positive.
class InteriorSimplexVector : public SimplexVector {
 public:
  explicit InteriorSimplexVector(std::vector<double> values);
  explicit InteriorSimplexVector(const SimplexVector& v);
};

// Componentwise lower bounds beta with 0 < beta_i < 1 and sum(beta) <= 1,
// defining the projection target set C(beta) = {x in simplex : x >= beta}.
class LowerBounds {
 public:
  explicit LowerBounds(std::vector<double> beta);

  std::size_t size() const { return beta_.size(); }
  double operator[](std::size_t i) const { return beta_[i]; }
  const std::vector<double>& beta() const { return beta_; }
  double total_mass() const { return total_mass_; }

 private:
  std::vector<double> beta_;
  double total_mass_;
};

// Relative entropy sum_i u_i ln(u_i / w_i), with 0 ln 0 = 0. Never negative.
double kl_divergence(const SimplexVector& u, const InteriorSimplexVector& w);

// -p ln p - (1-p) ln(1-p) in nats; exact 0 at p = 0 and p = 1.
double binary_entropy(double p);

// Scales a non-negative vector to sum one. Rejects all-zero and non-finite
// input.
SimplexVector normalize(const std::vector<double>& values);

}  // namespace switchtrack
