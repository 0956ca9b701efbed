#include "switchtrack/simplex.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace switchtrack {

namespace {

void check_dimension(std::size_t n) {
  if (n < 2) throw ValidationError("simplex vectors need length >= 2, got " + std::to_string(n));
}

double checked_sum(const std::vector<double>& values) {
  double sum = 0.0;
  for (double x : values) {
    if (!std::isfinite(x)) throw ValidationError("non-finite component in simplex vector");
    if (x < 0.0) throw ValidationError("negative component in simplex vector");
    sum += x;
  }
  return sum;
}

}  // namespace

SimplexVector::SimplexVector(std::vector<double> values) : values_(std::move(values)) {
  check_dimension(values_.size());
  double sum = checked_sum(values_);
  double dev = std::fabs(sum - 1.0);
  if (dev > kSimplexRenormTolerance)
    throw ValidationError("simplex sum " + std::to_string(sum) + " too far from 1");
  if (dev > 0.0) {
    for (double& x : values_) x /= sum;
  }
}

SimplexVector SimplexVector::uniform(std::size_t n) {
  check_dimension(n);
  return SimplexVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

InteriorSimplexVector::InteriorSimplexVector(std::vector<double> values)
    : SimplexVector(std::move(values)) {
  for (double x : values_) {
    if (x <= 0.0) throw ValidationError("interior simplex point requires strictly positive components");
  }
}

InteriorSimplexVector::InteriorSimplexVector(const SimplexVector& v)
    : InteriorSimplexVector(v.values()) {}

LowerBounds::LowerBounds(std::vector<double> beta) : beta_(std::move(beta)) {
  check_dimension(beta_.size());
  total_mass_ = 0.0;
  for (double b : beta_) {
    if (!std::isfinite(b) || b <= 0.0 || b >= 1.0)
      throw ValidationError("lower bounds must lie strictly inside (0,1)");
    total_mass_ += b;
  }
  if (total_mass_ > 1.0 + kSimplexSumTolerance)
    throw ValidationError("infeasible: sum(beta)>1");
}

double kl_divergence(const SimplexVector& u, const InteriorSimplexVector& w) {
  if (u.size() != w.size()) throw ValidationError("kl_divergence: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0.0) continue;  // 0 ln 0 = 0
    sum += u[i] * std::log(u[i] / w[i]);
  }
  return sum;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

SimplexVector normalize(const std::vector<double>& values) {
  check_dimension(values.size());
  double sum = checked_sum(values);
  if (sum <= 0.0) throw ValidationError("normalize: degenerate all-zero input");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / sum;
  return SimplexVector(std::move(out));
}

}  // namespace switchtrack
