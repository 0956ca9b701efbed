#include "switchtrack/bounds.hpp"

#include <cmath>
#include <string>

#include "switchtrack/simplex.hpp"

namespace switchtrack {

namespace {

double dd(std::size_t x) { return static_cast<double>(x); }

// N H(x/N), with the 0/0 corner at x = 0 (or N = 0) defined as 0.
double scaled_entropy(std::size_t x, std::size_t N) {
  if (x == 0 || N == 0) return 0.0;
  return dd(N) * binary_entropy(dd(x) / dd(N));
}

// k ln(N/k) + k, the standard relaxation of N H(k/N); 0 at k = 0.
double entropy_relaxation(std::size_t k, std::size_t N) {
  if (k == 0) return 0.0;
  return dd(k) * std::log(dd(N) / dd(k)) + dd(k);
}

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(dd(n) + 1.0) - std::lgamma(dd(k) + 1.0) - std::lgamma(dd(n - k) + 1.0);
}

double switch_entropy(const BoundInputs& inp) {
  return scaled_entropy(inp.switches, inp.horizon - 1);
}

double log_ln_et(const BoundInputs& inp) {
  return std::log(std::log(std::exp(1.0) * dd(inp.horizon)));
}

}  // namespace

void validate(const BoundInputs& inp) {
  if (inp.n < 2) throw ValidationError("bounds: need n >= 2");
  if (inp.horizon < 2) throw ValidationError("bounds: need T >= 2");
  if (inp.switches > inp.horizon - 1) throw ValidationError("bounds: k exceeds T-1");
  if (inp.pool < 1) throw ValidationError("bounds: need m >= 1");
  if (inp.pool > inp.n || inp.pool > inp.switches + 1)
    throw ValidationError("bounds: pool m exceeds min(n, k+1)");
  if (inp.switches >= 1 && inp.pool < 2)
    throw ValidationError("bounds: a pool of one expert admits no switch");
  if (!(inp.c > 0.0)) throw ValidationError("bounds: need c > 0");
}

double fixed_share_bound(const BoundInputs& inp) {
  validate(inp);
  return inp.c * (dd(inp.switches + 1) * std::log(dd(inp.n)) + switch_entropy(inp));
}

double fixed_share_bound_upper(const BoundInputs& inp) {
  validate(inp);
  return inp.c * (dd(inp.switches + 1) * std::log(dd(inp.n)) +
                  entropy_relaxation(inp.switches, inp.horizon - 1));
}

double ideal_bound(const BoundInputs& inp) {
  validate(inp);
  double lg = log_binomial(inp.n, inp.pool) + log_binomial(inp.horizon - 1, inp.switches) +
              std::log(dd(inp.pool));
  if (inp.switches > 0) lg += dd(inp.switches) * std::log(dd(inp.pool - 1));
  return inp.c * lg;
}

double ideal_bound_upper(const BoundInputs& inp) {
  validate(inp);
  double k = dd(inp.switches), m = dd(inp.pool);
  double value = m * std::log(dd(inp.n)) + (k - m + 1.0) * std::log(m) + k + m;
  if (inp.switches > 0) value += k * std::log(dd(inp.horizon - 1) / k);
  return inp.c * value;
}

double mpp_decay_bound(const BoundInputs& inp) {
  validate(inp);
  double k = dd(inp.switches);
  double value = dd(inp.pool) * std::log(dd(inp.n)) + switch_entropy(inp);
  if (inp.switches > 0) {
    value += k * std::log(dd(inp.horizon - 1) / k) + k * std::log(dd(inp.pool - 1)) +
             k * log_ln_et(inp);
  }
  return inp.c * value;
}

double mpp_decay_bound_upper(const BoundInputs& inp) {
  validate(inp);
  double k = dd(inp.switches);
  double value = dd(inp.pool) * std::log(dd(inp.n));
  if (inp.switches > 0) {
    value += 2.0 * k * std::log(dd(inp.horizon - 1) / k) + k * std::log(dd(inp.pool - 1)) + k +
             k * log_ln_et(inp);
  }
  return inp.c * value;
}

double mpp_uniform_bound(const BoundInputs& inp) {
  validate(inp);
  double value = dd(inp.pool) * std::log(dd(inp.n)) + switch_entropy(inp) +
                 dd(inp.switches) * std::log(dd(inp.horizon - 1));
  return inp.c * value;
}

double specialists_bound(const BoundInputs& inp) {
  validate(inp);
  double m = dd(inp.pool);
  double value = m * std::log(dd(inp.n) / m) + m * binary_entropy(1.0 / m) + switch_entropy(inp);
  if (inp.pool > 1) value += scaled_entropy(inp.switches, (inp.pool - 1) * (inp.horizon - 1));
  return inp.c * value;
}

double specialists_bound_upper(const BoundInputs& inp) {
  validate(inp);
  double k = dd(inp.switches), m = dd(inp.pool);
  double value = m * std::log(dd(inp.n)) + (k - m + 1.0) * std::log(m) + 2.0 * (k + 1.0);
  if (inp.switches > 0) value += 2.0 * k * std::log(dd(inp.horizon - 1) / k);
  return inp.c * value;
}

double pods_bound(const BoundInputs& inp) {
  validate(inp);
  double value = dd(inp.pool) * std::log(dd(inp.n)) + switch_entropy(inp);
  std::size_t revisits = inp.switches + 1 - inp.pool;
  if (revisits > 0)
    value += scaled_entropy(revisits, (inp.pool - 1) * (inp.horizon - 2));
  return inp.c * value;
}

double pods_bound_upper(const BoundInputs& inp) {
  validate(inp);
  double value = dd(inp.pool) * std::log(dd(inp.n)) +
                 entropy_relaxation(inp.switches, inp.horizon - 1);
  std::size_t revisits = inp.switches + 1 - inp.pool;
  if (revisits > 0)
    value += entropy_relaxation(revisits, (inp.pool - 1) * (inp.horizon - 2));
  return inp.c * value;
}

Tuning optimal_tuning(const BoundInputs& inp) {
  validate(inp);
  double alpha = inp.switches == 0 ? 0.0 : dd(inp.switches) / dd(inp.horizon - 1);
  std::size_t revisits = inp.switches + 1 - inp.pool;
  double theta = 0.0;
  if (inp.pool >= 2 && revisits > 0)
    theta = dd(revisits) / dd((inp.pool - 1) * (inp.horizon - 2));
  return Tuning{alpha, theta};
}

std::vector<Figure1Row> figure1_table(std::size_t n, std::size_t k, std::size_t T, double c,
                                      std::size_t m_min, std::size_t m_max) {
  if (m_min < 1 || m_min > m_max) throw ValidationError("figure1_table: bad m range");
  std::vector<Figure1Row> rows;
  for (std::size_t m = m_min; m <= m_max; ++m) {
    BoundInputs inp{n, T, k, m, c};
    validate(inp);
    rows.push_back(Figure1Row{m, fixed_share_bound(inp), mpp_decay_bound(inp),
                              mpp_uniform_bound(inp), specialists_bound(inp), pods_bound(inp)});
  }
  return rows;
}

}  // namespace switchtrack
