#pragma once

#include <cstddef>
#include <vector>

namespace switchtrack {

// Shared parameters of the regret-bound calculators: n experts, horizon T,
// k comparator switches, pool of m distinct comparator experts, and the
// realizability constant c of the loss.
struct BoundInputs {
  std::size_t n;
  std::size_t horizon;
  std::size_t switches;
  std::size_t pool;
  double c;
};

void validate(const BoundInputs& inp);

// Entropy forms are canonical; the *_upper variants replace entropy terms by
// their standard k ln((T-1)/k) + k style relaxations (or, for ideal_bound,
// relax the binomials) and always dominate the canonical value.
double fixed_share_bound(const BoundInputs& inp);
double fixed_share_bound_upper(const BoundInputs& inp);

// Exact log of the comparator-class size: ln(C(n,m) C(T-1,k) m (m-1)^k),
// computed through log-gamma.
double ideal_bound(const BoundInputs& inp);
double ideal_bound_upper(const BoundInputs& inp);

double mpp_decay_bound(const BoundInputs& inp);
double mpp_decay_bound_upper(const BoundInputs& inp);

double mpp_uniform_bound(const BoundInputs& inp);

double specialists_bound(const BoundInputs& inp);
double specialists_bound_upper(const BoundInputs& inp);

double pods_bound(const BoundInputs& inp);
double pods_bound_upper(const BoundInputs& inp);

struct Tuning {
  double alpha;
  double theta;
};

// alpha = k/(T-1); theta = (k-m+1)/((m-1)(T-2)), zero when m = 1 or m = k+1.
Tuning optimal_tuning(const BoundInputs& inp);

struct Figure1Row {
  std::size_t m;
  double fixed_share;
  double mpp_decay;
  double mpp_uniform;
  double specialists;
  double pods;
};

// One row per pool size m in [m_min, m_max].
std::vector<Figure1Row> figure1_table(std::size_t n, std::size_t k, std::size_t T, double c,
                                      std::size_t m_min, std::size_t m_max);

}  // namespace switchtrack
