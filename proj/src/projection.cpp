#include "switchtrack/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace switchtrack {

namespace detail {

namespace {

void insertion_sort(double* a, std::size_t n, std::uint64_t& comparisons) {
  for (std::size_t i = 1; i < n; ++i) {
    double x = a[i];
    std::size_t j = i;
    while (j > 0) {
      ++comparisons;
      if (a[j - 1] <= x) break;
      a[j] = a[j - 1];
      --j;
    }
    a[j] = x;
  }
}

// Dutch-flag partition around the pivot value: [< pivot][= pivot][> pivot].
// Returns the sizes of the first two blocks.
std::pair<std::size_t, std::size_t> partition3(double* a, std::size_t n, double pivot,
                                               std::uint64_t& comparisons) {
  std::size_t lo = 0, mid = 0, hi = n;
  while (mid < hi) {
    double x = a[mid];
    if (x < pivot) {
      ++comparisons;
      std::swap(a[lo++], a[mid++]);
    } else if (x > pivot) {
      comparisons += 2;
      std::swap(a[mid], a[--hi]);
    } else {
      comparisons += 2;
      ++mid;
    }
  }
  return {lo, mid - lo};
}

}  // namespace

double select_inplace(double* a, std::size_t n, std::size_t k, std::uint64_t& comparisons) {
  while (true) {
    if (n <= 5) {
      insertion_sort(a, n, comparisons);
      return a[k];
    }
    // Median of each block of five, compacted to the front.
    std::size_t ng = 0;
    std::size_t i = 0;
    for (; i + 5 <= n; i += 5) {
      insertion_sort(a + i, 5, comparisons);
      std::swap(a[ng++], a[i + 2]);
    }
    if (std::size_t rem = n - i; rem > 0) {
      insertion_sort(a + i, rem, comparisons);
      std::swap(a[ng++], a[i + rem / 2]);
    }
    double pivot = select_inplace(a, ng, ng / 2, comparisons);
    auto [lt, eq] = partition3(a, n, pivot, comparisons);
    if (k < lt) {
      n = lt;
    } else if (k < lt + eq) {
      return pivot;
    } else {
      a += lt + eq;
      k -= lt + eq;
      n -= lt + eq;
    }
  }
}

}  // namespace detail

double select_kth(const std::vector<double>& values, std::size_t k) {
  if (values.empty()) throw ValidationError("select_kth: empty input");
  if (k < 1 || k > values.size()) throw ValidationError("select_kth: k out of range");
  std::vector<double> scratch(values);
  std::uint64_t comparisons = 0;
  return detail::select_inplace(scratch.data(), scratch.size(), k - 1, comparisons);
}

namespace {

constexpr double kDegenerateMass = 1e-12;

void check_projection_inputs(const InteriorSimplexVector& w, const LowerBounds& beta) {
  if (w.size() != beta.size()) throw ValidationError("project: dimension mismatch");
}

ProjectionResult assemble(const std::vector<double>& w, const LowerBounds& beta,
                          const std::vector<double>& r, double lambda, double phi) {
  std::size_t n = w.size();
  std::vector<double> p(n);
  std::vector<std::size_t> bound_set;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] < phi) {
      p[i] = beta[i];
      bound_set.push_back(i);
    } else {
      p[i] = lambda * w[i];
    }
  }
  return ProjectionResult{SimplexVector(std::move(p)), std::move(bound_set), lambda, phi};
}

// Fully constrained case: C(beta) is the single point beta.
ProjectionResult degenerate_result(const LowerBounds& beta) {
  std::size_t n = beta.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return ProjectionResult{normalize(beta.beta()), std::move(all), 1.0,
                          std::numeric_limits<double>::infinity()};
}

}  // namespace

ProjectionResult project(const InteriorSimplexVector& w, const LowerBounds& beta,
                         ProjectionStats* stats) {
  check_projection_inputs(w, beta);
  if (beta.total_mass() >= 1.0 - kDegenerateMass) return degenerate_result(beta);

  std::size_t n = w.size();
  std::uint64_t comparisons = 0;
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = w[i] / beta[i];

  std::vector<std::size_t> window(n);
  std::iota(window.begin(), window.end(), 0);
  std::vector<double> scratch(n);

  double s_w = 0.0, s_b = 0.0;
  double phi = 0.0;
  while (!window.empty()) {
    std::size_t m = window.size();
    for (std::size_t j = 0; j < m; ++j) scratch[j] = r[window[j]];
    phi = detail::select_inplace(scratch.data(), m, (m + 1) / 2 - 1, comparisons);

    double l_w = 0.0, l_b = 0.0, m_w = 0.0, m_b = 0.0;
    std::size_t high_count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t i = window[j];
      if (r[i] < phi) {
        ++comparisons;
        l_w += w[i];
        l_b += beta[i];
      } else if (r[i] > phi) {
        comparisons += 2;
        ++high_count;
      } else {
        comparisons += 2;
        m_w += w[i];
        m_b += beta[i];
      }
    }

    double lambda = (1.0 - s_b - l_b) / (1.0 - s_w - l_w);
    ++comparisons;
    if (phi * lambda < 1.0) {
      s_w += l_w + m_w;
      s_b += l_b + m_b;
      if (high_count == 0) {
        // Candidate threshold exhausted the window: next ratio above phi, if
        // any, over all indices (single linear scan, at most once per call).
        double next = std::numeric_limits<double>::infinity();
        bool found = false;
        for (std::size_t i = 0; i < n; ++i) {
          ++comparisons;
          if (r[i] > phi && r[i] < next) {
            next = r[i];
            found = true;
          }
        }
        if (found) phi = next;
        window.clear();
      } else {
        std::size_t out = 0;
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t i = window[j];
          ++comparisons;
          if (r[i] > phi) window[out++] = i;
        }
        window.resize(out);
      }
    } else {
      std::size_t out = 0;
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t i = window[j];
        ++comparisons;
        if (r[i] < phi) window[out++] = i;
      }
      window.resize(out);
    }
  }

  if (1.0 - s_w <= 0.0)
    throw NumericError("project: threshold search consumed all weight mass");
  double lambda = (1.0 - s_b) / (1.0 - s_w);
  if (stats) stats->comparisons += comparisons;
  return assemble(w.values(), beta, r, lambda, phi);
}

ProjectionResult project_oracle(const InteriorSimplexVector& w, const LowerBounds& beta) {
  check_projection_inputs(w, beta);
  if (beta.total_mass() >= 1.0 - kDegenerateMass) return degenerate_result(beta);

  std::size_t n = w.size();
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = w[i] / beta[i];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });

  double s_w = 0.0, s_b = 0.0;
  std::size_t cut = 0;
  while (cut < n) {
    double lambda = (1.0 - s_b) / (1.0 - s_w);
    if (lambda * r[order[cut]] >= 1.0) break;
    s_w += w[order[cut]];
    s_b += beta[order[cut]];
    ++cut;
  }
  double lambda = (1.0 - s_b) / (1.0 - s_w);
  double phi = cut < n ? r[order[cut]] : std::numeric_limits<double>::infinity();
  return assemble(w.values(), beta, r, lambda, phi);
}

bool verify_kkt_form(const std::vector<double>& w, const std::vector<double>& beta,
                     const std::vector<double>& p) {
  constexpr double kTol = 1e-9;
  std::size_t n = w.size();
  if (n < 2 || beta.size() != n || p.size() != n) return false;

  double p_sum = 0.0, beta_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(w[i]) || !std::isfinite(beta[i]) || !std::isfinite(p[i])) return false;
    if (w[i] <= 0.0 || beta[i] <= 0.0 || beta[i] >= 1.0) return false;
    if (p[i] < beta[i] - kTol) return false;
    p_sum += p[i];
    beta_sum += beta[i];
  }
  if (std::fabs(p_sum - 1.0) > kTol || beta_sum > 1.0 + kTol) return false;

  // lambda must agree across all components strictly above their bound.
  double lambda = 0.0;
  bool have_lambda = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] > beta[i] + kTol) {
      double ratio = p[i] / w[i];
      if (!have_lambda) {
        lambda = ratio;
        have_lambda = true;
      } else if (std::fabs(ratio - lambda) > kTol * std::max(1.0, lambda)) {
        return false;
      }
    }
  }
  if (!have_lambda) {
    // Fully constrained: any lambda below every beta_i / w_i fits the max-form.
    lambda = beta[0] / w[0];
    for (std::size_t i = 1; i < n; ++i) lambda = std::min(lambda, beta[i] / w[i]);
  }
  if (lambda > 1.0 + kTol) return false;
  for (std::size_t i = 0; i < n; ++i) {
    double want = std::max(beta[i], lambda * w[i]);
    if (std::fabs(p[i] - want) > kTol) return false;
  }
  return true;
}

}  // namespace switchtrack
