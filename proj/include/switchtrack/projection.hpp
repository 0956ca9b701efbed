#pragma once

#include <cstdint>
#include <vector>

#include "switchtrack/simplex.hpp"

namespace switchtrack {

// Basic-operation counters for the linear-time evidence checks.
struct ProjectionStats {
  std::uint64_t comparisons = 0;
};

// Result of projecting w onto C(beta) in relative entropy.
// p_i = beta_i on the bound set (indices with w_i/beta_i < threshold, 0-based)
// and p_i = lambda * w_i elsewhere, with lambda <= 1.
struct ProjectionResult {
  SimplexVector p;
  std::vector<std::size_t> bound_set;
  double lambda;
  double threshold;
};

// Exact relative-entropy projection onto C(beta) in worst-case O(n) time via
// median-of-medians threshold search. Optional stats receive the comparison
// count.
ProjectionResult project(const InteriorSimplexVector& w, const LowerBounds& beta,
                         ProjectionStats* stats = nullptr);

// Sort-based O(n log n) reference: grows the bound set along ascending ratios
// w_i/beta_i until the rescaled tail is feasible. Same output as project.
ProjectionResult project_oracle(const InteriorSimplexVector& w, const LowerBounds& beta);

// k-th smallest element, k counted from 1. Deterministic median-of-medians;
// worst-case linear time. Operates on an internal copy.
double select_kth(const std::vector<double>& values, std::size_t k);

// True iff p is feasible for C(beta), sums to one, and fits the max-form
// p_i = max{beta_i, lambda w_i} for one consistent lambda <= 1. Returns false
// on malformed input instead of throwing.
bool verify_kkt_form(const std::vector<double>& w, const std::vector<double>& beta,
                     const std::vector<double>& p);

namespace detail {
// In-place k-th smallest (k 0-based) on a scratch span; counts comparisons.
double select_inplace(double* data, std::size_t n, std::size_t k, std::uint64_t& comparisons);
}  // namespace detail

}  // namespace switchtrack
