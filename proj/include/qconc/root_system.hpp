#pragma once

// Root system of A_{N-1} in the normalization where every simple root has
// unit length: covariant components of the simple roots are read off the
// Dynkin chain (1 on the diagonal, -1/2 for linked neighbours), and the N
// weights of the fundamental representation follow from the highest weight
// [1/2, 0, ..., 0] by subtracting simple roots one at a time.

#include <cstddef>
#include <string>
#include <vector>

#include "qconc/errors.hpp"
#include "qconc/half_integer.hpp"

namespace qconc {

using Components = std::vector<HalfInteger>;

/// A root written as a contiguous run of simple roots,
/// alpha_first + ... + alpha_last (0-based simple-root indices). A negative
/// root carries the same run with `negative` set.
struct Root {
  std::size_t first = 0;
  std::size_t last = 0;
  bool negative = false;
  /// Expansion over the simple roots; equals the contravariant components (.)^i.
  Components coeffs;
  /// Covariant components [.]_j.
  Components covariant;

  const Components& contravariant() const { return coeffs; }
  bool is_simple() const { return first == last; }
  std::size_t rank() const { return coeffs.size(); }

  Root operator-() const {
    Root r = *this;
    r.negative = !negative;
    for (auto& c : r.coeffs) c = -c;
    for (auto& c : r.covariant) c = -c;
    return r;
  }

  /// "a1", "a1+a2", "-(a2+a3+a4)", ... (1-based, for display).
  std::string label() const {
    std::string s;
    for (std::size_t k = first; k <= last; ++k) s += (k == first ? "a" : "+a") + std::to_string(k + 1);
    if (!negative) return s;
    return is_simple() ? "-" + s : "-(" + s + ")";
  }
};

struct Weight {
  Components covariant;
};

namespace detail {

inline void require_dimension(std::size_t n) {
  if (n < 2) throw invalid_dimension("dimension must be >= 2, got " + std::to_string(n));
}

inline Components simple_covariant(std::size_t n, std::size_t k) {
  Components c(n - 1, HalfInteger{0});
  c[k] = HalfInteger{1};
  if (k > 0) c[k - 1] = -HalfInteger::half();
  if (k + 2 < n) c[k + 1] = -HalfInteger::half();
  return c;
}

inline Root make_run(std::size_t n, std::size_t first, std::size_t last) {
  Root r;
  r.first = first;
  r.last = last;
  r.coeffs.assign(n - 1, HalfInteger{0});
  r.covariant.assign(n - 1, HalfInteger{0});
  for (std::size_t k = first; k <= last; ++k) {
    r.coeffs[k] = HalfInteger{1};
    const auto ck = simple_covariant(n, k);
    for (std::size_t j = 0; j + 1 < n; ++j) r.covariant[j] += ck[j];
  }
  return r;
}

}  // namespace detail

/// Simple roots alpha_1 ... alpha_{N-1} of A_{N-1}.
inline std::vector<Root> simple_roots(std::size_t n) {
  detail::require_dimension(n);
  std::vector<Root> out;
  out.reserve(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) out.push_back(detail::make_run(n, k, k));
  return out;
}

/// All N(N-1)/2 positive roots, ordered by height (number of simple roots
/// in the run) and then by starting index: a1, ..., a_{N-1}, a1+a2, a2+a3,
/// ..., a1+...+a_{N-1}. For N = 3 this is (a1, a2, a1+a2).
inline std::vector<Root> positive_roots(std::size_t n) {
  detail::require_dimension(n);
  std::vector<Root> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t height = 1; height < n; ++height)
    for (std::size_t i = 0; i + height < n; ++i) out.push_back(detail::make_run(n, i, i + height - 1));
  return out;
}

/// Fundamental weights: w_1 = [1/2, 0, ..., 0], w_{k+1} = w_k - alpha_k.
inline std::vector<Weight> fundamental_weights(std::size_t n) {
  detail::require_dimension(n);
  std::vector<Weight> out;
  out.reserve(n);
  Components w(n - 1, HalfInteger{0});
  w[0] = HalfInteger::half();
  out.push_back({w});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto a = detail::simple_covariant(n, k);
    for (std::size_t j = 0; j + 1 < n; ++j) w[j] -= a[j];
    out.push_back({w});
  }
  return out;
}

}  // namespace qconc
