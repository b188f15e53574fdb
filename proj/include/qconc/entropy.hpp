#pragma once

// Entropies of pure bipartite states and their closed-form relation to the
// concurrence norm. Logarithms are base 2 throughout.
//
// For a pure state the reduced spectrum kappa_i^2 has e_1 = 1 and
// e_2 = |C|^2 / 4, so
//   2 x N_B : kappa^2 = (1 +- sqrt(1 - |C|^2)) / 2
//   3 x 3   : roots of  l^3 - l^2 + (|C|^2/4) l - det(rho_B) = 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qconc/concurrence.hpp"
#include "qconc/linalg.hpp"
#include "qconc/state_space.hpp"

namespace qconc {

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Shannon entropy (bits) of a probability vector; 0 log 0 = 0.
inline double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h -= xlog2x(x);
  return h;
}

/// Binary entropy h(x).
inline double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

struct EntropyReport {
  double von_neumann = 0.0;
  double linear = 0.0;
  std::vector<double> schmidt_squares;  ///< eigenvalues of rho_B, descending, clipped at 0
  double det_rho_b = 0.0;
};

namespace detail {

inline std::vector<double> clipped_spectrum(const ComplexMatrix& m) {
  const RealVector ev = hermitian_eigenvalues(m);
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  for (auto& x : out) x = std::max(0.0, x);
  return out;
}

}  // namespace detail

inline EntropyReport entropy_report(const PureState& ps) {
  const ComplexMatrix rho_b = reduced_density(ps, Side::B);
  EntropyReport r;
  r.schmidt_squares = detail::clipped_spectrum(rho_b);
  r.von_neumann = shannon_entropy(r.schmidt_squares);
  r.linear = 1.0 - (rho_b * rho_b).trace().real();
  double det = 1.0;
  for (double x : r.schmidt_squares) det *= x;
  r.det_rho_b = det;
  return r;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials of the reduced density matrices.

/// Coefficients c_0..c_n (highest power first) of prod (l - kappa_i^2) for an
/// n x n reduced matrix, built from the concurrence norm rather than from
/// the spectrum: e_1 = 1, e_2 = |C|^2/4, e_n = det, and for 3 <= k < n the
/// e_k come from power traces via Newton's identities.
inline std::vector<double> secular_coefficients(const ComplexMatrix& reduced, double norm_c_sq) {
  const auto n = static_cast<std::size_t>(reduced.rows());
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  if (n >= 1) e[1] = 1.0;
  if (n >= 2) e[2] = norm_c_sq / 4.0;
  if (n >= 4) {
    std::vector<double> power_trace(n + 1, 0.0);
    ComplexMatrix pk = ComplexMatrix::Identity(reduced.rows(), reduced.cols());
    for (std::size_t k = 1; k <= n; ++k) {
      pk = pk * reduced;
      power_trace[k] = pk.trace().real();
    }
    for (std::size_t k = 3; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = 1; i <= k; ++i) s += ((i % 2 == 1) ? 1.0 : -1.0) * e[k - i] * power_trace[i];
      e[k] = s / static_cast<double>(k);
    }
  }
  if (n >= 3) e[n] = reduced.determinant().real();
  std::vector<double> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = (k % 2 == 0 ? 1.0 : -1.0) * e[k];
  return coeffs;
}

inline double evaluate_polynomial(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

struct SecularSide {
  std::vector<double> coefficients;  ///< highest power first
  std::vector<double> roots;         ///< eigenvalues of the reduced matrix
  double residual = 0.0;             ///< max |P(root)|
};

struct SecularReport {
  double norm_c_sq = 0.0;
  SecularSide side_a;
  SecularSide side_b;
  /// 2 x N_B and N_A x 2 only: max deviation of the nonzero kappa^2 from
  /// (1 +- sqrt(1 - |C|^2)) / 2; zero otherwise.
  double closed_form_residual = 0.0;
  double max_residual = 0.0;
};

inline SecularReport check_secular(const PureState& ps) {
  SecularReport rep;
  rep.norm_c_sq = norm_sq(concurrence_vector_pure(ps));
  auto side = [&](Side s) {
    const ComplexMatrix red = reduced_density(ps, s);
    SecularSide out;
    out.coefficients = secular_coefficients(red, rep.norm_c_sq);
    out.roots = detail::clipped_spectrum(red);
    for (double r : out.roots) out.residual = std::max(out.residual, std::abs(evaluate_polynomial(out.coefficients, r)));
    return out;
  };
  rep.side_a = side(Side::A);
  rep.side_b = side(Side::B);
  if (std::min(ps.dim_a(), ps.dim_b()) == 2) {
    const double disc = std::sqrt(std::max(0.0, 1.0 - rep.norm_c_sq));
    const auto& roots = ps.dim_a() == 2 ? rep.side_a.roots : rep.side_b.roots;
    rep.closed_form_residual = std::max(std::abs(roots[0] - 0.5 * (1.0 + disc)), std::abs(roots[1] - 0.5 * (1.0 - disc)));
  }
  rep.max_residual = std::max({rep.side_a.residual, rep.side_b.residual, rep.closed_form_residual});
  return rep;
}

// ---------------------------------------------------------------------------
// Entropy from the concurrence norm.

/// E = h((1 - sqrt(1 - |C|^2)) / 2) for states with a two-level reduced side.
inline double entropy_from_norm_qubit(double norm_c) {
  if (!(norm_c >= 0.0 && norm_c <= 1.0)) throw domain_error("qubit concurrence norm must lie in [0, 1]");
  return binary_entropy(0.5 * (1.0 - std::sqrt(1.0 - norm_c * norm_c)));
}

struct QutritSpectrum {
  double x_plus = 0.0;
  double x_minus = 0.0;
  double x_rest = 0.0;  ///< 1 - x_plus - x_minus
};

inline constexpr double kCardanoTolerance = 1e-9;

/// Reduced spectrum of a 3 x 3 pure state from (|C|, det rho_B) by Cardano's
/// formula. With l = t + 1/3 the cubic becomes t^3 + p t + q = 0 where
///   p = |C|^2/4 - 1/3,   q = |C|^2/12 - det - 2/27,
/// and x^{+-} = 1/3 + w^{+-1} u + w^{-+1} v with u = cbrt(-q/2 + sqrt(D)),
/// v = cbrt(-q/2 - sqrt(D)), D = q^2/4 + p^3/27, w = exp(2 pi i / 3).
inline QutritSpectrum qutrit_spectrum_from_norm(double norm_c, double det_b) {
  if (!std::isfinite(norm_c) || !std::isfinite(det_b) || norm_c < 0.0)
    throw domain_error("concurrence norm must be finite and nonnegative");
  const double c2 = norm_c * norm_c;
  double p = c2 / 4.0 - 1.0 / 3.0;
  double q = c2 / 12.0 - det_b - 2.0 / 27.0;
  // Near the triple root (1/3, 1/3, 1/3) the cube roots turn ulp-level noise
  // in p, q into ~1e-5 errors; snap it.
  if (std::abs(p) < 1e-13) p = 0.0;
  if (std::abs(q) < 1e-13) q = 0.0;
  double disc = q * q / 4.0 + p * p * p / 27.0;
  // A double root sits exactly at disc = 0; roundoff on either side must not
  // be amplified by the square root into a spurious imaginary part.
  if (std::abs(disc) <= 1e-12 * (q * q / 4.0 + std::abs(p * p * p) / 27.0)) disc = 0.0;

  cplx u, v;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    u = std::cbrt(-q / 2.0 + s);
    v = std::cbrt(-q / 2.0 - s);
  } else {
    const cplx z(-q / 2.0, std::sqrt(-disc));
    u = std::abs(z) == 0.0 ? cplx(0.0) : std::pow(z, 1.0 / 3.0);
    v = std::conj(u);
  }
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cplx xp = 1.0 / 3.0 + w * u + std::conj(w) * v;
  const cplx xm = 1.0 / 3.0 + std::conj(w) * u + w * v;
  if (std::abs(xp.imag()) > kCardanoTolerance || std::abs(xm.imag()) > kCardanoTolerance)
    throw domain_error("(|C|, det rho_B) admits no real spectrum (imaginary part " +
                       std::to_string(std::max(std::abs(xp.imag()), std::abs(xm.imag()))) + ")");
  QutritSpectrum s{xp.real(), xm.real(), 1.0 - xp.real() - xm.real()};
  for (double x : {s.x_plus, s.x_minus, s.x_rest})
    if (x < -kCardanoTolerance || x > 1.0 + kCardanoTolerance)
      throw domain_error("(|C|, det rho_B) is inconsistent: recovered eigenvalue " + std::to_string(x));
  return s;
}

inline double entropy_from_norm_qutrit(double norm_c, double det_b) {
  const auto s = qutrit_spectrum_from_norm(norm_c, det_b);
  return shannon_entropy({std::max(0.0, s.x_plus), std::max(0.0, s.x_minus), std::max(0.0, s.x_rest)});
}

// ---------------------------------------------------------------------------
// Envelope of the qutrit entropy at fixed |C|.

inline constexpr double kMaxQutritNorm = 1.1547005383792515;  // sqrt(4/3)

/// Discriminant of l^3 - l^2 + e2 l - e3; >= 0 iff all three roots are real.
/// Written around its apex in e3,
///   -27 e3^2 + (18 e2 - 4) e3 + e2^2 - 4 e2^3 = (4/27)(1 - 3 e2)^3 - 27 (e3 - apex)^2,
/// so that the apex value is exactly zero at e2 = 1/3.
inline double cubic_discriminant(double e2, double e3) {
  const double apex = (18.0 * e2 - 4.0) / 54.0;
  const double s = 1.0 - 3.0 * e2;
  return 4.0 / 27.0 * s * s * s - 27.0 * (e3 - apex) * (e3 - apex);
}

struct DetInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Feasible det(rho_B) for a given |C|: the cubic must have three real roots
/// in [0, 1]. With e1 = 1, e2 >= 0 and det >= 0 real roots are automatically
/// in [0, 1], so only the discriminant sign and det >= 0 matter. Endpoints
/// are located by bisection to `tol`.
inline DetInterval feasible_det_interval(double norm_c, double tol = 1e-10) {
  if (!(norm_c >= 0.0 && norm_c <= kMaxQutritNorm + 1e-12))
    throw domain_error("concurrence norm must lie in [0, sqrt(4/3)]");
  const double e2 = std::min(norm_c * norm_c / 4.0, 1.0 / 3.0);
  auto feasible = [&](double d) { return d >= 0.0 && cubic_discriminant(e2, d) >= 0.0; };
  // The discriminant is a concave parabola in det with its apex here.
  const double apex = std::max(0.0, (18.0 * e2 - 4.0) / 54.0);
  if (!feasible(apex)) {
    // Only at the very ends of the range, where the interval collapses to a
    // point and roundoff pushes the apex value just below zero.
    if (cubic_discriminant(e2, apex) > -1e-14) return {apex, apex};
    throw domain_error("no feasible det(rho_B) for |C| = " + std::to_string(norm_c));
  }
  auto bisect = [&](double good, double bad) {
    while (std::abs(bad - good) > tol) {
      const double mid = 0.5 * (good + bad);
      (feasible(mid) ? good : bad) = mid;
    }
    return good;
  };
  const double lo = feasible(0.0) ? 0.0 : bisect(apex, 0.0);
  const double hi = bisect(apex, 1.0 / 27.0 + 1e-3);
  return {lo, hi};
}

struct EntropyBounds {
  double infimum = 0.0;
  double supremum = 0.0;
  double det_at_infimum = 0.0;
  double det_at_supremum = 0.0;
};

/// Min and max von Neumann entropy over the feasible det(rho_B) interval,
/// scanned on `grid` equally spaced points (endpoints included).
inline EntropyBounds entropy_bounds(double norm_c, std::size_t grid) {
  if (grid < 2) throw domain_error("entropy_bounds needs at least 2 grid points");
  const DetInterval iv = feasible_det_interval(norm_c);
  EntropyBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (std::size_t k = 0; k < grid; ++k) {
    const double d = iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
    const double h = entropy_from_norm_qutrit(norm_c, d);
    if (h < b.infimum) {
      b.infimum = h;
      b.det_at_infimum = d;
    }
    if (h > b.supremum) {
      b.supremum = h;
      b.det_at_supremum = d;
    }
  }
  return b;
}

}  // namespace qconc
