#pragma once

// Entanglement structure of low-dimensional subspaces.
//
// For real coefficients c_mu the concurrence vector of sum c_mu |psi_mu> is
//   C_k = sum_mu c_mu^2 C_k(psi_mu) + 2 sum_{mu<nu} c_mu c_nu <psi_mu|F (x) F|psi_nu*>_k.
// When the cross terms vanish on every slot k where some basis vector has a
// nonzero component, and on each such slot the basis components share one
// sign, no nontrivial real superposition can zero all of those slots: the
// subspace is fully entangled.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qconc/concurrence.hpp"
#include "qconc/errors.hpp"
#include "qconc/state_space.hpp"

namespace qconc {

inline constexpr double kOrthonormalTolerance = 1e-10;
inline constexpr double kDeltaTolerance = 1e-10;
inline constexpr double kEdgeThreshold = 1e-8;

class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::vector<PureState> states) : states_(std::move(states)) {
    if (states_.size() < 2 || states_.size() > 3) throw invalid_state("subspace basis needs 2 or 3 states");
    for (const auto& s : states_)
      if (s.dim_a() != states_.front().dim_a() || s.dim_b() != states_.front().dim_b())
        throw invalid_state("basis states have different shapes");
    for (std::size_t m = 0; m < states_.size(); ++m)
      for (std::size_t n = 0; n < states_.size(); ++n) {
        const cplx g = (states_[m].coeffs().conjugate().array() * states_[n].coeffs().array()).sum();
        const double dev = std::abs(g - (m == n ? 1.0 : 0.0));
        if (dev > kOrthonormalTolerance)
          throw invalid_state("basis is not orthonormal (Gram entry " + std::to_string(m + 1) + "," +
                              std::to_string(n + 1) + " off by " + std::to_string(dev) + ")");
      }
  }

  std::size_t size() const { return states_.size(); }
  std::size_t dim_a() const { return states_.front().dim_a(); }
  std::size_t dim_b() const { return states_.front().dim_b(); }
  const PureState& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<PureState>& states() const { return states_; }

  /// sum_k c_k |b_k> for real unit-norm c (normalization is re-checked).
  PureState combine(const std::vector<double>& c) const {
    ComplexMatrix m = ComplexMatrix::Zero(states_.front().coeffs().rows(), states_.front().coeffs().cols());
    for (std::size_t k = 0; k < states_.size(); ++k) m += c[k] * states_[k].coeffs();
    return PureState::normalized(std::move(m));
  }

 private:
  std::vector<PureState> states_;
};

inline SubspaceBasis named_subspace(const std::string& name) { return SubspaceBasis(catalog_basis(name)); }

// ---------------------------------------------------------------------------
// delta condition

struct DeltaReport {
  /// cross[k][mu][nu] = |<psi_mu| F (x) F |psi_nu*>| on slot k (diagonal = |C_k(psi_mu)|).
  std::vector<std::vector<std::vector<double>>> cross;
  /// Slots where at least one basis vector has a nonzero component.
  std::vector<std::size_t> support;
  /// holds[mu][nu]: the (mu, nu) cross terms vanish on every support slot.
  std::vector<std::vector<bool>> holds;
  double max_cross_support = 0.0;  ///< max off-diagonal magnitude over support slots
  double max_cross_all = 0.0;      ///< same, over every slot

  bool satisfied() const { return max_cross_support < kDeltaTolerance; }
  bool satisfied_on_all_slots() const { return max_cross_all < kDeltaTolerance; }
};

inline DeltaReport delta_condition(const SubspaceBasis& basis) {
  const FlipPair flips(basis.dim_a(), basis.dim_b());
  const std::size_t m = basis.size();
  DeltaReport rep;
  const auto& index = flips.index();
  rep.cross.assign(index.size(), std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0)));
  for (std::size_t k = 0; k < index.size(); ++k) {
    bool nonzero = false;
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = 0; nu < m; ++nu) {
        rep.cross[k][mu][nu] = std::abs(flips.bilinear(basis[mu].coeffs(), basis[nu].coeffs(), index[k]));
        if (mu == nu && rep.cross[k][mu][nu] > kDeltaTolerance) nonzero = true;
      }
    if (nonzero) rep.support.push_back(k);
  }
  rep.holds.assign(m, std::vector<bool>(m, true));
  for (std::size_t k = 0; k < index.size(); ++k) {
    const bool in_support = std::find(rep.support.begin(), rep.support.end(), k) != rep.support.end();
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = 0; nu < m; ++nu) {
        if (mu == nu) continue;
        const double x = rep.cross[k][mu][nu];
        rep.max_cross_all = std::max(rep.max_cross_all, x);
        if (in_support) {
          rep.max_cross_support = std::max(rep.max_cross_support, x);
          if (x >= kDeltaTolerance) rep.holds[mu][nu] = false;
        }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// sign criterion

enum class SignVerdict { FullyEntangled, EdgePossible, Inconclusive };

inline const char* to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::FullyEntangled: return "fully-entangled";
    case SignVerdict::EdgePossible: return "edge-possible";
    case SignVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SignReport {
  SignVerdict verdict = SignVerdict::Inconclusive;
  std::string reason;
  std::vector<ConcurrenceVector> vectors;
  DeltaReport delta;
};

inline SignReport sign_criterion(const SubspaceBasis& basis) {
  SignReport rep;
  rep.delta = delta_condition(basis);
  for (const auto& s : basis.states()) rep.vectors.push_back(concurrence_vector_pure(s));
  if (!rep.delta.satisfied()) {
    rep.reason = "cross terms do not vanish on the support slots";
    return rep;
  }
  for (const auto& cv : rep.vectors)
    for (const auto& c : cv.components)
      if (std::abs(c) > kDeltaTolerance && std::abs(c.imag()) >= kDeltaTolerance) {
        rep.reason = "complex-phase components";
        return rep;
      }
  for (std::size_t mu = 0; mu < rep.vectors.size(); ++mu)
    if (norm(rep.vectors[mu]) <= kDeltaTolerance) {
      rep.verdict = SignVerdict::EdgePossible;
      rep.reason = "basis state " + std::to_string(mu + 1) + " is separable";
      return rep;
    }
  for (std::size_t k : rep.delta.support) {
    bool pos = false, neg = false;
    for (const auto& cv : rep.vectors) {
      const double x = cv[k].real();
      if (x > kDeltaTolerance) pos = true;
      if (x < -kDeltaTolerance) neg = true;
    }
    if (pos && neg) {
      rep.verdict = SignVerdict::EdgePossible;
      rep.reason = "mixed signs on slot " + std::to_string(k + 1);
      return rep;
    }
  }
  rep.verdict = SignVerdict::FullyEntangled;
  rep.reason = "every support slot has a single sign";
  return rep;
}

// ---------------------------------------------------------------------------
// concurrence surface and enclosed volume

struct SurfaceSample {
  double theta = 0.0;
  double phi = 0.0;
  double radius = 0.0;
};

inline std::array<double, 3> sphere_coefficients(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

inline void require_three(const SubspaceBasis& basis) {
  if (basis.size() != 3) throw invalid_state("concurrence surfaces need a 3-state basis");
}

/// r(theta, phi) = |C| of sin t cos f b1 + sin t sin f b2 + cos t b3.
inline double surface_radius(const SubspaceBasis& basis, const FlipPair& flips, double theta, double phi) {
  const auto c = sphere_coefficients(theta, phi);
  ComplexMatrix m = c[0] * basis[0].coeffs() + c[1] * basis[1].coeffs() + c[2] * basis[2].coeffs();
  double s = 0.0;
  for (const auto& rp : flips.index()) s += std::norm(flips.bilinear(m, m, rp));
  return std::sqrt(s);
}

inline double surface_radius(const SubspaceBasis& basis, double theta, double phi) {
  require_three(basis);
  return surface_radius(basis, FlipPair(basis.dim_a(), basis.dim_b()), theta, phi);
}

/// Regular grid: theta_i = pi i / (n_theta - 1) (poles included),
/// phi_j = 2 pi j / n_phi. Samples ordered theta-major.
inline std::vector<SurfaceSample> surface(const SubspaceBasis& basis, std::size_t n_theta, std::size_t n_phi) {
  require_three(basis);
  if (n_theta < 2 || n_phi < 2) throw domain_error("surface grid needs n_theta, n_phi >= 2");
  const FlipPair flips(basis.dim_a(), basis.dim_b());
  std::vector<SurfaceSample> out;
  out.reserve(n_theta * n_phi);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_phi);
      out.push_back({theta, phi, surface_radius(basis, flips, theta, phi)});
    }
  }
  return out;
}

/// V = (1/3) int r^3 sin(theta) dtheta dphi on the surface() grid:
/// trapezoid in theta, periodic rectangle rule in phi.
inline double enclosed_volume(const std::vector<SurfaceSample>& samples, std::size_t n_theta, std::size_t n_phi) {
  if (samples.size() != n_theta * n_phi) throw invalid_state("sample count does not match grid");
  const double dtheta = std::numbers::pi / static_cast<double>(n_theta - 1);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_phi);
  double acc = 0.0;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double w = (i == 0 || i + 1 == n_theta) ? 0.5 : 1.0;
    double row = 0.0;
    for (std::size_t j = 0; j < n_phi; ++j) {
      const auto& s = samples[i * n_phi + j];
      row += s.radius * s.radius * s.radius;
    }
    acc += w * std::sin(samples[i * n_phi].theta) * row;
  }
  return acc * dtheta * dphi / 3.0;
}

inline double enclosed_volume(const SubspaceBasis& basis, std::size_t n_theta, std::size_t n_phi) {
  return enclosed_volume(surface(basis, n_theta, n_phi), n_theta, n_phi);
}

// ---------------------------------------------------------------------------
// entanglement edge along a two-parameter family p P + q Q

struct EdgePoint {
  double p = 0.0;  ///< coefficient of P after normalization (or raw)
  double q = 0.0;
  double norm = 0.0;  ///< |C| of the normalized state
};

struct EdgeFamily {
  ComplexMatrix p_direction;
  ComplexMatrix q_direction;
};

/// p (psi+_1 + psi+_2 + psi+_3) + q (|11> + |22> + |33>).
inline EdgeFamily su3_hexad_edge_family() {
  EdgeFamily f;
  f.p_direction = catalog_state("su3.psi+1").coeffs() + catalog_state("su3.psi+2").coeffs() +
                  catalog_state("su3.psi+3").coeffs();
  f.q_direction = ComplexMatrix::Identity(3, 3);
  return f;
}

struct EdgeScanOptions {
  std::size_t ellipse_points = 720;  ///< samples around the normalization ellipse
  std::size_t raw_points = 101;      ///< per axis of the raw (p, q) grid; 0 disables it
  double raw_extent = 1.0;           ///< raw grid covers [0, extent]^2
  double threshold = kEdgeThreshold;
};

struct EdgeScan {
  /// Points on the unit-norm ellipse, p = cos t / n(t), q = sin t / n(t),
  /// n(t) = ||cos t P + sin t Q||, t = 2 pi k / ellipse_points.
  std::vector<EdgePoint> normalized;
  /// Refined zeros of |C| on the ellipse (normalized coefficients).
  std::vector<EdgePoint> normalized_locus;
  /// Raw rectangular grid, row-major in q then p; each point's state is
  /// normalized before |C| is evaluated. The origin is skipped.
  std::vector<EdgePoint> raw;
  /// Refined zeros along each raw q-row (raw coefficients).
  std::vector<EdgePoint> raw_locus;
};

namespace detail {

/// Golden-section minimization of a unimodal f on [a, b].
inline double golden_min(const std::function<double(double)>& f, double a, double b, int iterations = 200) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iterations && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

/// Indices of strict-or-equal local minima of a (cyclic or open) sequence.
inline std::vector<std::size_t> local_minima(const std::vector<double>& v, bool cyclic) {
  std::vector<std::size_t> out;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool has_l = cyclic || i > 0;
    const bool has_r = cyclic || i + 1 < n;
    const double l = has_l ? v[(i + n - 1) % n] : v[i] + 1.0;
    const double r = has_r ? v[(i + 1) % n] : v[i] + 1.0;
    if (v[i] <= l && v[i] < r) out.push_back(i);
  }
  return out;
}

}  // namespace detail

inline EdgeScan edge_scan(const EdgeFamily& family, const EdgeScanOptions& opt = {}) {
  if (family.p_direction.rows() != family.q_direction.rows() || family.p_direction.cols() != family.q_direction.cols())
    throw invalid_state("edge family directions have different shapes");
  if (opt.ellipse_points < 3) throw domain_error("edge scan needs at least 3 ellipse points");
  const FlipPair flips(static_cast<std::size_t>(family.p_direction.rows()),
                       static_cast<std::size_t>(family.p_direction.cols()));

  // |C| of the normalized state p P + q Q, plus the normalization factor.
  auto evaluate = [&](double p, double q, double* scale) {
    const ComplexMatrix m = p * family.p_direction + q * family.q_direction;
    const double n = m.norm();
    if (scale) *scale = n;
    if (!(n > 0.0)) return 0.0;
    const ComplexMatrix u = m / n;
    double s = 0.0;
    for (const auto& rp : flips.index()) s += std::norm(flips.bilinear(u, u, rp));
    return std::sqrt(s);
  };
  auto on_ellipse = [&](double t) {
    double n = 0.0;
    const double c = evaluate(std::cos(t), std::sin(t), &n);
    return EdgePoint{std::cos(t) / n, std::sin(t) / n, c};
  };

  EdgeScan scan;
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(opt.ellipse_points);
  std::vector<double> norms;
  for (std::size_t k = 0; k < opt.ellipse_points; ++k) {
    scan.normalized.push_back(on_ellipse(dt * static_cast<double>(k)));
    norms.push_back(scan.normalized.back().norm);
  }
  for (std::size_t k : detail::local_minima(norms, true)) {
    const double t0 = dt * static_cast<double>(k);
    const double t = detail::golden_min([&](double x) { return on_ellipse(x).norm; }, t0 - dt, t0 + dt);
    const EdgePoint pt = on_ellipse(t);
    if (pt.norm < opt.threshold) scan.normalized_locus.push_back(pt);
  }

  if (opt.raw_points >= 2) {
    const double h = opt.raw_extent / static_cast<double>(opt.raw_points - 1);
    for (std::size_t iq = 0; iq < opt.raw_points; ++iq) {
      const double q = h * static_cast<double>(iq);
      std::vector<double> row;
      std::vector<double> ps;
      for (std::size_t ip = 0; ip < opt.raw_points; ++ip) {
        const double p = h * static_cast<double>(ip);
        if (ip == 0 && iq == 0) continue;
        const double c = evaluate(p, q, nullptr);
        scan.raw.push_back({p, q, c});
        row.push_back(c);
        ps.push_back(p);
      }
      for (std::size_t k : detail::local_minima(row, false)) {
        const double a = ps[k > 0 ? k - 1 : k];
        const double b = ps[k + 1 < ps.size() ? k + 1 : k];
        const double p = detail::golden_min([&](double x) { return evaluate(x, q, nullptr); }, a, b);
        const double c = evaluate(p, q, nullptr);
        if (c < opt.threshold) scan.raw_locus.push_back({p, q, c});
      }
    }
  }
  return scan;
}

}  // namespace qconc
