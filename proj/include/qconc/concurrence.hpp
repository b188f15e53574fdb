#pragma once

// Concurrence vectors.
//
// Pure state: one component per pair of positive roots (alpha on side A,
// beta on side B),
//     C_{alpha beta} = <psi| F_alpha (x) F_beta |psi*>,
// where F = E_alpha - E_{-alpha} and |psi*> conjugates amplitudes in the
// computational basis. Components are ordered lexicographically over
// (A-root index, B-root index) in canonical root order.
//
// Mixed state: for each root pair, tau_{ij} = <v_i| F_alpha (x) F_beta |v_j*>
// over subnormalized eigenvectors v_i = sqrt(p_i) e_i of rho. With
// lambda_1 >= lambda_2 >= ... the square roots of the eigenvalues of
// tau tau*, the component is max(0, lambda_1 - sum_{i>1} lambda_i).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qconc/fundamental_rep.hpp"
#include "qconc/linalg.hpp"
#include "qconc/state_space.hpp"

namespace qconc {

struct RootPair {
  std::size_t alpha = 0;  ///< index into positive_roots(N_A)
  std::size_t beta = 0;   ///< index into positive_roots(N_B)
};

struct ConcurrenceVector {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<RootPair> index;
  std::vector<cplx> components;  ///< real and >= 0 for mixed states

  std::size_t size() const { return components.size(); }
  const cplx& operator[](std::size_t k) const { return components[k]; }
};

inline double norm_sq(const ConcurrenceVector& cv) {
  double s = 0.0;
  for (const auto& c : cv.components) s += std::norm(c);
  return s;
}

inline double norm(const ConcurrenceVector& cv) { return std::sqrt(norm_sq(cv)); }

/// Flip operators of both sides, shared by every evaluation on a given shape.
class FlipPair {
 public:
  FlipPair(std::size_t dim_a, std::size_t dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a < 2 || dim_b < 2)
      throw invalid_dimension("concurrence needs both subsystem dimensions >= 2, got " + std::to_string(dim_a) + "x" +
                              std::to_string(dim_b));
    for (auto& f : flip_operators(build_ladder_set(dim_a))) a_.push_back(std::move(f.matrix));
    for (auto& f : flip_operators(build_ladder_set(dim_b))) b_.push_back(std::move(f.matrix));
    for (std::size_t i = 0; i < a_.size(); ++i)
      for (std::size_t j = 0; j < b_.size(); ++j) index_.push_back({i, j});
  }

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const std::vector<RootPair>& index() const { return index_; }
  const RealMatrix& flip_a(std::size_t k) const { return a_[k]; }
  const RealMatrix& flip_b(std::size_t k) const { return b_[k]; }

  /// F_alpha (x) F_beta on the joint space.
  RealMatrix joint(const RootPair& rp) const { return kron(a_[rp.alpha], b_[rp.beta]); }

  /// <x| F_alpha (x) F_beta |y*> for coefficient matrices x, y. Equals
  /// conj(sum_{ij} (F_beta)_{ij} (x^T F_alpha y)_{ij}) since the flips are real.
  cplx bilinear(const ComplexMatrix& x, const ComplexMatrix& y, const RootPair& rp) const {
    const ComplexMatrix m = x.transpose() * a_[rp.alpha].cast<cplx>() * y;
    return std::conj((m.array() * b_[rp.beta].cast<cplx>().array()).sum());
  }

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<RealMatrix> a_;
  std::vector<RealMatrix> b_;
  std::vector<RootPair> index_;
};

inline ConcurrenceVector concurrence_vector_pure(const PureState& ps, const FlipPair& flips) {
  if (ps.dim_a() != flips.dim_a() || ps.dim_b() != flips.dim_b()) throw invalid_state("flip operators built for another shape");
  ConcurrenceVector cv{ps.dim_a(), ps.dim_b(), flips.index(), {}};
  cv.components.reserve(cv.index.size());
  for (const auto& rp : cv.index) cv.components.push_back(flips.bilinear(ps.coeffs(), ps.coeffs(), rp));
  return cv;
}

inline ConcurrenceVector concurrence_vector_pure(const PureState& ps) {
  return concurrence_vector_pure(ps, FlipPair(ps.dim_a(), ps.dim_b()));
}

/// Root-pair position in the canonical component order.
inline std::size_t component_slot(std::size_t dim_b, const RootPair& rp) {
  return rp.alpha * (dim_b * (dim_b - 1) / 2) + rp.beta;
}

// ---------------------------------------------------------------------------
// Mixed states

/// Eigenvalues of rho at or below this are taken as exact zeros. They sit
/// under the eigensolver's resolution, and sqrt(p) would otherwise turn
/// ~1e-17 noise into ~3e-9 contributions to every lambda.
inline constexpr double kRankCutoff = 1e-14;

/// Columns v_i = sqrt(p_i) e_i over the full spectrum of rho.
inline ComplexMatrix subnormalized_eigenvectors(const DensityMatrix& rho) {
  const auto& eig = rho.eigen();
  ComplexMatrix v = eig.vectors;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double p = eig.values(k);
    v.col(k) *= p > kRankCutoff ? std::sqrt(p) : 0.0;
  }
  return v;
}

/// tau^{alpha beta}_{ij} = <v_i| F_alpha (x) F_beta |v_j*>; complex symmetric.
inline ComplexMatrix tau_matrix(const DensityMatrix& rho, const RootPair& rp, const FlipPair& flips) {
  const ComplexMatrix v = subnormalized_eigenvectors(rho);
  const ComplexMatrix tau = v.adjoint() * flips.joint(rp).cast<cplx>() * v.conjugate();
  return 0.5 * (tau + tau.transpose());
}

inline ComplexMatrix tau_matrix(const DensityMatrix& rho, const RootPair& rp) {
  return tau_matrix(rho, rp, FlipPair(rho.dim_a(), rho.dim_b()));
}

inline constexpr double kSpectrumClip = 1e-10;

/// Descending lambda_i: square roots of the eigenvalues of tau tau*. Values
/// in (-1e-10, 0) are clipped to zero; anything more negative is a failure.
inline std::vector<double> lambda_spectrum(const ComplexMatrix& tau) {
  const ComplexMatrix prod = tau * tau.conjugate();
  const RealVector ev = hermitian_eigenvalues(prod);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) < -kSpectrumClip)
      throw numerical_failure("tau tau* has eigenvalue " + std::to_string(ev(k)) + " below -1e-10", -ev(k));
    out.push_back(std::sqrt(std::max(0.0, ev(k))));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline double concurrence_from_lambdas(const std::vector<double>& lambdas) {
  if (lambdas.empty()) return 0.0;
  double rest = 0.0;
  for (std::size_t i = 1; i < lambdas.size(); ++i) rest += lambdas[i];
  return std::max(0.0, lambdas.front() - rest);
}

inline double mixed_component(const DensityMatrix& rho, const RootPair& rp, const FlipPair& flips) {
  return concurrence_from_lambdas(lambda_spectrum(tau_matrix(rho, rp, flips)));
}

inline double mixed_component(const DensityMatrix& rho, const RootPair& rp) {
  return mixed_component(rho, rp, FlipPair(rho.dim_a(), rho.dim_b()));
}

inline ConcurrenceVector concurrence_vector_mixed(const DensityMatrix& rho) {
  const FlipPair flips(rho.dim_a(), rho.dim_b());
  const ComplexMatrix v = subnormalized_eigenvectors(rho);
  const ComplexMatrix vc = v.conjugate();
  const ComplexMatrix vh = v.adjoint();
  ConcurrenceVector cv{rho.dim_a(), rho.dim_b(), flips.index(), {}};
  cv.components.reserve(cv.index.size());
  for (const auto& rp : cv.index) {
    ComplexMatrix tau = vh * flips.joint(rp).cast<cplx>() * vc;
    tau = 0.5 * (tau + tau.transpose()).eval();
    cv.components.emplace_back(concurrence_from_lambdas(lambda_spectrum(tau)), 0.0);
  }
  return cv;
}

}  // namespace qconc
