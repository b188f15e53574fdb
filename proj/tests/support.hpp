#pragma once

// Random states and brute-force oracles shared by the test binaries. None of
// the oracles here call into the library's eigensolver or flip operators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qconc/qconc.hpp"

namespace testing_support {

using qconc::cplx;
using qconc::ComplexMatrix;
using qconc::ComplexVector;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611u);
  return g;
}

inline cplx gaussian_c() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline ComplexMatrix random_coeffs(std::size_t da, std::size_t db) {
  ComplexMatrix m(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = gaussian_c();
  return m / m.norm();
}

inline qconc::PureState random_state(std::size_t da, std::size_t db) {
  return qconc::PureState(random_coeffs(da, db));
}

inline ComplexVector random_unit_vector(std::size_t n) {
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian_c();
  return v / v.norm();
}

inline qconc::PureState random_product_state(std::size_t da, std::size_t db) {
  const ComplexVector a = random_unit_vector(da), b = random_unit_vector(db);
  return qconc::PureState(ComplexMatrix(a * b.transpose()));
}

/// Haar-ish unitary from the QR of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t n) {
  ComplexMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gaussian_c();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return qr.householderQ();
}

/// Schmidt rank >= 2 with the second Schmidt coefficient >= 0.1.
inline qconc::PureState random_entangled_state(std::size_t da, std::size_t db) {
  const std::size_t d = std::min(da, db);
  std::vector<double> k(d, 0.0);
  k[1] = uniform(0.1, 0.7);
  double rest = k[1] * k[1];
  for (std::size_t i = 2; i < d; ++i) {
    k[i] = uniform(0.0, 0.3) / std::sqrt(static_cast<double>(d));
    rest += k[i] * k[i];
  }
  k[0] = std::sqrt(1.0 - rest);
  ComplexMatrix diag = ComplexMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (std::size_t i = 0; i < d; ++i) diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = k[i];
  const ComplexMatrix u = random_unitary(da), v = random_unitary(db);
  return qconc::PureState::normalized(u * diag * v.transpose());
}

/// Random full-rank density matrix: G G^dagger / tr.
inline qconc::DensityMatrix random_density(std::size_t da, std::size_t db) {
  const auto n = static_cast<Eigen::Index>(da * db);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gaussian_c();
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return qconc::DensityMatrix(rho, da, db);
}

// ---------------------------------------------------------------------------
// Oracles

/// 4 * sum over 2x2 minors |a_{mu i} a_{nu j} - a_{mu j} a_{nu i}|^2.
inline double minor_sum_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index mu = 0; mu < a.rows(); ++mu)
    for (Eigen::Index nu = mu + 1; nu < a.rows(); ++nu)
      for (Eigen::Index i = 0; i < a.cols(); ++i)
        for (Eigen::Index j = i + 1; j < a.cols(); ++j)
          s += std::norm(a(mu, i) * a(nu, j) - a(mu, j) * a(nu, i));
  return 4.0 * s;
}

/// Two-qubit concurrence via the spin-flipped rho~ = (sy x sy) rho* (sy x sy).
inline double wootters(const ComplexMatrix& rho) {
  ComplexMatrix sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  ComplexMatrix yy(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) yy.block(2 * i, 2 * j, 2, 2) = sy(i, j) * sy;
  const ComplexMatrix tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(rho * tilde);
  std::vector<double> l;
  for (Eigen::Index k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

/// Pure-state Hill-Wootters |<psi| sy x sy |psi*>|.
inline double hill_wootters(const ComplexVector& psi) {
  ComplexMatrix sy(2, 2);
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  ComplexMatrix yy(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) yy.block(2 * i, 2 * j, 2, 2) = sy(i, j) * sy;
  return std::abs((psi.adjoint() * yy * psi.conjugate())(0, 0));
}

inline double werner_oracle(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

/// Reduced density of side B via explicit partial trace of |psi><psi|.
inline ComplexMatrix partial_trace_a(const ComplexVector& psi, std::size_t da, std::size_t db) {
  const auto nb = static_cast<Eigen::Index>(db);
  ComplexMatrix r = ComplexMatrix::Zero(nb, nb);
  for (Eigen::Index m = 0; m < static_cast<Eigen::Index>(da); ++m)
    for (Eigen::Index i = 0; i < nb; ++i)
      for (Eigen::Index j = 0; j < nb; ++j) r(i, j) += psi(m * nb + i) * std::conj(psi(m * nb + j));
  return r;
}

inline std::vector<double> oracle_spectrum(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline double oracle_entropy(const std::vector<double>& spec) {
  double s = 0.0;
  for (double x : spec)
    if (x > 1e-300) s -= x * std::log(x) / std::log(2.0);
  return s;
}

/// Real roots of a monic-or-not polynomial (highest power first) through the
/// eigenvalues of its companion matrix.
inline std::vector<double> companion_roots(const std::vector<double>& c) {
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) comp(0, k) = -c[static_cast<std::size_t>(k + 1)] / c[0];
  for (Eigen::Index k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> r;
  for (Eigen::Index k = 0; k < n; ++k) r.push_back(es.eigenvalues()(k).real());
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

}  // namespace testing_support
