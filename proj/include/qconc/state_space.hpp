#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qconc/errors.hpp"
#include "qconc/linalg.hpp"

namespace qconc {

inline constexpr double kNormTolerance = 1e-12;

enum class Side { A, B };

/// Bipartite pure state sum_{mu j} a_{mu j} |mu> (x) |j>, stored as the
/// N_A x N_B coefficient matrix. Joint-space vectors use the row-major
/// index mu * N_B + j.
class PureState {
 public:
  /// Rejects zero-norm input and anything not normalized within 1e-12.
  explicit PureState(ComplexMatrix coeffs) : coeffs_(std::move(coeffs)) {
    check_shape();
    const double n2 = coeffs_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTolerance)
      throw normalization_error("state is not normalized: sum |a|^2 = " + format_double(n2));
  }

  /// Explicit rescaling to unit norm; zero-norm input is still an error.
  static PureState normalized(ComplexMatrix coeffs) {
    const double n = coeffs.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw normalization_error("state has zero norm");
    return PureState(coeffs / n, Unchecked{});
  }

  static PureState from_vector(const ComplexVector& v, std::size_t dim_a, std::size_t dim_b) {
    if (static_cast<std::size_t>(v.size()) != dim_a * dim_b)
      throw invalid_state("vector length does not match dimensions");
    ComplexMatrix m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
    for (Eigen::Index mu = 0; mu < m.rows(); ++mu)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(mu, j) = v(mu * m.cols() + j);
    return PureState(std::move(m));
  }

  std::size_t dim_a() const { return static_cast<std::size_t>(coeffs_.rows()); }
  std::size_t dim_b() const { return static_cast<std::size_t>(coeffs_.cols()); }
  const ComplexMatrix& coeffs() const { return coeffs_; }
  cplx operator()(std::size_t mu, std::size_t j) const {
    return coeffs_(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(j));
  }

  ComplexVector vector() const {
    ComplexVector v(coeffs_.size());
    for (Eigen::Index mu = 0; mu < coeffs_.rows(); ++mu)
      for (Eigen::Index j = 0; j < coeffs_.cols(); ++j) v(mu * coeffs_.cols() + j) = coeffs_(mu, j);
    return v;
  }

 private:
  struct Unchecked {};
  PureState(ComplexMatrix coeffs, Unchecked) : coeffs_(std::move(coeffs)) { check_shape(); }

  void check_shape() const {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1) throw invalid_dimension("empty coefficient matrix");
    if (!coeffs_.allFinite()) throw invalid_state("non-finite amplitude");
  }
  static std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }

  ComplexMatrix coeffs_;
};

/// Hermitian, unit-trace, positive-semidefinite operator on C^{N_A} (x) C^{N_B}.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kNegativeEigenTolerance = 1e-10;

  DensityMatrix(ComplexMatrix rho, std::size_t dim_a, std::size_t dim_b) : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a < 1 || dim_b < 1) throw invalid_dimension("density matrix needs positive subsystem dimensions");
    const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
    if (rho_.rows() != n || rho_.cols() != n)
      throw invalid_state("density matrix is " + std::to_string(rho_.rows()) + "x" + std::to_string(rho_.cols()) +
                          ", expected " + std::to_string(n) + "x" + std::to_string(n));
    if (!rho_.allFinite()) throw invalid_state("non-finite density matrix entry");
    const double herm = hermiticity_defect(rho_);
    if (herm > kHermitianTolerance) throw invalid_state("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance)
      throw normalization_error("density matrix trace is " + std::to_string(tr) + ", expected 1");
    eig_ = hermitian_eigen(rho_);
    const double lowest = eig_.values(eig_.values.size() - 1);
    if (lowest < -kNegativeEigenTolerance)
      throw invalid_state("density matrix is not positive semidefinite (eigenvalue " + std::to_string(lowest) + ")");
  }

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim() const { return dim_a_ * dim_b_; }
  const ComplexMatrix& matrix() const { return rho_; }
  /// Spectral decomposition, eigenvalues descending.
  const HermitianEigen& eigen() const { return eig_; }

 private:
  ComplexMatrix rho_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  HermitianEigen eig_;
};

/// rho_A = a a^dagger (N_A x N_A) or rho_B = a^dagger a (N_B x N_B). Note that
/// rho_B here is the transpose of the partial trace in the |j> basis; the
/// spectrum, trace and determinant are unaffected.
inline ComplexMatrix reduced_density(const PureState& ps, Side side) {
  const auto& a = ps.coeffs();
  if (side == Side::A) return a * a.adjoint();
  return a.adjoint() * a;
}

inline DensityMatrix make_density(const PureState& ps) {
  const ComplexVector v = ps.vector();
  return DensityMatrix(v * v.adjoint(), ps.dim_a(), ps.dim_b());
}

inline DensityMatrix make_density(const std::vector<std::pair<double, PureState>>& mixture) {
  if (mixture.empty()) throw invalid_state("empty mixture");
  const std::size_t da = mixture.front().second.dim_a();
  const std::size_t db = mixture.front().second.dim_b();
  const auto n = static_cast<Eigen::Index>(da * db);
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  double total = 0.0;
  for (const auto& [w, ps] : mixture) {
    if (w < 0.0) throw invalid_state("negative mixture weight " + std::to_string(w));
    if (ps.dim_a() != da || ps.dim_b() != db) throw invalid_state("mixture members have different shapes");
    const ComplexVector v = ps.vector();
    rho += w * (v * v.adjoint());
    total += w;
  }
  if (std::abs(total - 1.0) > kNormTolerance)
    throw normalization_error("mixture weights sum to " + std::to_string(total) + ", expected 1");
  return DensityMatrix(rho, da, db);
}

/// p |psi-><psi-| + (1-p) I/4 on two qubits.
inline DensityMatrix werner_state(double p);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  std::string description;
  PureState state;
  /// Concurrence vector as tabulated for this state, when available.
  std::optional<std::vector<cplx>> expected_concurrence;
};

namespace detail {

struct Amp {
  std::size_t i;  // 1-based
  std::size_t j;
  cplx value;
};

inline PureState build(std::size_t da, std::size_t db, std::initializer_list<Amp> amps) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (const auto& a : amps) m(static_cast<Eigen::Index>(a.i - 1), static_cast<Eigen::Index>(a.j - 1)) += a.value;
  return PureState::normalized(std::move(m));
}

inline cplx omega(int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0); }

// Spin label m = 1, 0, -1 -> internal basis index 1, 2, 3.
inline std::size_t spin(int m) { return static_cast<std::size_t>(2 - m); }

inline std::vector<cplx> slots9(std::initializer_list<std::pair<std::size_t, cplx>> nz) {
  std::vector<cplx> v(9, 0.0);
  for (const auto& [k, x] : nz) v[k - 1] = x;
  return v;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using detail::Amp;
    using detail::build;
    using detail::omega;
    using detail::slots9;
    using detail::spin;
    std::vector<CatalogEntry> c;
    const double t = 2.0 / 3.0;

    // SU(3): hexad superpositions and the antisymmetric / symmetric pairs.
    c.push_back({"su3.phi1", "(|11>+|22>+|33>)/sqrt3", build(3, 3, {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}}),
                 slots9({{1, t}, {5, t}, {9, t}})});
    c.push_back({"su3.phi2", "(|11>+w|22>+w*|33>)/sqrt3", build(3, 3, {{1, 1, 1}, {2, 2, omega(1)}, {3, 3, omega(-1)}}),
                 slots9({{1, t * omega(-1)}, {5, t}, {9, t * omega(1)}})});
    c.push_back({"su3.phi3", "(|11>+w*|22>+w|33>)/sqrt3", build(3, 3, {{1, 1, 1}, {2, 2, omega(-1)}, {3, 3, omega(1)}}),
                 slots9({{1, t * omega(1)}, {5, t}, {9, t * omega(-1)}})});
    const std::pair<std::size_t, std::size_t> pairs[3] = {{1, 2}, {2, 3}, {1, 3}};
    const std::size_t diag_slot[3] = {1, 5, 9};
    for (int k = 0; k < 3; ++k) {
      const auto [x, y] = pairs[k];
      const std::string idx = std::to_string(k + 1);
      c.push_back({"su3.psi+" + idx, "(|" + std::to_string(x) + std::to_string(y) + ">+|" + std::to_string(y) +
                                         std::to_string(x) + ">)/sqrt2",
                   build(3, 3, {{x, y, 1}, {y, x, 1}}), slots9({{diag_slot[k], -1.0}})});
      c.push_back({"su3.psi-" + idx, "(|" + std::to_string(x) + std::to_string(y) + ">-|" + std::to_string(y) +
                                         std::to_string(x) + ">)/sqrt2",
                   build(3, 3, {{x, y, 1}, {y, x, -1}}), slots9({{diag_slot[k], 1.0}})});
    }
    // Generalized EPR basis.
    const std::pair<std::size_t, std::size_t> cyc_a[3] = {{1, 2}, {2, 3}, {3, 1}};
    const std::pair<std::size_t, std::size_t> cyc_b[3] = {{2, 1}, {3, 2}, {1, 3}};
    for (int block = 0; block < 2; ++block) {
      const auto* cyc = block == 0 ? cyc_a : cyc_b;
      for (int k = 0; k < 3; ++k) {
        const int phase = k == 0 ? 0 : (k == 1 ? 1 : -1);
        const std::string name = "su3.phi" + std::to_string(4 + 3 * block + k);
        CatalogEntry e{name, "cyclic EPR-type state",
                       build(3, 3,
                             {{cyc[0].first, cyc[0].second, 1.0},
                              {cyc[1].first, cyc[1].second, omega(phase)},
                              {cyc[2].first, cyc[2].second, omega(-phase)}}),
                       std::nullopt};
        if (name == "su3.phi4") e.expected_concurrence = slots9({{2, t}, {6, -t}, {7, -t}});
        c.push_back(std::move(e));
      }
    }

    // SO(3) pair states, labels m = 1, 0, -1.
    auto so3 = [](std::initializer_list<std::tuple<int, int, double>> terms) {
      ComplexMatrix m = ComplexMatrix::Zero(3, 3);
      for (const auto& [ma, mb, w] : terms)
        m(static_cast<Eigen::Index>(spin(ma) - 1), static_cast<Eigen::Index>(spin(mb) - 1)) += w;
      return PureState::normalized(std::move(m));
    };
    c.push_back({"so3.chi+1", "(|0 1>+|1 0>)/sqrt2", so3({{0, 1, 1}, {1, 0, 1}}), slots9({{1, -1.0}})});
    c.push_back({"so3.chi-1", "(|0 1>-|1 0>)/sqrt2", so3({{0, 1, 1}, {1, 0, -1}}), slots9({{1, 1.0}})});
    c.push_back({"so3.chi+m1", "(|-1 0>+|0 -1>)/sqrt2", so3({{-1, 0, 1}, {0, -1, 1}}), slots9({{5, -1.0}})});
    c.push_back({"so3.chi-m1", "(|-1 0>-|0 -1>)/sqrt2", so3({{-1, 0, 1}, {0, -1, -1}}), slots9({{5, 1.0}})});
    c.push_back({"so3.chi+0", "(|-1 1>+2|0 0>+|1 -1>)/sqrt6", so3({{-1, 1, 1}, {0, 0, 2}, {1, -1, 1}}),
                 slots9({{2, -t}, {4, -t}, {9, -1.0 / 3.0}})});
    c.push_back({"so3.chi-0", "(|-1 1>-|1 -1>)/sqrt2", so3({{-1, 1, 1}, {1, -1, -1}}), slots9({{9, 1.0}})});
    c.push_back({"so3.chi00", "(|-1 1>-|0 0>+|1 -1>)/sqrt3", so3({{-1, 1, 1}, {0, 0, -1}, {1, -1, 1}}),
                 slots9({{2, t}, {4, t}, {9, -t}})});
    c.push_back({"so3.phi+", "(|1 1>+|-1 -1>)/sqrt2", so3({{1, 1, 1}, {-1, -1, 1}}), slots9({{9, 1.0}})});
    c.push_back({"so3.phi-", "(|1 1>-|-1 -1>)/sqrt2", so3({{1, 1, 1}, {-1, -1, -1}}), slots9({{9, -1.0}})});

    // Qubit Bell states, |up> = |1>, |down> = |2>.
    c.push_back({"bell.phi+", "(|uu>+|dd>)/sqrt2", build(2, 2, {{1, 1, 1}, {2, 2, 1}}), std::vector<cplx>{1.0}});
    c.push_back({"bell.phi-", "(|uu>-|dd>)/sqrt2", build(2, 2, {{1, 1, 1}, {2, 2, -1}}), std::vector<cplx>{-1.0}});
    c.push_back({"bell.psi+", "(|ud>+|du>)/sqrt2", build(2, 2, {{1, 2, 1}, {2, 1, 1}}), std::vector<cplx>{-1.0}});
    c.push_back({"bell.psi-", "(|ud>-|du>)/sqrt2", build(2, 2, {{1, 2, 1}, {2, 1, -1}}), std::vector<cplx>{1.0}});
    return c;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

inline const PureState& catalog_state(const std::string& name) {
  if (const auto* e = find_catalog_entry(name)) return e->state;
  throw invalid_state("unknown catalog state '" + name + "'");
}

/// Named 3-state subspace bases, listed in (b1, b2, b3) order of the surface
/// parametrization sin t cos f b1 + sin t sin f b2 + cos t b3.
inline const std::map<std::string, std::vector<std::string>>& named_bases() {
  static const std::map<std::string, std::vector<std::string>> bases = {
      {"su3.psi-", {"su3.psi-1", "su3.psi-2", "su3.psi-3"}},
      {"su3.psi+", {"su3.psi+1", "su3.psi+2", "su3.psi+3"}},
      {"su3.phi", {"su3.phi1", "su3.phi2", "su3.phi3"}},
      {"so3.triplet", {"so3.chi-1", "so3.chi-0", "so3.chi-m1"}},
      {"so3.pentad", {"so3.chi+1", "so3.chi+0", "so3.chi+m1"}},
      {"so3.singlet-phi", {"so3.chi00", "so3.phi+", "so3.phi-"}},
  };
  return bases;
}

inline std::vector<PureState> catalog_basis(const std::string& name) {
  const auto& bases = named_bases();
  const auto it = bases.find(name);
  if (it == bases.end()) throw invalid_state("unknown basis '" + name + "'");
  std::vector<PureState> out;
  for (const auto& s : it->second) out.push_back(catalog_state(s));
  return out;
}

inline DensityMatrix werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw domain_error("Werner parameter must lie in [0, 1]");
  const ComplexVector v = catalog_state("bell.psi-").vector();
  ComplexMatrix rho = p * (v * v.adjoint()) + ((1.0 - p) / 4.0) * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(rho, 2, 2);
}

}  // namespace qconc
