#pragma once

// Fundamental representation of A_{N-1} as explicit N x N matrices.
//
// Basis states |1> ... |N> carry the fundamental weights in order, and the
// simple lowering operators walk the chain |k> -> |k+1>. A positive root
// alpha_i + ... + alpha_j is realized by the unit matrix that maps
// |j+1> -> |i>; the corresponding lowering operator is its transpose.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qconc/linalg.hpp"
#include "qconc/root_system.hpp"

namespace qconc {

struct LadderSet {
  std::size_t dimension = 0;
  std::vector<Root> roots;            ///< positive roots, canonical order
  std::vector<RealMatrix> cartan;     ///< H_1 ... H_{N-1}
  std::vector<RealMatrix> raising;    ///< E_alpha, indexed like `roots`
  std::vector<RealMatrix> lowering;   ///< E_{-alpha}

  std::size_t root_count() const { return roots.size(); }
};

/// Row/column (0-based) of the single unit entry of E_alpha.
inline std::pair<std::size_t, std::size_t> raising_entry(const Root& r) { return {r.first, r.last + 1}; }

inline LadderSet build_ladder_set(std::size_t n) {
  LadderSet ls;
  ls.dimension = n;
  ls.roots = positive_roots(n);
  const auto weights = fundamental_weights(n);

  const auto dim = static_cast<Eigen::Index>(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RealMatrix h = RealMatrix::Zero(dim, dim);
    for (std::size_t m = 0; m < n; ++m)
      h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) = weights[m].covariant[i].value();
    ls.cartan.push_back(std::move(h));
  }
  for (const auto& r : ls.roots) {
    RealMatrix e = RealMatrix::Zero(dim, dim);
    const auto [row, col] = raising_entry(r);
    e(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    ls.lowering.push_back(e.transpose());
    ls.raising.push_back(std::move(e));
  }
  return ls;
}

/// F_alpha = E_alpha - E_{-alpha}: real antisymmetric, the qudit analogue of
/// the spin flip. For N = 2 it is [[0, 1], [-1, 0]].
struct FlipOperator {
  std::size_t root_index = 0;
  RealMatrix matrix;
};

inline std::vector<FlipOperator> flip_operators(const LadderSet& ls) {
  std::vector<FlipOperator> out;
  out.reserve(ls.root_count());
  for (std::size_t k = 0; k < ls.root_count(); ++k) out.push_back({k, ls.raising[k] - ls.lowering[k]});
  return out;
}

struct CommutatorViolation {
  std::string relation;
  double residual = 0.0;
};

/// Sign s in [E_a, E_b] = s E_{a+b}, as produced by the matrix placement.
struct StructureSign {
  std::string alpha;
  std::string beta;
  std::string sum;
  int sign = 0;
};

struct CommutatorReport {
  double max_residual = 0.0;
  std::vector<CommutatorViolation> violations;  ///< residual above `threshold`
  std::vector<StructureSign> signs;
  std::size_t relations_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Evaluates every relation
///   [H_i, H_j] = 0,  [H_j, E_a] = (a)_j E_a,  [E_a, E_{-a}] = 2 (a)^i H_i,
///   [E_a, E_b] = +-E_{a+b} (a+b a root),  [E_a, E_b] = 0 (a+b not a root, a != -b)
/// over all nonzero roots a, b as a matrix residual. The composite-root
/// relation is accepted up to sign; the sign seen is recorded in `signs`.
inline CommutatorReport verify_commutators(const LadderSet& ls, double threshold = 1e-12) {
  CommutatorReport rep;
  const std::size_t rank = ls.cartan.size();
  auto comm = [](const RealMatrix& a, const RealMatrix& b) -> RealMatrix { return a * b - b * a; };
  auto record = [&](const std::string& rel, double residual) {
    ++rep.relations_checked;
    rep.max_residual = std::max(rep.max_residual, residual);
    if (residual > threshold) rep.violations.push_back({rel, residual});
  };
  auto maxabs = [](const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); };

  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      record("[H" + std::to_string(i + 1) + ",H" + std::to_string(j + 1) + "]=0",
             maxabs(comm(ls.cartan[i], ls.cartan[j])));

  // All nonzero roots with their operators: positive block then negative block.
  struct Signed {
    Root root;
    const RealMatrix* op;
  };
  std::vector<Signed> all;
  for (std::size_t k = 0; k < ls.root_count(); ++k) all.push_back({ls.roots[k], &ls.raising[k]});
  for (std::size_t k = 0; k < ls.root_count(); ++k) all.push_back({-ls.roots[k], &ls.lowering[k]});

  for (const auto& a : all) {
    for (std::size_t j = 0; j < rank; ++j) {
      const RealMatrix lhs = comm(ls.cartan[j], *a.op);
      record("[H" + std::to_string(j + 1) + ",E_" + a.root.label() + "]=(a)_j E",
             maxabs(lhs - a.root.covariant[j].value() * *a.op));
    }
  }

  for (std::size_t k = 0; k < ls.root_count(); ++k) {
    RealMatrix rhs = RealMatrix::Zero(ls.raising[k].rows(), ls.raising[k].cols());
    for (std::size_t i = 0; i < rank; ++i) rhs += 2.0 * ls.roots[k].coeffs[i].value() * ls.cartan[i];
    record("[E_" + ls.roots[k].label() + ",E_-(" + ls.roots[k].label() + ")]=2(a)^i H_i",
           maxabs(comm(ls.raising[k], ls.lowering[k]) - rhs));
  }

  auto find = [&](const Components& coeffs) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k].root.coeffs == coeffs) return k;
    return std::nullopt;
  };
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      Components sum(rank);
      bool zero = true;
      for (std::size_t i = 0; i < rank; ++i) {
        sum[i] = all[x].root.coeffs[i] + all[y].root.coeffs[i];
        zero = zero && sum[i] == HalfInteger{0};
      }
      if (zero) continue;  // [E_a, E_-a] handled above
      const RealMatrix c = comm(*all[x].op, *all[y].op);
      const std::string name = "[E_" + all[x].root.label() + ",E_" + all[y].root.label() + "]";
      if (const auto z = find(sum)) {
        const RealMatrix& target = *all[*z].op;
        const double plus = maxabs(c - target);
        const double minus = maxabs(c + target);
        record(name + "=+-E_" + all[*z].root.label(), std::min(plus, minus));
        rep.signs.push_back({all[x].root.label(), all[y].root.label(), all[*z].root.label(), plus <= minus ? 1 : -1});
      } else {
        record(name + "=0", maxabs(c));
      }
    }
  }
  return rep;
}

}  // namespace qconc
