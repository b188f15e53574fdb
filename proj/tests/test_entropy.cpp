// Entropies, the secular polynomials and the qutrit entropy envelope.

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qconc;
namespace ts = testing_support;

namespace {

using Shape = std::pair<std::size_t, std::size_t>;

double direct_entropy(const PureState& ps) {
  return ts::oracle_entropy(ts::oracle_spectrum(ts::partial_trace_a(ps.vector(), ps.dim_a(), ps.dim_b())));
}

}  // namespace

TEST(EntropyReport, Examples) {
  const auto bell = entropy_report(catalog_state("bell.phi+"));
  EXPECT_NEAR(bell.von_neumann, 1.0, 1e-14);
  EXPECT_NEAR(bell.linear, 0.5, 1e-14);

  const auto phi1 = entropy_report(catalog_state("su3.phi1"));
  EXPECT_NEAR(phi1.von_neumann, std::log2(3.0), 1e-13);
  EXPECT_NEAR(phi1.linear, 2.0 / 3, 1e-14);
  EXPECT_NEAR(phi1.det_rho_b, 1.0 / 27, 1e-15);

  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 1;
  const auto prod = entropy_report(PureState(a));
  EXPECT_EQ(prod.von_neumann, 0.0);
  EXPECT_EQ(prod.linear, 0.0);
  EXPECT_EQ(prod.det_rho_b, 0.0);
}

TEST(EntropyReport, MatchesDirectSpectrum) {
  for (auto [da, db] : {Shape{2, 3}, Shape{3, 3}, Shape{4, 2}}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto ps = ts::random_state(da, db);
      EXPECT_NEAR(entropy_report(ps).von_neumann, direct_entropy(ps), 1e-12);
    }
  }
}

TEST(EntropyReport, LinearIsHalfNormSq) {
  for (int rep = 0; rep < 100; ++rep) {
    const auto ps = ts::random_state(3, 3);
    EXPECT_NEAR(entropy_report(ps).linear, norm_sq(concurrence_vector_pure(ps)) / 2.0, 1e-10);
  }
}

TEST(EntropyReport, LinearRange) {
  for (auto [da, db] : {Shape{2, 3}, Shape{3, 3}, Shape{4, 4}, Shape{3, 5}}) {
    const double d = static_cast<double>(std::min(da, db));
    for (int rep = 0; rep < 30; ++rep) {
      const double l = entropy_report(ts::random_state(da, db)).linear;
      EXPECT_GE(l, -1e-15);
      EXPECT_LE(l, 1.0 - 1.0 / d + 1e-15);
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Secular, QubitClosedForm) {
  for (auto [da, db] : {Shape{2, 2}, Shape{2, 3}, Shape{2, 5}, Shape{4, 2}}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto ps = ts::random_state(da, db);
      const auto r = check_secular(ps);
      EXPECT_LT(r.max_residual, 1e-10);
      EXPECT_LT(r.closed_form_residual, 1e-10);
      // independent check of the two nonzero kappa^2
      const double c2 = ts::minor_sum_norm_sq(ps.coeffs());
      auto spec = ts::oracle_spectrum(ts::partial_trace_a(ps.vector(), da, db));
      EXPECT_NEAR(spec[0], 0.5 * (1 + std::sqrt(1 - c2)), 1e-10);
      EXPECT_NEAR(spec[1], 0.5 * (1 - std::sqrt(1 - c2)), 1e-10);
    }
  }
}

TEST(Secular, RankTwoQutrit) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 0.6;
  a(1, 1) = 0.8;
  const PureState ps(a);
  const auto r = check_secular(ps);
  EXPECT_EQ(r.side_b.coefficients.back(), 0.0);  // det rho_B = 0
  EXPECT_LT(r.max_residual, 1e-15);
  int nonzero = 0;
  for (double x : r.side_b.roots) nonzero += x > 1e-12;
  EXPECT_EQ(nonzero, 2);
}

TEST(Secular, MaximallyEntangledQutrit) {
  const auto r = check_secular(catalog_state("su3.phi1"));
  ASSERT_EQ(r.side_b.coefficients.size(), 4u);
  EXPECT_NEAR(r.side_b.coefficients[0], 1.0, 0);
  EXPECT_NEAR(r.side_b.coefficients[1], -1.0, 0);
  EXPECT_NEAR(r.side_b.coefficients[2], 1.0 / 3, 1e-15);
  EXPECT_NEAR(r.side_b.coefficients[3], -1.0 / 27, 1e-15);
  for (double x : r.side_b.roots) EXPECT_NEAR(x, 1.0 / 3, 1e-14);
}

TEST(Secular, CoefficientsMatchCompanionRoots) {
  for (auto [da, db] : {Shape{3, 3}, Shape{4, 4}, Shape{5, 5}, Shape{3, 4}}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto ps = ts::random_state(da, db);
      const auto r = check_secular(ps);
      EXPECT_LT(r.max_residual, 1e-10);
      const auto roots = ts::companion_roots(r.side_b.coefficients);
      const auto spec = ts::oracle_spectrum(ts::partial_trace_a(ps.vector(), da, db));
      for (std::size_t k = 0; k < roots.size(); ++k) EXPECT_NEAR(roots[k], spec[k], 1e-7);
    }
  }
}

// ---------------------------------------------------------------------------

TEST(EntropyFromNorm, Qubit) {
  EXPECT_NEAR(entropy_from_norm_qubit(1.0), 1.0, 1e-15);
  EXPECT_EQ(entropy_from_norm_qubit(0.0), 0.0);
  EXPECT_THROW(entropy_from_norm_qubit(1.01), domain_error);
  EXPECT_THROW(entropy_from_norm_qubit(-0.1), domain_error);
  for (auto [da, db] : {Shape{2, 2}, Shape{2, 3}}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto ps = ts::random_state(da, db);
      const double c = std::min(1.0, norm(concurrence_vector_pure(ps)));
      EXPECT_NEAR(entropy_from_norm_qubit(c), direct_entropy(ps), 1e-10);
    }
  }
}

TEST(EntropyFromNorm, Qutrit) {
  EXPECT_NEAR(entropy_from_norm_qutrit(std::sqrt(4.0 / 3), 1.0 / 27), std::log2(3.0), 1e-10);
  EXPECT_NEAR(entropy_from_norm_qutrit(0.0, 0.0), 0.0, 1e-10);
  for (int rep = 0; rep < 50; ++rep) {
    const auto ps = ts::random_state(3, 3);
    const auto e = entropy_report(ps);
    const double h = entropy_from_norm_qutrit(norm(concurrence_vector_pure(ps)), e.det_rho_b);
    EXPECT_NEAR(h, direct_entropy(ps), 1e-8);
  }
}

TEST(EntropyFromNorm, QutritSpectrumRecovered) {
  for (int rep = 0; rep < 50; ++rep) {
    const auto ps = ts::random_state(3, 3);
    const auto spec = ts::oracle_spectrum(ts::partial_trace_a(ps.vector(), 3, 3));
    const auto s = qutrit_spectrum_from_norm(norm(concurrence_vector_pure(ps)), spec[0] * spec[1] * spec[2]);
    std::vector<double> got{s.x_plus, s.x_minus, s.x_rest};
    std::sort(got.begin(), got.end(), std::greater<>());
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(got[k], spec[k], 1e-8);
  }
}

TEST(EntropyFromNorm, InconsistentInput) {
  EXPECT_THROW(entropy_from_norm_qutrit(0.0, 0.02), domain_error);  // det > 0 forces |C| > 0
  EXPECT_THROW(entropy_from_norm_qutrit(-1.0, 0.0), domain_error);
  EXPECT_THROW(entropy_from_norm_qutrit(std::nan(""), 0.0), domain_error);
}

// ---------------------------------------------------------------------------

TEST(EntropyBounds, Endpoints) {
  const auto lo = entropy_bounds(0.0, 200);
  EXPECT_NEAR(lo.infimum, 0.0, 1e-6);
  EXPECT_NEAR(lo.supremum, 0.0, 1e-6);

  const auto hi = entropy_bounds(std::sqrt(4.0 / 3), 200);
  EXPECT_NEAR(hi.infimum, std::log2(3.0), 1e-6);
  EXPECT_NEAR(hi.supremum, std::log2(3.0), 1e-6);

  const auto one = entropy_bounds(1.0, 400);
  EXPECT_NEAR(one.infimum, 1.0, 1e-9);
  EXPECT_NEAR(one.det_at_infimum, 0.0, 1e-12);
  EXPECT_GT(one.supremum, one.infimum + 1e-3);

  EXPECT_THROW(entropy_bounds(1.2, 10), domain_error);
  EXPECT_THROW(entropy_bounds(0.5, 1), domain_error);
}

TEST(EntropyBounds, MonotoneEnvelope) {
  double prev_inf = -1.0, prev_sup = -1.0;
  for (int k = 0; k < 50; ++k) {
    const double c = kMaxQutritNorm * k / 49.0;
    const auto b = entropy_bounds(c, 400);
    EXPECT_LE(b.infimum, b.supremum + 1e-12);
    EXPECT_GE(b.infimum, prev_inf - 1e-9) << c;
    EXPECT_GE(b.supremum, prev_sup - 1e-9) << c;
    prev_inf = b.infimum;
    prev_sup = b.supremum;
  }
}

TEST(EntropyBounds, EnvelopeContainsRandomStates) {
  for (int rep = 0; rep < 50; ++rep) {
    const auto ps = ts::random_state(3, 3);
    const double c = norm(concurrence_vector_pure(ps));
    const auto b = entropy_bounds(c, 400);
    const double h = entropy_report(ps).von_neumann;
    EXPECT_GE(h, b.infimum - 1e-6);
    EXPECT_LE(h, b.supremum + 1e-6);
    const auto iv = feasible_det_interval(c);
    const double det = entropy_report(ps).det_rho_b;
    EXPECT_GE(det, iv.lo - 1e-9);
    EXPECT_LE(det, iv.hi + 1e-9);
  }
}
