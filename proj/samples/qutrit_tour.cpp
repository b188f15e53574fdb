// Walk through the library on a few two-qutrit states.

#include <iostream>

#include "qconc/qconc.hpp"

int main() {
  using namespace qconc;

  for (const char* name : {"su3.phi1", "su3.psi-1", "su3.phi4", "so3.chi00"}) {
    const PureState ps = catalog_state(name);
    const auto cv = concurrence_vector_pure(ps);
    const auto ent = entropy_report(ps);
    std::cout << name << ": |C|^2 = " << norm_sq(cv) << ", S = " << ent.von_neumann
              << " bits, det rho_B = " << ent.det_rho_b << "\n";
  }

  // A maximally mixed two-qubit state has zero concurrence, a pure Bell state has 1.
  for (double p : {0.0, 0.5, 1.0}) {
    const auto cv = concurrence_vector_mixed(werner_state(p));
    std::cout << "Werner p = " << p << ": C = " << cv[0].real() << "\n";
  }

  const auto verdict = sign_criterion(named_subspace("su3.psi-"));
  std::cout << "span{psi-}: " << to_string(verdict.verdict) << "\n";
  std::cout << "volume of span{psi-} surface: " << enclosed_volume(named_subspace("su3.psi-"), 200, 200) << "\n";
}
