#pragma once

#include <span>
#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/qpoly.hpp"

namespace chromsym {

// All operations below throw Error(Infeasible) when r has no proper
// m-colouring.

/// d_r = (m - 1) n - E_r.
int dimension(const ReverseHessenberg& r, int m);

/// Dimension m - i + r(i) of the projective-space fibre added at step i.
int fibre_dimension(const ReverseHessenberg& r, int m, int i);

/// prod_i [m - i + r(i) + 1]_q, the Poincare polynomial of the iterated
/// projective bundle (a cell of complex dimension d contributes q^d).
QPoly poincare_product(const ReverseHessenberg& r, int m);

/// sum over proper colourings of q^(height - ascents - n): the cell
/// dimensions of the Bialynicki-Birula paving.
QPoly poincare_bb(const ReverseHessenberg& r, int m, bool parallel = false);

/// <2 rho, mu> = sum_p mu_p (m - 2p + 1).
long long two_rho_pairing(std::span<const int> weight);

/// For every proper colouring, checks 2 rho(mu) = n(m + 1) - 2 htt and
/// 2 (asc - htt + n - rho(mu)) + d_r = 2 asc - E_r.
bool exponent_identity_check(const ReverseHessenberg& r, int m);

struct GeometryReport {
  int dimension = 0;
  std::vector<int> fibre_dims;
  QPoly poincare_product;
  QPoly poincare_bb;
  bool identities_pass = false;  // exponent identities and the invariants below

  bool poincare_equal() const { return poincare_product == poincare_bb; }
};

/// Also checks: the two Poincare polynomials agree, their degree is d_r,
/// constant and top coefficients are 1, and they are palindromic about d_r/2.
GeometryReport geometry_report(const ReverseHessenberg& r, int m, bool parallel = false);

}  // namespace chromsym
