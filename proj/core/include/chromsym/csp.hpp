#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/partitions.hpp"
#include "chromsym/qpoly.hpp"

namespace chromsym {

using PartitionMap = std::map<Partition, QPoly, DescendingLex>;

/// Chromatic quasisymmetric polynomial CSP_r in m variables, stored in the
/// monomial symmetric basis: `monomial[mu]` is the coefficient of x^mu for
/// each dominant weight mu. Weights without colourings are absent.
struct CSPoly {
  ReverseHessenberg r;
  int m = 1;
  int edge_count = 0;  // E_r
  PartitionMap monomial;

  int n() const noexcept { return r.size(); }
};

/// Sums q^asc(kappa) over proper colourings, grouped by the dominant
/// rearrangement of wt(kappa). Infeasible input gives an empty map.
CSPoly compute_csp(const ReverseHessenberg& r, int m, bool parallel = false);

/// Weight-indexed accumulation without symmetrization: every weight vector
/// with at least one colouring, in lexicographic order.
std::map<WeightVector, QPoly> raw_csp(const ReverseHessenberg& r, int m);

/// Schur coefficients c_lambda(q) of CSP_r. For each lambda,
/// c_lambda = q^(E_r/2) qdim M(lambda); only nonzero coefficients are kept.
struct SchurExpansion {
  CSPoly source;
  PartitionMap coefficients;

  int edge_count() const noexcept { return source.edge_count; }
  QPoly coefficient(const Partition& lambda) const;
};

/// Back-substitution through the unitriangular Kostka matrix in descending
/// lexicographic order.
SchurExpansion schur_expand(const CSPoly& csp);
SchurExpansion schur_expand(const CSPoly& csp, const KostkaTable& table);

struct LambdaCheck {
  Partition lambda;
  QPoly coefficient;
  bool nonnegative = false;
  bool palindromic = false;  // about center2 = E_r
  bool supported = false;    // support inside [0, E_r]
  std::optional<int> low;    // observed support
  std::optional<int> high;

  bool pass() const noexcept { return nonnegative && palindromic && supported; }
};

struct VerificationReport {
  int center2 = 0;
  bool reconstruction = false;  // monomial[mu] == sum_lambda c_lambda K[lambda][mu]
  std::vector<LambdaCheck> per_lambda;
  bool pass = false;
};

/// Checks the predicted shape of every Schur coefficient and the
/// reconstruction of the monomial data. Failures are reported, never thrown.
VerificationReport verify_kato(const SchurExpansion& expansion);
VerificationReport verify_kato(const SchurExpansion& expansion, const KostkaTable& table);

/// Recomputes raw weight-indexed data and checks that entries agree across
/// each S_m orbit of weights, for `trials` randomly chosen orbits (all orbits
/// when there are at most `trials` of them).
bool symmetry_check(const ReverseHessenberg& r, int m, int trials, std::uint64_t seed = 0x5eed);

/// q^(-E_r/2) c_lambda rendered with half-integer exponents.
std::string multiplicity_text(const QPoly& coefficient, int edge_count);

}  // namespace chromsym
