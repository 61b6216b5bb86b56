#include "chromsym/geometry.hpp"

#include <map>
#include <string>

#include "chromsym/colourings.hpp"
#include "chromsym/error.hpp"

namespace chromsym {

namespace {

void require_feasible(const ReverseHessenberg& r, int m) {
  if (m < 1 || !is_feasible(r, m)) {
    throw Error(ErrorCode::Infeasible, "r = (" + r.to_string() + ") needs at least " +
                                           std::to_string(min_colours(r)) + " colours, m = " + std::to_string(m));
  }
}

}  // namespace

int dimension(const ReverseHessenberg& r, int m) {
  require_feasible(r, m);
  return (m - 1) * r.size() - edge_count(r);
}

int fibre_dimension(const ReverseHessenberg& r, int m, int i) {
  require_feasible(r, m);
  if (i < 1 || i > r.size()) {
    throw Error(ErrorCode::OutOfRange, "step " + std::to_string(i) + " outside [1, " + std::to_string(r.size()) + "]");
  }
  return m - i + r(i);
}

QPoly poincare_product(const ReverseHessenberg& r, int m) {
  require_feasible(r, m);
  QPoly p = QPoly::constant(1);
  for (int i = 1; i <= r.size(); ++i) p *= q_integer(fibre_dimension(r, m, i) + 1);
  return p;
}

QPoly poincare_bb(const ReverseHessenberg& r, int m, bool parallel) {
  require_feasible(r, m);
  const auto width = static_cast<std::size_t>(dimension(r, m)) + 1;
  struct Cells {
    std::vector<std::uint64_t> in_range;
    std::map<int, std::uint64_t> stray;  // dimensions outside [0, d_r]; empty if the formula holds
  };
  auto partials = partition_by_first_colour<Cells>(r.size(), m, parallel, [&](int first) {
    Cells cells{std::vector<std::uint64_t>(width, 0), {}};
    ColouringEnumerator e(r, m);
    e.run_from(first, [&](const ColouringView& v) {
      const int d = v.cell_dim();
      if (d >= 0 && static_cast<std::size_t>(d) < width) {
        ++cells.in_range[static_cast<std::size_t>(d)];
      } else {
        ++cells.stray[d];
      }
    });
    return cells;
  });
  QPoly total;
  for (const auto& cells : partials) {
    for (std::size_t d = 0; d < width; ++d) {
      total.add_term(static_cast<int>(d), BigInt(static_cast<unsigned long>(cells.in_range[d])));
    }
    for (const auto& [d, count] : cells.stray) total.add_term(d, BigInt(static_cast<unsigned long>(count)));
  }
  return total;
}

long long two_rho_pairing(std::span<const int> weight) {
  const long long m = static_cast<long long>(weight.size());
  long long sum = 0;
  for (long long p = 1; p <= m; ++p) sum += weight[static_cast<std::size_t>(p - 1)] * (m - 2 * p + 1);
  return sum;
}

bool exponent_identity_check(const ReverseHessenberg& r, int m) {
  const int d_r = dimension(r, m);
  const long long n = r.size();
  const long long edges = edge_count(r);
  bool ok = true;
  ColouringEnumerator e(r, m);
  e.run([&](const ColouringView& v) {
    const long long two_rho = two_rho_pairing(v.weight);
    if (two_rho != n * (m + 1) - 2LL * v.height) ok = false;
    if (2LL * (v.ascents - v.height + n) - two_rho + d_r != 2LL * v.ascents - edges) ok = false;
  });
  return ok;
}

GeometryReport geometry_report(const ReverseHessenberg& r, int m, bool parallel) {
  GeometryReport report;
  report.dimension = dimension(r, m);
  for (int i = 1; i <= r.size(); ++i) report.fibre_dims.push_back(fibre_dimension(r, m, i));
  report.poincare_product = poincare_product(r, m);
  report.poincare_bb = poincare_bb(r, m, parallel);
  const auto& bb = report.poincare_bb;
  report.identities_pass = exponent_identity_check(r, m) && report.poincare_equal() &&
                           bb.degree() == report.dimension && bb.low_degree() == 0 &&
                           bb.coefficient(0) == 1 && bb.coefficient(report.dimension) == 1 &&
                           bb.is_palindromic(report.dimension);
  return report;
}

}  // namespace chromsym
