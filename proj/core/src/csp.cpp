#include "chromsym/csp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "chromsym/colourings.hpp"
#include "chromsym/error.hpp"

namespace chromsym {

namespace {

// Maps the dominant rearrangement of a weight vector to its row in a
// descending-lex partition index. Keys are the nonzero parts in base n + 1.
class DominantIndex {
 public:
  DominantIndex(const std::vector<Partition>& index, int n, int m) : base_(static_cast<std::uint64_t>(n) + 1), m_(m) {
    std::uint64_t span = 1;
    for (int k = 0; k < std::min(n, m); ++k) {
      if (__builtin_mul_overflow(span, base_, &span)) {
        throw Error(ErrorCode::Unsupported, "weight keys exceed 64 bits for n = " + std::to_string(n));
      }
    }
    for (std::size_t k = 0; k < index.size(); ++k) rows_.emplace(encode_sorted(index[k].parts()), k);
  }

  std::size_t row_of(std::span<const int> weight) const {
    std::array<int, kMaxColours> buf{};
    std::copy(weight.begin(), weight.end(), buf.begin());
    std::sort(buf.begin(), buf.begin() + m_, std::greater<>());
    return rows_.at(encode_sorted(std::span<const int>(buf.data(), static_cast<std::size_t>(m_))));
  }

 private:
  std::uint64_t encode_sorted(std::span<const int> parts) const {
    std::uint64_t key = 0;
    for (int p : parts) {
      if (p == 0) break;
      key = key * base_ + static_cast<std::uint64_t>(p);
    }
    return key;
  }

  std::uint64_t base_;
  int m_;
  std::unordered_map<std::uint64_t, std::size_t> rows_;
};

void add_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    if (__builtin_add_overflow(into[k], from[k], &into[k])) {
      throw Error(ErrorCode::Unsupported, "colouring counts exceed 64 bits");
    }
  }
}

void check_table(const CSPoly& csp, const KostkaTable& table) {
  if (table.n() != csp.n() || table.m() != csp.m) {
    throw Error(ErrorCode::SizeMismatch, "Kostka table is for (n, m) = (" + std::to_string(table.n()) + ", " +
                                             std::to_string(table.m()) + "), CSP is for (" +
                                             std::to_string(csp.n()) + ", " + std::to_string(csp.m) + ")");
  }
}

}  // namespace

CSPoly compute_csp(const ReverseHessenberg& r, int m, bool parallel) {
  CSPoly csp{r, m, edge_count(r), {}};
  ColouringEnumerator probe(r, m);  // validates m
  if (!is_feasible(r, m)) return csp;

  const int n = r.size();
  const auto index = partitions_of(n, m);
  const DominantIndex rows(index, n, m);
  const std::size_t width = static_cast<std::size_t>(csp.edge_count) + 1;

  auto partials = partition_by_first_colour<std::vector<std::uint64_t>>(n, m, parallel, [&](int first) {
    std::vector<std::uint64_t> counts(index.size() * width, 0);
    ColouringEnumerator e(r, m);
    e.run_from(first, [&](const ColouringView& v) {
      ++counts[rows.row_of(v.weight) * width + static_cast<std::size_t>(v.ascents)];
    });
    return counts;
  });
  std::vector<std::uint64_t> counts(index.size() * width, 0);
  for (const auto& p : partials) add_counts(counts, p);

  // Each orbit of weights was folded onto its dominant representative; the
  // coefficient of x^mu is the orbit total divided by the orbit size.
  for (std::size_t row = 0; row < index.size(); ++row) {
    const std::uint64_t orbit = orbit_size(index[row], m);
    std::vector<BigInt> coeffs(width);
    bool any = false;
    for (std::size_t a = 0; a < width; ++a) {
      const std::uint64_t total = counts[row * width + a];
      if (total % orbit != 0) {
        throw std::logic_error("colouring counts for weight " + index[row].to_string() +
                               " are not constant on its S_m orbit");
      }
      coeffs[a] = BigInt(static_cast<unsigned long>(total / orbit));
      any = any || total != 0;
    }
    if (any) csp.monomial.emplace(index[row], QPoly::from_coeffs(0, std::move(coeffs)));
  }
  return csp;
}

std::map<WeightVector, QPoly> raw_csp(const ReverseHessenberg& r, int m) {
  std::map<WeightVector, std::vector<std::uint64_t>> counts;
  const std::size_t width = static_cast<std::size_t>(edge_count(r)) + 1;
  ColouringEnumerator e(r, m);
  e.run([&](const ColouringView& v) {
    auto& row = counts[WeightVector(v.weight.begin(), v.weight.end())];
    if (row.empty()) row.assign(width, 0);
    ++row[static_cast<std::size_t>(v.ascents)];
  });
  std::map<WeightVector, QPoly> out;
  for (const auto& [weight, row] : counts) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(row.size());
    for (auto c : row) coeffs.emplace_back(static_cast<unsigned long>(c));
    out.emplace(weight, QPoly::from_coeffs(0, std::move(coeffs)));
  }
  return out;
}

QPoly SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = coefficients.find(lambda);
  return it == coefficients.end() ? QPoly{} : it->second;
}

SchurExpansion schur_expand(const CSPoly& csp) { return schur_expand(csp, kostka_table(csp.n(), csp.m)); }

SchurExpansion schur_expand(const CSPoly& csp, const KostkaTable& table) {
  check_table(csp, table);
  const auto& index = table.index();
  std::vector<QPoly> c(index.size());
  for (std::size_t col = 0; col < index.size(); ++col) {
    auto it = csp.monomial.find(index[col]);
    QPoly residual = it == csp.monomial.end() ? QPoly{} : it->second;
    for (std::size_t row = 0; row < col; ++row) {
      const std::uint64_t k = table.entry(row, col);
      if (k != 0 && !c[row].is_zero()) residual -= c[row] * BigInt(static_cast<unsigned long>(k));
    }
    c[col] = std::move(residual);  // K[lambda][lambda] = 1
  }
  SchurExpansion out{csp, {}};
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (!c[k].is_zero()) out.coefficients.emplace(index[k], std::move(c[k]));
  }
  return out;
}

VerificationReport verify_kato(const SchurExpansion& expansion) {
  return verify_kato(expansion, kostka_table(expansion.source.n(), expansion.source.m));
}

VerificationReport verify_kato(const SchurExpansion& expansion, const KostkaTable& table) {
  const CSPoly& csp = expansion.source;
  check_table(csp, table);
  VerificationReport report;
  report.center2 = csp.edge_count;

  for (const auto& [lambda, c] : expansion.coefficients) {
    LambdaCheck check;
    check.lambda = lambda;
    check.coefficient = c;
    check.nonnegative = c.is_nonnegative();
    check.palindromic = c.is_palindromic(report.center2);
    check.low = c.low_degree();
    check.high = c.degree();
    check.supported = c.is_zero() || (*check.low >= 0 && *check.high <= csp.edge_count);
    report.per_lambda.push_back(std::move(check));
  }

  const auto& index = table.index();
  bool reconstruction = std::all_of(csp.monomial.begin(), csp.monomial.end(), [&](const auto& entry) {
    return std::binary_search(index.begin(), index.end(), entry.first, DescendingLex{});
  });
  for (std::size_t col = 0; col < index.size() && reconstruction; ++col) {
    QPoly sum;
    for (std::size_t row = 0; row < index.size(); ++row) {
      const std::uint64_t k = table.entry(row, col);
      if (k == 0) continue;
      sum += expansion.coefficient(index[row]) * BigInt(static_cast<unsigned long>(k));
    }
    auto it = csp.monomial.find(index[col]);
    reconstruction = sum == (it == csp.monomial.end() ? QPoly{} : it->second);
  }
  report.reconstruction = reconstruction;
  report.pass = reconstruction && std::all_of(report.per_lambda.begin(), report.per_lambda.end(),
                                              [](const LambdaCheck& c) { return c.pass(); });
  return report;
}

bool symmetry_check(const ReverseHessenberg& r, int m, int trials, std::uint64_t seed) {
  const auto raw = raw_csp(r, m);
  std::vector<Partition> orbits;
  for (const auto& entry : raw) {
    Partition p = Partition::sorted_from(entry.first);
    if (std::find(orbits.begin(), orbits.end(), p) == orbits.end()) orbits.push_back(std::move(p));
  }
  if (trials >= 0 && orbits.size() > static_cast<std::size_t>(trials)) {
    std::mt19937_64 rng(seed);
    std::shuffle(orbits.begin(), orbits.end(), rng);
    orbits.resize(static_cast<std::size_t>(trials));
  }
  for (const auto& mu : orbits) {
    auto weight = mu.padded(m);
    std::sort(weight.begin(), weight.end());
    std::optional<QPoly> expected;
    do {
      auto it = raw.find(weight);
      const QPoly entry = it == raw.end() ? QPoly{} : it->second;
      if (!expected) {
        expected = entry;
      } else if (!(*expected == entry)) {
        return false;
      }
    } while (std::next_permutation(weight.begin(), weight.end()));
  }
  return true;
}

std::string multiplicity_text(const QPoly& coefficient, int edge_count) {
  return coefficient.to_string_shifted(-edge_count);
}

}  // namespace chromsym
