#include "chromsym/colourings.hpp"

#include <string>

#include "chromsym/error.hpp"

namespace chromsym {

bool is_proper(std::span<const int> kappa, const ReverseHessenberg& r) {
  if (static_cast<int>(kappa.size()) != r.size()) return false;
  for (int i = 1; i <= r.size(); ++i) {
    for (int j = r(i) + 1; j < i; ++j) {
      if (kappa[static_cast<std::size_t>(j - 1)] == kappa[static_cast<std::size_t>(i - 1)]) return false;
    }
  }
  return true;
}

ColouringStats stats(std::span<const int> kappa, const ReverseHessenberg& r, int m) {
  const int n = r.size();
  if (static_cast<int>(kappa.size()) != n) {
    throw Error(ErrorCode::SizeMismatch, "colouring has length " + std::to_string(kappa.size()) +
                                             ", expected " + std::to_string(n));
  }
  for (int c : kappa) {
    if (c < 1 || c > m) {
      throw Error(ErrorCode::OutOfRange, "colour " + std::to_string(c) + " outside [1, " + std::to_string(m) + "]");
    }
  }
  if (!is_proper(kappa, r)) throw Error(ErrorCode::NotProper, "colouring is not proper for r = " + r.to_string());

  ColouringStats s;
  s.weight.assign(static_cast<std::size_t>(m), 0);
  s.ascents_at.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int ci = kappa[static_cast<std::size_t>(i - 1)];
    ++s.weight[static_cast<std::size_t>(ci - 1)];
    s.height += ci;
    int asc = 0;
    for (int j = r(i) + 1; j < i; ++j) {
      if (kappa[static_cast<std::size_t>(j - 1)] < ci) ++asc;
    }
    s.ascents_at[static_cast<std::size_t>(i - 1)] = asc;
    s.ascents += asc;
  }
  s.cell_dim = s.height - s.ascents - n;
  return s;
}

std::vector<WeightVector> fixed_point_chain(std::span<const int> kappa, int m) {
  std::vector<WeightVector> chain;
  chain.reserve(kappa.size());
  WeightVector mu(static_cast<std::size_t>(m), 0);
  for (int c : kappa) {
    if (c < 1 || c > m) {
      throw Error(ErrorCode::OutOfRange, "colour " + std::to_string(c) + " outside [1, " + std::to_string(m) + "]");
    }
    ++mu[static_cast<std::size_t>(c - 1)];
    chain.push_back(mu);
  }
  return chain;
}

std::uint64_t colouring_count(const ReverseHessenberg& r, int m) {
  std::uint64_t total = 1;
  for (int i = 1; i <= r.size(); ++i) {
    const int choices = m - i + 1 + r(i);
    if (choices <= 0) return 0;
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(choices), &total)) {
      throw Error(ErrorCode::Unsupported, "colouring count exceeds 64 bits");
    }
  }
  return total;
}

ColouringStats ColouringView::stats() const {
  ColouringStats s;
  s.weight.assign(weight.begin(), weight.end());
  s.ascents = ascents;
  s.ascents_at.assign(ascents_at.begin(), ascents_at.end());
  s.height = height;
  s.cell_dim = cell_dim();
  return s;
}

ColouringEnumerator::ColouringEnumerator(ReverseHessenberg r, int m)
    : r_(std::move(r)), m_(m), n_(r_.size()), feasible_(is_feasible(r_, m)) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "need at least one colour");
  if (m > kMaxColours) {
    throw Error(ErrorCode::Unsupported, "at most " + std::to_string(kMaxColours) + " colours are supported");
  }
  lower_.assign(r_.values().begin(), r_.values().end());
  kappa_.assign(static_cast<std::size_t>(n_), 0);
  weight_.assign(static_cast<std::size_t>(m_), 0);
  ascents_at_.assign(static_cast<std::size_t>(n_), 0);
}

void enumerate_colourings(const ReverseHessenberg& r, int m,
                          const std::function<void(const Colouring&, const ColouringStats&)>& visit) {
  ColouringEnumerator e(r, m);
  e.run([&](const ColouringView& v) { visit(v.colouring(), v.stats()); });
}

}  // namespace chromsym
