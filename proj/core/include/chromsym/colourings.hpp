#pragma once

#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "chromsym/hessenberg.hpp"
#include "chromsym/partitions.hpp"

namespace chromsym {

/// kappa(1..n), colours in 1..m.
using Colouring = std::vector<int>;

struct ColouringStats {
  WeightVector weight;          // colour counts, length m
  int ascents = 0;              // asc(kappa)
  std::vector<int> ascents_at;  // asc(kappa, i), length n
  int height = 0;               // kappa(1) + ... + kappa(n)
  int cell_dim = 0;             // height - ascents - n

  friend bool operator==(const ColouringStats&, const ColouringStats&) = default;
};

/// Largest number of colours the enumerator supports.
inline constexpr int kMaxColours = 64;

bool is_proper(std::span<const int> kappa, const ReverseHessenberg& r);

/// From-scratch statistics. Throws Error(SizeMismatch) if the length is not
/// n, Error(OutOfRange) for a colour outside [m], Error(NotProper).
ColouringStats stats(std::span<const int> kappa, const ReverseHessenberg& r, int m);

/// Prefix weights mu(1), ..., mu(n) with mu(i) = e_kappa(1) + ... + e_kappa(i).
/// These label the torus fixed points of the convolution variety.
std::vector<WeightVector> fixed_point_chain(std::span<const int> kappa, int m);

/// prod_i (m - i + 1 + r(i)), zero when infeasible.
std::uint64_t colouring_count(const ReverseHessenberg& r, int m);

/// Borrowed view of the enumerator state at a complete colouring. Valid
/// only for the duration of the visitor call.
struct ColouringView {
  std::span<const int> kappa;
  std::span<const int> weight;
  std::span<const int> ascents_at;
  int ascents;
  int height;

  int cell_dim() const noexcept { return height - ascents - static_cast<int>(kappa.size()); }
  Colouring colouring() const { return {kappa.begin(), kappa.end()}; }
  ColouringStats stats() const;
};

/// Depth-first enumeration of the proper colourings of the graph of r, in
/// lexicographic order of kappa, with weight, height and ascent counters
/// maintained incrementally.
class ColouringEnumerator {
 public:
  /// Throws Error(Unsupported) when m > kMaxColours, Error(OutOfRange) when m < 1.
  ColouringEnumerator(ReverseHessenberg r, int m);

  const ReverseHessenberg& function() const noexcept { return r_; }
  int colours() const noexcept { return m_; }

  /// Visits every proper colouring.
  template <class Visitor>
  void run(Visitor&& visit) {
    run_from(0, visit);
  }

  /// Visits only colourings with kappa(1) == first_colour (1-based), or all
  /// of them when first_colour == 0. For n = 0 the single empty colouring is
  /// reported by the first_colour in {0, 1} calls.
  template <class Visitor>
  void run_from(int first_colour, Visitor&& visit) {
    if (!feasible_) return;
    if (n_ == 0) {
      if (first_colour <= 1) visit(view());
      return;
    }
    descend(1, first_colour, visit);
  }

 private:
  static std::uint64_t bit(int colour) noexcept { return std::uint64_t{1} << (colour - 1); }

  ColouringView view() const noexcept {
    return ColouringView{kappa_, weight_, ascents_at_, ascents_, height_};
  }

  template <class Visitor>
  void descend(int i, int only_colour, Visitor& visit) {
    const std::size_t pos = static_cast<std::size_t>(i - 1);
    std::uint64_t window = 0;
    for (int j = lower_[pos] + 1; j < i; ++j) window |= bit(kappa_[static_cast<std::size_t>(j - 1)]);

    const int first = only_colour > 0 ? only_colour : 1;
    const int last = only_colour > 0 ? only_colour : m_;
    for (int c = first; c <= last; ++c) {
      const std::uint64_t b = bit(c);
      if (window & b) continue;
      const int asc = std::popcount(window & (b - 1));
      kappa_[pos] = c;
      ++weight_[static_cast<std::size_t>(c - 1)];
      height_ += c;
      ascents_at_[pos] = asc;
      ascents_ += asc;
      if (i == n_) {
        visit(view());
      } else {
        descend(i + 1, 0, visit);
      }
      ascents_ -= asc;
      height_ -= c;
      --weight_[static_cast<std::size_t>(c - 1)];
    }
  }

  ReverseHessenberg r_;
  int m_;
  int n_;
  bool feasible_;
  std::vector<int> lower_;  // r(i), 0-based position
  std::vector<int> kappa_;
  std::vector<int> weight_;
  std::vector<int> ascents_at_;
  int ascents_ = 0;
  int height_ = 0;
};

/// Streams every proper colouring with materialized statistics.
void enumerate_colourings(const ReverseHessenberg& r, int m,
                          const std::function<void(const Colouring&, const ColouringStats&)>& visit);

/// Runs `work(first_colour)` for each first colour 1..m (or once with 0 when
/// n == 0) and returns the partial results in colour order. With `parallel`
/// set, the partitions run on separate threads; the result vector is the
/// same either way.
template <class Partial, class Work>
std::vector<Partial> partition_by_first_colour(int n, int m, bool parallel, Work work) {
  std::vector<int> starts;
  if (n == 0) {
    starts.push_back(0);
  } else {
    for (int c = 1; c <= m; ++c) starts.push_back(c);
  }
  std::vector<Partial> partials(starts.size());
  if (!parallel || starts.size() < 2) {
    for (std::size_t k = 0; k < starts.size(); ++k) partials[k] = work(starts[k]);
    return partials;
  }
  std::vector<std::exception_ptr> errors(starts.size());
  {
    std::vector<std::jthread> workers;
    workers.reserve(starts.size());
    for (std::size_t k = 0; k < starts.size(); ++k) {
      workers.emplace_back([&, k] {
        try {
          partials[k] = work(starts[k]);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return partials;
}

}  // namespace chromsym
