#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromsym {

/// A weakly increasing map r : [n] -> {0, ..., n} with r(i) < i.
///
/// Encodes the unit interval graph on [n] in which j < i are adjacent
/// exactly when r(i) < j. Positions are 1-based throughout; instances are
/// immutable once validated.
class ReverseHessenberg {
 public:
  /// The empty function (n = 0).
  ReverseHessenberg() = default;

  /// Throws Error(NotWeaklyIncreasing) or Error(OutOfRange).
  static ReverseHessenberg validate(std::span<const int> values);
  static ReverseHessenberg validate(std::initializer_list<int> values) {
    return validate(std::span<const int>(values.begin(), values.size()));
  }

  /// Parses the text form "r1,r2,...,rn" (the empty string is n = 0).
  static ReverseHessenberg parse(std::string_view text);

  /// r(i) = i - 1: no edges.
  static ReverseHessenberg staircase(int n);
  /// r(i) = 0: the complete graph.
  static ReverseHessenberg complete(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// r(i) for 1 <= i <= n.
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  std::span<const int> values() const noexcept { return values_; }

  /// Restriction to [n-1].
  ReverseHessenberg restriction() const;

  /// Text form "r1,r2,...,rn".
  std::string to_string() const;

  friend bool operator==(const ReverseHessenberg&, const ReverseHessenberg&) = default;
  friend auto operator<=>(const ReverseHessenberg&, const ReverseHessenberg&) = default;

 private:
  explicit ReverseHessenberg(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

struct Edge {
  int lower;  // j
  int upper;  // i, with j < i
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;  // sorted by (upper, lower)
};

/// True iff i - r(i) <= m for every i, i.e. a proper m-colouring exists.
bool is_feasible(const ReverseHessenberg& r, int m);

/// Smallest m for which r is feasible (0 for n = 0).
int min_colours(const ReverseHessenberg& r);

/// E_r = sum_i (i - 1 - r(i)).
int edge_count(const ReverseHessenberg& r);

Graph edges(const ReverseHessenberg& r);

/// Calls `visit` on every reverse Hessenberg function on [n], in
/// lexicographic order of values.
void for_each_reverse_hessenberg(int n, const std::function<void(const ReverseHessenberg&)>& visit);

std::vector<ReverseHessenberg> all_reverse_hessenberg(int n);

}  // namespace chromsym
