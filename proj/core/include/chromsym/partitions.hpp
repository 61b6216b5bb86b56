#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chromsym {

/// Integer partition, stored trimmed (no trailing zeros). Compared against
/// weight vectors by zero-padding.
class Partition {
 public:
  Partition() = default;

  /// Throws Error(OutOfRange) unless parts are weakly decreasing and
  /// nonnegative; zero parts are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Dominant rearrangement of a weight vector.
  static Partition sorted_from(std::span<const int> weight);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }

  /// i-th part (0-based), zero past the end.
  int part(int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Zero-padded to length m; throws Error(SizeMismatch) if longer than m.
  std::vector<int> padded(int m) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Descending lexicographic order: `DescendingLex{}(a, b)` is true when `a`
/// comes first. Refines dominance on partitions of a fixed size.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const noexcept;
};

using WeightVector = std::vector<int>;

/// All partitions of n with at most m parts, descending lexicographic.
std::vector<Partition> partitions_of(int n, int m);

/// Prefix-sum dominance; throws Error(SizeMismatch) when |lambda| != |mu|.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda and content mu, i.e. the
/// GL_m weight multiplicity dim V(lambda)_mu with m = mu.size().
///
/// Throws Error(SizeMismatch) if the sizes differ or lambda has more than m
/// parts; Error(OutOfRange) for a negative content entry.
std::uint64_t kostka(const Partition& lambda, std::span<const int> mu);

/// Kostka numbers over partitions_of(n, m): `entry(a, b)` is K[index[a]][index[b]].
class KostkaTable {
 public:
  KostkaTable(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<Partition>& index() const noexcept { return index_; }

  std::uint64_t entry(std::size_t row, std::size_t col) const {
    return entries_[row * index_.size() + col];
  }

  /// Position of a partition in index(); throws Error(OutOfRange) if absent.
  std::size_t position(const Partition& p) const;

 private:
  int n_;
  int m_;
  std::vector<Partition> index_;
  std::vector<std::uint64_t> entries_;
};

KostkaTable kostka_table(int n, int m);

/// Number of distinct rearrangements of mu into m slots (the S_m orbit size).
std::uint64_t orbit_size(const Partition& mu, int m);

}  // namespace chromsym
