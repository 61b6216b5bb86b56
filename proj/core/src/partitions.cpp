#include "chromsym/partitions.hpp"

#include <algorithm>
#include <functional>
#include <gmpxx.h>

#include "chromsym/error.hpp"

namespace chromsym {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0 || (k > 0 && parts[k] > parts[k - 1])) {
      throw Error(ErrorCode::OutOfRange, "partition parts must be nonnegative and weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
  for (int p : parts_) size_ += p;
}

Partition Partition::sorted_from(std::span<const int> weight) {
  std::vector<int> parts(weight.begin(), weight.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int m) const {
  if (length() > m) {
    throw Error(ErrorCode::SizeMismatch,
                "partition " + to_string() + " has more than " + std::to_string(m) + " parts");
  }
  std::vector<int> out(parts_.begin(), parts_.end());
  out.resize(static_cast<std::size_t>(m), 0);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

bool DescendingLex::operator()(const Partition& a, const Partition& b) const noexcept {
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // The remaining slots must be able to absorb what is left.
    if (static_cast<long>(p) * slots < remaining) break;
    prefix.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int m) {
  if (n < 0 || m < 1) throw Error(ErrorCode::OutOfRange, "partitions_of needs n >= 0 and m >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, m, prefix, out);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorCode::SizeMismatch, lambda.to_string() + " and " + mu.to_string() +
                                             " are partitions of different sizes");
  }
  const int len = std::max(lambda.length(), mu.length());
  int a = 0;
  int b = 0;
  for (int i = 0; i < len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

namespace {

// Fills the Young diagram of `shape` cell by cell in reading order. An entry
// must be >= its left neighbour, > the entry above it, and still available
// in `content`.
class TableauFiller {
 public:
  TableauFiller(const Partition& shape, std::vector<int> content)
      : shape_(shape), content_(std::move(content)), m_(static_cast<int>(content_.size())) {
    for (int r = 0; r < shape_.length(); ++r) rows_.emplace_back(static_cast<std::size_t>(shape_.part(r)), 0);
  }

  std::uint64_t count() { return fill(0, 0); }

 private:
  std::uint64_t fill(int row, int col) {
    if (row == shape_.length()) return 1;
    if (col == shape_.part(row)) return fill(row + 1, 0);
    auto& cells = rows_[static_cast<std::size_t>(row)];
    int lo = row + 1;  // column-strict: entry in row r is at least r + 1
    if (col > 0) lo = std::max(lo, cells[static_cast<std::size_t>(col - 1)]);
    if (row > 0) lo = std::max(lo, rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    // Below this cell the column needs (rows remaining in column) larger values.
    int below = 0;
    for (int r = row + 1; r < shape_.length() && shape_.part(r) > col; ++r) ++below;
    const int hi = m_ - below;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      auto& left = content_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      cells[static_cast<std::size_t>(col)] = v;
      total += fill(row, col + 1);
      ++left;
    }
    return total;
  }

  const Partition& shape_;
  std::vector<int> content_;
  int m_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace

std::uint64_t kostka(const Partition& lambda, std::span<const int> mu) {
  int total = 0;
  for (int x : mu) {
    if (x < 0) throw Error(ErrorCode::OutOfRange, "weight entries must be nonnegative");
    total += x;
  }
  if (total != lambda.size()) {
    throw Error(ErrorCode::SizeMismatch, "shape " + lambda.to_string() + " has size " +
                                             std::to_string(lambda.size()) + " but content sums to " +
                                             std::to_string(total));
  }
  if (lambda.length() > static_cast<int>(mu.size())) {
    throw Error(ErrorCode::SizeMismatch, "shape " + lambda.to_string() + " has more than " +
                                             std::to_string(mu.size()) + " rows");
  }
  return TableauFiller(lambda, std::vector<int>(mu.begin(), mu.end())).count();
}

KostkaTable::KostkaTable(int n, int m) : n_(n), m_(m), index_(partitions_of(n, m)) {
  const std::size_t size = index_.size();
  entries_.assign(size * size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      entries_[a * size + b] = kostka(index_[a], index_[b].padded(m));
    }
  }
}

std::size_t KostkaTable::position(const Partition& p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), p, DescendingLex{});
  if (it == index_.end() || !(*it == p)) {
    throw Error(ErrorCode::OutOfRange, p.to_string() + " is not a partition of " + std::to_string(n_) +
                                           " with at most " + std::to_string(m_) + " parts");
  }
  return static_cast<std::size_t>(it - index_.begin());
}

KostkaTable kostka_table(int n, int m) { return KostkaTable(n, m); }

std::uint64_t orbit_size(const Partition& mu, int m) {
  const auto padded = mu.padded(m);
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
  for (std::size_t k = 0; k < padded.size();) {
    std::size_t run = k;
    while (run < padded.size() && padded[run] == padded[k]) ++run;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), run - k);
    result /= f;
    k = run;
  }
  if (!result.fits_ulong_p()) throw Error(ErrorCode::Unsupported, "orbit size exceeds 64 bits");
  return result.get_ui();
}

}  // namespace chromsym
