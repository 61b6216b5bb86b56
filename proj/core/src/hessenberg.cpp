#include "chromsym/hessenberg.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "chromsym/error.hpp"

namespace chromsym {

ReverseHessenberg ReverseHessenberg::validate(std::span<const int> values) {
  std::vector<int> v(values.begin(), values.end());
  // Monotonicity is reported ahead of range violations.
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] > v[k]) {
      throw Error(ErrorCode::NotWeaklyIncreasing,
                  "r(" + std::to_string(k) + ") = " + std::to_string(v[k - 1]) + " > r(" +
                      std::to_string(k + 1) + ") = " + std::to_string(v[k]));
    }
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    if (v[k] < 0 || v[k] >= i) {
      throw Error(ErrorCode::OutOfRange, "r(" + std::to_string(i) + ") = " + std::to_string(v[k]) +
                                             " must satisfy 0 <= r(i) < i");
    }
  }
  return ReverseHessenberg(std::move(v));
}

ReverseHessenberg ReverseHessenberg::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> values;
  if (text.empty()) return validate(values);
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::Parse, "expected a comma-separated list of integers, got '" +
                                        std::string(field) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return validate(values);
}

ReverseHessenberg ReverseHessenberg::staircase(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i - 1);
  return ReverseHessenberg(std::move(v));
}

ReverseHessenberg ReverseHessenberg::complete(int n) {
  return ReverseHessenberg(std::vector<int>(static_cast<std::size_t>(n > 0 ? n : 0), 0));
}

ReverseHessenberg ReverseHessenberg::restriction() const {
  if (values_.empty()) return *this;
  return ReverseHessenberg(std::vector<int>(values_.begin(), values_.end() - 1));
}

std::string ReverseHessenberg::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values_[k]);
  }
  return out;
}

bool is_feasible(const ReverseHessenberg& r, int m) { return min_colours(r) <= m; }

int min_colours(const ReverseHessenberg& r) {
  int need = 0;
  for (int i = 1; i <= r.size(); ++i) need = std::max(need, i - r(i));
  return need;
}

int edge_count(const ReverseHessenberg& r) {
  int total = 0;
  for (int i = 1; i <= r.size(); ++i) total += i - 1 - r(i);
  return total;
}

Graph edges(const ReverseHessenberg& r) {
  Graph g{r.size(), {}};
  for (int i = 1; i <= r.size(); ++i) {
    for (int j = r(i) + 1; j < i; ++j) g.edges.push_back({j, i});
  }
  return g;
}

namespace {

void extend(std::vector<int>& prefix, int n, const std::function<void(const ReverseHessenberg&)>& visit) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    visit(ReverseHessenberg::validate(prefix));
    return;
  }
  const int lo = prefix.empty() ? 0 : prefix.back();
  for (int v = lo; v < i; ++v) {
    prefix.push_back(v);
    extend(prefix, n, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_reverse_hessenberg(int n, const std::function<void(const ReverseHessenberg&)>& visit) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "n must be nonnegative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, n, visit);
}

std::vector<ReverseHessenberg> all_reverse_hessenberg(int n) {
  std::vector<ReverseHessenberg> out;
  for_each_reverse_hessenberg(n, [&](const ReverseHessenberg& r) { out.push_back(r); });
  return out;
}

}  // namespace chromsym
