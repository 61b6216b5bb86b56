#include "chromsym/qpoly.hpp"

#include <algorithm>
#include <cctype>

#include "chromsym/error.hpp"

namespace chromsym {

QPoly QPoly::constant(const BigInt& c) { return monomial(0, c); }

QPoly QPoly::monomial(int e, const BigInt& c) {
  QPoly p;
  if (c != 0) {
    p.offset_ = e;
    p.coeffs_.push_back(c);
  }
  return p;
}

QPoly QPoly::from_coeffs(int offset, std::vector<BigInt> coeffs) {
  QPoly p;
  p.offset_ = offset;
  p.coeffs_ = std::move(coeffs);
  p.canonicalize();
  return p;
}

QPoly QPoly::from_coeffs(int offset, std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return from_coeffs(offset, std::move(v));
}

void QPoly::canonicalize() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) offset_ = 0;
}

BigInt QPoly::coefficient(int e) const {
  const long k = static_cast<long>(e) - offset_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::optional<int> QPoly::degree() const {
  if (is_zero()) return std::nullopt;
  return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> QPoly::low_degree() const {
  if (is_zero()) return std::nullopt;
  return offset_;
}

BigInt QPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool QPoly::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

bool QPoly::is_palindromic(int center2) const {
  if (is_zero()) return true;
  // Canonical form: the support must mirror onto itself, so low + high == center2.
  if (offset_ + *degree() != center2) return false;
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<long>(coeffs_.size() / 2),
                    coeffs_.rbegin());
}

QPoly& QPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return *this;
  if (is_zero()) {
    offset_ = e;
    coeffs_.assign(1, c);
    return *this;
  }
  if (e < offset_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - e), BigInt(0));
    offset_ = e;
  }
  const auto k = static_cast<std::size_t>(e - offset_);
  if (k >= coeffs_.size()) coeffs_.resize(k + 1, BigInt(0));
  coeffs_[k] += c;
  canonicalize();
  return *this;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(offset_, other.offset_);
  const int hi = std::max(*degree(), *other.degree());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[static_cast<std::size_t>(offset_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    sum[static_cast<std::size_t>(other.offset_ - lo) + k] += other.coeffs_[k];
  }
  offset_ = lo;
  coeffs_ = std::move(sum);
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> prod(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly::from_coeffs(a.offset_ + b.offset_, std::move(prod));
}

QPoly operator*(const QPoly& a, const BigInt& c) {
  if (c == 0) return {};
  QPoly p = a;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

QPoly operator-(const QPoly& a) {
  QPoly p = a;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

bool operator==(const QPoly& a, const QPoly& b) {
  return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

namespace {

// Appends " + term" / " - term" / "term" / "-term" for one coefficient.
void append_term(std::string& out, const BigInt& c, const std::string& power) {
  const bool negative = c < 0;
  const BigInt magnitude = abs(c);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (power.empty()) {
    out += magnitude.get_str();
  } else if (magnitude == 1) {
    out += power;
  } else {
    out += magnitude.get_str() + "*" + power;
  }
}

std::string integer_power(int e) {
  if (e == 0) return {};
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(out, coeffs_[k], integer_power(offset_ + static_cast<int>(k)));
  }
  return out;
}

std::string QPoly::to_string_shifted(int shift2) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const int e2 = 2 * (offset_ + static_cast<int>(k)) + shift2;
    const std::string power = (e2 % 2 == 0) ? integer_power(e2 / 2) : "q^(" + std::to_string(e2) + "/2)";
    append_term(out, coeffs_[k], power);
  }
  return out;
}

QPoly QPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::Parse, what + " at position " + std::to_string(pos) + " in '" +
                                       std::string(text) + "'");
  };
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  QPoly result;
  bool first = true;
  skip_spaces();
  if (pos == text.size()) throw fail("empty polynomial");
  while (true) {
    skip_spaces();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_spaces();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    BigInt coeff = 1;
    int exponent = 0;
    const std::string digits = read_digits();
    bool has_q = false;
    if (!digits.empty()) {
      coeff = BigInt(digits);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos >= text.size() || text[pos] != 'q') throw fail("expected 'q' after '*'");
        has_q = true;
        ++pos;
      }
    } else if (pos < text.size() && text[pos] == 'q') {
      has_q = true;
      ++pos;
    } else {
      throw fail("expected a coefficient or 'q'");
    }
    if (has_q) {
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < text.size() && text[pos] == '-') {
          neg_exp = true;
          ++pos;
        }
        const std::string e = read_digits();
        if (e.empty()) throw fail("expected an exponent");
        exponent = std::stoi(e) * (neg_exp ? -1 : 1);
      }
    }
    result.add_term(exponent, negative ? BigInt(-coeff) : coeff);
  }
  return result;
}

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }
QPoly add_term(const QPoly& a, int e, const BigInt& c) {
  QPoly p = a;
  return p.add_term(e, c);
}

QPoly q_integer(int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "q_integer needs k >= 0");
  return QPoly::from_coeffs(0, std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

QPoly q_factorial(int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "q_factorial needs k >= 0");
  QPoly p = QPoly::constant(1);
  for (int j = 2; j <= k; ++j) p *= q_integer(j);
  return p;
}

}  // namespace chromsym
