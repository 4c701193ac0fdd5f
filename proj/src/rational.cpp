#include "specker/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "specker/error.hpp"

namespace specker {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(x);
}

Rational make_reduced(Wide num, Wide den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide g = den;
  while (a != 0) {
    Wide t = g % a;
    g = a;
    a = t;
  }
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error("reciprocal of zero");
  return num_ < 0 ? Rational(-den_, -num_) : Rational(den_, num_);
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  return (num_ % den_ > 0) ? q + 1 : q;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                      Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                      Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error("rational division by zero");
  return make_reduced(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) -> ParseError { return ParseError(msg, i); };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_begin) throw fail("expected digits in rational");
  Wide num = 0;
  for (std::size_t k = digits_begin; k < i; ++k) {
    num = num * 10 + (text[k] - '0');
    if (num > std::numeric_limits<std::int64_t>::max()) throw fail("rational literal too large");
  }
  if (text[0] == '-') num = -num;
  Wide den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    den = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      if (den > std::numeric_limits<std::int64_t>::max()) throw fail("rational literal too large");
      ++i;
    }
    if (i == den_begin) throw fail("expected digits after '/'");
    if (den == 0) throw fail("zero denominator");
  }
  if (i != text.size()) throw fail("trailing characters in rational");
  return make_reduced(num, den);
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace specker
