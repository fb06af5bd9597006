#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qlat {

using Int = boost::multiprecision::cpp_int;

/// Exact scalar in Z[1/2]: value = numerator / 2^exponent.
///
/// Canonical form: the numerator is odd whenever exponent > 0, and zero is
/// stored as 0/2^0. Equality and hashing rely on canonical form. General
/// rational denominators are rejected at construction; arithmetic never
/// rounds.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(int n) : num_(n), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}
  Dyadic(Int n) : num_(std::move(n)), exp_(0) {}
  Dyadic(Int n, unsigned e) : num_(std::move(n)), exp_(e) { canonicalize(); }

  const Int& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool isZero() const { return num_ == 0; }
  bool isInteger() const { return exp_ == 0; }

  /// Exact integer value; throws if the value is not an integer.
  const Int& asInteger() const {
    if (exp_ != 0) throw std::domain_error("Dyadic: not an integer: " + str());
    return num_;
  }

  Dyadic operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
  }

  Dyadic& operator+=(const Dyadic& o) {
    if (o.num_ == 0) return *this;
    if (num_ == 0) { *this = o; return *this; }
    if (exp_ < o.exp_) {
      num_ <<= (o.exp_ - exp_);
      exp_ = o.exp_;
      num_ += o.num_;
    } else if (exp_ > o.exp_) {
      num_ += o.num_ << (exp_ - o.exp_);
    } else {
      num_ += o.num_;
    }
    canonicalize();
    return *this;
  }

  Dyadic& operator-=(const Dyadic& o) { return *this += -o; }

  Dyadic& operator*=(const Dyadic& o) {
    num_ *= o.num_;
    exp_ += o.exp_;
    canonicalize();
    return *this;
  }

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  /// Exact three-way comparison of values.
  int compare(const Dyadic& o) const {
    // a/2^p <=> b/2^q  iff  a*2^q <=> b*2^p
    Int lhs = num_ << o.exp_;
    Int rhs = o.num_ << exp_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return a.compare(b) >= 0; }

  double toDouble() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
  }

  /// "n" for integers, "n/d" with d = 2^exponent otherwise.
  std::string str() const {
    if (exp_ == 0) return num_.str();
    Int den = Int(1) << exp_;
    return num_.str() + "/" + den.str();
  }

  /// Parses "n" or "n/d"; d must be a positive power of two.
  static Dyadic parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Dyadic(parseInt(s));
    Int n = parseInt(s.substr(0, slash));
    Int d = parseInt(s.substr(slash + 1));
    if (d <= 0) throw std::invalid_argument("Dyadic: denominator must be positive: " + std::string(s));
    unsigned e = boost::multiprecision::msb(d);
    if ((Int(1) << e) != d)
      throw std::invalid_argument("Dyadic: denominator is not a power of two: " + std::string(s));
    return Dyadic(std::move(n), e);
  }

  /// Appends a canonical byte encoding (used for hashing/deduplication).
  /// Tokens are self-delimiting, so concatenations are injective.
  void serialize(std::string& out) const {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((exp_ >> (8 * b)) & 0xff));
    out.push_back(num_ < 0 ? '\x01' : '\x00');
    std::size_t lenPos = out.size();
    out.push_back('\x00');
    Int a = boost::multiprecision::abs(num_);
    while (a != 0) {
      out.push_back(static_cast<char>(a.convert_to<unsigned>() & 0xff));
      a >>= 8;
    }
    std::size_t len = out.size() - lenPos - 1;
    if (len > 255) throw std::length_error("Dyadic::serialize: numerator too large");
    out[lenPos] = static_cast<char>(len);
  }

 private:
  static Int parseInt(std::string_view s) {
    if (s.empty() || s == "-") throw std::invalid_argument("Dyadic: empty numeral");
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (!(c >= '0' && c <= '9') && !(i == 0 && c == '-'))
        throw std::invalid_argument("Dyadic: bad numeral: " + std::string(s));
    }
    return Int(std::string(s));
  }

  void canonicalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
      num_ >>= 1;
      --exp_;
    }
  }

  Int num_;
  unsigned exp_;
};

inline std::size_t hashBytes(const std::string& bytes) {
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qlat
