#pragma once
#include <map>
#include <sstream>
#include <string>

#include "linkkit/bigint.hpp"

namespace linkkit {

// Laurent polynomial with exact integer coefficients. Exponents are plain
// integers; callers that need fractional powers (Jones in t^(1/4)) keep the
// exponent scaled by a fixed denominator and pass it to to_string.
class Laurent {
 public:
  Laurent() = default;
  static Laurent mono(long long e, BigInt c) {
    Laurent p;
    if (c != 0) p.t_[e] = std::move(c);
    return p;
  }
  static Laurent one() { return mono(0, 1); }

  bool is_zero() const { return t_.empty(); }
  const std::map<long long, BigInt>& terms() const { return t_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.t_)
      for (const auto& [e2, c2] : b.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  // multiply by c*x^e in place
  void shift(long long e, const BigInt& c) {
    Laurent r;
    for (const auto& [e1, c1] : t_) r.add_term(e1 + e, c1 * c);
    t_ = std::move(r.t_);
  }

  void add_term(long long e, const BigInt& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  BigInt coeff(long long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigInt(0) : it->second;
  }

  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  // "c*t^e" terms sorted by exponent; exponent printed as e/denom reduced,
  // parenthesised when fractional. Exponent-0 terms print the bare coefficient.
  std::string to_string(const std::string& var = "t", long long denom = 1) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << c.str();
        continue;
      }
      os << c.str() << "*" << var << "^";
      long long g = gcd_ll(e < 0 ? -e : e, denom);
      long long num = e / g, den = denom / g;
      if (den == 1)
        os << num;
      else
        os << "(" << num << "/" << den << ")";
    }
    return os.str();
  }

 private:
  static long long gcd_ll(long long a, long long b) {
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  std::map<long long, BigInt> t_;
};

}  // namespace linkkit
