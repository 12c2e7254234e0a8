#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

/// Dense univariate polynomial in t over the integers.
/// coeffs()[i] is the coefficient of t^i; the top coefficient is never zero.
class ZPoly {
public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  ZPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static ZPoly constant(const BigInt& v) { return ZPoly(std::vector<BigInt>{v}); }
  /// c * t^k
  static ZPoly monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return ZPoly(std::move(v));
  }
  static ZPoly t() { return monomial(BigInt(1), 1); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& lc() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  ZPoly operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  ZPoly& operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ZPoly& operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
  }
  friend ZPoly operator*(const BigInt& s, const ZPoly& p) {
    if (s == 0) return {};
    ZPoly r = p;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  /// p * t^k
  ZPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(k, BigInt(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return ZPoly(std::move(v));
  }

  /// this -= q * t^shift * g, in place.
  void subtract_scaled(const BigInt& q, std::size_t shift, const ZPoly& g) {
    if (q == 0 || g.is_zero()) return;
    if (g.c_.size() + shift > c_.size()) c_.resize(g.c_.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i + shift] -= q * g.c_[i];
    trim();
  }

  /// Sign-normalized copy: leading coefficient positive.
  ZPoly normalized() const { return (!is_zero() && lc() < 0) ? -*this : *this; }

  /// Exact division by a polynomial whose quotient is known to lie in Z[t].
  ZPoly exact_div(const ZPoly& d) const {
    if (d.is_zero()) throw ArgumentError("division by the zero polynomial");
    if (is_zero()) return {};
    ZPoly r = *this;
    if (r.degree() < d.degree()) throw InternalError("inexact polynomial division");
    std::vector<BigInt> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, BigInt(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      if (!divides(d.lc(), r.lc())) throw InternalError("inexact polynomial division");
      BigInt c = chargraph::exact_div(r.lc(), d.lc());
      q[shift] = c;
      r.subtract_scaled(c, shift, d);
    }
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return ZPoly(std::move(q));
  }

  /// Order used for canonical bases: by degree, then coefficients low-to-high.
  friend std::strong_ordering operator<=>(const ZPoly& a, const ZPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "t^4 - 5t^2 - 4t".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) s += mag.get_str();
      if (i >= 1) s += var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const ZPoly& p) { return os << p.to_string(); }

}  // namespace chargraph
