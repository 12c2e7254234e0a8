#pragma once

#include "groebner.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

/// An ideal of Z[t]: the generators it was built from plus its reduced strong
/// Gröbner basis. Zero generators and duplicates (up to sign) are dropped.
class IdealZt {
public:
  IdealZt() = default;
  IdealZt(std::initializer_list<ZPoly> gens) : IdealZt(std::vector<ZPoly>(gens)) {}
  explicit IdealZt(std::vector<ZPoly> gens) : gens_(ingest(std::move(gens))), basis_(strong_groebner(gens_)) {}

  /// Adopt a basis already known to be reduced and canonical.
  static IdealZt from_basis(std::vector<ZPoly> gens, std::vector<ZPoly> basis) {
    IdealZt i;
    i.gens_ = ingest(std::move(gens));
    i.basis_ = std::move(basis);
    return i;
  }

  static IdealZt unit() { return IdealZt({ZPoly{1}}); }
  static IdealZt zero() { return IdealZt(); }

  const std::vector<ZPoly>& generators() const { return gens_; }
  const std::vector<ZPoly>& basis() const { return basis_; }

  bool is_trivial() const { return basis_.size() == 1 && basis_.front().is_one(); }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const ZPoly& p) const { return reduce(p, basis_).is_zero(); }

  /// this ⊆ other
  bool subset_of(const IdealZt& other) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const ZPoly& p) { return other.contains(p); });
  }

  /// Nonnegative generator of {p(c) : p in I} ⊆ Z.
  BigInt evaluate(const BigInt& c) const {
    BigInt g = 0;
    for (const auto& p : basis_) {
      g = gcd(g, p.evaluate(c));
      if (g == 1) break;
    }
    return g;
  }

  /// "⟨g1, g2, …⟩" over the basis.
  std::string to_string() const {
    std::string s = "\xe2\x9f\xa8";
    if (basis_.empty()) s += "0";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + basis_[i].to_string();
    return s + "\xe2\x9f\xa9";
  }

  /// Equal ideals have identical canonical bases.
  friend bool operator==(const IdealZt& a, const IdealZt& b) { return a.basis_ == b.basis_; }

private:
  static std::vector<ZPoly> ingest(std::vector<ZPoly> gens) {
    std::vector<ZPoly> out;
    std::set<ZPoly> seen;
    for (auto& p : gens) {
      if (p.is_zero()) continue;
      ZPoly n = p.normalized();
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
    return out;
  }

  std::vector<ZPoly> gens_;
  std::vector<ZPoly> basis_;
};

inline bool is_trivial(const IdealZt& i) { return i.is_trivial(); }
inline bool contains(const IdealZt& i, const ZPoly& p) { return i.contains(p); }
inline bool ideal_subset(const IdealZt& i, const IdealZt& j) { return i.subset_of(j); }
/// Mutual inclusion; agrees with comparing canonical bases.
inline bool ideal_equals(const IdealZt& i, const IdealZt& j) { return i.subset_of(j) && j.subset_of(i); }
inline BigInt evaluate_ideal(const IdealZt& i, const BigInt& c) { return i.evaluate(c); }

}  // namespace chargraph
