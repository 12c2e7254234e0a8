#pragma once

// Strong Gröbner bases of ideals in Z[t].
//
// With a single variable the term order is forced (by degree), and a strong
// basis has, for every degree d, an element whose leading coefficient
// generates the ideal of leading coefficients of degree-d members. Completion
// follows the Euclidean-domain Buchberger scheme: every pair contributes an
// S-polynomial (lcm of the leading coefficients) and a G-polynomial (Bezout
// combination reaching their gcd). Reduction divides coefficients with the
// balanced remainder convention, which also fixes the canonical tails of the
// reduced basis.

#include "zpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

namespace detail {

/// Index of the basis element with deg <= e and least |lc|, or npos.
inline std::size_t best_reducer(std::span<const ZPoly> basis, int e, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == skip || basis[i].degree() > e) continue;
    if (best == static_cast<std::size_t>(-1) || mpz_cmpabs(basis[i].lc().get_mpz_t(), basis[best].lc().get_mpz_t()) < 0)
      best = i;
  }
  return best;
}

/// Reduce every coefficient of p at degree <= from_degree.
inline void reduce_terms(ZPoly& p, std::span<const ZPoly> basis, int from_degree, std::size_t skip) {
  for (int e = std::min(from_degree, p.degree()); e >= 0; --e) {
    if (e > p.degree()) continue;
    const BigInt a = p.coeff(static_cast<std::size_t>(e));
    if (a == 0) continue;
    std::size_t r = best_reducer(basis, e, skip);
    if (r == static_cast<std::size_t>(-1)) break;  // nothing of lower degree either
    const ZPoly& g = basis[r];
    BigInt q = balanced_quotient(a, g.lc());
    if (q != 0) p.subtract_scaled(q, static_cast<std::size_t>(e - g.degree()), g);
  }
}

inline ZPoly s_polynomial(const ZPoly& f, const ZPoly& g) {
  const ZPoly& hi = f.degree() >= g.degree() ? f : g;
  const ZPoly& lo = f.degree() >= g.degree() ? g : f;
  BigInt l = lcm(hi.lc(), lo.lc());
  const auto shift = static_cast<std::size_t>(hi.degree() - lo.degree());
  ZPoly s = exact_div(l, hi.lc()) * hi;
  s.subtract_scaled(exact_div(l, lo.lc()), shift, lo);
  return s;
}

inline ZPoly g_polynomial(const ZPoly& f, const ZPoly& g) {
  const ZPoly& hi = f.degree() >= g.degree() ? f : g;
  const ZPoly& lo = f.degree() >= g.degree() ? g : f;
  BigInt u, v;
  extended_gcd(hi.lc(), lo.lc(), u, v);
  const auto shift = static_cast<std::size_t>(hi.degree() - lo.degree());
  return u * hi + (v * lo).shifted(shift);
}

}  // namespace detail

/// Normal form of p with respect to a strong Gröbner basis; zero iff p lies in
/// the ideal. Coefficient remainders satisfy |r| <= |lc|/2, positive on ties.
inline ZPoly reduce(ZPoly p, std::span<const ZPoly> basis) {
  detail::reduce_terms(p, basis, p.degree(), static_cast<std::size_t>(-1));
  return p;
}

inline ZPoly s_polynomial(const ZPoly& f, const ZPoly& g) { return detail::s_polynomial(f, g); }
inline ZPoly g_polynomial(const ZPoly& f, const ZPoly& g) { return detail::g_polynomial(f, g); }

/// Incremental strong Gröbner basis. After every add() the held basis is
/// reduced and canonically ordered, so callers can stop as soon as it
/// becomes (1).
class GroebnerBuilder {
public:
  /// Returns true when p enlarged the ideal.
  bool add(const ZPoly& p) {
    if (is_unit()) return false;
    ZPoly r = reduce(p, basis_);
    if (r.is_zero()) return false;
    std::vector<ZPoly> pending{std::move(r)};
    std::vector<ZPoly> work = basis_;
    auto enqueue = [&](ZPoly q) {
      if (!q.is_zero()) pending.push_back(std::move(q));
    };
    while (!pending.empty()) {
      // lowest degree first keeps intermediate coefficients small
      auto pick = std::min_element(pending.begin(), pending.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return mpz_cmpabs(a.lc().get_mpz_t(), b.lc().get_mpz_t()) < 0;
      });
      ZPoly h = reduce(std::move(*pick), work);
      pending.erase(pick);
      if (h.is_zero()) continue;
      h = h.normalized();
      if (h.degree() == 0 && h.lc() == 1) {
        work.assign(1, std::move(h));
        break;
      }
      // elements whose leading term h divides are redundant; their
      // remainders go back to the queue
      std::vector<ZPoly> keep;
      for (auto& g : work) {
        if (g.degree() >= h.degree() && divides(h.lc(), g.lc())) {
          enqueue(std::move(g));
          continue;
        }
        enqueue(detail::s_polynomial(h, g));
        const ZPoly& lo = g.degree() <= h.degree() ? g : h;
        const ZPoly& hi = g.degree() <= h.degree() ? h : g;
        if (!divides(lo.lc(), hi.lc())) enqueue(detail::g_polynomial(h, g));
        keep.push_back(std::move(g));
      }
      keep.push_back(std::move(h));
      work = std::move(keep);
    }
    basis_ = canonicalize(std::move(work));
    return true;
  }

  template <typename Range>
  void add_all(const Range& polys) {
    for (const auto& p : polys) {
      if (is_unit()) return;
      add(p);
    }
  }

  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_one(); }
  const std::vector<ZPoly>& basis() const { return basis_; }

  /// Minimal strong basis with positive leading coefficients, tails reduced
  /// top-down, sorted by (degree, coefficients). Input must be a strong basis.
  static std::vector<ZPoly> canonicalize(std::vector<ZPoly> g) {
    for (auto& p : g) p = p.normalized();
    std::erase_if(g, [](const ZPoly& p) { return p.is_zero(); });
    std::sort(g.begin(), g.end(), [](const ZPoly& a, const ZPoly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return cmp(a.lc(), b.lc()) < 0;
    });
    std::vector<ZPoly> kept;
    for (auto& p : g) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ZPoly& k) { return divides(k.lc(), p.lc()); });
      if (!redundant) kept.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < kept.size(); ++i)
      detail::reduce_terms(kept[i], kept, kept[i].degree() - 1, i);
    std::sort(kept.begin(), kept.end());
    return kept;
  }

private:
  std::vector<ZPoly> basis_;
};

/// Reduced strong Gröbner basis of <gens>. The zero ideal gives an empty basis.
inline std::vector<ZPoly> strong_groebner(std::span<const ZPoly> gens) {
  GroebnerBuilder b;
  for (const auto& p : gens) {
    if (b.is_unit()) break;
    b.add(p);
  }
  return b.basis();
}

inline std::vector<ZPoly> strong_groebner(const std::vector<ZPoly>& gens) {
  return strong_groebner(std::span<const ZPoly>(gens));
}

}  // namespace chargraph
