#pragma once

#include "ideal.hpp"
#include "minors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace chargraph {

namespace detail {

/// Remembers minors up to sign, keyed by a hash of the machine-word
/// coefficients so repeated minors cost no allocation.
class MinorDedup {
public:
  /// Normalizes coeffs in place to positive leading coefficient; returns
  /// false for zero or already seen minors.
  bool insert(std::vector<std::int64_t>& coeffs) {
    std::size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1] == 0) --top;
    if (top == 0) return false;
    coeffs.resize(top);
    if (coeffs.back() < 0)
      for (auto& c : coeffs) {
        if (c == INT64_MIN) throw CoefficientOverflow{};
        c = -c;
      }
    std::uint64_t h = 1469598103934665603ull;
    for (auto c : coeffs) h = (h ^ static_cast<std::uint64_t>(c)) * 1099511628211ull;
    auto& bucket = buckets_[h];
    for (auto idx : bucket)
      if (stored_[idx] == coeffs) return false;
    bucket.push_back(stored_.size());
    stored_.push_back(coeffs);
    return true;
  }

private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<std::vector<std::int64_t>> stored_;
};

inline ZPoly to_zpoly(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return ZPoly(std::move(v));
}

}  // namespace detail

/// Calls f(p) once for each distinct nonzero k-minor p of m, up to sign
/// (p has positive leading coefficient), until f returns false. Works in
/// int64 and restarts over GMP integers on overflow, in which case a minor
/// may be reported twice. Returns false if f stopped the walk.
inline bool for_each_distinct_minor(const PolyMatrix& m, std::size_t k, const std::function<bool(const ZPoly&)>& f) {
  try {
    detail::MinorDedup seen;
    std::vector<std::int64_t> buf;
    return for_each_minor<std::int64_t>(m, k, [&](std::span<const std::int64_t> c, std::uint64_t, std::uint64_t) {
      buf.assign(c.begin(), c.end());
      if (!seen.insert(buf)) return true;
      return f(detail::to_zpoly(buf));
    });
  } catch (const CoefficientOverflow&) {
    std::set<ZPoly> seen;
    return for_each_minor<BigInt>(m, k, [&](std::span<const BigInt> c, std::uint64_t, std::uint64_t) {
      ZPoly p = ZPoly(std::vector<BigInt>(c.begin(), c.end())).normalized();
      if (p.is_zero() || !seen.insert(p).second) return true;
      return f(p);
    });
  }
}

/// I_k(m): the ideal of Z[t] generated by the k-minors of m. Stops consuming
/// minors once the ideal is the unit ideal; the recorded generators are the
/// distinct minors consumed up to that point.
inline IdealZt determinantal_ideal(const PolyMatrix& m, std::size_t k) {
  if (k == 0) return IdealZt::unit();
  if (k > m.size()) return IdealZt::zero();
  GroebnerBuilder builder;
  std::vector<ZPoly> gens;
  for_each_distinct_minor(m, k, [&](const ZPoly& p) {
    gens.push_back(p);
    builder.add(p);
    return !builder.is_unit();
  });
  return IdealZt::from_basis(std::move(gens), builder.basis());
}

/// A_k(G, t) = I_k(tI - A(G)).
inline IdealZt characteristic_ideal(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.order())
    throw ArgumentError("k = " + std::to_string(k) + " is outside 1.." + std::to_string(g.order()));
  return determinantal_ideal(characteristic_matrix(g), k);
}

/// Whether every k-minor of tI - A(G) lies in `target`; cheaper than building
/// A_k when only containment matters.
inline bool characteristic_ideal_within(const Graph& g, std::size_t k, const IdealZt& target) {
  if (k < 1 || k > g.order())
    throw ArgumentError("k = " + std::to_string(k) + " is outside 1.." + std::to_string(g.order()));
  return for_each_distinct_minor(characteristic_matrix(g), k, [&](const ZPoly& p) { return target.contains(p); });
}

/// Largest k with A_k(G,t) = ⟨1⟩, scanning upwards from k = 1.
inline std::size_t algebraic_corank(const Graph& g) {
  std::size_t k = 0;
  while (k < g.order() && characteristic_ideal(g, k + 1).is_trivial()) ++k;
  return k;
}

struct CharIdealProfile {
  Graph graph;
  std::vector<IdealZt> ideals;  // ideals[k-1] = A_k
  std::size_t gamma = 0;
};

inline CharIdealProfile characteristic_profile(const Graph& g) {
  CharIdealProfile prof{g, {}, 0};
  bool trivial_so_far = true;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    // by the chain property the leading run of trivial ideals is exactly A_1..A_gamma
    prof.ideals.push_back(characteristic_ideal(g, k));
    if (trivial_so_far && prof.ideals.back().is_trivial()) prof.gamma = k;
    else trivial_so_far = false;
  }
  return prof;
}

namespace detail {

/// d_k = Δ_k / Δ_{k-1} with Δ_k the gcd of A_k evaluated at c.
inline InvariantFactors invariants_at(const Graph& g, const BigInt& c) {
  InvariantFactors out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (prev == 0) {
      out.factors.push_back(0);
      continue;
    }
    BigInt delta = characteristic_ideal(g, k).evaluate(c);
    out.factors.push_back(delta == 0 ? BigInt(0) : BigInt(delta / prev));
    prev = delta;
  }
  return out;
}

}  // namespace detail

/// Invariant factors of A(G) read off A_k(G, 0).
inline InvariantFactors smith_invariants_via_ideals(const Graph& g) { return detail::invariants_at(g, BigInt(0)); }

/// Invariant factors of L(G) for r-regular G, read off A_k(G, r).
inline InvariantFactors critical_invariants_regular(const Graph& g) {
  auto r = g.regular_degree();
  if (!r) {
    std::size_t lo = g.order(), hi = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      lo = std::min(lo, g.degree(v));
      hi = std::max(hi, g.degree(v));
    }
    throw ArgumentError("graph is not regular: degrees range from " + std::to_string(lo) + " to " + std::to_string(hi));
  }
  return detail::invariants_at(g, BigInt(static_cast<unsigned long>(*r)));
}

/// e_0..e_l of the given values.
inline std::vector<BigInt> elementary_symmetric(const std::vector<BigInt>& s) {
  std::vector<BigInt> e(s.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t a = i + 1; a >= 1; --a) e[a] += e[a - 1] * s[i];
  return e;
}

/// Closed form for A_j of the complete multipartite graph with the given part
/// sizes (each at least 2). For n - m < j < n the first generator is taken
/// over every (m-k-1)-subset of parts and P over every (m-k)-subset, k = n - j.
/// For j = n the generator is the characteristic polynomial
/// sum_a (1 - a) e_a t^(n-a).
inline IdealZt multipartite_closed_form(const std::vector<int>& parts, std::size_t j) {
  const std::size_t m = parts.size();
  if (m < 2) throw ArgumentError("closed form needs at least 2 parts");
  std::size_t n = 0;
  for (int r : parts) {
    if (r < 2) throw ArgumentError("part size " + std::to_string(r) + " is below 2");
    n += static_cast<std::size_t>(r);
  }
  if (j < 1 || j > n) throw ArgumentError("j = " + std::to_string(j) + " is outside 1.." + std::to_string(n));
  const ZPoly t = ZPoly::t();
  auto tpow = [&](std::size_t e) { return ZPoly::monomial(BigInt(1), e); };

  if (j <= m - 1) return IdealZt::unit();
  if (j <= n - m) return IdealZt({ZPoly::constant(BigInt(static_cast<long>(m - 1))) * tpow(j - m), tpow(j - m + 1)});

  std::vector<BigInt> r;
  for (int x : parts) r.emplace_back(x);
  auto e_poly = [&](const std::vector<BigInt>& vals, long k_minus_1, std::size_t top) {
    // sum_a (k-1+a) e_a(vals) t^(top-a)
    auto e = elementary_symmetric(vals);
    ZPoly p;
    for (std::size_t a = 0; a < e.size(); ++a)
      p += ZPoly::monomial(BigInt(k_minus_1 + static_cast<long>(a)) * e[a], top - a);
    return p;
  };
  if (j == n) return IdealZt({-e_poly(r, -1, n)});

  const std::size_t k = n - j;
  std::vector<ZPoly> gens;
  detail::for_each_subset(m, m - k - 1, [&](std::span<const std::size_t> idx) {
    ZPoly p = tpow(j - m + 1);
    for (auto i : idx) p = p * (t + ZPoly::constant(r[i]));
    gens.push_back(std::move(p));
    return true;
  });
  detail::for_each_subset(m, m - k, [&](std::span<const std::size_t> idx) {
    std::vector<BigInt> vals;
    for (auto i : idx) vals.push_back(r[i]);
    gens.push_back(e_poly(vals, static_cast<long>(k) - 1, j - k));
    return true;
  });
  return IdealZt(std::move(gens));
}

}  // namespace chargraph
