#pragma once

// Enumeration of all k x k minors of a square polynomial matrix.
//
// Row sets are visited depth-first in increasing order. For a fixed row
// prefix r_1 < ... < r_j the determinants over every j-subset of columns are
// tabulated from the table of the prefix r_1..r_{j-1} by expansion along the
// last row, so each level costs O(C(n, j) * j) polynomial multiply-adds and
// tables are shared between all row sets with a common prefix. Column subsets
// are indexed by their colex rank.

#include "graph.hpp"
#include "zpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chargraph {

/// Square matrix with entries in Z[t].
class PolyMatrix {
public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}

  std::size_t size() const { return n_; }
  ZPoly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const ZPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  int max_degree() const {
    int d = 0;
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
  }

  /// Entry-wise evaluation at t = c.
  IntMatrix evaluate(const BigInt& c) const {
    IntMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).evaluate(c);
    return m;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<ZPoly> e_;
};

/// tI - A(G).
inline PolyMatrix characteristic_matrix(const Graph& g) {
  PolyMatrix m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    m(i, i) = ZPoly::t();
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.has_edge(i, j)) m(i, j) = ZPoly{-1};
  }
  return m;
}

/// Signals that a machine-word minor computation left the int64 range.
struct CoefficientOverflow {};

namespace detail {

template <typename Coeff>
struct CoeffOps;

template <>
struct CoeffOps<std::int64_t> {
  static std::int64_t from(const BigInt& v) {
    if (!v.fits_slong_p()) throw CoefficientOverflow{};
    return v.get_si();
  }
  /// acc += (negate ? -1 : 1) * a * b
  static void fma(std::int64_t& acc, std::int64_t a, std::int64_t b, bool negate) {
    std::int64_t prod;
    if (__builtin_mul_overflow(a, b, &prod)) throw CoefficientOverflow{};
    if (negate ? __builtin_sub_overflow(acc, prod, &acc) : __builtin_add_overflow(acc, prod, &acc))
      throw CoefficientOverflow{};
  }
};

template <>
struct CoeffOps<BigInt> {
  static BigInt from(const BigInt& v) { return v; }
  static void fma(BigInt& acc, const BigInt& a, const BigInt& b, bool negate) {
    if (negate)
      mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    else
      mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
};

inline std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> c(n + 2, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t i = 0; i <= n + 1; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return c;
}

template <typename Coeff, typename Visitor>
class MinorWalker {
public:
  MinorWalker(const PolyMatrix& m, std::size_t k, Visitor& visit) : m_(m), n_(m.size()), k_(k), visit_(visit) {
    entry_stride_ = static_cast<std::size_t>(m.max_degree()) + 1;
    stride_ = k * (entry_stride_ - 1) + 1;
    entries_.assign(n_ * n_ * entry_stride_, Coeff(0));
    nonzero_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const ZPoly& p = m(i, j);
        nonzero_[i * n_ + j] = !p.is_zero();
        for (std::size_t d = 0; d < p.coeffs().size(); ++d)
          entries_[(i * n_ + j) * entry_stride_ + d] = CoeffOps<Coeff>::from(p.coeffs()[d]);
      }
    binom_ = binomial_table(n_);
    masks_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      if (j == 0) {
        masks_[0] = {0};
        continue;
      }
      // Gosper's hack walks j-subsets in increasing numeric (= colex) order
      std::uint64_t s = (std::uint64_t{1} << j) - 1;
      const std::uint64_t limit = std::uint64_t{1} << n_;
      while (s < limit) {
        masks_[j].push_back(s);
        std::uint64_t c = s & (~s + 1), r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
    tables_.resize(k + 1);
    tables_[0].assign(stride_, Coeff(0));
    tables_[0][0] = Coeff(1);
    rows_.resize(k);
  }

  bool run() {
    if (k_ == 0) return visit_(std::span<const Coeff>(tables_[0]), std::uint64_t{0}, std::uint64_t{0});
    if (k_ > n_) return true;
    return descend(1, 0);
  }

private:
  std::size_t rank(std::uint64_t mask) const {
    std::size_t r = 0, i = 1;
    while (mask) {
      const auto c = static_cast<std::size_t>(__builtin_ctzll(mask));
      r += binom_[c][i++];
      mask &= mask - 1;
    }
    return r;
  }

  bool descend(std::size_t level, std::size_t first_row) {
    for (std::size_t r = first_row; r + (k_ - level) < n_; ++r) {
      rows_[level - 1] = r;
      build_level(level, r);
      if (level == k_) {
        std::uint64_t row_mask = 0;
        for (auto x : rows_) row_mask |= std::uint64_t{1} << x;
        const auto& table = tables_[level];
        for (std::size_t ci = 0; ci < masks_[level].size(); ++ci)
          if (!visit_(std::span<const Coeff>(table.data() + ci * stride_, stride_), row_mask, masks_[level][ci]))
            return false;
      } else if (!descend(level + 1, r + 1)) {
        return false;
      }
    }
    return true;
  }

  void build_level(std::size_t level, std::size_t row) {
    const auto& cols = masks_[level];
    auto& table = tables_[level];
    const auto& prev = tables_[level - 1];
    table.assign(cols.size() * stride_, Coeff(0));
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      Coeff* out = table.data() + ci * stride_;
      std::uint64_t rest = cols[ci];
      std::size_t q = 0;
      while (rest) {
        const auto c = static_cast<std::size_t>(__builtin_ctzll(rest));
        rest &= rest - 1;
        const std::size_t pos = q++;
        if (!nonzero_[row * n_ + c]) continue;
        // expansion along the last row: sign (-1)^(level-1 + pos)
        const bool negate = ((level - 1 + pos) & 1u) != 0;
        const Coeff* sub = prev.data() + rank(cols[ci] & ~(std::uint64_t{1} << c)) * stride_;
        const Coeff* ent = entries_.data() + (row * n_ + c) * entry_stride_;
        for (std::size_t a = 0; a < entry_stride_; ++a) {
          if (ent[a] == 0) continue;
          for (std::size_t b = 0; a + b < stride_; ++b)
            if (sub[b] != 0) CoeffOps<Coeff>::fma(out[a + b], ent[a], sub[b], negate);
        }
      }
    }
  }

  const PolyMatrix& m_;
  std::size_t n_, k_;
  Visitor& visit_;
  std::size_t entry_stride_ = 1, stride_ = 1;
  std::vector<Coeff> entries_;
  std::vector<bool> nonzero_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::vector<Coeff>> tables_;
  std::vector<std::size_t> rows_;
};

}  // namespace detail

/// Calls visit(coeffs, row_mask, col_mask) for every k-minor; coeffs holds the
/// coefficients low degree first, zero padded. Returns false if the visitor
/// stopped the walk. With Coeff = int64_t, CoefficientOverflow is thrown when
/// an intermediate leaves the machine range.
template <typename Coeff, typename Visitor>
bool for_each_minor(const PolyMatrix& m, std::size_t k, Visitor&& visit) {
  if (m.size() > 62) throw ArgumentError("minor enumeration supports at most 62 rows");
  detail::MinorWalker<Coeff, std::remove_reference_t<Visitor>> walker(m, k, visit);
  return walker.run();
}

/// Determinant of the submatrix on the given row and column masks, by
/// cofactor expansion; an independent check on the tabulated minors.
inline ZPoly minor_by_expansion(const PolyMatrix& m, std::uint64_t rows, std::uint64_t cols) {
  std::vector<std::size_t> r = Graph::members(rows), c = Graph::members(cols);
  if (r.size() != c.size()) throw ArgumentError("minor needs as many rows as columns");
  if (r.empty()) return ZPoly{1};
  ZPoly det;
  const std::uint64_t rest_rows = rows & ~(std::uint64_t{1} << r.front());
  for (std::size_t q = 0; q < c.size(); ++q) {
    const ZPoly& e = m(r.front(), c[q]);
    if (e.is_zero()) continue;
    ZPoly term = e * minor_by_expansion(m, rest_rows, cols & ~(std::uint64_t{1} << c[q]));
    if (q % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace chargraph
