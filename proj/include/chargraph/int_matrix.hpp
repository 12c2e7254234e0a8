#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ArgumentError("ragged matrix literal");
      for (long v : r) entries_.emplace_back(v);
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw ArgumentError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const BigInt> entries() const { return entries_; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Plain-text rows of space-separated integers.
  std::string to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
      os << '\n';
    }
    return os.str();
  }

  static IntMatrix parse_text(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<BigInt> row;
      std::string tok;
      while (ls >> tok) row.push_back(parse_bigint(tok));
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_rows(rows);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Diagonal of a Smith normal form: nonzero entries first, each dividing the next.
struct InvariantFactors {
  std::vector<BigInt> factors;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const BigInt& d) { return d != 0; }));
  }
  std::size_t count_ones() const {
    return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const BigInt& d) { return d == 1; }));
  }
  /// Nonzero factors only.
  std::vector<BigInt> nonzero() const {
    std::vector<BigInt> out;
    for (const auto& d : factors)
      if (d != 0) out.push_back(d);
    return out;
  }
  bool satisfies_chain() const {
    bool seen_zero = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 0) return false;
      if (factors[i] == 0) {
        seen_zero = true;
        continue;
      }
      if (seen_zero) return false;
      if (i > 0 && !divides(factors[i - 1], factors[i])) return false;
    }
    return true;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].get_str();
    return s + ")";
  }
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const InvariantFactors& f) { return os << f.to_string(); }

inline InvariantFactors make_factors(std::initializer_list<long> values) {
  InvariantFactors f;
  for (long v : values) f.factors.emplace_back(v);
  return f;
}

/// gcds of k-minors: deltas[k] = Δ_k, deltas[0] = 1.
struct DeltaSequence {
  std::vector<BigInt> deltas;
  friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;
};

namespace detail {
// Entries larger than this many bits abort elimination.
inline constexpr std::size_t kMaxPivotBits = 1u << 20;

inline void check_growth(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > kMaxPivotBits)
    throw ResourceError("coefficient growth exceeded limit during elimination");
}
}  // namespace detail

/// Smith normal form diagonal by unimodular row/column operations,
/// pivoting on the entry of least absolute value.
inline InvariantFactors snf_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  InvariantFactors out;
  out.factors.assign(diag, BigInt(0));

  for (std::size_t s = 0; s < diag; ++s) {
    while (true) {
      // least |entry| in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          const BigInt& v = m(i, j);
          if (v == 0) continue;
          if (pi == rows || mpz_cmpabs(v.get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        // trailing block is zero
        for (std::size_t k = s; k < diag; ++k) out.factors[k] = 0;
        return out;
      }
      m.swap_rows(s, pi);
      m.swap_cols(s, pj);
      const BigInt pivot = m(s, s);
      detail::check_growth(pivot);

      bool dirty = false;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m(i, s) == 0) continue;
        BigInt q = balanced_quotient(m(i, s), pivot);
        if (q != 0) m.add_row_multiple(i, s, -q);
        if (m(i, s) != 0) dirty = true;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m(s, j) == 0) continue;
        BigInt q = balanced_quotient(m(s, j), pivot);
        if (q != 0) m.add_col_multiple(j, s, -q);
        if (m(s, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // row s and column s are clear; enforce pivot | trailing block
      bool fixed = true;
      for (std::size_t i = s + 1; i < rows && fixed; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (!divides(pivot, m(i, j))) {
            m.add_row_multiple(s, i, BigInt(1));
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    out.factors[s] = abs(m(s, s));
  }
  return out;
}

/// φ(M): the number of invariant factors equal to 1.
inline std::size_t count_unit_factors(const IntMatrix& m) { return snf_diagonal(m).count_ones(); }

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return BigInt(0);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {
/// Calls f(indices) for every increasing k-subset of [0, n); stops when f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return false;
    if (k == 0) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace detail

/// Δ_k: gcd of all k-minors (0 when they all vanish, 1 for k = 0).
/// Enumeration stops as soon as the running gcd reaches 1.
inline BigInt gcd_of_k_minors(const IntMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols()))
    throw ArgumentError("minor size " + std::to_string(k) + " exceeds matrix dimensions");
  if (k == 0) return BigInt(1);
  BigInt g = 0;
  detail::for_each_subset(m.rows(), k, [&](std::span<const std::size_t> rows) {
    return detail::for_each_subset(m.cols(), k, [&](std::span<const std::size_t> cols) {
      g = gcd(g, determinant(m.submatrix(rows, cols)));
      return g != 1;
    });
  });
  return g;
}

inline DeltaSequence minor_gcds(const IntMatrix& m) {
  DeltaSequence d;
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k <= top; ++k) {
    d.deltas.push_back(gcd_of_k_minors(m, k));
    if (d.deltas.back() == 0) {
      d.deltas.resize(top + 1, BigInt(0));
      break;
    }
  }
  return d;
}

/// d_k = Δ_k / Δ_{k-1} up to the rank; zeros afterwards.
inline InvariantFactors invariant_factors_from_deltas(const DeltaSequence& d) {
  if (d.deltas.empty() || d.deltas.front() != 1)
    throw InternalError("delta sequence must start with 1");
  InvariantFactors out;
  bool zero = false;
  for (std::size_t k = 1; k < d.deltas.size(); ++k) {
    const BigInt& cur = d.deltas[k];
    if (cur < 0) throw InternalError("negative minor gcd");
    if (zero || cur == 0) {
      if (cur != 0) throw InternalError("nonzero minor gcd after a vanishing one");
      zero = true;
      out.factors.emplace_back(0);
      continue;
    }
    if (!divides(d.deltas[k - 1], cur))
      throw InternalError("minor gcd chain broken at k=" + std::to_string(k));
    out.factors.push_back(exact_div(cur, d.deltas[k - 1]));
  }
  return out;
}

}  // namespace chargraph
