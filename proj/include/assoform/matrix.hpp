#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "assoform/errors.hpp"
#include "assoform/rational.hpp"

namespace assoform {

/// Dense matrix of rationals, row-major.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("MatrixQ: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static MatrixQ identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    MatrixQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DomainError("MatrixQ::from_rows: row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  MatrixQ transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw DomainError("MatrixQ: dimension mismatch in product");
    MatrixQ p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

/// Row echelon form over the integers produced by fraction-free (Bareiss)
/// elimination. Each input row is first scaled by the lcm of its denominators,
/// which leaves rank, row space and right kernel unchanged.
struct IntegerEchelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;             // rows x cols, echelon rows first
  std::vector<std::size_t> pivots;    // pivot column of echelon row r
  Integer row_scale_product = 1;      // product of the denominator lcms
  int swap_sign = 1;

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::size_t rank() const { return pivots.size(); }
};

inline IntegerEchelon bareiss_echelon(const MatrixQ& m) {
  IntegerEchelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.resize(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < e.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    e.row_scale_product *= l;
    for (std::size_t c = 0; c < e.cols; ++c) {
      const Rational& q = m(r, c);
      e.at(r, c) = q.get_num() * (l / q.get_den());
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    // Deterministic pivoting: first nonzero entry from the top.
    std::size_t p = r;
    while (p < e.rows && e.at(p, c) == 0) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < e.cols; ++j) swap(e.at(p, j), e.at(r, j));
      e.swap_sign = -e.swap_sign;
    }
    const Integer pivot = e.at(r, c);
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      const Integer factor = e.at(i, c);
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        // (pivot * a_ij - a_ic * a_rj) / prev is exact: every entry is a minor.
        tmp = pivot * e.at(i, j) - factor * e.at(r, j);
        mpz_divexact(e.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      e.at(i, c) = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

/// Solves the echelon system for the unknowns at pivot columns, with the free
/// unknowns fixed by `free_values` (indexed by column, non-pivot entries used).
/// `rhs_col` selects an augmented column, or none for a homogeneous system.
inline std::vector<Rational> back_substitute(const IntegerEchelon& e, std::size_t nunknowns,
                                             std::vector<Rational> x, std::optional<std::size_t> rhs_col) {
  for (std::size_t k = e.rank(); k-- > 0;) {
    std::size_t pc = e.pivots[k];
    Rational s = rhs_col ? Rational(e.at(k, *rhs_col)) : Rational(0);
    for (std::size_t j = pc + 1; j < nunknowns; ++j)
      if (x[j] != 0 && e.at(k, j) != 0) s -= Rational(e.at(k, j)) * x[j];
    x[pc] = s / Rational(e.at(k, pc));
  }
  return x;
}

}  // namespace detail

inline std::size_t rank(const MatrixQ& m) { return detail::bareiss_echelon(m).rank(); }

/// Basis of the right kernel {x : m x = 0}, one vector per free column, each
/// with a 1 in its free position.
inline std::vector<std::vector<Rational>> nullspace(const MatrixQ& m) {
  auto e = detail::bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = 1;
    basis.push_back(detail::back_substitute(e, m.cols(), std::move(x), std::nullopt));
  }
  return basis;
}

/// Outcome of solving a x = b.
struct LinearSolution {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status;
  std::vector<Rational> x;  // filled when Unique
  std::size_t rank = 0;     // rank of a
};

inline LinearSolution solve(const MatrixQ& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
  MatrixQ aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto e = detail::bareiss_echelon(aug);
  LinearSolution out{LinearSolution::Status::Unique, {}, e.rank()};
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    out.status = LinearSolution::Status::Inconsistent;
    out.rank = e.rank() - 1;
    return out;
  }
  if (e.rank() < a.cols()) {
    out.status = LinearSolution::Status::Underdetermined;
    return out;
  }
  out.x = detail::back_substitute(e, a.cols(), std::vector<Rational>(a.cols()), a.cols());
  return out;
}

inline Rational determinant(const MatrixQ& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto e = detail::bareiss_echelon(m);
  if (e.rank() < m.rows()) return 0;
  Rational det(e.at(m.rows() - 1, m.cols() - 1) * e.swap_sign, e.row_scale_product);
  det.canonicalize();
  return det;
}

inline MatrixQ inverse(const MatrixQ& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ inv(n, n);
  MatrixQ aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto e = detail::bareiss_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
  for (std::size_t j = 0; j < n; ++j) {
    auto x = detail::back_substitute(e, n, std::vector<Rational>(n), n + j);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  return inv;
}

}  // namespace assoform
