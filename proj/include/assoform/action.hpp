#pragma once

#include <vector>

#include "assoform/matrix.hpp"
#include "assoform/poly.hpp"
#include "assoform/poly_tuple.hpp"

namespace assoform {

/// How GL_n acts on a polynomial.
enum class Action {
  OnForms,      ///< (Cf)(z) = f(z C^{-T})
  OnDualForms,  ///< (CF)(e) = F(e C)
};

namespace detail {
/// Images of the variables under x -> x M (x a row vector): x_j -> sum_i x_i M_ij.
inline std::vector<Poly> row_vector_images(const MatrixQ& m, int nvars, Space space) {
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(nvars));
  for (int j = 0; j < nvars; ++j) {
    Poly img(nvars, space);
    for (int i = 0; i < nvars; ++i) {
      Monomial mono(static_cast<std::size_t>(nvars));
      mono[static_cast<std::size_t>(i)] = 1;
      img.add_term(mono, m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
    images.push_back(std::move(img));
  }
  return images;
}
}  // namespace detail

inline Poly act(const MatrixQ& c, const Poly& f, Action kind) {
  if (!c.is_square() || static_cast<int>(c.rows()) != f.nvars()) throw DomainError("act: matrix size must equal nvars");
  if (determinant(c) == 0) throw SingularMatrix();
  MatrixQ m = kind == Action::OnForms ? inverse(c).transpose() : c;
  auto images = detail::row_vector_images(m, f.nvars(), f.space());
  return f.substitute(images);
}

/// (C1, C2) acting on a tuple: f(z C1^{-T}) C2^{-1}, with f read as a row vector.
inline PolyTuple act_on_tuple(const MatrixQ& c1, const MatrixQ& c2, const PolyTuple& t) {
  const auto n = static_cast<std::size_t>(t.nvars());
  if (c2.rows() != n || !c2.is_square()) throw DomainError("act_on_tuple: matrix size must equal nvars");
  std::vector<Poly> moved;
  moved.reserve(n);
  for (const auto& f : t.forms()) moved.push_back(act(c1, f, Action::OnForms));
  MatrixQ c2inv = inverse(c2);
  std::vector<Poly> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly g(t.nvars(), Space::Z);
    for (std::size_t i = 0; i < n; ++i)
      if (c2inv(i, j) != 0) g += moved[i] * c2inv(i, j);
    out.push_back(std::move(g));
  }
  return PolyTuple(std::move(out), t.form_degree());
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first row; sized for the n <= 5 matrices used here.
inline Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty polynomial matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("polynomial matrix is not square");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly det(m[0][0].nvars(), m[0][0].space());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// det(d^2 f / dz_i dz_j).
inline Poly hessian(const Poly& f) {
  const int n = f.nvars();
  std::vector<Poly> first;
  for (int i = 0; i < n; ++i) first.push_back(f.derivative(i));
  std::vector<std::vector<Poly>> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)].push_back(first[static_cast<std::size_t>(i)].derivative(j));
  return determinant(h);
}

/// det(d f_i / dz_j).
inline Poly jacobian(const PolyTuple& t) {
  const int n = t.nvars();
  std::vector<std::vector<Poly>> j(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) j[static_cast<std::size_t>(i)].push_back(t[static_cast<std::size_t>(i)].derivative(k));
  return determinant(j);
}

}  // namespace assoform
