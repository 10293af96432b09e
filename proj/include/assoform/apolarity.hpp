#pragma once

#include <optional>
#include <vector>

#include "assoform/matrix.hpp"
#include "assoform/milnor.hpp"
#include "assoform/poly.hpp"
#include "assoform/poly_tuple.hpp"

namespace assoform {

/// Degree-k piece of the annihilator F^perp = {g : g <> F = 0}.
struct ApolarSlice {
  Poly F{1, Space::E};
  int degree = 0;
  std::vector<Poly> kernel_basis;

  std::size_t dimension() const noexcept { return kernel_basis.size(); }
};

/// Result of extracting a tuple from F^perp in degree d-1. `tuple` is empty
/// (not applicable) unless that slice has dimension exactly n.
struct ApolarTuple {
  std::optional<PolyTuple> tuple;
  std::size_t kernel_dimension = 0;

  bool applicable() const noexcept { return tuple.has_value(); }
};

inline void require_dual_form(const Poly& F) {
  if (F.space() != Space::E) throw DomainError("expected an e-space form");
  if (F.is_zero() || !F.is_homogeneous()) throw DomainError("expected a nonzero homogeneous form");
}

/// Kernel of g -> g <> F from C[z]_k to C[e]_{N-k}.
inline ApolarSlice annihilator_graded(const Poly& F, int k) {
  require_dual_form(F);
  const int N = F.degree();
  if (k < 0 || k > N) throw DomainError("annihilator_graded: need 0 <= k <= deg F");
  const int n = F.nvars();
  GradedBasis source(n, k);
  GradedBasis target(n, N - k);
  MatrixQ map(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    Poly image = diamond(Poly::term(source[c], 1), F);
    for (const auto& [m, v] : image.terms()) map(target.index_of(m), c) = v;
  }
  ApolarSlice slice{F, k, {}};
  for (const auto& v : nullspace(map)) slice.kernel_basis.push_back(from_coordinates(v, source, Space::Z));
  return slice;
}

/// F^perp in degree d-1, as a tuple when it is n-dimensional.
inline ApolarTuple apolar_tuple(const Poly& F, int d) {
  require_dual_form(F);
  const int n = F.nvars();
  if (d < 2) throw DomainError("apolar_tuple: d must be at least 2");
  if (F.degree() != n * (d - 2)) throw DomainError("apolar_tuple: F must have degree n(d-2)");
  auto slice = annihilator_graded(F, d - 1);
  ApolarTuple out;
  out.kernel_dimension = slice.dimension();
  if (slice.dimension() == static_cast<std::size_t>(n)) out.tuple = PolyTuple(std::move(slice.kernel_basis), d - 1);
  return out;
}

/// Membership in the image of Psi: F^perp in degree d-1 is n-dimensional and
/// spanned by a finite-colength tuple.
inline bool in_U(const Poly& F, int d) {
  auto at = apolar_tuple(F, d);
  return at.applicable() && is_finite_colength(*at.tuple);
}

/// f_j <> F = 0 for every j.
inline bool inverse_system_check(const PolyTuple& t, const Poly& F) {
  auto report = colength_report(t);
  if (!report.finite) throw FiniteColengthError(report.probe_degree, report.ideal_dim, report.ambient_dim);
  require_dual_form(F);
  if (F.nvars() != t.nvars() || F.degree() != t.socle_degree())
    throw DomainError("inverse_system_check: F must have degree n(d-2) in n variables");
  for (const auto& f : t.forms())
    if (!diamond(f, F).is_zero()) return false;
  return true;
}

/// Equality of the spans of two lists of homogeneous forms of one degree,
/// via rank(A) = rank(B) = rank([A|B]).
inline bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b, int nvars, int degree) {
  GradedBasis basis(nvars, degree);
  std::vector<std::vector<Rational>> ra, rb, rab;
  for (const auto& p : a) ra.push_back(coordinates(p, basis));
  for (const auto& p : b) rb.push_back(coordinates(p, basis));
  rab = ra;
  rab.insert(rab.end(), rb.begin(), rb.end());
  auto r1 = rank(MatrixQ::from_rows(ra, basis.size()));
  auto r2 = rank(MatrixQ::from_rows(rb, basis.size()));
  auto r12 = rank(MatrixQ::from_rows(rab, basis.size()));
  return r1 == r2 && r2 == r12;
}

/// The degree-k piece of an ideal given by generators, as a list of spanning forms.
inline std::vector<Poly> ideal_piece_spanning_set(const PolyTuple& t, int k) {
  std::vector<Poly> out;
  const int shift = k - t.form_degree();
  if (shift < 0) return out;
  for (const auto& m : monomial_basis(t.nvars(), shift))
    for (const auto& f : t.forms()) out.push_back(Poly::term(m, 1) * f);
  return out;
}

}  // namespace assoform
