#pragma once

#include <map>
#include <vector>

#include "assoform/action.hpp"
#include "assoform/errors.hpp"
#include "assoform/matrix.hpp"
#include "assoform/poly.hpp"
#include "assoform/poly_tuple.hpp"

namespace assoform {

/// Linear functional on the socle-degree piece, vanishing on W and taking the
/// value 1 on the normalizer (Jacobian of the tuple, or Hessian of the form).
struct SocleFunctional {
  int n = 0;
  int top_degree = 0;
  std::vector<Rational> covector;  // indexed by monomial_basis(n, top_degree)
  Poly normalizer{1};

  Rational apply(const Poly& g) const {
    GradedBasis basis(n, top_degree);
    Rational s = 0;
    for (const auto& [m, c] : g.terms()) s += c * covector[basis.index_of(m)];
    return s;
  }
};

using MuTable = std::map<Monomial, Rational, GrlexGreater>;

struct AssociatedForm {
  Poly form{1, Space::E};  // e-space form of degree n(d-2)
  MuTable mu;              // nonzero mu_i only
};

/// Whether a tuple generates an ideal of finite colength, with the evidence.
struct ColengthReport {
  bool finite = false;
  int probe_degree = 0;
  std::size_t ideal_dim = 0;
  std::size_t ambient_dim = 0;
};

/// (df/dz1, ..., df/dzn).
inline PolyTuple gradient(const Poly& f) {
  if (f.space() != Space::Z) throw DomainError("gradient: expects a z-space form");
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("gradient: expects a nonzero homogeneous form");
  if (f.degree() < 2) throw DomainError("gradient: degree must be at least 2");
  std::vector<Poly> parts;
  for (int i = 0; i < f.nvars(); ++i) parts.push_back(f.derivative(i));
  return PolyTuple(std::move(parts), f.degree() - 1);
}

namespace detail {
/// Rows: coordinates of m * f_j for all monomials m of degree k - (d-1).
inline MatrixQ ideal_generator_rows(const PolyTuple& t, const GradedBasis& target) {
  const int shift = target.degree() - t.form_degree();
  std::vector<std::vector<Rational>> rows;
  if (shift >= 0) {
    for (const auto& m : monomial_basis(t.nvars(), shift)) {
      Poly mono = Poly::term(m, 1);
      for (const auto& f : t.forms()) {
        if (f.is_zero()) continue;
        rows.push_back(coordinates(mono * f, target));
      }
    }
  }
  return MatrixQ::from_rows(rows, target.size());
}
}  // namespace detail

/// Dimension of the degree-k piece of the ideal (f1, ..., fn).
inline std::size_t ideal_graded_dim(const PolyTuple& t, int k) {
  if (k < t.form_degree()) return 0;
  GradedBasis basis(t.nvars(), k);
  return rank(detail::ideal_generator_rows(t, basis));
}

/// The ideal has finite colength iff its piece of degree n(d-2)+1 is full.
inline ColengthReport colength_report(const PolyTuple& t) {
  ColengthReport r;
  r.probe_degree = t.socle_degree() + 1;
  r.ambient_dim = GradedBasis(t.nvars(), r.probe_degree).size();
  r.ideal_dim = ideal_graded_dim(t, r.probe_degree);
  r.finite = r.ideal_dim == r.ambient_dim;
  return r;
}

inline bool is_finite_colength(const PolyTuple& t) { return colength_report(t).finite; }

inline void require_form_for_phi(const Poly& f) {
  if (f.space() != Space::Z) throw DomainError("expected a z-space form");
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("expected a nonzero homogeneous form");
  if (f.degree() < 3) throw DomainError("expected a form of degree at least 3");
}

/// True iff the hypersurface f = 0 has an isolated singularity at the origin.
inline bool is_nondegenerate(const Poly& f) {
  require_form_for_phi(f);
  return is_finite_colength(gradient(f));
}

/// The covector vanishing on W = C[z]_{n(d-2)-(d-1)} * (f1, ..., fn) and equal
/// to 1 on Jac(f).
inline SocleFunctional socle_functional(const PolyTuple& t) {
  auto report = colength_report(t);
  if (!report.finite) throw FiniteColengthError(report.probe_degree, report.ideal_dim, report.ambient_dim);
  const int top = t.socle_degree();
  GradedBasis basis(t.nvars(), top);
  MatrixQ gens = detail::ideal_generator_rows(t, basis);
  const std::size_t w_rank = rank(gens);
  if (w_rank + 1 != basis.size())
    throw DegenerateSocle("W has codimension " + std::to_string(basis.size() - w_rank) + ", expected 1");

  Poly jac = jacobian(t);
  MatrixQ system(gens.rows() + 1, basis.size());
  for (std::size_t r = 0; r < gens.rows(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) system(r, c) = gens(r, c);
  auto jac_coords = coordinates(jac, basis);
  for (std::size_t c = 0; c < basis.size(); ++c) system(gens.rows(), c) = jac_coords[c];
  std::vector<Rational> rhs(gens.rows() + 1);
  rhs.back() = 1;

  auto sol = solve(system, rhs);
  if (sol.status != LinearSolution::Status::Unique)
    throw DegenerateSocle("socle system has no unique solution (Jacobian lies in W)");
  return SocleFunctional{t.nvars(), top, std::move(sol.x), std::move(jac)};
}

/// mu_i = omega(z^i) for every monomial of the socle degree; zeros omitted.
inline MuTable mu_coefficients(const PolyTuple& t) {
  auto omega = socle_functional(t);
  GradedBasis basis(omega.n, omega.top_degree);
  MuTable mu;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (omega.covector[i] != 0) mu.emplace(basis[i], omega.covector[i]);
  return mu;
}

namespace detail {
inline Poly form_from_mu(const MuTable& mu, int n, int top) {
  Poly form(n, Space::E);
  const Integer top_factorial = factorial(static_cast<unsigned>(top));
  for (const auto& [m, value] : mu) form.add_term(m, make_rational(top_factorial, m.factorial_product()) * value);
  return form;
}
}  // namespace detail

/// Psi: the associated form of a finite-colength tuple.
inline AssociatedForm associated_form_tuple(const PolyTuple& t) {
  AssociatedForm out;
  out.mu = mu_coefficients(t);
  out.form = detail::form_from_mu(out.mu, t.nvars(), t.socle_degree());
  return out;
}

/// Phi: the associated form of a nondegenerate form, i.e. Psi of its gradient.
inline AssociatedForm associated_form(const Poly& f) {
  require_form_for_phi(f);
  auto grad = gradient(f);
  auto report = colength_report(grad);
  if (!report.finite) throw NondegeneracyError(report.probe_degree);
  return associated_form_tuple(grad);
}

/// dim of each graded piece of C[z]/(f1..fn), degrees 0 through n(d-2).
inline std::vector<std::size_t> hilbert_function(const PolyTuple& t) {
  auto report = colength_report(t);
  if (!report.finite) throw FiniteColengthError(report.probe_degree, report.ideal_dim, report.ambient_dim);
  std::vector<std::size_t> h;
  for (int k = 0; k <= t.socle_degree(); ++k)
    h.push_back(GradedBasis(t.nvars(), k).size() - ideal_graded_dim(t, k));
  return h;
}

}  // namespace assoform
