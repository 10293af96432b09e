#pragma once

#include <optional>
#include <string>

#include "assoform/action.hpp"
#include "assoform/errors.hpp"
#include "assoform/invariants.hpp"
#include "assoform/milnor.hpp"

namespace assoform {

enum class Family { BinaryQuartic, TernaryCubic };

inline const char* to_string(Family f) { return f == Family::BinaryQuartic ? "quartic" : "cubic"; }

/// A member q_t = z1^4 + t z1^2 z2^2 + z2^4 or c_t = z1^3 + z2^3 + z3^3 + t z1 z2 z3.
struct FamilyPoint {
  Family family;
  Rational t;
};

/// q_t needs t != +-2, c_t needs t^3 != -27.
inline bool is_admissible(const FamilyPoint& p) {
  if (p.family == Family::BinaryQuartic) return p.t != 2 && p.t != -2;
  return p.t * p.t * p.t != -27;
}

inline Poly family_form(const FamilyPoint& p) {
  if (!is_admissible(p))
    throw ExcludedParameter(std::string(to_string(p.family)) + " family excludes t = " + to_string(p.t));
  if (p.family == Family::BinaryQuartic) {
    Poly q(2);
    q.add_term({4, 0}, 1);
    q.add_term({2, 2}, p.t);
    q.add_term({0, 4}, 1);
    return q;
  }
  Poly c(3);
  c.add_term({3, 0, 0}, 1);
  c.add_term({0, 3, 0}, 1);
  c.add_term({0, 0, 3}, 1);
  c.add_term({1, 1, 1}, p.t);
  return c;
}

/// Parameter of the dual orbit: -12/t for quartics, -18/t for cubics.
inline Rational dual_parameter(const FamilyPoint& p) {
  if (p.t == 0) throw ExcludedParameter("t = 0 has no dual parameter");
  return Rational(p.family == Family::BinaryQuartic ? -12 : -18) / p.t;
}

/// Parameters whose associated form is degenerate: t = 0, +-6 for quartics;
/// t = 0 or t^3 = 216 for cubics.
inline bool is_exceptional(const FamilyPoint& p) {
  if (p.t == 0) return true;
  if (p.family == Family::BinaryQuartic) return p.t == 6 || p.t == -6;
  return p.t * p.t * p.t == 216;
}

enum class InvolutionStatus {
  Fixed,            ///< Phi(Phi(f)) is a nonzero multiple of f
  ImageDegenerate,  ///< Phi(f) is itself degenerate
  NotFixed,         ///< Phi(f) nondegenerate but Phi^2 leaves the line of f
};

inline const char* to_string(InvolutionStatus s) {
  switch (s) {
    case InvolutionStatus::Fixed: return "Fixed";
    case InvolutionStatus::ImageDegenerate: return "ImageDegenerate";
    case InvolutionStatus::NotFixed: return "NotFixed";
  }
  return "?";
}

/// Applies Phi twice, reading the e-space image back as a z-space form.
/// Only meaningful when n(d-2) = d, i.e. binary quartics and ternary cubics.
inline InvolutionStatus involution_check(const Poly& f) {
  require_form_for_phi(f);
  if (f.nvars() * (f.degree() - 2) != f.degree())
    throw DomainError("involution_check: needs n(d-2) = d (binary quartics, ternary cubics)");
  auto first = associated_form(f);
  Poly image = first.form.retag(Space::Z);
  if (!is_nondegenerate(image)) return InvolutionStatus::ImageDegenerate;
  Poly back = associated_form(image).form.retag(Space::Z);
  return is_proportional(back, f) ? InvolutionStatus::Fixed : InvolutionStatus::NotFixed;
}

/// Phi(C f_t) is proportional to C^{-T} f_{t'} with t' the dual parameter, C in SL_n.
inline bool orbit_duality_check(const FamilyPoint& p, const MatrixQ& c) {
  if (is_exceptional(p) || !is_admissible(p))
    throw ExcludedParameter("orbit duality needs t != 0 and a nondegenerate associated form");
  if (determinant(c) != 1) throw DomainError("orbit_duality_check: det C must be 1");
  Poly f = family_form(p);
  Poly lhs = associated_form(act(c, f, Action::OnForms)).form.retag(Space::Z);
  Poly partner = family_form({p.family, dual_parameter(p)});
  Poly rhs = act(inverse(c).transpose(), partner, Action::OnForms);
  return is_proportional(lhs, rhs);
}

/// A point of the projective line: a rational or infinity.
struct ProjectivePoint {
  std::optional<Rational> value;  // empty = infinity

  static ProjectivePoint infinity() { return {}; }
  static ProjectivePoint finite(Rational v) { return {std::move(v)}; }
  bool is_infinite() const noexcept { return !value.has_value(); }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline std::string to_string(const ProjectivePoint& p) { return p.is_infinite() ? "inf" : to_string(*p.value); }

/// zeta -> zeta/(zeta-1) for quartics, zeta -> 1/zeta for cubics.
inline ProjectivePoint mobius(Family family, const ProjectivePoint& zeta) {
  if (family == Family::BinaryQuartic) {
    if (zeta.is_infinite()) return ProjectivePoint::finite(1);
    if (*zeta.value == 1) return ProjectivePoint::infinity();
    return ProjectivePoint::finite(*zeta.value / (*zeta.value - 1));
  }
  if (zeta.is_infinite()) return ProjectivePoint::finite(0);
  if (*zeta.value == 0) return ProjectivePoint::infinity();
  return ProjectivePoint::finite(1 / *zeta.value);
}

/// J of a family member.
inline Rational j_invariant(const FamilyPoint& p) {
  Poly f = family_form(p);
  if (p.family == Family::BinaryQuartic) return j_quartic(f);
  return j_cubic_family(TernaryCubicFamily::from_poly(f));
}

/// J of the associated form of a family member.
inline Rational j_of_associated_form(const FamilyPoint& p) {
  Poly image = associated_form(family_form(p)).form.retag(Space::Z);
  if (p.family == Family::BinaryQuartic) return j_quartic(image);
  return j_cubic_family(TernaryCubicFamily::from_poly(image));
}

/// J(Phi(f_t)) equals the Mobius image of J(f_t).
inline bool j_transform_check(const FamilyPoint& p) {
  if (!is_admissible(p) || is_exceptional(p))
    throw ExcludedParameter(std::string("J transform law excludes t = ") + to_string(p.t));
  auto expected = mobius(p.family, ProjectivePoint::finite(j_invariant(p)));
  return expected == ProjectivePoint::finite(j_of_associated_form(p));
}

}  // namespace assoform
