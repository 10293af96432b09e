#pragma once

#include <array>
#include <string>

#include "assoform/action.hpp"
#include "assoform/errors.hpp"
#include "assoform/matrix.hpp"
#include "assoform/milnor.hpp"
#include "assoform/poly.hpp"

namespace assoform {

// ---------------------------------------------------------------------------
// Binary forms

namespace detail {
inline void require_binary(const Poly& f, int degree, const char* who) {
  if (f.nvars() != 2) throw DomainError(std::string(who) + ": expects a binary form");
  if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != degree))
    throw DomainError(std::string(who) + ": expects a form of degree " + std::to_string(degree));
}
}  // namespace detail

/// Coefficients a_i of f = sum C(N,i) a_i x1^{N-i} x2^i.
inline std::vector<Rational> binomial_coefficients(const Poly& f, int degree) {
  detail::require_binary(f, degree, "binomial_coefficients");
  std::vector<Rational> a;
  for (int i = 0; i <= degree; ++i)
    a.push_back(f.coeff(Monomial{degree - i, i}) /
                Rational(binomial(static_cast<unsigned>(degree), static_cast<unsigned>(i))));
  return a;
}

/// Binary quartic in the binomial basis a0..a4.
struct QuarticCoeffs {
  std::array<Rational, 5> a;

  static QuarticCoeffs from_poly(const Poly& f) {
    auto v = binomial_coefficients(f, 4);
    QuarticCoeffs q;
    for (std::size_t i = 0; i < 5; ++i) q.a[i] = v[i];
    return q;
  }

  Poly to_poly(Space space = Space::Z) const {
    Poly f(2, space);
    for (int i = 0; i <= 4; ++i)
      f.add_term(Monomial{4 - i, i}, Rational(binomial(4, static_cast<unsigned>(i))) * a[static_cast<std::size_t>(i)]);
    return f;
  }
};

/// Hankel determinant det(a_{i+j}) of a binary form of even degree 2N.
inline Rational catalecticant(const Poly& f) {
  if (f.nvars() != 2) throw DomainError("catalecticant: expects a binary form");
  if (f.is_zero()) return 0;
  const int degree = f.degree();
  if (degree % 2 != 0) throw DomainError("catalecticant: odd degree");
  auto a = binomial_coefficients(f, degree);
  const std::size_t size = static_cast<std::size_t>(degree / 2 + 1);
  MatrixQ h(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) h(i, j) = a[i + j];
  return determinant(h);
}

/// I2 = a0 a4 - 4 a1 a3 + 3 a2^2.
inline Rational i2_quartic(const Poly& f) {
  auto q = QuarticCoeffs::from_poly(f);
  return q.a[0] * q.a[4] - 4 * q.a[1] * q.a[3] + 3 * q.a[2] * q.a[2];
}

/// Discriminant of a binary quartic, I2^3 - 27 Cat^2.
inline Rational delta_quartic(const Poly& f) {
  Rational i2 = i2_quartic(f);
  Rational cat = catalecticant(f);
  return i2 * i2 * i2 - 27 * cat * cat;
}

/// J = I2^3 / Delta.
inline Rational j_quartic(const Poly& f) {
  Rational delta = delta_quartic(f);
  if (delta == 0) throw DivisionByZero("Delta");
  Rational i2 = i2_quartic(f);
  return i2 * i2 * i2 / delta;
}

/// K = I2^3 / (27 Cat^2).
inline Rational k_quartic(const Poly& f) {
  Rational cat = catalecticant(f);
  if (cat == 0) throw DivisionByZero("Cat");
  Rational i2 = i2_quartic(f);
  return i2 * i2 * i2 / (27 * cat * cat);
}

/// Lambda(-z2, z1): turns a binary contravariant into a covariant.
inline Poly hat(const Poly& lambda) {
  if (lambda.nvars() != 2 || lambda.space() != Space::E) throw DomainError("hat: expects a binary e-space form");
  std::vector<Poly> images{-Poly::variable(2, 1, Space::Z), Poly::variable(2, 0, Space::Z)};
  return lambda.substitute(images);
}

/// hat(Delta * Phi(f)) == I2 Hess / (2^7 3^3) - Cat f / 2^4.
inline bool verify_quartic_identity(const Poly& f) {
  detail::require_binary(f, 4, "verify_quartic_identity");
  auto phi = associated_form(f);
  Poly lhs = hat(phi.form * delta_quartic(f));
  Poly rhs = hessian(f) * (i2_quartic(f) / Rational(3456)) - f * (catalecticant(f) / Rational(16));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Ternary cubics

namespace detail {
inline void require_ternary_cubic(const Poly& f, const char* who) {
  if (f.nvars() != 3 || !f.is_homogeneous() || (!f.is_zero() && f.degree() != 3))
    throw DomainError(std::string(who) + ": expects a ternary cubic");
}
}  // namespace detail

/// a z1^3 + b z2^3 + c z3^3 + 6 d z1 z2 z3.
struct TernaryCubicFamily {
  Rational a, b, c, d;

  /// Throws DomainError when f has terms outside the family.
  static TernaryCubicFamily from_poly(const Poly& f) {
    detail::require_ternary_cubic(f, "TernaryCubicFamily");
    static const Monomial allowed[] = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}};
    for (const auto& [m, coeff] : f.terms())
      if (std::find(std::begin(allowed), std::end(allowed), m) == std::end(allowed))
        throw DomainError("ternary cubic is not of the form a z1^3 + b z2^3 + c z3^3 + 6d z1z2z3");
    return {f.coeff({3, 0, 0}), f.coeff({0, 3, 0}), f.coeff({0, 0, 3}), f.coeff({1, 1, 1}) / 6};
  }

  Poly to_poly(Space space = Space::Z) const {
    Poly f(3, space);
    f.add_term({3, 0, 0}, a);
    f.add_term({0, 3, 0}, b);
    f.add_term({0, 0, 3}, c);
    f.add_term({1, 1, 1}, 6 * d);
    return f;
  }
};

/// Degree-four Aronhold invariant of an arbitrary ternary cubic, in the
/// convention a w1^3 + b w2^3 + c w3^3 + 3d w1^2w2 + 3p w1^2w3 + 3q w1w2^2
///   + 3r w2^2w3 + 3s w1w3^2 + 3t w2w3^2 + 6u w1w2w3.
inline Rational aronhold_a4(const Poly& f) {
  detail::require_ternary_cubic(f, "aronhold_a4");
  const Rational a = f.coeff({3, 0, 0});
  const Rational b = f.coeff({0, 3, 0});
  const Rational c = f.coeff({0, 0, 3});
  const Rational d = f.coeff({2, 1, 0}) / 3;
  const Rational p = f.coeff({2, 0, 1}) / 3;
  const Rational q = f.coeff({1, 2, 0}) / 3;
  const Rational r = f.coeff({0, 2, 1}) / 3;
  const Rational s = f.coeff({1, 0, 2}) / 3;
  const Rational t = f.coeff({0, 1, 2}) / 3;
  const Rational u = f.coeff({1, 1, 1}) / 6;
  Rational v = a * b * c * u - b * c * d * p - a * c * q * r - a * b * s * t;
  v -= u * (a * r * t + b * p * s + c * d * q);
  v += a * q * t * t + a * r * r * s + b * d * s * s + b * p * p * t + c * d * d * r + c * p * q * q;
  v -= u * u * u * u;
  v += 2 * u * u * (q * s + d * t + p * r);
  v -= 3 * u * (d * r * s + p * q * t);
  v -= q * q * s * s + d * d * t * t + p * p * r * r;
  v += d * p * r * t + p * r * q * s + d * q * s * t;
  return v;
}

inline Rational a4_family(const TernaryCubicFamily& p) { return p.a * p.b * p.c * p.d - p.d * p.d * p.d * p.d; }

/// A6 = a^2 b^2 c^2 - 20 abc d^3 - 8 d^6.
inline Rational a6_family(const TernaryCubicFamily& p) {
  Rational abc = p.a * p.b * p.c;
  Rational d3 = p.d * p.d * p.d;
  return abc * abc - 20 * abc * d3 - 8 * d3 * d3;
}

/// Delta = A6^2 + 64 A4^3.
inline Rational delta_cubic_family(const TernaryCubicFamily& p) {
  Rational a4 = a4_family(p);
  Rational a6 = a6_family(p);
  return a6 * a6 + 64 * a4 * a4 * a4;
}

/// J = 64 A4^3 / Delta.
inline Rational j_cubic_family(const TernaryCubicFamily& p) {
  Rational delta = delta_cubic_family(p);
  if (delta == 0) throw DivisionByZero("Delta");
  Rational a4 = a4_family(p);
  return 64 * a4 * a4 * a4 / delta;
}

/// K = A6^2 / (64 A4^3) + 1, for a cubic in the four-parameter family.
inline Rational k_cubic(const Poly& f) {
  Rational a4 = aronhold_a4(f);
  if (a4 == 0) throw DivisionByZero("A4");
  Rational a6 = a6_family(TernaryCubicFamily::from_poly(f));
  return a6 * a6 / (64 * a4 * a4 * a4) + 1;
}

namespace detail {
inline Poly dual_cubic(const Rational& cubes_coeff_scale, const TernaryCubicFamily& p, const Rational& mixed) {
  Poly g(3, Space::E);
  g.add_term({3, 0, 0}, cubes_coeff_scale * p.b * p.c);
  g.add_term({0, 3, 0}, cubes_coeff_scale * p.a * p.c);
  g.add_term({0, 0, 3}, cubes_coeff_scale * p.a * p.b);
  g.add_term({1, 1, 1}, mixed);
  return g;
}
}  // namespace detail

/// Pippian: -d (bc e1^3 + ac e2^3 + ab e3^3) - (abc - 4d^3) e1 e2 e3.
inline Poly pippian(const TernaryCubicFamily& p) {
  Rational abc = p.a * p.b * p.c;
  Rational d3 = p.d * p.d * p.d;
  return detail::dual_cubic(-p.d, p, -(abc - 4 * d3));
}

/// Quippian: (abc - 10d^3)(bc e1^3 + ac e2^3 + ab e3^3) - 6d^2 (5abc + 4d^3) e1 e2 e3.
inline Poly quippian(const TernaryCubicFamily& p) {
  Rational abc = p.a * p.b * p.c;
  Rational d3 = p.d * p.d * p.d;
  return detail::dual_cubic(abc - 10 * d3, p, -6 * p.d * p.d * (5 * abc + 4 * d3));
}

/// Delta * Phi(f) == -A6 P / 36 - A4 Q / 27.
inline bool verify_cubic_identity(const TernaryCubicFamily& p) {
  Rational delta = delta_cubic_family(p);
  if (delta == 0) throw DegenerateFamilyMember("family member has vanishing discriminant");
  auto phi = associated_form(p.to_poly());
  Poly lhs = phi.form * delta;
  Poly rhs = pippian(p) * (-a6_family(p) / Rational(36)) - quippian(p) * (a4_family(p) / Rational(27));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Binary quintics in Sylvester form a X^5 + b Y^5 + c Z^5, X + Y + Z = 0

struct SylvesterQuintic {
  Rational a, b, c;
  Poly X{2}, Y{2};  // linear z-space forms

  Poly Z() const { return -(X + Y); }

  /// det of the frame (X, Y) in the basis z1, z2.
  Rational frame_determinant() const {
    return X.coeff({1, 0}) * Y.coeff({0, 1}) - X.coeff({0, 1}) * Y.coeff({1, 0});
  }

  Poly to_poly() const { return X.pow(5) * a + Y.pow(5) * b + Z().pow(5) * c; }
};

struct QuinticCovariants {
  Rational C40, C80;
  Poly C51{2}, C22{2}, C33{2}, C44{2}, C15{2}, C26{2};
};

/// The closed-form covariants hold for frames of determinant +-1; other
/// frames are rejected.
inline QuinticCovariants quintic_covariants(const SylvesterQuintic& s) {
  for (const Poly* l : {&s.X, &s.Y})
    if (l->nvars() != 2 || l->space() != Space::Z || !l->is_homogeneous() || (!l->is_zero() && l->degree() != 1))
      throw DomainError("Sylvester frame: X and Y must be linear binary forms");
  Rational det = s.frame_determinant();
  if (det == 0) throw DegenerateSylvesterFrame("X and Y are linearly dependent");
  if (abs(det) != 1)
    throw DegenerateSylvesterFrame("frame determinant " + to_string(det) + " is not +-1");
  const Rational &a = s.a, &b = s.b, &c = s.c;
  const Poly &X = s.X, &Y = s.Y;
  const Poly Z = s.Z();
  const Rational abc = a * b * c;
  QuinticCovariants k;
  k.C40 = a * a * b * b + b * b * c * c + a * a * c * c - 2 * abc * (a + b + c);
  k.C80 = abc * abc * (a * b + a * c + b * c);
  k.C51 = (X * (b * c) + Y * (a * c) + Z * (a * b)) * abc;
  k.C22 = X * Y * (a * b) + X * Z * (a * c) + Y * Z * (b * c);
  k.C33 = X * Y * Z * abc;
  k.C44 = (X.pow(4) * a + Y.pow(4) * b + Z.pow(4) * c) * abc;
  k.C15 = s.to_poly();
  k.C26 = (X * Y).pow(3) * (a * b) + (Y * Z).pow(3) * (b * c) + (X * Z).pow(3) * (a * c);
  return k;
}

/// C40 C26 - C15 C51 + 9 C33^2 - C22^3 + 2 C22 C44, which vanishes identically.
inline Poly quintic_relation(const QuinticCovariants& k) {
  return k.C26 * k.C40 - k.C15 * k.C51 + k.C33 * k.C33 * Rational(9) - k.C22.pow(3) + k.C22 * k.C44 * Rational(2);
}

inline Rational delta_quintic(const QuinticCovariants& k) { return k.C40 * k.C40 - 128 * k.C80; }

/// hat(Delta Phi(f)) == C40 C26/20 - 3 C15 C51/50 + 27 C33^2/10 - C22^3/10.
inline bool verify_quintic_identity(const SylvesterQuintic& s) {
  auto k = quintic_covariants(s);
  Rational delta = delta_quintic(k);
  if (delta == 0) throw DegenerateQuintic("C40^2 - 128 C80 vanishes");
  auto phi = associated_form(k.C15);
  Poly lhs = hat(phi.form * delta);
  Poly rhs = k.C26 * (k.C40 / Rational(20)) - k.C15 * k.C51 * make_rational(3, 50) + k.C33 * k.C33 * make_rational(27, 10) -
             k.C22.pow(3) * make_rational(1, 10);
  return lhs == rhs;
}

}  // namespace assoform
