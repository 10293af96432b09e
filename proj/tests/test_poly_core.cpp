#include <gtest/gtest.h>

#include "assoform/action.hpp"
#include "assoform/matrix.hpp"
#include "assoform/poly.hpp"
#include "assoform/random.hpp"

using namespace assoform;

namespace {
Poly z(const char* text, int n) { return parse_poly(text, n, Space::Z); }
Poly e(const char* text, int n) { return parse_poly(text, n, Space::E); }
}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("5")), "5");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Parse, TermsAndCoefficients) {
  Poly p = z("z1^4 + 1/2*z1^2*z2^2", 2);
  EXPECT_EQ(p.size(), 2U);
  EXPECT_EQ(p.coeff({4, 0}), 1);
  EXPECT_EQ(p.coeff({2, 2}), make_rational(1, 2));
}

TEST(Parse, Zero) { EXPECT_TRUE(z("0", 2).is_zero()); }

TEST(Parse, HesseCubic) {
  Poly c = z("z1^3+z2^3+z3^3+6*z1*z2*z3", 3);
  EXPECT_EQ(c.size(), 4U);
  EXPECT_EQ(c.coeff({1, 1, 1}), 6);
  EXPECT_EQ(c.degree(), 3);
}

TEST(Parse, CombinesLikeTerms) {
  EXPECT_TRUE(z("z1*z2 - z2*z1", 2).is_zero());
  EXPECT_EQ(z("z1^2 + z1*z1", 2).coeff({2, 0}), 2);
}

TEST(Parse, Errors) {
  EXPECT_THROW(z("z3", 2), ParseError);
  EXPECT_THROW(z("e1", 2), ParseError);
  EXPECT_THROW(z("z1^", 2), ParseError);
  EXPECT_THROW(z("2*", 2), ParseError);
  EXPECT_THROW(z("", 2), ParseError);
  EXPECT_THROW(z("z1 z2", 2), ParseError);
  try {
    z("z1 + ?", 2);
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.position(), 5U);
  }
}

TEST(Parse, InfersVariablesAndSpace) {
  Poly p = parse_poly_infer("e1^2*e3");
  EXPECT_EQ(p.nvars(), 3);
  EXPECT_EQ(p.space(), Space::E);
}

TEST(Render, Format) {
  EXPECT_EQ(render_poly(z("z1^4 + 1/2*z1^2*z2^2 - z2^4", 2)), "z1^4 + 1/2*z1^2*z2^2 - z2^4");
  EXPECT_EQ(render_poly(Poly(2)), "0");
  EXPECT_EQ(render_poly(e("-3 + e1", 2)), "e1 - 3");
}

TEST(Render, RoundTripOnRandomPolynomials) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform(1, 4);
    Poly p(n, i % 2 ? Space::E : Space::Z);
    const int terms = rng.uniform(0, 6);
    for (int k = 0; k < terms; ++k) {
      Monomial m(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)] = rng.uniform(0, 4);
      p.add_term(m, rng.small_rational(9, 5));
    }
    EXPECT_EQ(parse_poly(render_poly(p), n, p.space()), p) << render_poly(p);
  }
}

TEST(MonomialBasis, OrderAndCounts) {
  auto b = monomial_basis(2, 2);
  ASSERT_EQ(b.size(), 3U);
  EXPECT_EQ(b[0], (Monomial{2, 0}));
  EXPECT_EQ(b[1], (Monomial{1, 1}));
  EXPECT_EQ(b[2], (Monomial{0, 2}));
  EXPECT_EQ(monomial_basis(3, 3).size(), 10U);
  EXPECT_EQ(monomial_basis(4, 4).size(), 35U);
  EXPECT_TRUE(monomial_basis(2, -1).empty());
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 6; ++k)
      EXPECT_EQ(Integer(static_cast<unsigned long>(monomial_basis(n, k).size())),
                binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k)));
}

TEST(MonomialBasis, GrlexIsStrictlyDescending) {
  auto b = monomial_basis(3, 4);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_TRUE(GrlexGreater{}(b[i - 1], b[i]));
}

TEST(Diamond, Examples) {
  EXPECT_EQ(diamond(z("z1", 2), e("e1^2", 2)), e("2*e1", 2));
  EXPECT_EQ(diamond(z("z1*z2", 2), e("e1*e2", 2)), e("1", 2));
  EXPECT_TRUE(diamond(z("z1^3", 2), e("e2^3", 2)).is_zero());
  EXPECT_THROW(diamond(z("z1^3", 2), e("e1^2", 2)), DomainError);
}

TEST(Diamond, GramMatrixIsDiagonalWithFactorials) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k) {
      auto basis = monomial_basis(n, k);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          Poly v = diamond(Poly::term(basis[i], 1), Poly::term(basis[j], 1, Space::E));
          Rational expected = i == j ? Rational(basis[i].factorial_product()) : Rational(0);
          EXPECT_EQ(v.coeff(Monomial(static_cast<std::size_t>(n))), expected);
        }
    }
}

TEST(Matrix, RankNullspaceDeterminantInverse) {
  MatrixQ a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(a), 2U);
  auto ns = nullspace(a);
  ASSERT_EQ(ns.size(), 1U);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += a(r, c) * ns[0][c];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(determinant(a), 0);
  EXPECT_THROW(inverse(a), SingularMatrix);
  MatrixQ b{{make_rational(1, 2), 3}, {-1, 4}};
  EXPECT_EQ(determinant(b), 5);
  EXPECT_EQ(b * inverse(b), MatrixQ::identity(2));
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform(1, 4);
    MatrixQ m = random_invertible(rng, n);
    std::vector<std::vector<Poly>> entries(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) entries[i].push_back(Poly::constant(1, Space::Z, m(i, j)));
    EXPECT_EQ(Poly::constant(1, Space::Z, determinant(m)), determinant(entries));
  }
}

TEST(Matrix, SolveStatuses) {
  MatrixQ a{{1, 1}, {1, -1}};
  std::vector<Rational> b{3, 1};
  auto s = solve(a, b);
  ASSERT_EQ(s.status, LinearSolution::Status::Unique);
  EXPECT_EQ(s.x[0], 2);
  EXPECT_EQ(s.x[1], 1);
  MatrixQ c{{1, 1}, {2, 2}};
  std::vector<Rational> bad{1, 3};
  EXPECT_EQ(solve(c, bad).status, LinearSolution::Status::Inconsistent);
  std::vector<Rational> ok{1, 2};
  EXPECT_EQ(solve(c, ok).status, LinearSolution::Status::Underdetermined);
}

TEST(Act, IdentityAndDiagonal) {
  Poly f = z("z1^3 - 2*z1*z2^2 + 5*z2^3", 2);
  EXPECT_EQ(act(MatrixQ::identity(2), f, Action::OnForms), f);
  EXPECT_EQ(act(MatrixQ::identity(2), f.retag(Space::E), Action::OnDualForms), f.retag(Space::E));
  MatrixQ c{{2, 0}, {0, 1}};
  EXPECT_EQ(act(c, z("z1^2", 2), Action::OnForms), z("1/4*z1^2", 2));
}

TEST(Act, GroupLawAndMultiplicativity) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    MatrixQ c = random_invertible(rng, n);
    Poly f = random_form(rng, n, 3);
    Poly g = random_form(rng, n, 2);
    for (Action kind : {Action::OnForms, Action::OnDualForms}) {
      Space sp = kind == Action::OnForms ? Space::Z : Space::E;
      Poly fs = f.retag(sp), gs = g.retag(sp);
      EXPECT_EQ(act(c, act(inverse(c), fs, kind), kind), fs);
      EXPECT_EQ(act(c, fs * gs, kind), act(c, fs, kind) * act(c, gs, kind));
    }
    MatrixQ d = random_invertible(rng, n);
    EXPECT_EQ(act(c * d, f, Action::OnForms), act(c, act(d, f, Action::OnForms), Action::OnForms));
  }
}

TEST(Hessian, Examples) {
  for (int d = 3; d <= 5; ++d) {
    Poly f(2);
    f.add_term({d, 0}, 3);
    f.add_term({0, d}, -2);
    Poly expected = Poly::term({d - 2, d - 2}, Rational(-6 * d * d * (d - 1) * (d - 1)));
    EXPECT_EQ(hessian(f), expected);
  }
  for (int t : {-3, 0, 1, 7}) {
    Poly q = z("z1^4 + z2^4", 2);
    q.add_term({2, 2}, t);
    Poly expected(2);
    expected.add_term({4, 0}, 24 * t);
    expected.add_term({0, 4}, 24 * t);
    expected.add_term({2, 2}, 144 - 12 * t * t);
    EXPECT_EQ(hessian(q), expected);
  }
  EXPECT_EQ(hessian(z("z1*z2*z3", 3)), z("2*z1*z2*z3", 3));
}

TEST(Hessian, Equivariance) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    MatrixQ c = random_invertible(rng, n);
    Poly f = random_form(rng, n, 3 + trial % 3);
    Rational det = determinant(c);
    EXPECT_EQ(hessian(act(c, f, Action::OnForms)), act(c, hessian(f), Action::OnForms) * (1 / (det * det)));
  }
}

TEST(Jacobian, Examples) {
  for (int d = 2; d <= 5; ++d) {
    Poly a(2), b(2);
    a.add_term({d - 1, 0}, 1);
    b.add_term({0, d - 1}, 1);
    EXPECT_EQ(jacobian(PolyTuple({a, b})), Poly::term({d - 2, d - 2}, Rational((d - 1) * (d - 1))));
  }
  EXPECT_EQ(jacobian(PolyTuple({z("z2", 2), z("z1", 2)})), Poly::constant(2, Space::Z, -1));
}

TEST(PolyTuple, Validation) {
  EXPECT_THROW(PolyTuple({z("z1^2", 2), z("z2^3", 2)}), DomainError);
  EXPECT_THROW(PolyTuple({z("z1^2", 2)}), DomainError);
  EXPECT_THROW(PolyTuple({e("e1^2", 2), e("e2^2", 2)}), DomainError);
  PolyTuple t({z("z1^2", 2), z("z2^2", 2)});
  EXPECT_EQ(t.d(), 3);
  EXPECT_EQ(t.socle_degree(), 2);
}
