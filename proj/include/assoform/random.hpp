#pragma once

#include <cstdint>
#include <random>

#include "assoform/action.hpp"
#include "assoform/invariants.hpp"
#include "assoform/matrix.hpp"
#include "assoform/milnor.hpp"
#include "assoform/poly.hpp"

namespace assoform {

/// Seeded generator with platform-independent draws. std::mt19937_64 and
/// std::seed_seq are fully specified; the standard distributions are not, so
/// integers are reduced by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
    engine_.seed(seq);
  }

  /// Uniform on [lo, hi]; the modulo bias is negligible for the tiny ranges used.
  int uniform(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  /// Uniform on {-5, ..., 5} \ {0}.
  int nonzero_small() {
    int v = uniform(-5, 4);
    return v >= 0 ? v + 1 : v;
  }

  /// num/den with num in [-bound, bound] and den in [1, max_den].
  Rational small_rational(int bound = 5, int max_den = 3) {
    return make_rational(uniform(-bound, bound), uniform(1, max_den));
  }

  Rational nonzero_rational(int bound = 5, int max_den = 3) {
    for (;;) {
      Rational q = small_rational(bound, max_den);
      if (q != 0) return q;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Dense form with every coefficient drawn from {-5..5} \ {0}.
inline Poly random_form(Rng& rng, int n, int degree, Space space = Space::Z) {
  Poly f(n, space);
  for (const auto& m : monomial_basis(n, degree)) f.add_term(m, rng.nonzero_small());
  return f;
}

/// Draw with the number of rejected candidates.
template <class T>
struct Draw {
  T value;
  int rejections = 0;
};

inline Draw<Poly> random_nondegenerate_form(Rng& rng, int n, int d) {
  for (int rejected = 0;; ++rejected) {
    Poly f = random_form(rng, n, d);
    if (is_nondegenerate(f)) return {std::move(f), rejected};
  }
}

inline Draw<PolyTuple> random_finite_colength_tuple(Rng& rng, int n, int d) {
  for (int rejected = 0;; ++rejected) {
    std::vector<Poly> forms;
    for (int i = 0; i < n; ++i) forms.push_back(random_form(rng, n, d - 1));
    PolyTuple t(std::move(forms), d - 1);
    if (is_finite_colength(t)) return {std::move(t), rejected};
  }
}

/// Invertible matrix with small rational entries.
inline MatrixQ random_invertible(Rng& rng, int n) {
  for (;;) {
    MatrixQ c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = rng.small_rational(3, 2);
    if (determinant(c) != 0) return c;
  }
}

/// Determinant-one matrix: a product of random elementary shears and a signed
/// permutation with a compensating diagonal.
inline MatrixQ random_special_linear(Rng& rng, int n) {
  const auto size = static_cast<std::size_t>(n);
  MatrixQ c = MatrixQ::identity(size);
  for (int step = 0; step < 2 * n; ++step) {
    auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    MatrixQ e = MatrixQ::identity(size);
    e(i, j) = rng.small_rational(2, 2);
    c = c * e;
  }
  Rational s = rng.nonzero_rational(3, 2);
  MatrixQ diag = MatrixQ::identity(size);
  diag(0, 0) = s;
  diag(size - 1, size - 1) = 1 / s;
  return c * diag;
}

inline TernaryCubicFamily random_cubic_family_member(Rng& rng) {
  for (;;) {
    TernaryCubicFamily p{rng.nonzero_small(), rng.nonzero_small(), rng.nonzero_small(), rng.small_rational(5, 3)};
    if (delta_cubic_family(p) != 0) return p;
  }
}

/// Sylvester quintic with a determinant-one frame of small rational entries.
inline SylvesterQuintic random_sylvester_quintic(Rng& rng) {
  for (;;) {
    SylvesterQuintic s;
    s.a = rng.nonzero_small();
    s.b = rng.nonzero_small();
    s.c = rng.nonzero_small();
    s.X = Poly(2);
    s.X.add_term({1, 0}, rng.small_rational(3, 2));
    s.X.add_term({0, 1}, rng.small_rational(3, 2));
    s.Y = Poly(2);
    s.Y.add_term({1, 0}, rng.small_rational(3, 2));
    s.Y.add_term({0, 1}, rng.small_rational(3, 2));
    Rational det = s.frame_determinant();
    if (det == 0) continue;
    s.Y *= 1 / det;
    if (delta_quintic(quintic_covariants(s)) != 0) return s;
  }
}

}  // namespace assoform
