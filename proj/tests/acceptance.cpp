// Acceptance suite: one PASS/FAIL line per criterion. A criterion passes when
// every exact check holds and it finishes inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "assoform/assoform.hpp"

using namespace assoform;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

std::vector<Rational> sample_parameters(Family family, std::size_t count, std::uint64_t stream) {
  Rng rng(kSeed, stream);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational t = rng.small_rational(15, 4);
    if (!is_admissible({family, t}) || !seen.insert(t).second) continue;
    out.push_back(t);
  }
  return out;
}

std::string suite_failure(const SuiteReport& r) {
  for (const auto& c : r.cases)
    if (!c.pass) return std::string(to_string(r.suite)) + " case " + std::to_string(c.index) + " (" + c.detail + "): " + c.input;
  return {};
}

std::string example_one() {
  const int shapes[][2] = {{2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}};
  Rng rng(kSeed, 1);
  for (const auto& s : shapes) {
    const int n = s[0], d = s[1];
    for (int draw = 0; draw < 3; ++draw) {
      Poly f(n);
      Rational prod = 1;
      for (int i = 0; i < n; ++i) {
        Rational a = rng.nonzero_rational(9, 5);
        Monomial m(static_cast<std::size_t>(n));
        m[static_cast<std::size_t>(i)] = d;
        f.add_term(m, a);
        prod *= a;
      }
      Rational coeff = Rational(factorial(static_cast<unsigned>(n * (d - 2)))) /
                       power(Rational(factorial(static_cast<unsigned>(d))), static_cast<unsigned>(n)) / prod;
      Poly expected = Poly::term(Monomial(std::vector<int>(static_cast<std::size_t>(n), d - 2)), coeff, Space::E);
      if (associated_form(f).form != expected) return "mismatch for " + render_poly(f);
    }
  }
  return {};
}

Poly quartic_closed_form(const Rational& t) {
  Poly F(2, Space::E);
  F.add_term({4, 0}, t);
  F.add_term({2, 2}, -12);
  F.add_term({0, 4}, t);
  return F * (1 / (72 * (t * t - 4)));
}

Poly cubic_closed_form(const Rational& t) {
  Poly F(3, Space::E);
  F.add_term({3, 0, 0}, t);
  F.add_term({0, 3, 0}, t);
  F.add_term({0, 0, 3}, t);
  F.add_term({1, 1, 1}, -18);
  return F * (-1 / (24 * (t * t * t + 27)));
}

std::string canonical_families() {
  for (const auto& t : sample_parameters(Family::BinaryQuartic, 25, 2))
    if (associated_form(family_form({Family::BinaryQuartic, t})).form != quartic_closed_form(t)) return "q_t, t = " + to_string(t);
  for (const auto& t : sample_parameters(Family::TernaryCubic, 25, 3))
    if (associated_form(family_form({Family::TernaryCubic, t})).form != cubic_closed_form(t)) return "c_t, t = " + to_string(t);
  return {};
}

Rational j_quartic_closed(const Rational& t) { return power(t * t + 12, 3) / (108 * power(t * t - 4, 2)); }

Rational j_cubic_closed(const Rational& t) {
  Rational t3 = t * t * t;
  return -t3 * power(t3 - 216, 3) / (1728 * power(t3 + 27, 3));
}

std::string j_formulas() {
  for (const auto& t : sample_parameters(Family::BinaryQuartic, 25, 4))
    if (j_invariant({Family::BinaryQuartic, t}) != j_quartic_closed(t)) return "J(q_t), t = " + to_string(t);
  for (const auto& t : sample_parameters(Family::TernaryCubic, 25, 5))
    if (j_invariant({Family::TernaryCubic, t}) != j_cubic_closed(t)) return "J(c_t), t = " + to_string(t);
  if (j_invariant({Family::BinaryQuartic, 0}) != 1) return "J(q_0) != 1";
  if (j_invariant({Family::TernaryCubic, 0}) != 0) return "J(c_0) != 0";
  return {};
}

std::string k_equals_j() {
  for (const auto& t : sample_parameters(Family::BinaryQuartic, 25, 2)) {
    Poly image = associated_form(family_form({Family::BinaryQuartic, t})).form;
    if (k_quartic(image) != j_invariant({Family::BinaryQuartic, t})) return "K(Phi(q_t)), t = " + to_string(t);
  }
  for (const auto& t : sample_parameters(Family::TernaryCubic, 25, 3)) {
    Poly image = associated_form(family_form({Family::TernaryCubic, t})).form;
    if (k_cubic(image) != j_invariant({Family::TernaryCubic, t})) return "K(Phi(c_t)), t = " + to_string(t);
  }
  return {};
}

std::string contravariant_identities() {
  for (auto [suite, count] : {std::pair{Suite::Quartic, 50}, {Suite::Cubic, 50}, {Suite::Quintic, 20}}) {
    auto failure = suite_failure(run_suite(suite, kSeed, static_cast<std::size_t>(count)));
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string equivariance() {
  // 100 Phi cases; every even case also checks Psi, giving 50.
  return suite_failure(run_suite(Suite::Equivariance, kSeed, 100));
}

std::string inverse_system() { return suite_failure(run_suite(Suite::Apolarity, kSeed, 50)); }

std::string catalecticant_criterion() {
  Rng rng(kSeed, 8);
  int singular = 0, regular = 0;
  for (int i = 0; i < 50; ++i) {
    const int d = 4 + i % 3;
    const int N = 2 * (d - 2);
    Poly F(2, Space::E);
    if (i % 2 == 0) {
      F = random_form(rng, 2, N, Space::E);
    } else {
      // Fewer than d-1 powers of linear forms: a singular catalecticant.
      const int terms = rng.uniform(1, d - 2);
      for (int k = 0; k < terms; ++k) {
        Poly l(2, Space::E);
        l.add_term({1, 0}, rng.small_rational(4, 2));
        l.add_term({0, 1}, rng.small_rational(4, 2));
        F += l.pow(static_cast<unsigned>(N)) * Rational(rng.nonzero_small());
      }
      if (F.is_zero()) F.add_term({N, 0}, 1);
    }
    const bool cat_nonzero = catalecticant(F) != 0;
    (cat_nonzero ? regular : singular)++;
    if (in_U(F, d) != cat_nonzero) return "in_U disagrees with Cat for " + render_poly(F);
  }
  if (singular == 0 || regular == 0) return "sample did not exercise both sides";
  return {};
}

std::string involution_and_duality() {
  for (int num = -36; num <= 36; ++num)
    for (int den = 1; den <= 3; ++den) {
      Rational t = make_rational(num, den);
      for (Family family : {Family::BinaryQuartic, Family::TernaryCubic}) {
        FamilyPoint p{family, t};
        if (!is_admissible(p)) continue;
        const bool expected_exceptional =
            family == Family::BinaryQuartic ? (t == 0 || t == 6 || t == -6) : (t == 0 || t * t * t == 216);
        if (is_exceptional(p) != expected_exceptional) return "exceptional set, t = " + to_string(t);
        auto status = involution_check(family_form(p));
        auto expected = expected_exceptional ? InvolutionStatus::ImageDegenerate : InvolutionStatus::Fixed;
        if (status != expected)
          return std::string(to_string(family)) + " t = " + to_string(t) + " gave " + to_string(status);
      }
    }
  const auto inf = ProjectivePoint::infinity();
  if (!mobius(Family::BinaryQuartic, ProjectivePoint::finite(1)).is_infinite()) return "quartic phi(1) != inf";
  if (mobius(Family::BinaryQuartic, inf) != ProjectivePoint::finite(1)) return "quartic phi(inf) != 1";
  if (!mobius(Family::TernaryCubic, ProjectivePoint::finite(0)).is_infinite()) return "cubic phi(0) != inf";
  if (mobius(Family::TernaryCubic, inf) != ProjectivePoint::finite(0)) return "cubic phi(inf) != 0";
  std::vector<ProjectivePoint> points{inf};
  for (int num = -50; num <= 49; ++num) points.push_back(ProjectivePoint::finite(make_rational(num, 7)));
  for (Family family : {Family::BinaryQuartic, Family::TernaryCubic})
    for (const auto& p : points)
      if (mobius(family, mobius(family, p)) != p) return "Mobius map not an involution at " + to_string(p);
  return {};
}

std::string hilbert() { return suite_failure(run_suite(Suite::Hilbert, kSeed, 20)); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "power sums have the diagonal associated form", 5, example_one},
      {2, "closed forms of Phi(q_t) and Phi(c_t)", 5, canonical_families},
      {3, "J(q_t) and J(c_t) closed forms", 2, j_formulas},
      {4, "K(Phi(f_t)) = J(f_t) for both families", 2, k_equals_j},
      {5, "quartic, cubic and quintic contravariant identities", 60, contravariant_identities},
      {6, "equivariance of Phi (100) and Psi (50)", 60, equivariance},
      {7, "inverse systems and chi/Psi round trips (50)", 60, inverse_system},
      {8, "binary forms: in_U iff Cat != 0 (50)", 30, catalecticant_criterion},
      {9, "involution, exceptional sets and Mobius maps", 10, involution_and_duality},
      {10, "Hilbert functions of complete intersections (20)", 30, hilbert},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds >= c.budget_seconds)
      failure = "over budget (" + std::to_string(seconds) + " s)";
    const bool pass = failure.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %2d: %s [%.2f s, budget %.0f s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_seconds, pass ? "" : " : ", failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
