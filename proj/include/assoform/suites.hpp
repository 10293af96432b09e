#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "assoform/apolarity.hpp"
#include "assoform/duality.hpp"
#include "assoform/invariants.hpp"
#include "assoform/milnor.hpp"
#include "assoform/random.hpp"

namespace assoform {

enum class Suite { Quartic, Quintic, Cubic, Involution, Equivariance, Apolarity, Hilbert };

inline constexpr Suite kAllSuites[] = {Suite::Quartic,      Suite::Quintic,   Suite::Cubic,  Suite::Involution,
                                       Suite::Equivariance, Suite::Apolarity, Suite::Hilbert};

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::Quartic: return "quartic";
    case Suite::Quintic: return "quintic";
    case Suite::Cubic: return "cubic";
    case Suite::Involution: return "involution";
    case Suite::Equivariance: return "equivariance";
    case Suite::Apolarity: return "apolarity";
    case Suite::Hilbert: return "hilbert";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

struct CaseResult {
  std::size_t index = 0;
  bool pass = false;
  std::string input;   // the random input, verbatim
  std::string detail;  // which check failed, or the exception text
  int rejections = 0;
};

struct SuiteReport {
  Suite suite = Suite::Quartic;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
  }
  int rejections() const {
    int total = 0;
    for (const auto& c : cases) total += c.rejections;
    return total;
  }
};

/// Coefficients of (1 + t + ... + t^{d-2})^n, computed by repeated convolution.
inline std::vector<std::size_t> complete_intersection_hilbert(int n, int d) {
  std::vector<std::size_t> h{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> next(h.size() + static_cast<std::size_t>(d - 2), 0);
    for (std::size_t a = 0; a < h.size(); ++a)
      for (int b = 0; b <= d - 2; ++b) next[a + static_cast<std::size_t>(b)] += h[a];
    h = std::move(next);
  }
  return h;
}

inline std::string render_tuple(const PolyTuple& t) {
  std::string s = "(";
  for (int i = 0; i < t.nvars(); ++i) {
    if (i) s += ", ";
    s += render_poly(t[i]);
  }
  return s + ")";
}

inline std::string render_matrix(const MatrixQ& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? "; " : "";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + to_string(m(r, c));
  }
  return s + "]";
}

namespace detail {

struct Check {
  CaseResult& out;
  /// Records the first failing check.
  void operator()(bool ok, const char* what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

inline void quartic_case(Rng& rng, CaseResult& r) {
  auto draw = random_nondegenerate_form(rng, 2, 4);
  r.rejections = draw.rejections;
  r.input = render_poly(draw.value);
  Check{r}(verify_quartic_identity(draw.value), "quartic contravariant identity");
}

inline void quintic_case(Rng& rng, CaseResult& r) {
  auto s = random_sylvester_quintic(rng);
  r.input = "a=" + to_string(s.a) + " b=" + to_string(s.b) + " c=" + to_string(s.c) + " X=" + render_poly(s.X) +
            " Y=" + render_poly(s.Y);
  auto k = quintic_covariants(s);
  Check check{r};
  check(quintic_relation(k).is_zero(), "covariant relation");
  check(k.C26 * Rational(400) == hessian(k.C15), "C26 = Hess/400");
  check(verify_quintic_identity(s), "quintic decomposition");
}

inline void cubic_case(Rng& rng, CaseResult& r) {
  auto p = random_cubic_family_member(rng);
  r.input = render_poly(p.to_poly());
  Check check{r};
  check(aronhold_a4(p.to_poly()) == a4_family(p), "A4 general formula on the family");
  check(verify_cubic_identity(p), "Pippian/Quippian identity");
}

inline void involution_case(Rng& rng, CaseResult& r, std::size_t index) {
  Check check{r};
  if (index % 3 == 2) {
    FamilyPoint p{index % 2 ? Family::TernaryCubic : Family::BinaryQuartic, rng.small_rational(12, 3)};
    while (!is_admissible(p)) p.t = rng.small_rational(12, 3);
    r.input = render_poly(family_form(p));
    auto status = involution_check(family_form(p));
    auto expected = is_exceptional(p) ? InvolutionStatus::ImageDegenerate : InvolutionStatus::Fixed;
    check(status == expected, "family member has the wrong involution status");
    return;
  }
  const int n = index % 3 == 0 ? 2 : 3;
  auto draw = random_nondegenerate_form(rng, n, n == 2 ? 4 : 3);
  r.rejections = draw.rejections;
  r.input = render_poly(draw.value);
  check(involution_check(draw.value) != InvolutionStatus::NotFixed, "Phi^2 leaves the line of f");
}

inline void equivariance_case(Rng& rng, CaseResult& r, std::size_t index) {
  static constexpr int kShapes[][2] = {{2, 3}, {2, 4}, {3, 3}, {3, 4}};
  const std::size_t shape = (index / 2) % 4;
  const int n = kShapes[shape][0], d = kShapes[shape][1];
  auto draw = random_nondegenerate_form(rng, n, d);
  r.rejections = draw.rejections;
  MatrixQ c = random_invertible(rng, n);
  r.input = "f=" + render_poly(draw.value) + " C=" + render_matrix(c);
  Check check{r};
  const Rational det = determinant(c);
  Poly lhs = associated_form(act(c, draw.value, Action::OnForms)).form;
  Poly rhs = act(c, associated_form(draw.value).form, Action::OnDualForms) * (det * det);
  check(lhs == rhs, "Phi(Cf) = det(C)^2 C Phi(f)");
  if (index % 2 != 0) return;

  auto tuple = random_finite_colength_tuple(rng, n, d);
  r.rejections += tuple.rejections;
  MatrixQ c1 = random_invertible(rng, n);
  MatrixQ c2 = random_invertible(rng, n);
  r.input += " tuple=" + render_tuple(tuple.value) + " C1=" + render_matrix(c1) + " C2=" + render_matrix(c2);
  Poly tl = associated_form_tuple(act_on_tuple(c1, c2, tuple.value)).form;
  Poly tr = act(c1, associated_form_tuple(tuple.value).form, Action::OnDualForms) * (determinant(c1) * determinant(c2));
  check(tl == tr, "Psi((C1,C2)f) = det(C1C2) C1 Psi(f)");
}

inline void apolarity_case(Rng& rng, CaseResult& r, std::size_t index) {
  static constexpr int kShapes[][2] = {{2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}};
  const int n = kShapes[(index / 2) % 5][0], d = kShapes[(index / 2) % 5][1];
  Check check{r};
  std::optional<PolyTuple> tuple;
  Poly F(n, Space::E);
  if (index % 2 == 0) {
    auto draw = random_nondegenerate_form(rng, n, d);
    r.rejections = draw.rejections;
    r.input = "f=" + render_poly(draw.value);
    tuple = gradient(draw.value);
    F = associated_form(draw.value).form;
  } else {
    auto draw = random_finite_colength_tuple(rng, n, d);
    r.rejections = draw.rejections;
    r.input = "tuple=" + render_tuple(draw.value);
    tuple = draw.value;
    F = associated_form_tuple(draw.value).form;
  }
  check(inverse_system_check(*tuple, F), "f_j <> F = 0");
  check(in_U(F, d), "F lies in the image of Psi");
  auto at = apolar_tuple(F, d);
  check(at.applicable(), "F^perp in degree d-1 is n-dimensional");
  if (!at.applicable()) return;
  check(same_span(at.tuple->forms(), tuple->forms(), n, d - 1), "chi(Psi(f)) spans the input tuple");
  check(is_proportional(associated_form_tuple(*at.tuple).form, F), "Psi(chi(F)) is proportional to F");
  const int top = n * (d - 2);
  for (int k = d - 1; k <= top; ++k)
    check(same_span(ideal_piece_spanning_set(*tuple, k), annihilator_graded(F, k).kernel_basis, n, k),
          "ideal and annihilator agree below the socle degree");
}

inline void hilbert_case(Rng& rng, CaseResult& r, std::size_t index) {
  static constexpr int kShapes[][2] = {{2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}, {4, 3}};
  const int n = kShapes[index % 6][0], d = kShapes[index % 6][1];
  auto draw = random_finite_colength_tuple(rng, n, d);
  r.rejections = draw.rejections;
  r.input = render_tuple(draw.value);
  auto h = hilbert_function(draw.value);
  Check check{r};
  check(h == complete_intersection_hilbert(n, d), "Hilbert function of a complete intersection");
  check(std::equal(h.begin(), h.end(), h.rbegin()), "Hilbert function is symmetric");
  check(h.back() == 1, "socle is one-dimensional");
}

}  // namespace detail

/// One case: the generator is seeded from (seed, suite, index) alone, so cases
/// are independent of scheduling.
inline CaseResult run_case(Suite suite, std::uint64_t seed, std::size_t index) {
  Rng rng(seed, (static_cast<std::uint64_t>(suite) << 32U) | index);
  CaseResult r;
  r.index = index;
  r.pass = true;
  try {
    switch (suite) {
      case Suite::Quartic: detail::quartic_case(rng, r); break;
      case Suite::Quintic: detail::quintic_case(rng, r); break;
      case Suite::Cubic: detail::cubic_case(rng, r); break;
      case Suite::Involution: detail::involution_case(rng, r, index); break;
      case Suite::Equivariance: detail::equivariance_case(rng, r, index); break;
      case Suite::Apolarity: detail::apolarity_case(rng, r, index); break;
      case Suite::Hilbert: detail::hilbert_case(rng, r, index); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

/// Worker count: hardware concurrency, capped by ASSOFORM_THREADS when set.
inline unsigned worker_count(std::size_t cases) {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ASSOFORM_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(cases, 1)));
}

/// Runs `count` cases in parallel; results come back sorted by index.
/// `progress`, if given, is called once per finished case (serialized).
template <class Progress = std::nullptr_t>
SuiteReport run_suite(Suite suite, std::uint64_t seed, std::size_t count, Progress progress = nullptr) {
  SuiteReport report{suite, seed, std::vector<CaseResult>(count)};
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      report.cases[i] = run_case(suite, seed, i);
      if constexpr (!std::is_same_v<Progress, std::nullptr_t>) {
        std::lock_guard lock(progress_mutex);
        progress(report.cases[i]);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < worker_count(count); ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return report;
}

}  // namespace assoform
