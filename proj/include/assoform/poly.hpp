#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assoform/errors.hpp"
#include "assoform/monomial.hpp"
#include "assoform/rational.hpp"

namespace assoform {

/// Which copy of the polynomial ring a Poly lives in: source variables z1..zn
/// or dual variables e1..en.
enum class Space { Z, E };

inline char variable_letter(Space s) { return s == Space::Z ? 'z' : 'e'; }

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order with no zero coefficients stored. The
/// space tag only guards against mixing z- and e-polynomials; `retag` moves a
/// polynomial between the two without touching its terms.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(int nvars, Space space = Space::Z) : nvars_(nvars), space_(space) {
    if (nvars < 1) throw DomainError("Poly: nvars must be positive");
  }

  static Poly constant(int nvars, Space space, const Rational& c) {
    Poly p(nvars, space);
    p.add_term(Monomial(static_cast<std::size_t>(nvars)), c);
    return p;
  }

  /// The variable with 0-based index `var`.
  static Poly variable(int nvars, int var, Space space = Space::Z) {
    Monomial m(static_cast<std::size_t>(nvars));
    m[static_cast<std::size_t>(var)] = 1;
    return term(m, 1, space);
  }

  static Poly term(const Monomial& m, const Rational& c, Space space = Space::Z) {
    Poly p(static_cast<int>(m.nvars()), space);
    p.add_term(m, c);
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  Space space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.nvars()) != nvars_) throw DomainError("monomial length differs from nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// True when every term has the same degree; the zero polynomial counts.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Highest term degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  /// Degree of a nonzero homogeneous polynomial.
  int degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    if (!is_homogeneous()) throw DomainError("polynomial is not homogeneous");
    return total_degree();
  }

  Poly derivative(int var) const {
    Poly r(nvars_, space_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Monomial dm = m;
      dm[v] -= 1;
      r.add_term(dm, c * m[v]);
    }
    return r;
  }

  Poly retag(Space space) const {
    Poly r(*this);
    r.space_ = space;
    return r;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.nvars_, a.space_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Poly pow(unsigned k) const {
    Poly r = constant(nvars_, space_, 1);
    Poly base = *this;
    while (k > 0) {
      if (k & 1U) r = r * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return r;
  }

  /// Substitutes variable j by images[j]. The result lives in the images' ring.
  Poly substitute(std::span<const Poly> images) const {
    if (static_cast<int>(images.size()) != nvars_) throw DomainError("substitute: need one image per variable");
    const Poly& first = images.front();
    Poly r(first.nvars(), first.space());
    // powers[j][k] = images[j]^k, filled lazily.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power_of = [&](std::size_t j, int k) -> const Poly& {
      auto& pj = powers[j];
      if (pj.empty()) pj.push_back(constant(first.nvars(), first.space(), 1));
      while (static_cast<int>(pj.size()) <= k) pj.push_back(pj.back() * images[j]);
      return pj[static_cast<std::size_t>(k)];
    };
    for (const auto& [m, c] : terms_) {
      Poly t = constant(first.nvars(), first.space(), c);
      for (std::size_t j = 0; j < images.size(); ++j)
        if (m[j] > 0) t = t * power_of(j, m[j]);
      r += t;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Poly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomials have different variable counts");
    if (o.space_ != space_) throw DomainError("cannot mix z- and e-polynomials");
  }

  int nvars_;
  Space space_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Text format
//
//   poly    = term { ("+" | "-") term } | "0"
//   term    = [sign] ( coeff [ "*" varpart ] | varpart )
//   coeff   = int | int "/" posint
//   varpart = var { "*" var },  var = ("z" | "e") idx [ "^" exp ]
//
// Whitespace is ignored everywhere.

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars, std::optional<Space> space)
      : nvars_(nvars), space_(space) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    end_position_ = text.size();
  }

  /// Parses the whole input. With nvars <= 0 the variable count is taken from
  /// the largest index seen.
  Poly parse() {
    if (chars_.empty()) fail("empty polynomial");
    struct RawTerm {
      std::vector<std::pair<int, int>> vars;  // (0-based index, exponent)
      Rational coeff;
    };
    std::vector<RawTerm> raw;
    bool first = true;
    while (pos_ < chars_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm t;
      t.coeff = sign;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= parse_coeff();
        if (peek() == '*') {
          ++pos_;
          parse_varpart(t.vars);
        }
      } else {
        parse_varpart(t.vars);
      }
      raw.push_back(std::move(t));
    }
    int n = nvars_;
    if (n <= 0) {
      n = 1;
      for (const auto& t : raw)
        for (auto [v, e] : t.vars) n = std::max(n, v + 1);
    }
    Poly p(n, space_.value_or(Space::Z));
    for (const auto& t : raw) {
      Monomial m(static_cast<std::size_t>(n));
      for (auto [v, e] : t.vars) m[static_cast<std::size_t>(v)] += e;
      p.add_term(m, t.coeff);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  std::size_t where() const { return pos_ < positions_.size() ? positions_[pos_] : end_position_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, where()); }

  Integer parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(chars_[pos_++]);
    return Integer(digits);
  }

  Rational parse_coeff() {
    Integer num = parse_uint();
    if (peek() != '/') return Rational(num);
    ++pos_;
    Integer den = parse_uint();
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  void parse_varpart(std::vector<std::pair<int, int>>& vars) {
    for (;;) {
      char letter = peek();
      if (letter != 'z' && letter != 'e') fail("expected variable 'z' or 'e'");
      Space s = letter == 'z' ? Space::Z : Space::E;
      if (space_ && *space_ != s) fail(std::string("variable '") + letter + "' does not match the declared space");
      space_ = s;
      ++pos_;
      std::size_t idx_at = where();
      Integer idx = parse_uint();
      if (idx < 1 || (nvars_ > 0 && idx > nvars_))
        throw ParseError("variable index " + idx.get_str() + " out of range", idx_at);
      if (!idx.fits_sint_p()) throw ParseError("variable index too large", idx_at);
      int exponent = 1;
      if (peek() == '^') {
        ++pos_;
        Integer e = parse_uint();
        if (!e.fits_sint_p()) fail("exponent too large");
        exponent = static_cast<int>(e.get_si());
      }
      vars.emplace_back(static_cast<int>(idx.get_si()) - 1, exponent);
      if (peek() != '*') return;
      ++pos_;
    }
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
  int nvars_;
  std::optional<Space> space_;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, int nvars, Space space) {
  if (nvars < 1) throw DomainError("parse_poly: nvars must be positive");
  return detail::PolyParser(text, nvars, space).parse();
}

/// Parses with the variable count and space inferred from the text (largest
/// index seen, letter used; z-space when no variable occurs).
inline Poly parse_poly_infer(std::string_view text) { return detail::PolyParser(text, 0, std::nullopt).parse(); }

inline std::string render_monomial(const Monomial& m, Space space) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_letter(space);
    out += std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

inline std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars = render_monomial(m, p.space());
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Apolar action g(d/de1, ..., d/den) F of a z-polynomial on an e-polynomial.
/// For homogeneous g of degree j and F of degree k the result has degree k-j.
inline Poly diamond(const Poly& g, const Poly& F) {
  if (g.space() != Space::Z || F.space() != Space::E) throw DomainError("diamond: expects g in z-space and F in e-space");
  if (g.nvars() != F.nvars()) throw DomainError("diamond: variable counts differ");
  if (!g.is_zero() && !F.is_zero() && g.is_homogeneous() && F.is_homogeneous() && g.degree() > F.degree())
    throw DomainError("diamond: degree of g exceeds degree of F");
  Poly r(F.nvars(), Space::E);
  for (const auto& [mg, cg] : g.terms())
    for (const auto& [mf, cf] : F.terms()) {
      if (!mg.divides(mf)) continue;
      Monomial q(mf.nvars());
      Integer falling = 1;
      for (std::size_t i = 0; i < mf.nvars(); ++i) {
        q[i] = mf[i] - mg[i];
        for (int k = 0; k < mg[i]; ++k) falling *= mf[i] - k;
      }
      r.add_term(q, cg * cf * Rational(falling));
    }
  return r;
}

/// Coefficient vector of `p` in the given monomial basis; throws when a term of
/// `p` lies outside the basis.
inline std::vector<Rational> coordinates(const Poly& p, const GradedBasis& basis) {
  std::vector<Rational> v(basis.size());
  for (const auto& [m, c] : p.terms()) v[basis.index_of(m)] = c;
  return v;
}

inline Poly from_coordinates(std::span<const Rational> coords, const GradedBasis& basis, Space space) {
  Poly p(basis.nvars(), space);
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

/// The scalar s with a = s * b when it exists. Both zero gives 1; exactly one
/// zero gives nothing.
inline std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars() || a.space() != b.space()) return std::nullopt;
  if (a.is_zero() && b.is_zero()) return Rational(1);
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [m0, b0] = *b.terms().begin();
  Rational s = a.coeff(m0) / b0;
  if (s == 0) return std::nullopt;
  for (const auto& [m, c] : b.terms())
    if (a.coeff(m) != s * c) return std::nullopt;
  return s;
}

inline bool is_proportional(const Poly& a, const Poly& b) {
  auto s = proportionality(a, b);
  return s.has_value() && *s != 0;
}

}  // namespace assoform
