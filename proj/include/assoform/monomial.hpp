#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <vector>

#include "assoform/errors.hpp"
#include "assoform/rational.hpp"

namespace assoform {

/// Exponent vector of x1^{i1} ... xn^{in}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  Monomial(std::initializer_list<int> exponents) : exponents_(exponents) {}
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  std::size_t nvars() const noexcept { return exponents_.size(); }
  int degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  int operator[](std::size_t i) const { return exponents_[i]; }
  int& operator[](std::size_t i) { return exponents_[i]; }

  Monomial operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
    return r;
  }

  /// True when this monomial divides `other` componentwise.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  /// i1! ... in!
  Integer factorial_product() const {
    Integer r = 1;
    for (int e : exponents_) r *= factorial(static_cast<unsigned>(e));
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

/// Graded lexicographic order, larger first: higher degree, then x1 > x2 > ... .
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
  }
};

namespace detail {
inline void enumerate_monomials(int nvars, int degree, std::vector<int>& prefix,
                                std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == nvars - 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int i = degree; i >= 0; --i) {
    prefix.push_back(i);
    enumerate_monomials(nvars, degree - i, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All monomials of the given degree, in graded-lex order (largest first).
/// Length is C(nvars + degree - 1, degree); empty for negative degree.
inline std::vector<Monomial> monomial_basis(int nvars, int degree) {
  if (nvars < 1) throw DomainError("monomial_basis: nvars must be positive");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(nvars));
  detail::enumerate_monomials(nvars, degree, prefix, out);
  return out;
}

/// A monomial basis of one graded piece with a reverse index.
class GradedBasis {
 public:
  GradedBasis(int nvars, int degree) : nvars_(nvars), degree_(degree), monomials_(monomial_basis(nvars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw DomainError("monomial not in graded basis");
    return it->second;
  }

 private:
  int nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
};

}  // namespace assoform
