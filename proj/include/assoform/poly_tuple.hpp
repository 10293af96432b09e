#pragma once

#include <vector>

#include "assoform/errors.hpp"
#include "assoform/poly.hpp"

namespace assoform {

/// An ordered n-tuple (f1, ..., fn) of z-space forms of common degree d-1 in n
/// variables.
class PolyTuple {
 public:
  /// `form_degree` is d-1; it is stored so that zero entries are allowed.
  PolyTuple(std::vector<Poly> forms, int form_degree) : forms_(std::move(forms)), form_degree_(form_degree) {
    validate();
  }

  /// Degree deduced from the first nonzero entry.
  explicit PolyTuple(std::vector<Poly> forms) : forms_(std::move(forms)) {
    form_degree_ = -1;
    for (const auto& f : forms_)
      if (!f.is_zero()) {
        form_degree_ = f.degree();
        break;
      }
    if (form_degree_ < 0) throw DomainError("PolyTuple: cannot deduce degree of an all-zero tuple");
    validate();
  }

  int nvars() const noexcept { return static_cast<int>(forms_.size()); }
  int form_degree() const noexcept { return form_degree_; }
  /// The d with forms of degree d-1.
  int d() const noexcept { return form_degree_ + 1; }
  /// n(d-2), the socle degree of the quotient algebra.
  int socle_degree() const noexcept { return nvars() * (d() - 2); }

  const std::vector<Poly>& forms() const noexcept { return forms_; }
  const Poly& operator[](std::size_t i) const { return forms_[i]; }

  friend bool operator==(const PolyTuple&, const PolyTuple&) = default;

 private:
  void validate() const {
    if (forms_.empty()) throw DomainError("PolyTuple: empty tuple");
    if (form_degree_ < 0) throw DomainError("PolyTuple: negative degree");
    const int n = static_cast<int>(forms_.size());
    for (const auto& f : forms_) {
      if (f.nvars() != n) throw DomainError("PolyTuple: need exactly nvars forms in nvars variables");
      if (f.space() != Space::Z) throw DomainError("PolyTuple: forms must live in z-space");
      if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != form_degree_))
        throw DomainError("PolyTuple: forms must be homogeneous of equal degree");
    }
  }

  std::vector<Poly> forms_;
  int form_degree_;
};

}  // namespace assoform
