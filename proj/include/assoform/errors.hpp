#pragma once

#include <stdexcept>
#include <string>

namespace assoform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on shape, degree, space or variable count does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

/// The ideal generated by a tuple is not full in its probe degree, so the
/// quotient algebra is infinite dimensional.
class FiniteColengthError : public Error {
 public:
  FiniteColengthError(int probe_degree, std::size_t ideal_dim, std::size_t ambient_dim)
      : Error("ideal piece not full in degree " + std::to_string(probe_degree) + " (" +
              std::to_string(ideal_dim) + " of " + std::to_string(ambient_dim) + ")"),
        probe_degree_(probe_degree) {}
  int probe_degree() const noexcept { return probe_degree_; }

 private:
  int probe_degree_;
};

/// The form has a non-isolated singularity at the origin.
class NondegeneracyError : public Error {
 public:
  explicit NondegeneracyError(int probe_degree)
      : Error("form is degenerate: gradient ideal not full in degree " +
              std::to_string(probe_degree)),
        probe_degree_(probe_degree) {}
  int probe_degree() const noexcept { return probe_degree_; }

 private:
  int probe_degree_;
};

/// Internal consistency failure: the socle-degree piece of W has codimension != 1.
class DegenerateSocle : public Error {
 public:
  using Error::Error;
};

/// Division by an invariant that vanishes; `invariant()` names it.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(std::string invariant)
      : Error("division by zero: " + invariant + " vanishes"), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class ExcludedParameter : public Error {
 public:
  using Error::Error;
};

class DegenerateFamilyMember : public Error {
 public:
  using Error::Error;
};

class DegenerateSylvesterFrame : public Error {
 public:
  using Error::Error;
};

class DegenerateQuintic : public Error {
 public:
  using Error::Error;
};

}  // namespace assoform
