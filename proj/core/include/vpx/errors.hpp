#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vpx {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (dimension mismatch, wrong set size, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t pivot_column, double pivot_magnitude)
      : Error("singular matrix: pivot " + std::to_string(pivot_magnitude) + " in column " +
              std::to_string(pivot_column)),
        pivot_column_(pivot_column),
        pivot_magnitude_(pivot_magnitude) {}

  std::size_t pivot_column() const noexcept { return pivot_column_; }
  double pivot_magnitude() const noexcept { return pivot_magnitude_; }

 private:
  std::size_t pivot_column_;
  double pivot_magnitude_;
};

class NullSpaceDimensionError : public Error {
 public:
  NullSpaceDimensionError(std::size_t rank, std::size_t nullity)
      : Error("affine dependence space has dimension " + std::to_string(nullity) +
              " (numerical rank " + std::to_string(rank) + ")"),
        rank_(rank),
        nullity_(nullity) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t nullity() const noexcept { return nullity_; }

 private:
  std::size_t rank_;
  std::size_t nullity_;
};

class IterationLimit : public Error {
 public:
  using Error::Error;
};

class SingularConfiguration : public Error {
 public:
  using Error::Error;
};

class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

class SingularBasis : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class DegenerateExchange : public Error {
 public:
  using Error::Error;
};

class NoProgress : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class TableShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BasisTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace vpx
