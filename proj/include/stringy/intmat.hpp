#pragma once

#include "stringy/lpoly.hpp"
#include "stringy/numeric.hpp"

#include <optional>
#include <vector>

namespace stringy {

// Dense matrix of exact integers.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMat from_cols(const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Int> row(int i) const;
  std::vector<Int> col(int j) const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  int rank() const;
  Int det() const;                      // fraction-free Bareiss
  bool is_unimodular() const;
  IntMat inverse_unimodular() const;    // throws unless |det| = 1
  LPoly char_poly() const;              // det(L*I - A), exact

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Row-style Hermite normal form U*A = H with U unimodular; pivots positive,
// entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMat H;
  IntMat U;
  int rank = 0;
};
HnfResult hnf(const IntMat& A);

// Basis (as columns) of the integer kernel {x : A x = 0}; always saturated.
IntMat kernel(const IntMat& A);

// Basis (as columns) of the saturation of the column span of S.
IntMat saturate(const IntMat& S);

// Any rational solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const IntMat& A, const std::vector<Rat>& b);
std::optional<std::vector<Int>> solve_integral(const IntMat& A, const std::vector<Int>& b);

// Matrix of the action induced by A on the quotient lattice Z^m / span(S)
// (S saturated internally). Throws std::invalid_argument if A does not
// stabilize the span of S.
IntMat quotient_lattice_action(const IntMat& A, const IntMat& S);

// Matrix R with A*K = K*R for a full-column-rank K; throws if the column
// span of K is not stabilized or R is not integral.
IntMat restrict_action(const IntMat& A, const IntMat& K);

} // namespace stringy
