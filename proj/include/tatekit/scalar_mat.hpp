#pragma once

#include <vector>

#include "tatekit/scalar.hpp"

namespace tatekit {

/// Dense matrix over a Scalar ring with exact arithmetic.
class ScalarMat {
  public:
    ScalarMat() = default;
    ScalarMat(Ring ring, size_t rows, size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(ring)) {}

    static ScalarMat identity(Ring ring, size_t n);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    ScalarMat operator+(const ScalarMat& rhs) const;
    ScalarMat operator-(const ScalarMat& rhs) const;
    ScalarMat operator*(const ScalarMat& rhs) const;
    ScalarMat operator*(const Scalar& rhs) const;
    ScalarMat transpose() const;

    bool is_identity() const;
    friend bool operator==(const ScalarMat&, const ScalarMat&) = default;

    /// Determinant by fraction-free elimination with unit pivoting. Works over
    /// fields and over dual numbers (pivot must be a unit).
    Scalar det() const;
    /// Inverse; requires square and invertible (unit pivots exist).
    ScalarMat inverse() const;

    std::string to_string() const;

  private:
    Ring ring_ = Ring::rationals();
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form over a field. Returns the RREF matrix and the
/// pivot column of each nonzero row.
struct Rref {
    ScalarMat mat;
    std::vector<size_t> pivots;
};
Rref rref(const ScalarMat& m);

size_t rank(const ScalarMat& m);

/// Basis of the right kernel (columns) of m over a field.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMat& m);

/// Canonical basis of the row span (RREF nonzero rows) over a field.
ScalarMat row_space_basis(const ScalarMat& m);

/// True iff every row of sub lies in the row span of space (a field).
bool rows_contained(const ScalarMat& sub, const ScalarMat& space);

}  // namespace tatekit
