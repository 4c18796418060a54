#pragma once

#include <vector>

#include "tatekit/graded_line.hpp"
#include "tatekit/series_mat.hpp"

namespace tatekit {

/// A full-rank k[[t]]-lattice in k((t))^n, presented by an n x n basis matrix
/// whose columns generate it over k[[t]]. Two bases B and B*U with U
/// invertible over k[[t]] present the same lattice; hermite_normalize
/// computes the canonical representative.
///
/// Entries are truncated to the lattice's working precision at construction;
/// operations that would need coefficients beyond it fail with PrecisionError.
class Lattice {
  public:
    static constexpr int kDefaultPrec = 32;

    Lattice() = default;
    Lattice(SeriesMat basis, int prec = kDefaultPrec);

    const Ring& ring() const { return basis_.ring(); }
    size_t rank() const { return basis_.rows(); }
    int prec() const { return prec_; }
    const SeriesMat& basis() const { return basis_; }

    /// k[[t]]^n with the identity basis.
    static Lattice standard(Ring ring, size_t n, int prec = kDefaultPrec);
    /// The lattice spanned by t^e * (standard basis).
    static Lattice t_shift(Ring ring, size_t n, int e, int prec = kDefaultPrec);

    std::string to_string() const { return basis_.to_string(); }

  private:
    SeriesMat basis_;
    int prec_ = kDefaultPrec;
};

/// Column Hermite form over k[[t]]: lower triangular, pivots are monic powers
/// of t, and in each pivot row the entries left of the pivot are reduced
/// modulo the pivot power. transform satisfies input_basis * transform = basis.
struct HermiteResult {
    Lattice lattice;
    SeriesMat transform;
};
HermiteResult hermite_normalize(const Lattice& l);

/// Exponents a_1 >= ... >= a_n of the Smith form diag(t^a_i) of B^-1 B'.
struct ElementaryDivisors {
    std::vector<int> exponents;
    friend bool operator==(const ElementaryDivisors&, const ElementaryDivisors&) = default;
};

/// Smith normal form over k[[t]] of a square matrix over k((t)):
/// row_transform * A * col_transform = diag(t^exponents) with both transforms
/// invertible over k[[t]]. Exponents are reported in descending order.
struct SmithResult {
    ElementaryDivisors divisors;
    SeriesMat row_transform, col_transform;
    /// Divisor exponents in pivot order before sorting (diagonal of the form).
    std::vector<int> diagonal;
};
SmithResult smith_form(const SeriesMat& a, int prec = Lattice::kDefaultPrec);

ElementaryDivisors relative_position(const Lattice& l, const Lattice& m);

/// d_L^{L'} = dim(L'/L cap L') - dim(L/L cap L') = -(sum of divisor exponents).
int relative_dimension(const Lattice& l, const Lattice& m);

/// det(L'/L) relative to the stored bases: grade d_L^{L'}, scalar the constant
/// term of the unit part of det(B^-1 B').
GradedLine relative_determinant(const Lattice& l, const Lattice& m);

Lattice lattice_sum(const Lattice& l, const Lattice& m);
Lattice lattice_meet(const Lattice& l, const Lattice& m);

/// Dual lattice presented by the inverse-transpose basis.
Lattice lattice_dual(const Lattice& l);

enum class Membership { Yes, No, Undetermined };
Membership lattice_contains(const Lattice& l, const std::vector<LaurentSeries>& v);
/// All generators of m lie in l (within precision).
Membership lattice_contains(const Lattice& l, const Lattice& m);

/// Same lattice within the mutually determined precision window.
bool lattice_equal(const Lattice& l, const Lattice& m);

}  // namespace tatekit
