#pragma once

#include <vector>

#include "tatekit/laurent.hpp"

namespace tatekit {

/// Dense matrix over LaurentSeries. Determinants are computed division-free
/// (Laplace expansion) so exact inputs stay exact; intended for small n.
class SeriesMat {
  public:
    SeriesMat() = default;
    SeriesMat(Ring ring, size_t rows, size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, LaurentSeries::zero(ring)) {}

    static SeriesMat identity(Ring ring, size_t n, int prec = kExactPrec);
    static SeriesMat scalar_diag(const LaurentSeries& d, size_t n);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    LaurentSeries& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const LaurentSeries& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    SeriesMat operator+(const SeriesMat& rhs) const;
    SeriesMat operator-(const SeriesMat& rhs) const;
    SeriesMat operator*(const SeriesMat& rhs) const;
    SeriesMat operator*(const LaurentSeries& rhs) const;
    SeriesMat transpose() const;
    SeriesMat truncated(int prec) const;

    LaurentSeries det() const;
    /// Adjugate (division-free), so inverse = adjugate * det^-1.
    SeriesMat adjugate() const;
    /// Inverse over k((t)); non-monomial determinants need a finite working
    /// precision somewhere in the inputs or in target_prec.
    SeriesMat inverse(std::optional<int> target_prec = std::nullopt) const;

    friend bool operator==(const SeriesMat&, const SeriesMat&) = default;

    std::string to_string() const;
    /// Rows separated by ';', entries by ',', each entry in the series grammar.
    static SeriesMat parse(Ring ring, const std::string& text);

  private:
    Ring ring_ = Ring::rationals();
    size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentSeries> a_;
};

}  // namespace tatekit
