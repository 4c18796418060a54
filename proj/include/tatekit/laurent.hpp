#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "tatekit/scalar.hpp"

namespace tatekit {

/// Exponent sentinel meaning "known exactly" (no O-term).
inline constexpr int kExactPrec = std::numeric_limits<int>::max();

/// Saturating exponent addition so precision arithmetic never wraps.
int prec_add(int a, int b);

/// A truncated formal Laurent series over an exact scalar ring.
///
/// Invariants: every stored exponent is < prec(), stored coefficients are
/// nonzero, and prec() == kExactPrec means the series is exact. A series with
/// no stored coefficients is the (exact or windowed) zero.
class LaurentSeries {
  public:
    LaurentSeries() = default;
    explicit LaurentSeries(Ring ring, int prec = kExactPrec) : ring_(ring), prec_(prec) {}

    static LaurentSeries zero(Ring ring, int prec = kExactPrec) { return LaurentSeries(ring, prec); }
    static LaurentSeries constant(const Scalar& c, int prec = kExactPrec);
    static LaurentSeries monomial(const Scalar& c, int exp, int prec = kExactPrec);
    /// t^exp with coefficient 1.
    static LaurentSeries t_power(Ring ring, int exp, int prec = kExactPrec);

    const Ring& ring() const { return ring_; }
    int prec() const { return prec_; }
    bool exact() const { return prec_ == kExactPrec; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }

    /// True iff all stored coefficients vanish (zero within precision).
    bool is_zero_within_prec() const { return coeffs_.empty(); }
    /// True iff the series is exactly zero.
    bool is_exact_zero() const { return coeffs_.empty() && exact(); }

    /// Least stored exponent. For a zero-within-precision series this is the
    /// conservative lower bound prec(); exact zero has no valuation.
    bool valuation_known() const { return !coeffs_.empty() || !exact(); }
    int valuation() const;
    Scalar leading_coeff() const;

    Scalar coeff(int exp) const;
    /// Whether coeff(exp) is determined (exp < prec or the series is exact).
    bool coeff_known(int exp) const { return exp < prec_; }
    void set_coeff(int exp, const Scalar& c);

    LaurentSeries truncated(int new_prec) const;
    /// Multiplies every exponent's coefficient into t^shift more.
    LaurentSeries shifted(int shift) const;

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& rhs) const;
    LaurentSeries operator-(const LaurentSeries& rhs) const;
    LaurentSeries operator*(const LaurentSeries& rhs) const;
    LaurentSeries operator*(const Scalar& rhs) const;

    /// Multiplicative inverse to the propagated precision. For an exact
    /// non-monomial input a target precision must be supplied.
    LaurentSeries inverse(std::optional<int> target_prec = std::nullopt) const;
    LaurentSeries derivative() const;

    /// Equality of stored data (ring, precision, coefficients).
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    std::string to_string() const;
    /// Parses the series grammar, e.g. "-1*t^-2 + 3 + 1/2*t^1 + O(t^6)".
    static LaurentSeries parse(Ring ring, const std::string& text);

  private:
    Ring ring_ = Ring::rationals();
    std::map<int, Scalar> coeffs_;
    int prec_ = kExactPrec;

    void normalize();
};

/// res(f * dg): the t^-1 coefficient of f * g', oriented by res(t^-1 dt) = 1.
Scalar residue_coeff(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace tatekit
