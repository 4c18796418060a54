#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "tatekit/errors.hpp"

namespace tatekit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Descriptor of an exact scalar ring: Q or F_p, optionally with a square-zero
/// dual-number generator e adjoined (k[e]/(e^2)).
struct Ring {
    enum class Base { Q, Fp };

    Base base = Base::Q;
    uint32_t p = 0;      // prime modulus, base == Fp only
    bool dual = false;   // k[e]/(e^2) over the base field

    static Ring rationals() { return Ring{Base::Q, 0, false}; }
    static Ring prime_field(uint32_t p);
    static Ring dual_of(Ring k);

    /// Parses "q", "fp:<p>", "dual:q", "dual:fp:<p>".
    static Ring parse(const std::string& text);

    Ring base_field() const { return Ring{base, p, false}; }
    bool is_field() const { return !dual; }
    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

/// An element of a Ring. Field operations are exact; over dual numbers the
/// relation e^2 = 0 is enforced in multiplication and division requires the
/// e-free part to be a unit.
class Scalar {
  public:
    Scalar() = default;  // zero of Q; placeholder value
    explicit Scalar(Ring ring) : ring_(ring) {}
    Scalar(Ring ring, int64_t value);

    static Scalar zero(Ring ring) { return Scalar(ring); }
    static Scalar one(Ring ring) { return Scalar(ring, 1); }
    static Scalar from_rational(Ring ring, const Rational& value);
    /// The dual-number a + b*e. Requires ring.dual.
    static Scalar dual(Ring ring, const Scalar& a, const Scalar& b);
    /// The generator e of a dual-number ring.
    static Scalar epsilon(Ring ring);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    /// True iff division by this element is defined.
    bool is_unit() const;
    /// e-free part as an element of the base field (identity for fields).
    Scalar body() const;
    /// Coefficient of e as an element of the base field (zero for fields).
    Scalar soul() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar inverse() const;
    Scalar pow(int64_t e) const;
    /// Multiplication by a plain integer (derivative coefficients and such).
    Scalar times_int(int64_t n) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    /// Parses a scalar literal: "3", "-3/4", "1+2e", "2e", "1-1/2e".
    static Scalar parse(Ring ring, const std::string& text);

    /// Total order for deterministic containers; not arithmetic-meaningful.
    static int compare(const Scalar& a, const Scalar& b);

  private:
    Ring ring_ = Ring::rationals();
    // Q payload (qa_ + qb_*e), valid when base == Q.
    Rational qa_, qb_;
    // F_p payload (fa_ + fb_*e), reduced representatives, valid when base == Fp.
    uint64_t fa_ = 0, fb_ = 0;

    void check_same_ring(const Scalar& rhs) const;
};

}  // namespace tatekit
