#pragma once

#include "tatekit/scalar.hpp"

namespace tatekit {

/// A one-dimensional graded space presented by its integer grade and the
/// coordinate of a distinguished element relative to an implicit basis.
/// Tensor is grade-additive and scalar-multiplicative; swapping two lines
/// costs the Koszul sign (-1)^{grade*grade}.
struct GradedLine {
    int grade = 0;
    Scalar scalar;

    GradedLine() = default;
    GradedLine(int g, Scalar s);

    static GradedLine unit(Ring ring) { return GradedLine(0, Scalar::one(ring)); }

    GradedLine tensor(const GradedLine& rhs) const;
    GradedLine inverse_line() const;

    friend bool operator==(const GradedLine&, const GradedLine&) = default;
    std::string to_string() const;
};

/// Result of swapping a tensor pair a (x) b -> b (x) a: the Koszul sign
/// (-1)^{p(a)p(b)} is applied to the first output's scalar and also reported.
struct KoszulSwap {
    GradedLine first, second;
    int sign = 1;
};
KoszulSwap koszul_swap(const GradedLine& a, const GradedLine& b);

}  // namespace tatekit
