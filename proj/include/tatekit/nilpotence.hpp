#pragma once

#include "tatekit/lattice.hpp"

namespace tatekit {

/// Coefficients c[0..n] of det(lambda*I - T), monic of degree n.
std::vector<LaurentSeries> char_poly(const SeriesMat& t);

enum class Nilpotence { Yes, No, Undecided };

struct NilpotenceReport {
    Nilpotence verdict = Nilpotence::Undecided;
    /// Root valuations read off the Newton polygon (one per eigenvalue with
    /// finite valuation), when the polygon was determined.
    std::vector<Rational> root_valuations;
    bool via_newton_polygon = false;
    /// Fallback witness: T^m L' subseteq L held for all m <= max_power.
    bool fallback_checked = false;
    bool fallback_holds = false;
};

/// Decides T^n -> 0 (n -> infinity) for a k((t))-linear operator by the
/// Newton polygon of its characteristic polynomial: topologically nilpotent
/// iff every eigenvalue valuation is positive. Falls back to the bounded
/// containment test T^m L subseteq L when precision blocks the polygon.
NilpotenceReport is_topologically_nilpotent(const SeriesMat& t, int max_power = 8,
                                            int prec = Lattice::kDefaultPrec);

/// For a topologically nilpotent invertible T: builds a T-stable lattice L by
/// iterating L <- L0 + T*L and returns dim_k(L / T L), the rank of the ambient
/// space as a k((t))-module with t acting through T.
int rank_over_t(const SeriesMat& t, int prec = Lattice::kDefaultPrec);

}  // namespace tatekit
