#pragma once

#include "tatekit/lattice.hpp"

namespace tatekit {

/// An integer-valued function on lattices with increment d_L^{L'}, presented
/// by an anchor lattice and its value there: eval(L) = value0 + d_{L0}^{L}.
class DimensionTheory {
  public:
    DimensionTheory(Lattice anchor, int anchor_value)
        : anchor_(std::move(anchor)), anchor_value_(anchor_value) {}

    const Lattice& anchor() const { return anchor_; }
    int anchor_value() const { return anchor_value_; }

    int eval(const Lattice& l) const;

  private:
    Lattice anchor_;
    int anchor_value_;
};

/// The dimension theory d_phi singled out by the standard determinant
/// trivialization: anchored with value 0 at any lattice whose basis
/// determinant has valuation 0. Rejects anchors violating that condition.
DimensionTheory canonical_dim_theory(const Lattice& anchor);

}  // namespace tatekit
