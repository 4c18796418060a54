#include "tatekit/dimension.hpp"

namespace tatekit {

int DimensionTheory::eval(const Lattice& l) const {
    if (l.ring() != anchor_.ring() || l.rank() != anchor_.rank())
        throw PreconditionError("lattice lives in a different ambient space than the anchor");
    return anchor_value_ + relative_dimension(anchor_, l);
}

DimensionTheory canonical_dim_theory(const Lattice& anchor) {
    LaurentSeries d = anchor.basis().det();
    if (d.is_zero_within_prec())
        throw PrecisionError("anchor determinant valuation undetermined");
    if (d.valuation() != 0)
        throw PreconditionError("anchor fails the trivialization condition: det valuation " +
                                std::to_string(d.valuation()) + " != 0");
    return DimensionTheory(anchor, 0);
}

}  // namespace tatekit
