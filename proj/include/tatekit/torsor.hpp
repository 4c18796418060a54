#pragma once

#include <map>
#include <string>
#include <vector>

#include "tatekit/lattice.hpp"

namespace tatekit {

/// Combinatorial carrier for Cech 1-cocycles of integers: a finite set of
/// charts, overlap components as labeled edges between charts, and triple
/// overlap components with their projections to double overlaps.
struct ChartNerve {
    struct Overlap {
        size_t i = 0, j = 0;   // chart indices, i < j
        std::string label;     // component label, unique per (i, j)
        friend bool operator==(const Overlap&, const Overlap&) = default;
    };
    struct Triple {
        size_t i = 0, j = 0, k = 0;  // chart indices, i < j < k
        size_t ij = 0, jk = 0, ik = 0;  // overlap-component indices
        friend bool operator==(const Triple&, const Triple&) = default;
    };

    std::vector<std::string> charts;
    std::vector<Overlap> overlaps;
    std::vector<Triple> triples;

    size_t chart_index(const std::string& name) const;
    size_t overlap_index(size_t i, size_t j, const std::string& label) const;
    void validate() const;

    friend bool operator==(const ChartNerve&, const ChartNerve&) = default;
};

/// A Z-torsor presented by transition integers g_{ij} on the overlap
/// components of a nerve; g_{ji} = -g_{ij} is implicit in the orientation
/// i < j of the stored components.
struct ZTorsor {
    ChartNerve nerve;
    std::vector<long> transitions;  // one per nerve.overlaps entry

    void validate() const;
};

/// Monodromy data of a torsor: residual generators on the non-tree edges
/// after gauging a spanning forest to zero.
struct TorsorClass {
    /// One residual integer per non-tree overlap component (H^1 generators).
    std::vector<long> residuals;
    std::vector<size_t> residual_edges;  // indices into nerve.overlaps
    std::vector<long> gauge;             // per-chart potential certificate
    bool trivial() const;
    /// The single residual of a rank-1 H^1 nerve.
    long circle_class() const;
};

TorsorClass torsor_class(const ZTorsor& t);

ZTorsor torsor_sum(const ZTorsor& a, const ZTorsor& b);
ZTorsor torsor_power(const ZTorsor& t, long m);

/// The dimension torsor of the nodal-curve module {u : u(1,t) = t u(0,t)}:
/// a circle nerve with one transition carrying the lattice jump
/// d(k[[t]], t k[[t]]) computed in the given scalar field.
ZTorsor nodal_dim_torsor(Ring field = Ring::prime_field(2));

/// The analogous torsor for an untwisted gluing u(1,t) = u(0,t).
ZTorsor untwisted_torsor();

/// The dimension torsor of the rank-n module glued by a matrix over k((t)):
/// circle nerve with transition d(std, g std) = -val det g.
ZTorsor torsor_from_gluing(const SeriesMat& g);

/// Pullback along the degree-d cover of a circle nerve (two charts, two
/// overlap components). The class multiplies by d.
ZTorsor circle_cover(const ZTorsor& t, long degree);

/// Pullback to a finite tree-shaped truncation of the universal cover
/// (num_charts copies along a path). The pulled-back class is zero.
ZTorsor universal_cover_truncation(const ZTorsor& t, size_t num_charts);

/// Refine the nerve by subdividing one overlap component into two parallel
/// components, transitions copied; the class is unchanged.
ZTorsor refine_overlap(const ZTorsor& t, size_t overlap_index);

std::string torsor_to_text(const ZTorsor& t);
ZTorsor torsor_from_text(const std::string& text);

}  // namespace tatekit
