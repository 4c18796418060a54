#include "tatekit/nilpotence.hpp"

namespace tatekit {

namespace {

// Polynomials in lambda with LaurentSeries coefficients, dense from degree 0.
using LPoly = std::vector<LaurentSeries>;

LPoly lpoly_mul(const LPoly& a, const LPoly& b, Ring ring) {
    LPoly out(a.size() + b.size() - 1, LaurentSeries::zero(ring));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

LPoly lpoly_add(const LPoly& a, const LPoly& b, Ring ring) {
    LPoly out(std::max(a.size(), b.size()), LaurentSeries::zero(ring));
    for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

LPoly det_rec(const std::vector<std::vector<LPoly>>& m, std::vector<size_t>& cols, size_t row,
              Ring ring) {
    if (cols.size() == 1) return m[row][cols[0]];
    LPoly acc{LaurentSeries::zero(ring)};
    for (size_t k = 0; k < cols.size(); ++k) {
        size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        LPoly term = lpoly_mul(m[row][c], det_rec(m, cols, row + 1, ring), ring);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        if (k % 2)
            for (auto& s : term) s = -s;
        acc = lpoly_add(acc, term, ring);
    }
    return acc;
}

}  // namespace

std::vector<LaurentSeries> char_poly(const SeriesMat& t) {
    if (t.rows() != t.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
    size_t n = t.rows();
    Ring ring = t.ring();
    std::vector<std::vector<LPoly>> m(n, std::vector<LPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LPoly e{-t.at(i, j)};
            if (i == j) e.push_back(LaurentSeries::constant(Scalar::one(ring)));
            m[i][j] = std::move(e);
        }
    std::vector<size_t> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = j;
    LPoly p = det_rec(m, cols, 0, ring);
    p.resize(n + 1, LaurentSeries::zero(ring));
    return p;
}

NilpotenceReport is_topologically_nilpotent(const SeriesMat& t, int max_power, int prec) {
    if (t.rows() != t.cols()) throw PreconditionError("operator must be square");
    NilpotenceReport rep;
    std::vector<LaurentSeries> cp = char_poly(t);
    size_t n = t.rows();

    // Newton polygon points (i, val c_i). Exact zeros are absent (val +inf);
    // inexact zeros only bound the valuation from below.
    struct Pt {
        size_t i;
        int v;
        bool determined;
    };
    std::vector<Pt> pts;
    for (size_t i = 0; i <= n; ++i) {
        const LaurentSeries& c = cp[i];
        if (c.is_zero_within_prec()) {
            if (!c.exact()) pts.push_back(Pt{i, c.prec(), false});
        } else {
            pts.push_back(Pt{i, c.valuation(), true});
        }
    }

    // Lower convex hull of the determined points, left to right. The monic
    // top coefficient (n, 0) is always determined.
    std::vector<Pt> det_pts;
    for (const Pt& p : pts)
        if (p.determined) det_pts.push_back(p);
    std::vector<Pt> hull;
    for (const Pt& p : det_pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // Drop b if it lies on or above segment a-p.
            long lhs = static_cast<long>(b.v - a.v) * static_cast<long>(p.i - a.i);
            long rhs = static_cast<long>(p.v - a.v) * static_cast<long>(b.i - a.i);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    // An undetermined coefficient strictly below the hull would change it.
    auto hull_height = [&](size_t i) -> Rational {
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            if (i >= hull[k].i && i <= hull[k + 1].i) {
                Rational x0(hull[k].i), y0(hull[k].v), x1(hull[k + 1].i), y1(hull[k + 1].v);
                return y0 + (y1 - y0) * (Rational(i) - x0) / (x1 - x0);
            }
        }
        return Rational(hull.empty() ? 0 : hull.front().v);
    };
    bool uncertain = false;
    for (const Pt& p : pts) {
        if (p.determined) continue;
        if (p.i < hull.front().i || Rational(p.v) < hull_height(p.i)) uncertain = true;
    }

    if (!uncertain) {
        rep.via_newton_polygon = true;
        bool some_nonpositive = false;
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            // Root valuation on this segment: (v_left - v_right) / (i_right - i_left).
            Rational mu = Rational(hull[k].v - hull[k + 1].v) / Rational(hull[k + 1].i - hull[k].i);
            for (size_t c = 0; c < hull[k + 1].i - hull[k].i; ++c) rep.root_valuations.push_back(mu);
            if (mu <= 0) some_nonpositive = true;
        }
        // Eigenvalues left of the first hull vertex are exact zeros (valuation
        // +infinity), compatible with topological nilpotence.
        rep.verdict = some_nonpositive ? Nilpotence::No : Nilpotence::Yes;
        return rep;
    }

    // Precision prevented the polygon; report the bounded containment test.
    rep.verdict = Nilpotence::Undecided;
    rep.fallback_checked = true;
    rep.fallback_holds = true;
    Lattice std_lat = Lattice::standard(t.ring(), t.rows(), prec);
    SeriesMat pw = SeriesMat::identity(t.ring(), t.rows(), prec);
    for (int m = 1; m <= max_power && rep.fallback_holds; ++m) {
        pw = pw * t;
        for (size_t j = 0; j < pw.cols(); ++j) {
            std::vector<LaurentSeries> col;
            for (size_t i = 0; i < pw.rows(); ++i) col.push_back(pw.at(i, j));
            if (lattice_contains(std_lat, col) != Membership::Yes) {
                rep.fallback_holds = false;
                break;
            }
        }
    }
    return rep;
}

int rank_over_t(const SeriesMat& t, int prec) {
    NilpotenceReport rep = is_topologically_nilpotent(t, 8, prec);
    if (rep.verdict != Nilpotence::Yes)
        throw PreconditionError("rank_over_t requires a topologically nilpotent operator");
    LaurentSeries d = t.det();
    if (d.is_zero_within_prec())
        throw PreconditionError("rank_over_t requires an invertible operator");

    Lattice base = Lattice::standard(t.ring(), t.rows(), prec);
    Lattice l = base;
    const int budget = 64;
    bool stable = false;
    for (int it = 0; it < budget; ++it) {
        Lattice next = lattice_sum(base, Lattice(t * l.basis(), prec));
        if (lattice_equal(next, l)) {
            stable = true;
            break;
        }
        l = next;
    }
    if (!stable) throw PrecisionError("T-stable lattice did not stabilize within the iteration budget");
    Lattice tl(t * l.basis(), prec);
    if (lattice_contains(l, tl) != Membership::Yes)
        throw PropertyError("constructed lattice is not T-stable");
    return relative_dimension(tl, l);
}

}  // namespace tatekit
