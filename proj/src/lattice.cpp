#include "tatekit/lattice.hpp"

#include <algorithm>

namespace tatekit {

namespace {

// Valuation of a matrix entry for pivot selection. Returns false when the
// entry vanishes within precision (valuation undetermined unless exact zero).
bool stored_valuation(const LaurentSeries& s, int& val) {
    if (s.is_zero_within_prec()) return false;
    val = s.valuation();
    return true;
}

// Quotient by the monic pivot t^a, keeping only the part divisible by t^a.
LaurentSeries floor_div_tpow(const LaurentSeries& s, int a) {
    LaurentSeries q(s.ring(), prec_add(s.prec(), -a));
    for (const auto& [e, c] : s.coeffs())
        if (e >= a) q.set_coeff(e - a, c);
    return q;
}

// Remainder mod t^a (exponents below a).
LaurentSeries rem_mod_tpow(const LaurentSeries& s, int a) {
    LaurentSeries r(s.ring(), std::min(s.prec(), a));
    for (const auto& [e, c] : s.coeffs())
        if (e < a) r.set_coeff(e, c);
    return r;
}

}  // namespace

Lattice::Lattice(SeriesMat basis, int prec) : basis_(std::move(basis)), prec_(prec) {
    if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
        throw PreconditionError("a lattice basis must be a nonempty square matrix");
    if (!basis_.ring().is_field())
        throw PreconditionError("lattice operations require a field scalar ring, got " +
                                basis_.ring().name());
    if (prec_ == kExactPrec || prec_ <= 0)
        throw PreconditionError("lattice working precision must be a positive integer");
    LaurentSeries d = basis_.det();
    if (d.is_zero_within_prec()) {
        if (d.exact()) throw PreconditionError("lattice basis is singular over k((t))");
        throw PrecisionError("lattice determinant valuation undetermined at precision " +
                             std::to_string(prec_));
    }
}

Lattice Lattice::standard(Ring ring, size_t n, int prec) {
    return Lattice(SeriesMat::identity(ring, n), prec);
}

Lattice Lattice::t_shift(Ring ring, size_t n, int e, int prec) {
    return Lattice(SeriesMat::scalar_diag(LaurentSeries::t_power(ring, e), n), prec);
}

namespace {

// Column Hermite reduction over k[[t]] of an n x m matrix (m >= n) whose
// columns span a full lattice. Returns the n x n triangular basis and the
// m x m unimodular transform.
struct RawHermite {
    SeriesMat reduced;   // n x m, pivot columns first, zero columns after
    SeriesMat transform; // m x m
    size_t pivot_count = 0;
};

RawHermite hermite_raw(const SeriesMat& in, int prec) {
    const size_t n = in.rows(), m = in.cols();
    SeriesMat w = in;
    SeriesMat u = SeriesMat::identity(in.ring(), m);

    // All intermediates are capped at the working precision; outputs carry
    // honest precision tags.
    auto col_axpy = [&](SeriesMat& mat, size_t dst, size_t src, const LaurentSeries& q) {
        for (size_t i = 0; i < mat.rows(); ++i)
            mat.at(i, dst) = (mat.at(i, dst) - q * mat.at(i, src)).truncated(prec);
    };
    auto col_swap = [&](SeriesMat& mat, size_t a, size_t b) {
        for (size_t i = 0; i < mat.rows(); ++i) std::swap(mat.at(i, a), mat.at(i, b));
    };
    auto col_scale = [&](SeriesMat& mat, size_t c, const LaurentSeries& s) {
        for (size_t i = 0; i < mat.rows(); ++i) mat.at(i, c) = (mat.at(i, c) * s).truncated(prec);
    };

    size_t pc = 0;  // next pivot column slot
    std::vector<int> pivot_exp;
    for (size_t row = 0; row < n; ++row) {
        // Minimal-valuation entry in this row among the free columns.
        size_t best = m;
        int best_val = 0;
        bool saw_inexact_zero = false;
        for (size_t j = pc; j < m; ++j) {
            int v;
            if (!stored_valuation(w.at(row, j), v)) {
                if (!w.at(row, j).exact()) saw_inexact_zero = true;
                continue;
            }
            if (best == m || v < best_val) {
                best = j;
                best_val = v;
            }
        }
        if (best == m) {
            if (saw_inexact_zero)
                throw PrecisionError("Hermite pivot undetermined in row " + std::to_string(row));
            throw PreconditionError("lattice basis rows do not have full rank");
        }
        if (best != pc) {
            col_swap(w, pc, best);
            col_swap(u, pc, best);
        }
        // Make the pivot the monic power t^best_val.
        LaurentSeries unit = w.at(row, pc).shifted(-best_val);
        LaurentSeries unit_inv = unit.inverse(prec);
        col_scale(w, pc, unit_inv);
        col_scale(u, pc, unit_inv);
        w.at(row, pc) = LaurentSeries::t_power(in.ring(), best_val, w.at(row, pc).prec());
        // Clear the rest of the row.
        for (size_t j = pc + 1; j < m; ++j) {
            if (w.at(row, j).is_zero_within_prec()) continue;
            LaurentSeries q = w.at(row, j).shifted(-best_val);  // in k[[t]] by pivot minimality
            col_axpy(w, j, pc, q);
            col_axpy(u, j, pc, q);
            w.at(row, j) = LaurentSeries::zero(in.ring(), w.at(row, j).prec());
        }
        pivot_exp.push_back(best_val);
        ++pc;
    }

    // Reduce entries left of each pivot modulo the pivot power.
    for (size_t i = 0; i < pc; ++i) {
        int a = pivot_exp[i];
        for (size_t j = 0; j < i; ++j) {
            LaurentSeries q = floor_div_tpow(w.at(i, j), a);
            if (q.is_zero_within_prec()) continue;
            col_axpy(w, j, i, q);
            col_axpy(u, j, i, q);
            w.at(i, j) = rem_mod_tpow(w.at(i, j), a);
        }
    }
    return RawHermite{std::move(w), std::move(u), pc};
}

}  // namespace

HermiteResult hermite_normalize(const Lattice& l) {
    RawHermite raw = hermite_raw(l.basis(), l.prec());
    Lattice out(raw.reduced, l.prec());
    return HermiteResult{std::move(out), std::move(raw.transform)};
}

SmithResult smith_form(const SeriesMat& a, int prec) {
    if (a.rows() != a.cols()) throw PreconditionError("Smith form of a non-square matrix");
    const size_t n = a.rows();
    SeriesMat w = a;
    SeriesMat rt = SeriesMat::identity(a.ring(), n);
    SeriesMat ct = SeriesMat::identity(a.ring(), n);
    std::vector<int> diag;

    for (size_t r = 0; r < n; ++r) {
        // Global minimal-valuation pivot, ties broken row-major.
        size_t pi = n, pj = n;
        int best_val = 0;
        bool saw_inexact_zero = false;
        for (size_t i = r; i < n; ++i)
            for (size_t j = r; j < n; ++j) {
                int v;
                if (!stored_valuation(w.at(i, j), v)) {
                    if (!w.at(i, j).exact()) saw_inexact_zero = true;
                    continue;
                }
                if (pi == n || v < best_val) {
                    pi = i;
                    pj = j;
                    best_val = v;
                }
            }
        if (pi == n) {
            if (saw_inexact_zero) throw PrecisionError("Smith pivot undetermined at step " + std::to_string(r));
            throw PreconditionError("Smith form requires an invertible matrix over k((t))");
        }
        if (pi != r)
            for (size_t j = 0; j < n; ++j) {
                std::swap(w.at(pi, j), w.at(r, j));
                std::swap(rt.at(pi, j), rt.at(r, j));
            }
        if (pj != r)
            for (size_t i = 0; i < n; ++i) {
                std::swap(w.at(i, pj), w.at(i, r));
                std::swap(ct.at(i, pj), ct.at(i, r));
            }
        // Normalize the pivot to t^best_val by a unit row scaling.
        LaurentSeries unit_inv = w.at(r, r).shifted(-best_val).inverse(prec);
        for (size_t j = 0; j < n; ++j) {
            w.at(r, j) = (w.at(r, j) * unit_inv).truncated(prec);
            rt.at(r, j) = (rt.at(r, j) * unit_inv).truncated(prec);
        }
        w.at(r, r) = LaurentSeries::t_power(a.ring(), best_val, w.at(r, r).prec());
        // Clear the pivot row and column; quotients lie in k[[t]] by minimality.
        for (size_t i = r + 1; i < n; ++i) {
            if (w.at(i, r).is_zero_within_prec()) continue;
            LaurentSeries q = w.at(i, r).shifted(-best_val);
            for (size_t j = 0; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) - q * w.at(r, j)).truncated(prec);
                rt.at(i, j) = (rt.at(i, j) - q * rt.at(r, j)).truncated(prec);
            }
            w.at(i, r) = LaurentSeries::zero(a.ring(), w.at(i, r).prec());
        }
        for (size_t j = r + 1; j < n; ++j) {
            if (w.at(r, j).is_zero_within_prec()) continue;
            LaurentSeries q = w.at(r, j).shifted(-best_val);
            for (size_t i = 0; i < n; ++i) {
                w.at(i, j) = (w.at(i, j) - w.at(i, r) * q).truncated(prec);
                ct.at(i, j) = (ct.at(i, j) - ct.at(i, r) * q).truncated(prec);
            }
            w.at(r, j) = LaurentSeries::zero(a.ring(), w.at(r, j).prec());
        }
        diag.push_back(best_val);
    }

    std::vector<int> sorted = diag;
    std::sort(sorted.rbegin(), sorted.rend());
    return SmithResult{ElementaryDivisors{std::move(sorted)}, std::move(rt), std::move(ct),
                       std::move(diag)};
}

namespace {

void check_compatible(const Lattice& l, const Lattice& m) {
    if (l.ring() != m.ring())
        throw PreconditionError("scalar-ring mismatch: " + l.ring().name() + " vs " + m.ring().name());
    if (l.rank() != m.rank()) throw PreconditionError("ambient rank mismatch");
}

// B^-1 * B' computed division-free up to the single determinant inversion.
SeriesMat basis_change(const Lattice& l, const Lattice& m) {
    int prec = std::min(l.prec(), m.prec());
    LaurentSeries det = l.basis().det();
    LaurentSeries det_inv = det.inverse(prec);
    return (l.basis().adjugate() * m.basis() * det_inv).truncated(prec);
}

}  // namespace

ElementaryDivisors relative_position(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    return smith_form(basis_change(l, m), std::min(l.prec(), m.prec())).divisors;
}

int relative_dimension(const Lattice& l, const Lattice& m) {
    int d = 0;
    for (int a : relative_position(l, m).exponents) d -= a;
    return d;
}

GradedLine relative_determinant(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    LaurentSeries dl = l.basis().det();
    LaurentSeries dm = m.basis().det();
    if (dl.is_zero_within_prec() || dm.is_zero_within_prec())
        throw PrecisionError("relative determinant: basis determinant undetermined");
    int grade = dl.valuation() - dm.valuation();
    Scalar scalar = dm.leading_coeff() / dl.leading_coeff();
    return GradedLine(grade, scalar);
}

Lattice lattice_sum(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    size_t n = l.rank();
    SeriesMat joined(l.ring(), n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            joined.at(i, j) = l.basis().at(i, j);
            joined.at(i, n + j) = m.basis().at(i, j);
        }
    RawHermite raw = hermite_raw(joined, std::min(l.prec(), m.prec()));
    SeriesMat basis(l.ring(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) basis.at(i, j) = raw.reduced.at(i, j);
    return Lattice(basis, std::min(l.prec(), m.prec()));
}

Lattice lattice_dual(const Lattice& l) {
    return Lattice(l.basis().inverse(l.prec()).transpose(), l.prec());
}

Lattice lattice_meet(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    // Intersection via duality: (L ^ M) = (L* + M*)*.
    return lattice_dual(lattice_sum(lattice_dual(l), lattice_dual(m)));
}

Membership lattice_contains(const Lattice& l, const std::vector<LaurentSeries>& v) {
    if (v.size() != l.rank()) throw PreconditionError("vector dimension mismatch");
    int prec = l.prec();
    LaurentSeries det_inv = l.basis().det().inverse(prec);
    SeriesMat adj = l.basis().adjugate();
    Membership verdict = Membership::Yes;
    for (size_t i = 0; i < l.rank(); ++i) {
        LaurentSeries x = LaurentSeries::zero(l.ring());
        for (size_t j = 0; j < l.rank(); ++j) x = x + adj.at(i, j) * v[j];
        x = (x * det_inv).truncated(prec);
        for (const auto& [e, c] : x.coeffs())
            if (e < 0) return Membership::No;
        if (!x.exact() && x.prec() < 0) verdict = Membership::Undetermined;
    }
    return verdict;
}

Membership lattice_contains(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    Membership verdict = Membership::Yes;
    for (size_t j = 0; j < m.rank(); ++j) {
        std::vector<LaurentSeries> col;
        for (size_t i = 0; i < m.rank(); ++i) col.push_back(m.basis().at(i, j));
        Membership r = lattice_contains(l, col);
        if (r == Membership::No) return Membership::No;
        if (r == Membership::Undetermined) verdict = Membership::Undetermined;
    }
    return verdict;
}

bool lattice_equal(const Lattice& l, const Lattice& m) {
    check_compatible(l, m);
    SeriesMat a = hermite_normalize(l).lattice.basis();
    SeriesMat b = hermite_normalize(m).lattice.basis();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            int p = std::min(a.at(i, j).prec(), b.at(i, j).prec());
            if (!(a.at(i, j).truncated(p) == b.at(i, j).truncated(p))) return false;
        }
    return true;
}

}  // namespace tatekit
