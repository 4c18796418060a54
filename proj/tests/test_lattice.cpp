#include <doctest.h>

#include "tatekit/lattice.hpp"
#include "tatekit/nilpotence.hpp"
#include "tatekit/scalar_mat.hpp"
#include "test_util.hpp"

using namespace tatekit;
using testutil::Rng;

namespace {

const Ring kQ = Ring::rationals();
const Ring kF2 = Ring::prime_field(2);
const Ring kF5 = Ring::prime_field(5);

LaurentSeries S(const char* text, Ring ring = kQ) { return LaurentSeries::parse(ring, text); }

// Image of L inside the finite window (t^-W std)/(t^W std) as an RREF row
// space; assumes t^W std subseteq L subseteq t^-W std.
ScalarMat window_subspace(const Lattice& l, int w) {
    const size_t n = l.rank();
    const int width = 2 * w;
    std::vector<std::vector<Scalar>> rows;
    for (size_t j = 0; j < n; ++j) {
        int vmin = w;
        for (size_t i = 0; i < n; ++i) {
            const auto& e = l.basis().at(i, j);
            if (!e.is_zero_within_prec()) vmin = std::min(vmin, e.valuation());
        }
        // k[[t]]-span: only nonnegative shifts of the generators.
        for (int k = 0; k < w - vmin; ++k) {
            std::vector<Scalar> v(n * width, Scalar::zero(l.ring()));
            bool nonzero = false;
            for (size_t i = 0; i < n; ++i) {
                for (const auto& [e, c] : l.basis().at(i, j).coeffs()) {
                    int shifted = e + k;
                    if (shifted < -w || shifted >= w) continue;
                    v[i * width + (shifted + w)] = c;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(v));
        }
    }
    ScalarMat m(l.ring(), rows.size(), n * width);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return row_space_basis(m);
}

size_t joined_rank(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat m(a.ring(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return rank(m);
}

// Independent oracle for d_L^{L'} by counting dimensions in a finite window.
int relative_dimension_oracle(const Lattice& l, const Lattice& m, int w) {
    REQUIRE(lattice_contains(l, Lattice::t_shift(l.ring(), l.rank(), w, l.prec())) == Membership::Yes);
    REQUIRE(lattice_contains(m, Lattice::t_shift(l.ring(), l.rank(), w, l.prec())) == Membership::Yes);
    ScalarMat ul = window_subspace(l, w);
    ScalarMat um = window_subspace(m, w);
    size_t sum_dim = joined_rank(ul, um);
    size_t meet_dim = ul.rows() + um.rows() - sum_dim;
    return static_cast<int>(um.rows() - meet_dim) - static_cast<int>(ul.rows() - meet_dim);
}

}  // namespace

TEST_CASE("standard lattice membership") {
    Lattice std1 = Lattice::standard(kQ, 1);
    CHECK(lattice_contains(std1, {S("t^2")}) == Membership::Yes);
    CHECK(lattice_contains(std1, {S("t^-1")}) == Membership::No);
    Lattice std3 = Lattice::standard(kQ, 3);
    CHECK(std3.rank() == 3);
    CHECK(lattice_contains(std3, {S("1"), S("t^4"), S("2 + 3*t^1")}) == Membership::Yes);
}

TEST_CASE("hermite form of the spec example over F2") {
    SeriesMat b(kF2, 2, 2);
    b.at(0, 0) = S("t^1", kF2);
    b.at(0, 1) = S("1", kF2);
    b.at(1, 1) = S("1", kF2);
    HermiteResult h = hermite_normalize(Lattice(b, 16));
    // Column reduction oracle: pivots 1 and t, off-diagonal reduced mod t.
    CHECK(h.lattice.basis().at(0, 0).to_string().substr(0, 1) == "1");
    CHECK(h.lattice.basis().at(1, 1).valuation() == 1);
    CHECK(h.lattice.basis().at(0, 1).is_zero_within_prec());
    // The transform certificate: B * U = H.
    SeriesMat prod = b * h.transform;
    CHECK(lattice_equal(Lattice(prod, 16), h.lattice));
}

TEST_CASE("hermite normalization is idempotent and basis-independent") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Ring ring = trial % 2 ? kF5 : kQ;
        SeriesMat b = testutil::random_lattice_basis(rng, ring, 2);
        Lattice l(b, 24);
        HermiteResult h = hermite_normalize(l);
        // Idempotence.
        CHECK(lattice_equal(hermite_normalize(h.lattice).lattice, h.lattice));
        // Independence of the presenting basis: canonical forms agree on every
        // coefficient determined on both sides.
        SeriesMat u = testutil::random_unimodular(rng, ring, 2);
        Lattice l2(b * u, 24);
        CHECK(lattice_equal(l, l2));
        HermiteResult h2res = hermite_normalize(l2);
        const SeriesMat& h2 = h2res.lattice.basis();
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                int p = std::min(h.lattice.basis().at(i, j).prec(), h2.at(i, j).prec());
                CHECK(h.lattice.basis().at(i, j).truncated(p) == h2.at(i, j).truncated(p));
            }
    }
}

TEST_CASE("relative position of t-shifted lattices") {
    Lattice l = Lattice::standard(kQ, 1);
    Lattice m = Lattice::t_shift(kQ, 1, -2);
    CHECK(relative_position(l, m).exponents == std::vector<int>{-2});
    CHECK(relative_dimension(l, m) == 2);

    Lattice l3 = Lattice::standard(kQ, 3);
    CHECK(relative_position(l3, l3).exponents == std::vector<int>{0, 0, 0});
    CHECK(relative_dimension(l3, l3) == 0);
}

TEST_CASE("smith transforms certify the reduction") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesMat a = testutil::random_lattice_basis(rng, kF5, 2);
        SmithResult s = smith_form(a.truncated(24));
        SeriesMat lhs = s.row_transform * a.truncated(24) * s.col_transform;
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                if (i == j) {
                    CHECK(lhs.at(i, j).valuation() == s.diagonal[i]);
                    CHECK(lhs.at(i, j).leading_coeff().is_one());
                } else {
                    CHECK(lhs.at(i, j).is_zero_within_prec());
                }
            }
    }
}

TEST_CASE("relative position matches the window dimension-count oracle over F5") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Lattice l(testutil::random_lattice_basis(rng, kF5, 2, 2), 16);
        Lattice m(testutil::random_lattice_basis(rng, kF5, 2, 2), 16);
        int d = relative_dimension(l, m);
        CHECK(d == relative_dimension_oracle(l, m, 6));
        // Divisor exponents each bounded by the window.
        auto div = relative_position(l, m).exponents;
        CHECK(div.size() == 2);
        CHECK(std::is_sorted(div.rbegin(), div.rend()));
    }
}

TEST_CASE("d_L^{gL} = -val det g, independent of L") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Ring ring = trial % 2 ? kF5 : kQ;
        Lattice l(testutil::random_lattice_basis(rng, ring, 2), 16);
        SeriesMat g = testutil::random_lattice_basis(rng, ring, 2);  // invertible over k((t))
        Lattice gl(g * l.basis(), 16);
        CHECK(relative_dimension(l, gl) == -g.det().valuation());
    }
}

TEST_CASE("relative dimension is antisymmetric and a cocycle") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Ring ring = trial % 2 ? kF5 : kQ;
        Lattice a(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice b(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice c(testutil::random_lattice_basis(rng, ring, 2), 16);
        CHECK(relative_dimension(a, b) == -relative_dimension(b, a));
        CHECK(relative_dimension(a, c) == relative_dimension(a, b) + relative_dimension(b, c));
    }
}

TEST_CASE("GL-invariance of the relative dimension") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Lattice a(testutil::random_lattice_basis(rng, kQ, 2), 16);
        Lattice b(testutil::random_lattice_basis(rng, kQ, 2), 16);
        SeriesMat g = testutil::random_lattice_basis(rng, kQ, 2);
        Lattice ga(g * a.basis(), 16);
        Lattice gb(g * b.basis(), 16);
        CHECK(relative_dimension(ga, gb) == relative_dimension(a, b));
    }
}

TEST_CASE("relative determinant basics") {
    Lattice l = Lattice::standard(kQ, 2);
    CHECK(relative_determinant(l, l) == GradedLine(0, Scalar::one(kQ)));

    SeriesMat c = SeriesMat::scalar_diag(S("3"), 1);
    CHECK(relative_determinant(Lattice::standard(kQ, 1), Lattice(c)) == GradedLine(0, Scalar(kQ, 3)));
}

TEST_CASE("relative determinant scalars multiply along chains") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Ring ring = trial % 2 ? kF5 : kQ;
        Lattice a(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice b(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice c(testutil::random_lattice_basis(rng, ring, 2), 16);
        GradedLine ab = relative_determinant(a, b);
        GradedLine bc = relative_determinant(b, c);
        GradedLine ac = relative_determinant(a, c);
        CHECK(ab.scalar * bc.scalar == ac.scalar);
        CHECK(ab.grade + bc.grade == ac.grade);
        CHECK(ab.grade == relative_dimension(a, b));
    }
}

TEST_CASE("lattice sum and meet on t-shifts") {
    Lattice std1 = Lattice::standard(kQ, 1);
    CHECK(lattice_equal(lattice_sum(std1, Lattice::t_shift(kQ, 1, -1)), Lattice::t_shift(kQ, 1, -1)));
    CHECK(lattice_equal(lattice_meet(std1, Lattice::t_shift(kQ, 1, 1)), Lattice::t_shift(kQ, 1, 1)));
}

TEST_CASE("sum contains both, meet contained in both") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Ring ring = trial % 2 ? kF5 : kF2;
        Lattice a(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice b(testutil::random_lattice_basis(rng, ring, 2), 16);
        Lattice sum = lattice_sum(a, b);
        Lattice meet = lattice_meet(a, b);
        CHECK(lattice_contains(sum, a) == Membership::Yes);
        CHECK(lattice_contains(sum, b) == Membership::Yes);
        CHECK(lattice_contains(a, meet) == Membership::Yes);
        CHECK(lattice_contains(b, meet) == Membership::Yes);
    }
}

TEST_CASE("modular identity for a fixed anchor dimension theory") {
    Rng rng(23);
    Lattice anchor = Lattice::standard(kF5, 2, 16);
    for (int trial = 0; trial < 50; ++trial) {
        Lattice a(testutil::random_lattice_basis(rng, kF5, 2), 16);
        Lattice b(testutil::random_lattice_basis(rng, kF5, 2), 16);
        int da = relative_dimension(anchor, a);
        int db = relative_dimension(anchor, b);
        int dsum = relative_dimension(anchor, lattice_sum(a, b));
        int dmeet = relative_dimension(anchor, lattice_meet(a, b));
        CHECK(dsum + dmeet == da + db);
        // Cross-check one side against the window-count oracle.
        CHECK(da == relative_dimension_oracle(anchor, a, 6));
    }
}

TEST_CASE("duality is an involution") {
    Rng rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        Lattice a(testutil::random_lattice_basis(rng, kF5, 2), 16);
        CHECK(lattice_equal(lattice_dual(lattice_dual(a)), a));
    }
}

TEST_CASE("topological nilpotence by Newton polygon") {
    // t * Identity: yes.
    SeriesMat tid = SeriesMat::scalar_diag(S("t^1"), 2);
    CHECK(is_topologically_nilpotent(tid).verdict == Nilpotence::Yes);

    // diag(t, t^-1): a slope with nonpositive root valuation.
    SeriesMat bad(kQ, 2, 2);
    bad.at(0, 0) = S("t^1");
    bad.at(1, 1) = S("t^-1");
    CHECK(is_topologically_nilpotent(bad).verdict == Nilpotence::No);

    // Companion matrix of lambda^2 - t lambda - t^3: eigenvalue valuations 1 and 2.
    SeriesMat comp(kQ, 2, 2);
    comp.at(0, 1) = S("t^3");
    comp.at(1, 0) = S("1");
    comp.at(1, 1) = S("t^1");
    NilpotenceReport rep = is_topologically_nilpotent(comp);
    CHECK(rep.verdict == Nilpotence::Yes);
    CHECK(rep.via_newton_polygon);
    REQUIRE(rep.root_valuations.size() == 2);
    CHECK(((rep.root_valuations[0] == 2 && rep.root_valuations[1] == 1) ||
           (rep.root_valuations[0] == 1 && rep.root_valuations[1] == 2)));
}

TEST_CASE("rank over t through a nilpotent automorphism") {
    // Multiplication by s^2 on k((s)): dim k[[s]] / s^2 k[[s]] = 2.
    SeriesMat s2 = SeriesMat::scalar_diag(S("t^2"), 1);
    CHECK(rank_over_t(s2) == 2);

    // s * Identity on k((s))^n.
    for (size_t n = 1; n <= 3; ++n) {
        SeriesMat sid = SeriesMat::scalar_diag(S("t^1"), n);
        CHECK(rank_over_t(sid) == static_cast<int>(n));
    }

    // s * A for a unit matrix A: rank n, independent of A.
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        SeriesMat a = testutil::random_unimodular(rng, kF5, 2);
        SeriesMat t = a * S("t^1", kF5);
        CHECK(rank_over_t(t) == 2);
    }
}

TEST_CASE("rank over t is conjugation invariant") {
    Rng rng(43);
    SeriesMat s2 = SeriesMat::scalar_diag(S("t^2", kF5), 2);
    for (int trial = 0; trial < 10; ++trial) {
        SeriesMat g = testutil::random_lattice_basis(rng, kF5, 2, 1);
        SeriesMat conj = g * s2 * g.inverse(24);
        CHECK(rank_over_t(conj, 24) == rank_over_t(s2, 24));
    }
}

TEST_CASE("precision exhaustion is reported, not guessed") {
    // A basis whose pivot cannot be determined at the working precision.
    SeriesMat b(kQ, 1, 1);
    b.at(0, 0) = S("O(t^2)");
    CHECK_THROWS_AS(Lattice(b, 8), PrecisionError);
    SeriesMat sing(kQ, 1, 1);
    sing.at(0, 0) = S("0");
    CHECK_THROWS_AS(Lattice(sing, 8), PreconditionError);
}
