#include "tatekit/torsor.hpp"

#include <algorithm>
#include <sstream>

namespace tatekit {

size_t ChartNerve::chart_index(const std::string& name) const {
    for (size_t i = 0; i < charts.size(); ++i)
        if (charts[i] == name) return i;
    throw ParseError("unknown chart '" + name + "'");
}

size_t ChartNerve::overlap_index(size_t i, size_t j, const std::string& label) const {
    if (i > j) std::swap(i, j);
    for (size_t e = 0; e < overlaps.size(); ++e)
        if (overlaps[e].i == i && overlaps[e].j == j && overlaps[e].label == label) return e;
    throw ParseError("unknown overlap component '" + label + "' between charts " + std::to_string(i) +
                     " and " + std::to_string(j));
}

void ChartNerve::validate() const {
    for (const Overlap& o : overlaps) {
        if (o.i >= o.j || o.j >= charts.size())
            throw PreconditionError("overlap endpoints must satisfy i < j < #charts");
        for (const Overlap& p : overlaps)
            if (&o != &p && o.i == p.i && o.j == p.j && o.label == p.label)
                throw PreconditionError("duplicate overlap label '" + o.label + "'");
    }
    for (const Triple& t : triples) {
        if (!(t.i < t.j && t.j < t.k && t.k < charts.size()))
            throw PreconditionError("triple charts must satisfy i < j < k");
        auto check_edge = [&](size_t e, size_t a, size_t b) {
            if (e >= overlaps.size() || overlaps[e].i != a || overlaps[e].j != b)
                throw PreconditionError("triple projection does not land in a declared overlap component");
        };
        check_edge(t.ij, t.i, t.j);
        check_edge(t.jk, t.j, t.k);
        check_edge(t.ik, t.i, t.k);
    }
}

void ZTorsor::validate() const {
    nerve.validate();
    if (transitions.size() != nerve.overlaps.size())
        throw PreconditionError("one transition integer per overlap component required");
    // Antisymmetry g_ji = -g_ij is carried by the i < j orientation; the
    // cocycle condition is checked on every declared triple component.
    for (const ChartNerve::Triple& t : nerve.triples) {
        long gij = transitions[t.ij], gjk = transitions[t.jk], gik = transitions[t.ik];
        if (gij + gjk != gik)
            throw PreconditionError("cocycle violation on triple (" + nerve.charts[t.i] + "," +
                                    nerve.charts[t.j] + "," + nerve.charts[t.k] + "): g_ij + g_jk = " +
                                    std::to_string(gij + gjk) + " but g_ik = " + std::to_string(gik));
    }
}

bool TorsorClass::trivial() const {
    for (long r : residuals)
        if (r != 0) return false;
    return true;
}

long TorsorClass::circle_class() const {
    if (residuals.size() != 1)
        throw PreconditionError("nerve has H^1 rank " + std::to_string(residuals.size()) +
                                ", expected 1");
    return residuals[0];
}

TorsorClass torsor_class(const ZTorsor& t) {
    t.validate();
    const size_t n = t.nerve.charts.size();
    // Spanning forest by BFS; tree edges gauged to zero via potentials
    // h with g_ij + h_i - h_j = 0.
    std::vector<long> h(n, 0);
    std::vector<bool> seen(n, false);
    std::vector<bool> in_tree(t.nerve.overlaps.size(), false);
    for (size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<size_t> queue{root};
        while (!queue.empty()) {
            size_t v = queue.back();
            queue.pop_back();
            for (size_t e = 0; e < t.nerve.overlaps.size(); ++e) {
                const auto& o = t.nerve.overlaps[e];
                if (o.i != v && o.j != v) continue;
                size_t w = o.i == v ? o.j : o.i;
                if (seen[w]) continue;
                seen[w] = true;
                in_tree[e] = true;
                h[w] = o.i == v ? h[v] + t.transitions[e] : h[v] - t.transitions[e];
                queue.push_back(w);
            }
        }
    }
    TorsorClass cls;
    cls.gauge = h;
    for (size_t e = 0; e < t.nerve.overlaps.size(); ++e) {
        if (in_tree[e]) continue;
        const auto& o = t.nerve.overlaps[e];
        cls.residuals.push_back(t.transitions[e] + h[o.i] - h[o.j]);
        cls.residual_edges.push_back(e);
    }
    return cls;
}

ZTorsor torsor_sum(const ZTorsor& a, const ZTorsor& b) {
    if (!(a.nerve == b.nerve)) throw PreconditionError("torsor sum requires identical nerves");
    ZTorsor out = a;
    for (size_t e = 0; e < out.transitions.size(); ++e) out.transitions[e] += b.transitions[e];
    return out;
}

ZTorsor torsor_power(const ZTorsor& t, long m) {
    ZTorsor out = t;
    for (long& g : out.transitions) g *= m;
    return out;
}

namespace {

ChartNerve circle_nerve() {
    ChartNerve nv;
    nv.charts = {"U0", "U1"};
    nv.overlaps = {{0, 1, "a"}, {0, 1, "b"}};
    return nv;
}

}  // namespace

ZTorsor nodal_dim_torsor(Ring field) {
    // The gluing u(1,t) = t u(0,t) jumps the lattice k[[t]] to t k[[t]];
    // its dimension jump is computed, not hard-coded.
    long jump = relative_dimension(Lattice::standard(field, 1), Lattice::t_shift(field, 1, 1));
    ZTorsor t{circle_nerve(), {0, jump}};
    t.validate();
    return t;
}

ZTorsor untwisted_torsor() { return ZTorsor{circle_nerve(), {0, 0}}; }

ZTorsor torsor_from_gluing(const SeriesMat& g) {
    Lattice std_lat = Lattice::standard(g.ring(), g.rows());
    Lattice glued(g * std_lat.basis());
    long jump = relative_dimension(std_lat, glued);
    return ZTorsor{circle_nerve(), {0, jump}};
}

namespace {

void require_circle(const ZTorsor& t) {
    if (t.nerve.charts.size() != 2 || t.nerve.overlaps.size() != 2 || !t.nerve.triples.empty() ||
        t.nerve.overlaps[0].i != 0 || t.nerve.overlaps[0].j != 1 || t.nerve.overlaps[1].i != 0 ||
        t.nerve.overlaps[1].j != 1)
        throw PreconditionError("unsupported nerve shape: expected the two-chart circle nerve");
}

}  // namespace

ZTorsor circle_cover(const ZTorsor& t, long degree) {
    require_circle(t);
    if (degree < 1) throw PreconditionError("cover degree must be >= 1");
    long ga = t.transitions[0], gb = t.transitions[1];
    ZTorsor out;
    size_t m = static_cast<size_t>(2 * degree);
    for (size_t v = 0; v < m; ++v) out.nerve.charts.push_back("V" + std::to_string(v));
    for (size_t e = 0; e + 1 < m; ++e) {
        out.nerve.overlaps.push_back({e, e + 1, (e % 2 ? "b" : "a") + std::to_string(e)});
        // Walking the cycle alternates the two base components; odd steps
        // traverse component b against its stored orientation.
        out.transitions.push_back(e % 2 ? -gb : ga);
    }
    out.nerve.overlaps.push_back({0, m - 1, "b" + std::to_string(m - 1)});
    out.transitions.push_back(gb);
    out.validate();
    return out;
}

ZTorsor universal_cover_truncation(const ZTorsor& t, size_t num_charts) {
    require_circle(t);
    if (num_charts < 2) throw PreconditionError("tree cover needs at least 2 charts");
    long ga = t.transitions[0], gb = t.transitions[1];
    ZTorsor out;
    for (size_t v = 0; v < num_charts; ++v) out.nerve.charts.push_back("V" + std::to_string(v));
    for (size_t e = 0; e + 1 < num_charts; ++e) {
        out.nerve.overlaps.push_back({e, e + 1, (e % 2 ? "b" : "a") + std::to_string(e)});
        out.transitions.push_back(e % 2 ? -gb : ga);
    }
    out.validate();
    return out;
}

ZTorsor refine_overlap(const ZTorsor& t, size_t overlap_index) {
    if (overlap_index >= t.nerve.overlaps.size()) throw PreconditionError("no such overlap component");
    ZTorsor out = t;
    ChartNerve::Overlap o = t.nerve.overlaps[overlap_index];
    o.label += "'";
    out.nerve.overlaps.push_back(o);
    out.transitions.push_back(t.transitions[overlap_index]);
    // Subdividing a component cannot appear in declared triples it was part
    // of without re-declaring them; refinement here only adds the copy.
    out.validate();
    return out;
}

std::string torsor_to_text(const ZTorsor& t) {
    std::ostringstream os;
    for (const auto& c : t.nerve.charts) os << "chart " << c << "\n";
    for (size_t e = 0; e < t.nerve.overlaps.size(); ++e) {
        const auto& o = t.nerve.overlaps[e];
        os << "overlap " << t.nerve.charts[o.i] << " " << t.nerve.charts[o.j] << " " << o.label << " "
           << t.transitions[e] << "\n";
    }
    for (const auto& tr : t.nerve.triples) {
        os << "triple " << t.nerve.charts[tr.i] << " " << t.nerve.charts[tr.j] << " "
           << t.nerve.charts[tr.k] << " " << t.nerve.overlaps[tr.ij].label << " "
           << t.nerve.overlaps[tr.jk].label << " " << t.nerve.overlaps[tr.ik].label << "\n";
    }
    return os.str();
}

ZTorsor torsor_from_text(const std::string& text) {
    ZTorsor t;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind.empty() || kind[0] == '#') continue;
        if (kind == "chart") {
            std::string name;
            if (!(ls >> name)) throw ParseError("chart line needs a name");
            t.nerve.charts.push_back(name);
        } else if (kind == "overlap") {
            std::string ci, cj, label;
            long g;
            if (!(ls >> ci >> cj >> label >> g)) throw ParseError("overlap line: <ci> <cj> <label> <g>");
            size_t i = t.nerve.chart_index(ci), j = t.nerve.chart_index(cj);
            long sign = 1;
            if (i > j) {
                std::swap(i, j);
                sign = -1;
            }
            t.nerve.overlaps.push_back({i, j, label});
            t.transitions.push_back(sign * g);
        } else if (kind == "triple") {
            std::string ci, cj, ck, lij, ljk, lik;
            if (!(ls >> ci >> cj >> ck >> lij >> ljk >> lik))
                throw ParseError("triple line: <ci> <cj> <ck> <l_ij> <l_jk> <l_ik>");
            size_t i = t.nerve.chart_index(ci), j = t.nerve.chart_index(cj), k = t.nerve.chart_index(ck);
            ChartNerve::Triple tr;
            tr.i = i;
            tr.j = j;
            tr.k = k;
            tr.ij = t.nerve.overlap_index(i, j, lij);
            tr.jk = t.nerve.overlap_index(j, k, ljk);
            tr.ik = t.nerve.overlap_index(i, k, lik);
            t.nerve.triples.push_back(tr);
        } else {
            throw ParseError("unknown nerve line kind '" + kind + "'");
        }
    }
    t.validate();
    return t;
}

}  // namespace tatekit
