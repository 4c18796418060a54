#include "tatekit/laurent.hpp"

#include <cctype>
#include <vector>

namespace tatekit {

int prec_add(int a, int b) {
    if (a == kExactPrec || b == kExactPrec) return kExactPrec;
    long s = static_cast<long>(a) + static_cast<long>(b);
    if (s >= kExactPrec) return kExactPrec - 1;
    if (s <= std::numeric_limits<int>::min()) throw PrecisionError("exponent underflow");
    return static_cast<int>(s);
}

LaurentSeries LaurentSeries::constant(const Scalar& c, int prec) { return monomial(c, 0, prec); }

LaurentSeries LaurentSeries::monomial(const Scalar& c, int exp, int prec) {
    LaurentSeries s(c.ring(), prec);
    s.set_coeff(exp, c);
    return s;
}

LaurentSeries LaurentSeries::t_power(Ring ring, int exp, int prec) {
    return monomial(Scalar::one(ring), exp, prec);
}

int LaurentSeries::valuation() const {
    if (!coeffs_.empty()) return coeffs_.begin()->first;
    if (exact()) throw PreconditionError("valuation of the exact zero series is undefined");
    return prec_;
}

Scalar LaurentSeries::leading_coeff() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of a zero series is undefined");
    return coeffs_.begin()->second;
}

Scalar LaurentSeries::coeff(int exp) const {
    if (!coeff_known(exp))
        throw PrecisionError("coefficient of t^" + std::to_string(exp) + " beyond O(t^" +
                             std::to_string(prec_) + ")");
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Scalar::zero(ring_) : it->second;
}

void LaurentSeries::set_coeff(int exp, const Scalar& c) {
    if (c.ring() != ring_) throw PreconditionError("scalar-ring mismatch in set_coeff");
    if (exp >= prec_) return;
    if (c.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

void LaurentSeries::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero() || it->first >= prec_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
    LaurentSeries s(ring_, std::min(prec_, new_prec));
    for (const auto& [e, c] : coeffs_) s.set_coeff(e, c);
    return s;
}

LaurentSeries LaurentSeries::shifted(int shift) const {
    LaurentSeries s(ring_, prec_add(prec_, shift));
    for (const auto& [e, c] : coeffs_) s.set_coeff(e + shift, c);
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(ring_, prec_);
    for (const auto& [e, c] : coeffs_) s.coeffs_[e] = -c;
    return s;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
    if (ring_ != rhs.ring_) throw PreconditionError("scalar-ring mismatch in series addition");
    LaurentSeries s(ring_, std::min(prec_, rhs.prec_));
    for (const auto& [e, c] : coeffs_) s.set_coeff(e, c);
    for (const auto& [e, c] : rhs.coeffs_) {
        if (e >= s.prec_) continue;
        s.set_coeff(e, s.coeff(e) + c);
    }
    return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& rhs) const { return *this + (-rhs); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
    if (ring_ != rhs.ring_) throw PreconditionError("scalar-ring mismatch in series multiplication");
    // prec = min(val(a)+prec(b), val(b)+prec(a)); an exact zero factor kills everything.
    if (is_exact_zero() || rhs.is_exact_zero()) return LaurentSeries(ring_, kExactPrec);
    int val_a = coeffs_.empty() ? prec_ : coeffs_.begin()->first;
    int val_b = rhs.coeffs_.empty() ? rhs.prec_ : rhs.coeffs_.begin()->first;
    int prec = std::min(prec_add(val_a, rhs.prec_), prec_add(val_b, prec_));
    LaurentSeries s(ring_, prec);
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) {
            int e = ea + eb;
            if (e >= prec) continue;
            s.set_coeff(e, s.coeff(e) + ca * cb);
        }
    return s;
}

LaurentSeries LaurentSeries::operator*(const Scalar& rhs) const {
    LaurentSeries s(ring_, prec_);
    for (const auto& [e, c] : coeffs_) s.set_coeff(e, c * rhs);
    return s;
}

LaurentSeries LaurentSeries::inverse(std::optional<int> target_prec) const {
    if (coeffs_.empty())
        throw PreconditionError(exact() ? "inverse of the zero series"
                                        : "inverse undetermined: all coefficients vanish within precision");
    int val = valuation();
    Scalar lead = leading_coeff();
    if (!lead.is_unit())
        throw PreconditionError("leading coefficient " + lead.to_string() + " is not a unit");

    if (coeffs_.size() == 1 && exact()) {
        return monomial(lead.inverse(), -val);  // exact monomial inverse
    }
    // Result precision: prec - 2*val for an inexact input, else the requested target.
    int out_prec;
    if (!exact())
        out_prec = prec_add(prec_, -2 * val);
    else if (target_prec)
        out_prec = *target_prec;
    else
        throw PreconditionError("inverse of an exact non-monomial series needs a target precision");
    if (target_prec && *target_prec < out_prec) out_prec = *target_prec;
    if (out_prec == kExactPrec)
        throw PreconditionError("inverse of an exact non-monomial series needs a finite target precision");

    // u = lead^-1 t^-val * sum_{k>=0} (-x)^k where this = lead t^val (1 + x).
    LaurentSeries unit_part = shifted(-val) * lead.inverse();  // 1 + x, x has valuation >= 1
    LaurentSeries x = unit_part - constant(Scalar::one(ring_));
    int rel_prec = out_prec + val;  // precision needed for (1+x)^-1
    LaurentSeries acc = constant(Scalar::one(ring_), rel_prec);
    LaurentSeries pw = constant(Scalar::one(ring_), rel_prec);
    for (int k = 1; k < rel_prec - 0; ++k) {
        pw = (pw * -x).truncated(rel_prec);
        if (pw.is_zero_within_prec()) break;
        acc = acc + pw;
    }
    return (acc.shifted(-val) * lead.inverse()).truncated(out_prec);
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries s(ring_, prec_ == kExactPrec ? kExactPrec : prec_ - 1);
    for (const auto& [e, c] : coeffs_) s.set_coeff(e - 1, c.times_int(e));
    return s;
}

Scalar residue_coeff(const LaurentSeries& f, const LaurentSeries& g) {
    LaurentSeries w = f * g.derivative();
    if (!w.coeff_known(-1))
        throw PrecisionError("t^-1 coefficient of f*dg lies outside the determined window");
    return w.coeff(-1);
}

std::string LaurentSeries::to_string() const {
    std::string out;
    auto needs_parens = [](const std::string& s) {
        return s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos;
    };
    for (const auto& [e, c] : coeffs_) {
        std::string cs = c.to_string();
        std::string term;
        if (e == 0) {
            term = needs_parens(cs) ? "(" + cs + ")" : cs;
        } else {
            std::string mono = "t^" + std::to_string(e);
            if (cs == "1")
                term = mono;
            else if (cs == "-1")
                term = "-" + mono;
            else
                term = (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    if (out.empty()) out = "0";
    if (!exact()) out += " + O(t^" + std::to_string(prec_) + ")";
    return out;
}

namespace {

// Splits at top-level '+'/'-' (not inside parentheses, not after '^', '*', '/').
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-') && i > 0) {
            char prev = s[i - 1];
            if (prev == '^' || prev == '*' || prev == '/' || prev == '+' || prev == '-') continue;
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    return terms;
}

}  // namespace

LaurentSeries LaurentSeries::parse(Ring ring, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty series literal");

    int prec = kExactPrec;
    // Optional trailing O(t^N).
    auto opos = s.rfind("O(t^");
    if (opos != std::string::npos) {
        if (s.back() != ')') throw ParseError("unterminated O-term in '" + text + "'");
        std::string n = s.substr(opos + 4, s.size() - opos - 5);
        try {
            prec = std::stoi(n);
        } catch (const std::exception&) {
            throw ParseError("bad O-term exponent '" + n + "'");
        }
        size_t end = opos;
        while (end > 0 && (s[end - 1] == '+' || s[end - 1] == '-')) --end;
        s = s.substr(0, end);
    }

    LaurentSeries out(ring, prec);
    if (s.empty() || s == "0") return out;
    for (std::string term : split_terms(s)) {
        bool neg = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            neg = term[0] == '-';
            term = term.substr(1);
        }
        if (term.empty()) throw ParseError("empty term in '" + text + "'");

        std::string coeff_text = "1";
        int exp = 0;
        auto tpos = term.rfind("t^");
        if (tpos != std::string::npos && (tpos == 0 || term[tpos - 1] == '*' || term[tpos - 1] == '(')) {
            try {
                exp = std::stoi(term.substr(tpos + 2));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in term '" + term + "'");
            }
            size_t cut = tpos;
            if (cut > 0 && term[cut - 1] == '*') --cut;
            if (cut > 0) coeff_text = term.substr(0, cut);
        } else if (term == "t") {
            exp = 1;
        } else if (term.size() >= 2 && term.substr(term.size() - 2) == "*t") {
            exp = 1;
            coeff_text = term.substr(0, term.size() - 2);
        } else {
            coeff_text = term;
        }
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
            coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        Scalar c = Scalar::parse(ring, coeff_text);
        if (neg) c = -c;
        if (exp < out.prec_) out.set_coeff(exp, out.coeff(exp) + c);
    }
    return out;
}

}  // namespace tatekit
