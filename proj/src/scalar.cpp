#include "tatekit/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace tatekit {

namespace {

bool is_small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t mod_reduce(int64_t v, uint64_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return static_cast<uint64_t>(r);
}

uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }  // p < 2^31

uint64_t mod_inv(uint64_t a, uint64_t p) {
    // Extended Euclid; a != 0 mod p.
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw PreconditionError("element not invertible mod p");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

}  // namespace

Ring Ring::prime_field(uint32_t p) {
    if (!is_small_prime(p) || p >= (1u << 31))
        throw PreconditionError("modulus must be a prime below 2^31, got " + std::to_string(p));
    return Ring{Base::Fp, p, false};
}

Ring Ring::dual_of(Ring k) {
    if (k.dual) throw PreconditionError("dual numbers over dual numbers are not supported");
    k.dual = true;
    return k;
}

Ring Ring::parse(const std::string& text) {
    std::string t = text;
    bool dual = false;
    if (t.rfind("dual:", 0) == 0) {
        dual = true;
        t = t.substr(5);
    }
    Ring r;
    if (t == "q") {
        r = rationals();
    } else if (t.rfind("fp:", 0) == 0) {
        long p = std::strtol(t.c_str() + 3, nullptr, 10);
        if (p <= 0) throw ParseError("bad field spec '" + text + "'");
        r = prime_field(static_cast<uint32_t>(p));
    } else {
        throw ParseError("unknown field spec '" + text + "' (want q | fp:<p> | dual:q | dual:fp:<p>)");
    }
    return dual ? dual_of(r) : r;
}

std::string Ring::name() const {
    std::string s = base == Base::Q ? "q" : "fp:" + std::to_string(p);
    return dual ? "dual:" + s : s;
}

Scalar::Scalar(Ring ring, int64_t value) : ring_(ring) {
    if (ring_.base == Ring::Base::Q)
        qa_ = value;
    else
        fa_ = mod_reduce(value, ring_.p);
}

Scalar Scalar::from_rational(Ring ring, const Rational& value) {
    Scalar s(ring);
    if (ring.base == Ring::Base::Q) {
        s.qa_ = value;
        return s;
    }
    // Reduce a rational mod p; denominator must be a unit.
    BigInt num = numerator(value), den = denominator(value);
    uint64_t p = ring.p;
    BigInt nmod = num % p;
    if (nmod < 0) nmod += p;
    BigInt dmod = den % p;
    uint64_t n = nmod.convert_to<uint64_t>();
    uint64_t d = dmod.convert_to<uint64_t>();
    if (d == 0) throw PreconditionError("rational with denominator divisible by " + std::to_string(p));
    s.fa_ = mod_mul(n, mod_inv(d, p), p);
    return s;
}

Scalar Scalar::dual(Ring ring, const Scalar& a, const Scalar& b) {
    if (!ring.dual) throw PreconditionError("dual() needs a dual-number ring");
    if (a.ring() != ring.base_field() || b.ring() != ring.base_field())
        throw PreconditionError("dual() parts must live in the base field");
    Scalar s(ring);
    if (ring.base == Ring::Base::Q) {
        s.qa_ = a.qa_;
        s.qb_ = b.qa_;
    } else {
        s.fa_ = a.fa_;
        s.fb_ = b.fa_;
    }
    return s;
}

Scalar Scalar::epsilon(Ring ring) {
    return dual(ring, Scalar::zero(ring.base_field()), Scalar::one(ring.base_field()));
}

bool Scalar::is_zero() const {
    return ring_.base == Ring::Base::Q ? qa_ == 0 && qb_ == 0 : fa_ == 0 && fb_ == 0;
}

bool Scalar::is_one() const {
    return ring_.base == Ring::Base::Q ? qa_ == 1 && qb_ == 0 : fa_ == 1 && fb_ == 0;
}

bool Scalar::is_unit() const {
    // Over k[e]/(e^2) the units are exactly the elements with a unit body.
    return ring_.base == Ring::Base::Q ? qa_ != 0 : fa_ != 0;
}

Scalar Scalar::body() const {
    Scalar s(ring_.base_field());
    s.qa_ = qa_;
    s.fa_ = fa_;
    return s;
}

Scalar Scalar::soul() const {
    Scalar s(ring_.base_field());
    s.qa_ = qb_;
    s.fa_ = fb_;
    return s;
}

void Scalar::check_same_ring(const Scalar& rhs) const {
    if (ring_ != rhs.ring_)
        throw PreconditionError("scalar-ring mismatch: " + ring_.name() + " vs " + rhs.ring_.name());
}

Scalar Scalar::operator-() const {
    Scalar s(ring_);
    if (ring_.base == Ring::Base::Q) {
        s.qa_ = -qa_;
        s.qb_ = -qb_;
    } else {
        s.fa_ = fa_ == 0 ? 0 : ring_.p - fa_;
        s.fb_ = fb_ == 0 ? 0 : ring_.p - fb_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_ring(rhs);
    Scalar s(ring_);
    if (ring_.base == Ring::Base::Q) {
        s.qa_ = qa_ + rhs.qa_;
        s.qb_ = qb_ + rhs.qb_;
    } else {
        s.fa_ = mod_add(fa_, rhs.fa_, ring_.p);
        s.fb_ = mod_add(fb_, rhs.fb_, ring_.p);
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_same_ring(rhs);
    Scalar s(ring_);
    if (ring_.base == Ring::Base::Q) {
        s.qa_ = qa_ - rhs.qa_;
        s.qb_ = qb_ - rhs.qb_;
    } else {
        s.fa_ = mod_sub(fa_, rhs.fa_, ring_.p);
        s.fb_ = mod_sub(fb_, rhs.fb_, ring_.p);
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_ring(rhs);
    Scalar s(ring_);
    if (ring_.base == Ring::Base::Q) {
        s.qa_ = qa_ * rhs.qa_;
        s.qb_ = qa_ * rhs.qb_ + qb_ * rhs.qa_;  // e^2 = 0
    } else {
        uint64_t p = ring_.p;
        s.fa_ = mod_mul(fa_, rhs.fa_, p);
        s.fb_ = mod_add(mod_mul(fa_, rhs.fb_, p), mod_mul(fb_, rhs.fa_, p), p);
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (!is_unit())
        throw PreconditionError("division by a non-unit scalar (" + to_string() + " in " + ring_.name() + ")");
    Scalar s(ring_);
    if (ring_.base == Ring::Base::Q) {
        s.qa_ = Rational(1) / qa_;
        s.qb_ = -qb_ * s.qa_ * s.qa_;  // (a+be)^-1 = a^-1 - b a^-2 e
    } else {
        uint64_t p = ring_.p;
        s.fa_ = mod_inv(fa_, p);
        s.fb_ = fb_ == 0 ? 0 : p - mod_mul(fb_, mod_mul(s.fa_, s.fa_, p), p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(ring_);
    Scalar base = *this;
    for (uint64_t k = static_cast<uint64_t>(e); k; k >>= 1) {
        if (k & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

Scalar Scalar::times_int(int64_t n) const {
    Scalar s(ring_, n);
    return *this * s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.ring_ != b.ring_) return false;
    return a.ring_.base == Ring::Base::Q ? a.qa_ == b.qa_ && a.qb_ == b.qb_
                                         : a.fa_ == b.fa_ && a.fb_ == b.fb_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.ring_.base == Ring::Base::Q) {
        if (a.qa_ != b.qa_) return a.qa_ < b.qa_ ? -1 : 1;
        if (a.qb_ != b.qb_) return a.qb_ < b.qb_ ? -1 : 1;
        return 0;
    }
    if (a.fa_ != b.fa_) return a.fa_ < b.fa_ ? -1 : 1;
    if (a.fb_ != b.fb_) return a.fb_ < b.fb_ ? -1 : 1;
    return 0;
}

std::string Scalar::to_string() const {
    auto part = [&](bool soul_part) -> std::string {
        if (ring_.base == Ring::Base::Q) {
            const Rational& v = soul_part ? qb_ : qa_;
            return v.str();
        }
        return std::to_string(soul_part ? fb_ : fa_);
    };
    if (!ring_.dual) return part(false);
    bool b_zero = soul().is_zero();
    if (b_zero) return part(false);
    std::string bs = part(true);
    std::string es = (bs == "1" ? "e" : (bs == "-1" ? "-e" : bs + "e"));
    if (body().is_zero()) return es;
    std::string as = part(false);
    if (!es.empty() && es[0] == '-') return as + es;
    return as + "+" + es;
}

Scalar Scalar::parse(Ring ring, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    // Split into 1 or 2 signed atoms at top-level '+'/'-'.
    std::vector<std::string> atoms;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            atoms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    atoms.push_back(s.substr(start));
    if (atoms.size() > 2) throw ParseError("too many terms in scalar literal '" + text + "'");

    Ring base = ring.base_field();
    Scalar body = Scalar::zero(base), soul = Scalar::zero(base);
    for (std::string atom : atoms) {
        bool neg = false;
        if (atom[0] == '+' || atom[0] == '-') {
            neg = atom[0] == '-';
            atom = atom.substr(1);
        }
        bool is_eps = !atom.empty() && atom.back() == 'e';
        if (is_eps) {
            if (!ring.dual) throw ParseError("'e' literal in non-dual ring " + ring.name());
            atom.pop_back();
            if (!atom.empty() && atom.back() == '*') atom.pop_back();
            if (atom.empty()) atom = "1";
        }
        if (atom.empty()) throw ParseError("bad scalar literal '" + text + "'");
        Scalar v = Scalar::from_rational(base, rational_from_string(atom));
        if (neg) v = -v;
        (is_eps ? soul : body) = (is_eps ? soul : body) + v;
    }
    if (!ring.dual) {
        if (!soul.is_zero()) throw ParseError("unexpected dual part");
        return body;
    }
    return Scalar::dual(ring, body, soul);
}

}  // namespace tatekit
