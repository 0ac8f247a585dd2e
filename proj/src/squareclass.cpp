#include "traceforge/squareclass.hpp"

#include "traceforge/zsqrt2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace traceforge {

namespace {

// Squarefree integer representing the class of a nonzero rational inside k;
// over Q(sqrt m) the factor m is itself a square and gets divided out.
Int rational_class_in(const Rational& q, const FieldDescriptor& f) {
    Int s = squarefree_part(q).s;
    if (!f.is_rational() && s % f.m() == 0) s /= f.m();
    return s;
}

QuadFieldElement reduce_rep(const QuadFieldElement& e) {
    const FieldDescriptor& f = e.field();
    if (e.y() == 0) return QuadFieldElement(Rational(rational_class_in(e.x(), f)), 0, f);
    if (e.x() == 0) {
        Int s = rational_class_in(e.y(), f);
        return QuadFieldElement(0, Rational(s), f);
    }
    if (f.m() == 2) {
        // reconstruct a canonical representative from the Z[sqrt 2] class vector
        Zsqrt2ClassVector v = factor_Zsqrt2_mod_squares(e);
        QuadFieldElement r(1);
        r = promote(r, f);
        if (v.sign) r = -r;
        if (v.unit) r = r * QuadFieldElement(1, 1, f);
        for (const auto& [key, on] : v.primes) {
            if (!on) continue;
            const auto& [p, t] = key;
            if (p == 2) {
                r = r * QuadFieldElement(0, 1, f);
                continue;
            }
            for (const auto& pe : classify_prime_Zsqrt2(p)) {
                Int k2 = pe.residue_map ? *pe.residue_map : Int(0);
                if (k2 == t) r = r * pe.pi;
            }
        }
        return r;
    }
    // other quadratic fields: strip the rational square content of (x, y)
    Int dx = denominator(e.x()), dy = denominator(e.y());
    Int d = lcm(dx, dy);
    Int nx = numerator(Rational(e.x() * d)), ny = numerator(Rational(e.y() * d));
    Int g = gcd(nx, ny);
    Int r = squarefree_part(Rational(g)).w.convert_to<Int>();
    return QuadFieldElement(e.x() * d * d / (r * r), e.y() * d * d / (r * r), f);
}

}  // namespace

SquareClass::SquareClass(const QuadFieldElement& e) : rep_(1), trivial_(false) {
    if (e.is_zero()) throw std::invalid_argument("SquareClass: zero element");
    trivial_ = e.sqrt_in_field().has_value();
    rep_ = trivial_ ? promote(QuadFieldElement(1), e.field()) : reduce_rep(e);
}

bool operator==(const SquareClass& a, const SquareClass& b) {
    if (a.trivial_ || b.trivial_) return a.trivial_ == b.trivial_;
    return (a.rep_ * b.rep_).sqrt_in_field().has_value();
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    return SquareClass(a.rep_ * b.rep_);
}

bool MultiquadraticField::contains(const SquareClass& c) const {
    if (c.is_trivial()) return true;
    std::size_t t = gens_.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << t); ++mask) {
        QuadFieldElement prod = promote(QuadFieldElement(1), base_);
        for (std::size_t i = 0; i < t; ++i)
            if (mask & (std::size_t(1) << i)) prod = prod * gens_[i].representative();
        if ((prod * c.representative()).sqrt_in_field()) return true;
    }
    return false;
}

bool MultiquadraticField::adjoin(const SquareClass& c) {
    if (contains(c)) return false;
    gens_.push_back(c);
    return true;
}

Int MultiquadraticField::degree() const {
    Int d = 1;
    for (std::size_t i = 0; i < gens_.size(); ++i) d *= 2;
    return d;
}

bool MultiquadraticField::operator==(const MultiquadraticField& other) const {
    if (!(base_ == other.base_) || degree() != other.degree()) return false;
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string MultiquadraticField::str() const {
    std::string b = base_.is_rational() ? "Q" : "Q(sqrt(" + base_.m().str() + "))";
    if (gens_.empty()) return b;
    std::string s = b + "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += "sqrt(" + gens_[i].str() + ")";
    }
    return s + ")";
}

std::vector<std::string> f2_support(const QuadFieldElement& e) {
    std::vector<std::string> keys;
    if (e.field().is_rational()) {
        Rational q = e.x();
        Factorization f = factorize(numerator(q) * denominator(q));
        if (f.sign < 0) keys.push_back("-1");
        for (const auto& [p, exp] : f.factors)
            if (exp % 2) keys.push_back(p.str());
        return keys;
    }
    if (e.field().m() != 2)
        throw std::invalid_argument("f2_support: only Q and Q(sqrt 2) are supported");
    Zsqrt2ClassVector v = factor_Zsqrt2_mod_squares(e);
    if (v.sign) keys.push_back("-1");
    if (v.unit) keys.push_back("u");
    for (const auto& [key, on] : v.primes) {
        if (!on) continue;
        const auto& [p, t] = key;
        keys.push_back(t == 0 ? p.str() : p.str() + ":" + t.str());
    }
    return keys;
}

std::size_t f2_rank(const std::vector<QuadFieldElement>& gens) {
    std::map<std::string, std::set<std::string>> basis;  // pivot -> vector
    std::size_t rank = 0;
    for (const auto& g : gens) {
        auto keys = f2_support(g);
        std::set<std::string> v(keys.begin(), keys.end());
        while (!v.empty()) {
            auto it = basis.find(*v.begin());
            if (it == basis.end()) break;
            std::set<std::string> nv;
            std::set_symmetric_difference(v.begin(), v.end(), it->second.begin(),
                                          it->second.end(), std::inserter(nv, nv.begin()));
            v = std::move(nv);
        }
        if (!v.empty()) {
            basis[*v.begin()] = v;
            ++rank;
        }
    }
    return rank;
}

}  // namespace traceforge
