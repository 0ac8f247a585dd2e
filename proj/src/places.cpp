#include "traceforge/places.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace traceforge {

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("Place: p must be prime");
    return Place(p);
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace {

// a = p^v * u with u a p-adic unit; returns the Legendre symbol of u at odd p
// (using u = num * den mod p, den^2 being a square).
int unit_legendre(const Rational& a, const Int& p) {
    long v = padic_valuation(a, p);
    Rational u = a;
    for (; v > 0; --v) u /= p;
    for (; v < 0; ++v) u *= p;
    return legendre(numerator(u) * denominator(u), p);
}

// Odd part of the rational unit a (v_2(a) = 0) reduced mod 8.
Int unit_mod8(const Rational& a) {
    Int r = (numerator(a) * denominator(a)) % 8;
    if (r < 0) r += 8;
    return r;
}

int eps4(const Int& u) { return ((u - 1) / 2) % 2 != 0 ? 1 : 0; }   // u = 3,7 mod 8 -> 1
int omega8(const Int& u) { return (u == 3 || u == 5) ? 1 : 0; }     // (u^2-1)/8 mod 2

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.prime();
    long alpha = padic_valuation(a, p), beta = padic_valuation(b, p);
    if (p != 2) {
        int s = 1;
        if (beta % 2) s *= unit_legendre(a, p);
        if (alpha % 2) s *= unit_legendre(b, p);
        if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 != 0) s = -s;
        return s;
    }
    Rational ua = a, ub = b;
    for (long i = 0; i < alpha; ++i) ua /= 2;
    for (long i = 0; i > alpha; --i) ua *= 2;
    for (long i = 0; i < beta; ++i) ub /= 2;
    for (long i = 0; i > beta; --i) ub *= 2;
    Int u = unit_mod8(ua), w = unit_mod8(ub);
    long e = eps4(u) * eps4(w);
    if (alpha % 2) e += omega8(w);
    if (beta % 2) e += omega8(u);
    return e % 2 ? -1 : 1;
}

namespace {

Rational rational_entry(const QuadFieldElement& e) {
    if (!e.is_rational_value())
        throw std::invalid_argument("expected a form over Q");
    return e.x();
}

}  // namespace

int hasse_invariant(const DiagonalForm& f, const Place& v) {
    std::vector<Rational> d;
    d.reserve(f.rank());
    for (const auto& e : f.entries()) d.push_back(rational_entry(e));
    int s = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) s *= hilbert_symbol(d[i], d[j], v);
    return s;
}

int scaled_hasse_formula(const Rational& a, int n, const Place& v) {
    if (a == 0) throw std::invalid_argument("scaled_hasse_formula: zero scalar");
    if (n < 2) throw std::invalid_argument("scaled_hasse_formula: n must be >= 2");
    long e1 = (long(n) - 1) * (long(n) - 2) / 2;
    int s = 1;
    if (e1 % 2) s *= hilbert_symbol(a, a, v);
    if ((n - 1) % 2) s *= hilbert_symbol(a, -a, v);
    return s;
}

std::set<Place> relevant_places(const std::vector<Rational>& values) {
    std::set<Place> out{Place::real(), Place::finite(2)};
    for (const auto& q : values) {
        if (q == 0) continue;
        for (const Int& part : {numerator(q), denominator(q)}) {
            Factorization f = factorize(part);
            for (const auto& [p, e] : f.factors) out.insert(Place::finite(p));
        }
    }
    return out;
}

HasseProfile hasse_profile(const DiagonalForm& f) {
    HasseProfile prof;
    prof.rank = int(f.rank());
    std::vector<Rational> d;
    for (const auto& e : f.entries()) d.push_back(rational_entry(e));
    Rational prod = 1;
    int pos = 0, neg = 0;
    for (const auto& q : d) {
        prod *= q;
        (q > 0 ? pos : neg)++;
    }
    prof.sig = {pos, neg};
    prof.disc = squarefree_part(prod).s;
    for (const Place& v : relevant_places(d))
        if (hasse_invariant(f, v) == -1) prof.minus_places.push_back(v);
    return prof;
}

}  // namespace traceforge
