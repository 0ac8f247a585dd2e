#include "traceforge/zsqrt2.hpp"

#include "traceforge/places.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace traceforge {

namespace {

const FieldDescriptor& qsqrt2() {
    static const FieldDescriptor f = FieldDescriptor::real_quadratic(2);
    return f;
}

QuadFieldElement make(const Int& x, const Int& y) {
    return QuadFieldElement(Rational(x), Rational(y), qsqrt2());
}

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? std::optional<Int>(r) : std::nullopt;
}

}  // namespace

std::string QuadPrimeElement::str() const {
    std::string s = pi.str() + " over " + rational_prime.str();
    switch (splitting_type) {
        case SplittingType::Split: s += " (split, sqrt2->" + residue_map->str() + ")"; break;
        case SplittingType::Inert: s += " (inert)"; break;
        case SplittingType::Ramified: s += " (ramified)"; break;
    }
    return s;
}

std::vector<QuadPrimeElement> classify_prime_Zsqrt2(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("classify_prime_Zsqrt2: p must be prime");
    if (p == 2)
        return {QuadPrimeElement{make(0, 1), p, SplittingType::Ramified, Int(0)}};
    Int r = p % 8;
    if (r != 1 && r != 7)
        return {QuadPrimeElement{make(p, 0), p, SplittingType::Inert, std::nullopt}};

    Int t = 0;
    for (Int c = 1; c < p; ++c)
        if ((c * c) % p == 2 % p) {
            t = c;
            break;
        }
    if (t == 0) throw std::logic_error("classify_prime_Zsqrt2: no sqrt of 2 mod split prime");

    // pi = x + y sqrt(2) with x^2 - 2 y^2 = +-p, found by bounded search
    Int px = 0, py = 0;
    bool found = false;
    for (Int y = 0; y <= p && !found; ++y) {
        for (int s : {1, -1}) {
            if (auto x = int_sqrt_exact(2 * y * y + s * p)) {
                px = *x;
                py = y;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::logic_error("classify_prime_Zsqrt2: no element of norm +-p");

    auto residue_of = [&](const Int& x, const Int& y, const Int& cand) {
        Int v = (x + y * cand) % p;
        return v == 0 || v == p || v == -p;
    };
    QuadPrimeElement a{make(px, py), p, SplittingType::Split, t};
    QuadPrimeElement b{make(px, -py), p, SplittingType::Split, p - t};
    if (!residue_of(px, py, t)) std::swap(a.pi, b.pi);
    if (*a.residue_map > *b.residue_map) std::swap(a, b);
    return {a, b};
}

namespace {

// (a + bX)^e in F_p[X]/(X^2 - 2).
std::pair<Int, Int> fp2_pow(std::pair<Int, Int> base, Int e, const Int& p) {
    std::pair<Int, Int> r{1, 0};
    auto mul = [&](const std::pair<Int, Int>& u, const std::pair<Int, Int>& v) {
        return std::pair<Int, Int>{(u.first * v.first + 2 * u.second * v.second) % p,
                                   (u.first * v.second + u.second * v.first) % p};
    };
    while (e > 0) {
        if (e % 2 == 1) r = mul(r, base);
        base = mul(base, base);
        e /= 2;
    }
    r.first = (r.first % p + p) % p;
    r.second = (r.second % p + p) % p;
    return r;
}

}  // namespace

bool splits_in_sqrt_ext(const QuadPrimeElement& pi, const QuadFieldElement& delta) {
    if (pi.rational_prime == 2)
        throw std::invalid_argument("splits_in_sqrt_ext: residue characteristic 2");
    if (delta.x() != 0 || (delta.y() != 1 && delta.y() != -1))
        throw std::invalid_argument("splits_in_sqrt_ext: delta must be +-sqrt(2)");
    const Int& p = pi.rational_prime;
    if (pi.splitting_type == SplittingType::Split) {
        Int r = (delta.y() > 0 ? *pi.residue_map : p - *pi.residue_map) % p;
        return legendre(r, p) == 1;
    }
    // inert: delta reduces to +-X in F_p[X]/(X^2-2)
    Int c = delta.y() > 0 ? Int(1) : Int(p - 1);
    auto v = fp2_pow({0, c}, (p * p - 1) / 2, p);
    return v == std::pair<Int, Int>{1, 0};
}

namespace {

std::optional<QuadFieldElement> totally_positive_unit_adjust(const QuadFieldElement& g) {
    const QuadFieldElement u = make(1, 1);          // fundamental unit 1+sqrt(2)
    const QuadFieldElement uinv = make(-1, 1);
    for (int j = -8; j <= 8; ++j) {
        QuadFieldElement v = g;
        for (int i = 0; i < j; ++i) v = v * u;
        for (int i = 0; i > j; --i) v = v * uinv;
        if (v.is_totally_positive()) return v;
        if ((-v).is_totally_positive()) return -v;
    }
    return std::nullopt;
}

}  // namespace

SplitPrimeSearch find_split_primes(const QuadFieldElement& delta, std::size_t count,
                                   const Int& norm_bound) {
    SplitPrimeSearch out;
    if (count == 0) return out;
    for (Int p = 3; p <= norm_bound; ++p) {
        if (!is_prime(p)) continue;
        for (const auto& pe : classify_prime_Zsqrt2(p)) {
            if (pe.splitting_type == SplittingType::Inert && p * p > norm_bound) continue;
            if (!splits_in_sqrt_ext(pe, delta)) continue;
            auto gen = totally_positive_unit_adjust(pe.pi);
            if (!gen)
                throw std::runtime_error("find_split_primes: no totally positive generator in unit window");
            out.primes.push_back({pe, *gen});
            if (out.primes.size() == count) return out;
        }
    }
    out.truncated = true;
    return out;
}

Zsqrt2ClassVector factor_Zsqrt2_mod_squares(const QuadFieldElement& e) {
    if (e.is_zero()) throw std::invalid_argument("factor_Zsqrt2_mod_squares: zero input");
    QuadFieldElement v = promote(e, qsqrt2());
    // clear denominators by the square of the lcm, which is class-invariant
    Int d = lcm(denominator(v.x()), denominator(v.y()));
    v = v * QuadFieldElement(Rational(d * d));

    Zsqrt2ClassVector out;
    auto toggle = [](bool& b) { b = !b; };

    Int x = numerator(v.x()), y = numerator(v.y());
    auto divisible_by = [&](const QuadFieldElement& pi) -> std::optional<QuadFieldElement> {
        QuadFieldElement q = QuadFieldElement(Rational(x), Rational(y), qsqrt2()) / pi;
        if (denominator(q.x()) == 1 && denominator(q.y()) == 1) return q;
        return std::nullopt;
    };

    Int n = x * x - 2 * y * y;
    Factorization nf = factorize(n);
    for (const auto& [p, exp] : nf.factors) {
        if (p == 2) {
            // divide by sqrt(2) while possible
            while (true) {
                if (x % 2 != 0) break;
                Int nx = y, ny = x / 2;
                x = nx;
                y = ny;
                auto it = out.primes.find({Int(2), Int(0)});
                out.primes[{Int(2), Int(0)}] = !(it != out.primes.end() && it->second);
            }
            continue;
        }
        for (const auto& pe : classify_prime_Zsqrt2(p)) {
            Int key2 = pe.residue_map ? *pe.residue_map : Int(0);
            while (auto q = divisible_by(pe.pi)) {
                x = numerator(q->x());
                y = numerator(q->y());
                auto it = out.primes.find({p, key2});
                out.primes[{p, key2}] = !(it != out.primes.end() && it->second);
            }
        }
    }
    // remainder is a unit +-(1+sqrt 2)^j
    const QuadFieldElement uinv = make(-1, 1), u = make(1, 1);
    while (!(y == 0 && (x == 1 || x == -1))) {
        QuadFieldElement w = QuadFieldElement(Rational(x), Rational(y), qsqrt2());
        QuadFieldElement a = w * u, b = w * uinv;
        auto mag = [](const QuadFieldElement& z) -> Int {
            return abs(numerator(z.x())) + abs(numerator(z.y()));
        };
        QuadFieldElement next = mag(a) < mag(b) ? a : b;
        if (mag(next) >= abs(x) + abs(y))
            throw std::logic_error("factor_Zsqrt2_mod_squares: remainder is not a unit");
        x = numerator(next.x());
        y = numerator(next.y());
        toggle(out.unit);
    }
    if (x == -1) toggle(out.sign);
    // drop canceled entries
    for (auto it = out.primes.begin(); it != out.primes.end();)
        it = it->second ? ++it : out.primes.erase(it);
    return out;
}

}  // namespace traceforge
