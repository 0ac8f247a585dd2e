#include "traceforge/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <stdexcept>

namespace traceforge {

namespace mp = boost::multiprecision;

Int Factorization::reconstruct() const {
    Int r = sign;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    // deterministic for 64-bit inputs with this many rounds; inputs here are tiny
    return mp::miller_rabin_test(n, 32);
}

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n_in) {
    if (n_in == 0) throw std::invalid_argument("factorize: zero input");
    Factorization f;
    Int n = n_in;
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    std::map<Int, unsigned> acc;
    for (Int p = 2; p <= 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    factor_into(n, acc);
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

SquarefreeSplit squarefree_part(const Rational& q) {
    if (q == 0) throw std::invalid_argument("squarefree_part: zero input");
    // q = num/den = (num*den) / den^2, so the square class is that of num*den.
    Int num = numerator(q), den = denominator(q);
    Factorization f = factorize(num * den);
    Int s = f.sign, root = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) root *= p;
    }
    return {s, Rational(root, den)};
}

long padic_valuation(const Rational& q, const Int& p) {
    if (q == 0) throw std::invalid_argument("padic_valuation: zero input");
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
    long v = 0;
    Int num = numerator(q), den = denominator(q);
    while (num % p == 0) {
        ++v;
        num /= p;
    }
    while (den % p == 0) {
        --v;
        den /= p;
    }
    return v;
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("parse_rational: bad input '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::vector<Int> primes_in_class(const Int& mod, const Int& rem, std::size_t count) {
    std::vector<Int> out;
    for (Int p = 2; out.size() < count; ++p)
        if (p % mod == rem && is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace traceforge
