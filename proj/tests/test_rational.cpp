#include "traceforge/rational.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace traceforge;

namespace {

// Independent trial-division oracle, deliberately naive.
Factorization trial_division(Int n) {
    Factorization f;
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.push_back({p, e});
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

bool is_prime_naive(const Int& n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorize agrees with trial division") {
    for (int i = 0; i < 200; ++i) {
        Int n = tftest::rand_long(-1000000, 1000000);
        if (n == 0) continue;
        Factorization a = factorize(n), b = trial_division(n);
        CHECK(a.sign == b.sign);
        CHECK(a.factors == b.factors);
        CHECK(a.reconstruct() == n);
    }
}

TEST_CASE("factorize handles factors beyond the trial-division cutoff") {
    Int p = 1000003, q = 1000033;
    Factorization f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned>{p, 1});
    CHECK(f.factors[1] == std::pair<Int, unsigned>{q, 1});
    CHECK(factorize(p * p).factors == std::vector<std::pair<Int, unsigned>>{{p, 2}});
}

TEST_CASE("factorize rejects zero") {
    CHECK_THROWS_AS(factorize(Int(0)), std::invalid_argument);
}

TEST_CASE("is_prime agrees with the naive test") {
    for (Int n = 0; n < 2000; ++n) CHECK(is_prime(n) == is_prime_naive(n));
    CHECK(is_prime(Int("1000000007")));
    CHECK_FALSE(is_prime(Int("1000000007") * 3));
}

TEST_CASE("squarefree_part: q = s * w^2 with s squarefree") {
    for (int i = 0; i < 300; ++i) {
        Rational q = tftest::rand_rational(5000, 500);
        SquarefreeSplit sp = squarefree_part(q);
        CHECK(Rational(sp.s) * sp.w * sp.w == q);
        for (const auto& [p, e] : trial_division(sp.s).factors) CHECK(e == 1);
        CHECK(((sp.s > 0) == (q > 0)));
    }
    CHECK(squarefree_part(Rational(49, 4)).s == 1);
    CHECK(squarefree_part(Rational(-18)).s == -2);
}

TEST_CASE("padic_valuation matches repeated division") {
    for (int i = 0; i < 200; ++i) {
        Rational q = tftest::rand_rational(5000, 500);
        for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
            long v = padic_valuation(q, p);
            // strip p from numerator and denominator by hand
            Int num = numerator(q), den = denominator(q);
            long vn = 0, vd = 0;
            while (num % p == 0) {
                num /= p;
                ++vn;
            }
            while (den % p == 0) {
                den /= p;
                ++vd;
            }
            CHECK(v == vn - vd);
        }
    }
}

TEST_CASE("rational string round-trip") {
    for (int i = 0; i < 200; ++i) {
        Rational q = tftest::rand_rational(100000, 9999);
        CHECK(parse_rational(to_string(q)) == q);
    }
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("0") == 0);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("primes_in_class returns the first primes in the class") {
    std::vector<Int> got = primes_in_class(4, 1, 5);
    CHECK(got == std::vector<Int>{5, 13, 17, 29, 37});
    for (const auto& p : got) {
        CHECK(is_prime_naive(p));
        CHECK(p % 4 == 1);
    }
    CHECK(primes_in_class(8, 7, 3) == std::vector<Int>{7, 23, 31});
}
