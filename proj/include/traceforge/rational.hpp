#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace traceforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Signed prime factorization: sign * prod(p_i^e_i), primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    Int reconstruct() const;
};

bool is_prime(const Int& n);

// Trial division up to 10^6, Pollard rho beyond. Rejects n = 0.
Factorization factorize(const Int& n);

// q = s * w^2 with s squarefree, sign(s) = sign(q).
struct SquarefreeSplit {
    Int s;
    Rational w;
};
SquarefreeSplit squarefree_part(const Rational& q);

// v_p(q); q != 0, p prime.
long padic_valuation(const Rational& q, const Int& p);

// Exact decimal-string serialization, "p" or "p/q".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// First `count` primes satisfying pred-style congruence p % mod == rem.
std::vector<Int> primes_in_class(const Int& mod, const Int& rem, std::size_t count);

}  // namespace traceforge
