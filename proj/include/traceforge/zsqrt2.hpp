#pragma once

#include "traceforge/quadfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace traceforge {

enum class SplittingType { Split, Inert, Ramified };

// A prime of Z[sqrt 2] above the rational prime p. For split and ramified
// primes the residue field is F_p and residue_map records t with
// sqrt 2 -> t (mod p); inert primes have residue field F_{p^2}.
struct QuadPrimeElement {
    QuadFieldElement pi;        // a generator (not necessarily totally positive)
    Int rational_prime;
    SplittingType splitting_type;
    std::optional<Int> residue_map;

    std::string str() const;
};

// Splitting of p in Z[sqrt 2]: split iff p = +-1 (mod 8), ramified iff p = 2,
// inert otherwise. Split p returns both primes above it, ordered by residue map.
std::vector<QuadPrimeElement> classify_prime_Zsqrt2(const Int& p);

// Whether delta in {+-sqrt 2} is a square in the residue field of pi.
// Residue characteristic 2 is rejected.
bool splits_in_sqrt_ext(const QuadPrimeElement& pi, const QuadFieldElement& delta);

struct SplitPrimeSearch {
    struct Hit {
        QuadPrimeElement prime;
        QuadFieldElement generator;  // totally positive generator
    };
    std::vector<Hit> primes;
    bool truncated = false;  // ran out of norm budget before `count` hits
};

// First `count` primes of Z[sqrt 2] (ordered by rational prime, then residue
// map) whose residue field contains a square root of delta, each with a
// totally positive generator found within a bounded window of unit powers.
SplitPrimeSearch find_split_primes(const QuadFieldElement& delta, std::size_t count,
                                   const Int& norm_bound);

// Factorization in Z[sqrt 2] up to squares: exponent-mod-2 of the sign, the
// fundamental unit 1+sqrt 2, and prime elements. Input may have denominators
// (they differ from an integral element by a square).
struct Zsqrt2ClassVector {
    bool sign = false;  // -1 component
    bool unit = false;  // 1+sqrt(2) component
    std::map<std::pair<Int, Int>, bool> primes;  // key (p, residue map or 0)
};
Zsqrt2ClassVector factor_Zsqrt2_mod_squares(const QuadFieldElement& e);

}  // namespace traceforge
