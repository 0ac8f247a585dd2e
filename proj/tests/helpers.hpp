#pragma once

#include "traceforge/quadfield.hpp"
#include "traceforge/forms.hpp"

#include <random>

namespace tftest {

using traceforge::Int;
using traceforge::Rational;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240814);
    return gen;
}

inline long rand_long(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// Random nonzero rational with |numerator| <= num_bound, denominator <= den_bound.
inline Rational rand_rational(long num_bound, long den_bound) {
    long n = 0;
    while (n == 0) n = rand_long(-num_bound, num_bound);
    return Rational(Int(n), Int(rand_long(1, den_bound)));
}

inline Rational rand_positive_rational(long num_bound, long den_bound) {
    return Rational(Int(rand_long(1, num_bound)), Int(rand_long(1, den_bound)));
}

inline traceforge::DiagonalForm rand_form_Q(std::size_t rank, long num_bound = 20,
                                            long den_bound = 6) {
    std::vector<traceforge::QuadFieldElement> entries;
    for (std::size_t i = 0; i < rank; ++i)
        entries.emplace_back(rand_rational(num_bound, den_bound));
    return traceforge::DiagonalForm(traceforge::FieldDescriptor::rationals(),
                                    std::move(entries));
}

}  // namespace tftest
