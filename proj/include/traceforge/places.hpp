#pragma once

#include "traceforge/forms.hpp"
#include "traceforge/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace traceforge {

// A place of Q: the real place or a finite prime.
class Place {
public:
    static Place real() { return Place(Int(0)); }
    static Place finite(const Int& p);

    bool is_real() const { return p_ == 0; }
    const Int& prime() const { return p_; }

    bool operator<(const Place& o) const { return p_ < o.p_; }
    bool operator==(const Place&) const = default;
    std::string str() const { return is_real() ? "inf" : p_.str(); }

private:
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_;
};

// Legendre symbol (a/p), p an odd prime; Euler criterion with fast powmod.
int legendre(const Int& a, const Int& p);

// Hilbert symbol (a,b)_v over Q_v via the classical valuation/unit formulas.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// epsilon_v(f) = prod_{i<j} (d_i, d_j)_v for a nondegenerate diagonal f over Q.
int hasse_invariant(const DiagonalForm& f, const Place& v);

// Closed form for epsilon_v(a * <-1,1,...,1>) in n variables:
// (a,a)_v^{(n-1)(n-2)/2} * (a,-a)_v^{n-1}.
int scaled_hasse_formula(const Rational& a, int n, const Place& v);

struct HasseProfile {
    int rank = 0;
    std::pair<int, int> sig;      // (pos, neg)
    Int disc;                     // squarefree discriminant class
    std::vector<Place> minus_places;
};

HasseProfile hasse_profile(const DiagonalForm& f);

// Places that can carry a nontrivial symbol for these rationals:
// infinity, 2, and odd primes dividing a numerator or denominator.
std::set<Place> relevant_places(const std::vector<Rational>& values);

}  // namespace traceforge
