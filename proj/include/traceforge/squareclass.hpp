#pragma once

#include "traceforge/quadfield.hpp"

#include <string>
#include <vector>

namespace traceforge {

// An element of k*/(k*)^2, stored through a reduced representative.
// Over Q the representative is the squarefree integer with the sign of the
// input; over Q(sqrt(m)) representatives of the shape s*(sqrt m)^e are
// canonicalized to that shape and everything else keeps a normalized element.
class SquareClass {
public:
    explicit SquareClass(const QuadFieldElement& e);

    const QuadFieldElement& representative() const { return rep_; }
    const FieldDescriptor& field() const { return rep_.field(); }
    bool is_trivial() const { return trivial_; }

    friend bool operator==(const SquareClass& a, const SquareClass& b);
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);

    std::string str() const { return trivial_ ? "1" : rep_.str(); }

private:
    QuadFieldElement rep_;
    bool trivial_;
};

// K = base(sqrt(g_1), ..., sqrt(g_s)) with the stored generators reduced to
// an F2-independent set.
class MultiquadraticField {
public:
    explicit MultiquadraticField(FieldDescriptor base) : base_(std::move(base)) {}

    const FieldDescriptor& base() const { return base_; }
    const std::vector<SquareClass>& generators() const { return gens_; }

    // Adjoins sqrt of the class; no-op if already contained. Returns whether
    // the degree grew.
    bool adjoin(const SquareClass& c);
    bool contains(const SquareClass& c) const;

    Int degree() const;  // 2^(number of independent generators)

    bool operator==(const MultiquadraticField& other) const;
    std::string str() const;

private:
    FieldDescriptor base_;
    std::vector<SquareClass> gens_;
};

inline Int field_degree(const MultiquadraticField& k) { return k.degree(); }

// F2 support vector of a square class over the basis {-1} u {primes} for Q,
// extended by {fundamental unit} u {primes of Z[sqrt 2]} for Q(sqrt 2).
// Keys: "-1", "u", "p" (rational prime), "p:t" (prime of Z[sqrt 2] with
// residue map sqrt 2 -> t). Only fields Q and Q(sqrt 2) are supported; the
// subset-product reduction above never needs this and works for any m.
std::vector<std::string> f2_support(const QuadFieldElement& e);

// Rank of the span of the generators' support vectors; a cross-check for
// MultiquadraticField::degree on supported fields.
std::size_t f2_rank(const std::vector<QuadFieldElement>& gens);

}  // namespace traceforge
