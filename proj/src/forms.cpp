#include "traceforge/forms.hpp"

#include "traceforge/places.hpp"
#include "traceforge/zsqrt2.hpp"

#include <algorithm>
#include <stdexcept>

namespace traceforge {

DiagonalForm::DiagonalForm(FieldDescriptor field, std::vector<QuadFieldElement> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("DiagonalForm: empty");
    for (auto& e : entries_) {
        e = promote(e, field_);
        if (e.is_zero()) throw std::invalid_argument("DiagonalForm: zero entry (degenerate)");
    }
}

std::string DiagonalForm::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ", ";
        s += entries_[i].str();
    }
    return s + ">";
}

DiagonalForm scale_form(const QuadFieldElement& a, const DiagonalForm& f) {
    if (a.is_zero()) throw std::invalid_argument("scale_form: zero scalar");
    std::vector<QuadFieldElement> e;
    e.reserve(f.rank());
    for (const auto& d : f.entries()) e.push_back(promote(a, f.field()) * d);
    return DiagonalForm(f.field(), std::move(e));
}

DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g) {
    if (!(f.field() == g.field()))
        throw std::invalid_argument("orthogonal_sum: mixed fields");
    std::vector<QuadFieldElement> e = f.entries();
    e.insert(e.end(), g.entries().begin(), g.entries().end());
    return DiagonalForm(f.field(), std::move(e));
}

namespace {

QuadFieldElement det(Matrix<QuadFieldElement> a) {
    std::size_t n = a.rows();
    QuadFieldElement d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return QuadFieldElement(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d = d * a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            QuadFieldElement c = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - c * a(col, j);
        }
    }
    return d;
}

}  // namespace

GramForm::GramForm(FieldDescriptor field, Matrix<QuadFieldElement> m)
    : field_(std::move(field)), matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        throw std::invalid_argument("GramForm: not square");
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(matrix_(i, j) == matrix_(j, i)))
                throw std::invalid_argument("GramForm: not symmetric");
    if (det(matrix_).is_zero()) throw std::invalid_argument("GramForm: degenerate");
}

Diagonalization diagonalize(const GramForm& gf) {
    std::size_t n = gf.matrix().rows();
    Matrix<QuadFieldElement> g = gf.matrix();
    Matrix<QuadFieldElement> t =
        Matrix<QuadFieldElement>::identity(n, promote(QuadFieldElement(1), gf.field()));

    // simultaneous column op on g (both sides) and t
    auto add_col = [&](std::size_t dst, std::size_t src, const QuadFieldElement& c) {
        for (std::size_t i = 0; i < n; ++i) g(i, dst) = g(i, dst) + c * g(i, src);
        for (std::size_t j = 0; j < n; ++j) g(dst, j) = g(dst, j) + c * g(src, j);
        for (std::size_t i = 0; i < n; ++i) t(i, dst) = t(i, dst) + c * t(i, src);
    };
    auto swap_col = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(t(i, a), t(i, b));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (g(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && g(j, j).is_zero()) ++j;
            if (j < n) {
                swap_col(k, j);
            } else {
                for (j = k + 1; j < n && g(k, j).is_zero(); ++j) {}
                if (j == n) throw std::invalid_argument("diagonalize: degenerate input");
                add_col(k, j, QuadFieldElement(1));  // g(k,k) becomes 2*g(k,j) != 0
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (g(k, j).is_zero()) continue;
            add_col(j, k, -(g(k, j) / g(k, k)));
        }
    }
    std::vector<QuadFieldElement> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(g(i, i));
    return {DiagonalForm(gf.field(), std::move(d)), std::move(t)};
}

SquareClass discriminant(const DiagonalForm& f) {
    QuadFieldElement prod = promote(QuadFieldElement(1), f.field());
    for (const auto& e : f.entries()) prod = prod * e;
    return SquareClass(prod);
}

std::pair<int, int> signature(const DiagonalForm& f, Embedding emb) {
    if (emb == Embedding::Conjugate && f.field().is_rational())
        throw std::invalid_argument("signature: Q has no conjugate embedding");
    int pos = 0, neg = 0;
    for (const auto& e : f.entries()) {
        int s = emb == Embedding::Id ? e.sign() : e.sign_conjugate();
        (s > 0 ? pos : neg)++;
    }
    return {pos, neg};
}

bool admissible(const DiagonalForm& f) {
    auto [pos, neg] = signature(f, Embedding::Id);
    if (!(pos == int(f.rank()) - 1 && neg == 1)) return false;
    if (f.field().is_rational()) return true;
    auto [cp, cn] = signature(f, Embedding::Conjugate);
    return cp == int(f.rank()) && cn == 0;
}

bool is_equivalent(const EquivalenceVerdict& v) {
    return std::holds_alternative<Equivalent>(v);
}

std::string verdict_str(const EquivalenceVerdict& v) {
    if (std::holds_alternative<Equivalent>(v)) return "equivalent";
    if (auto* i = std::get_if<Inequivalent>(&v)) return "inequivalent: " + i->witness;
    return "unknown: " + std::get<Unknown>(v).reason;
}

namespace {

std::vector<Rational> rational_entries(const DiagonalForm& f) {
    std::vector<Rational> out;
    for (const auto& e : f.entries()) {
        if (!e.is_rational_value())
            throw std::invalid_argument("expected a form over Q");
        out.push_back(e.x());
    }
    return out;
}

}  // namespace

EquivalenceVerdict equivalent_Q(const DiagonalForm& f, const DiagonalForm& g) {
    if (!(f.field() == g.field()) || !f.field().is_rational())
        throw std::invalid_argument("equivalent_Q: both forms must be over Q");
    if (f.rank() != g.rank())
        return Inequivalent{"rank " + std::to_string(f.rank()) + " vs " +
                            std::to_string(g.rank())};
    auto sf = signature(f), sg = signature(g);
    if (sf != sg)
        return Inequivalent{"signature (" + std::to_string(sf.first) + "," +
                            std::to_string(sf.second) + ") vs (" + std::to_string(sg.first) +
                            "," + std::to_string(sg.second) + ")"};
    Int df = hasse_profile(f).disc, dg = hasse_profile(g).disc;
    if (df != dg)
        return Inequivalent{"discriminant class " + df.str() + " vs " + dg.str()};
    std::vector<Rational> vals = rational_entries(f);
    for (const auto& q : rational_entries(g)) vals.push_back(q);
    for (const Place& v : relevant_places(vals)) {
        int ef = hasse_invariant(f, v), eg = hasse_invariant(g, v);
        if (ef != eg)
            return Inequivalent{"Hasse invariant at " + v.str() + ": " +
                                std::to_string(ef) + " vs " + std::to_string(eg)};
    }
    return Equivalent{};
}

SimilarityResult similar_Q(const DiagonalForm& f, const DiagonalForm& g) {
    if (f.rank() != g.rank())
        return {std::nullopt, Inequivalent{"rank mismatch"}};
    // even rank: disc(lambda*g) = disc(g), so a class mismatch refutes similarity
    if (f.rank() % 2 == 0) {
        Int df = hasse_profile(f).disc, dg = hasse_profile(g).disc;
        if (df != dg)
            return {std::nullopt,
                    Inequivalent{"even rank forces equal discriminant classes: " + df.str() +
                                 " vs " + dg.str()}};
    }
    std::vector<Rational> vals = rational_entries(f);
    for (const auto& q : rational_entries(g)) vals.push_back(q);
    std::vector<Int> primes;
    for (const Place& v : relevant_places(vals))
        if (!v.is_real()) primes.push_back(v.prime());

    std::vector<Rational> candidates;
    for (std::size_t mask = 0; mask < (std::size_t(1) << primes.size()); ++mask) {
        Int lam = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t(1) << i)) lam *= primes[i];
        candidates.push_back(Rational(lam));
        candidates.push_back(Rational(-lam));
    }
    std::sort(candidates.begin(), candidates.end(), [](const Rational& a, const Rational& b) {
        return abs(a) != abs(b) ? abs(a) < abs(b) : a > b;
    });
    for (const Rational& lam : candidates) {
        if (is_equivalent(equivalent_Q(f, scale_form(QuadFieldElement(lam), g))))
            return {lam, Equivalent{}};
    }
    return {std::nullopt, Unknown{"candidate scalars exhausted without structural refutation"}};
}

ScaledFamilyVerdict equivalent_scaled_family_Qsqrt2(const QuadFieldElement& a, int n,
                                                    int branch_sign) {
    ScaledFamilyVerdict out{Unknown{"unset"}, {}};
    auto refuse = [&](const std::string& why) {
        out.checks.push_back("refused: " + why);
        out.verdict = Unknown{why};
        return out;
    };
    if (n < 4 || n % 2 != 0) return refuse("n must be even and >= 4");
    int expected = (n % 4 == 0) ? -1 : 1;
    if (branch_sign != expected)
        return refuse("branch sign does not match n mod 4");
    out.checks.push_back(std::string("branch delta = ") + (branch_sign > 0 ? "+" : "-") +
                         "sqrt(2) matches n = " + std::to_string(n) + " mod 4");
    if (!a.is_totally_positive()) return refuse("scalar is not totally positive");
    out.checks.push_back("scalar is totally positive");

    // the scalar must generate a single prime of Z[sqrt 2] away from 2
    Zsqrt2ClassVector v = factor_Zsqrt2_mod_squares(a);
    if (v.primes.size() != 1)
        return refuse("scalar is not a prime element up to squares");
    auto [p, t] = v.primes.begin()->first;
    if (p == 2) return refuse("residue characteristic 2 is not a candidate");
    QuadPrimeElement prime{QuadFieldElement(1), Int(0), SplittingType::Inert, std::nullopt};
    bool got = false;
    for (const auto& pe : classify_prime_Zsqrt2(p)) {
        Int k2 = pe.residue_map ? *pe.residue_map : Int(0);
        if (k2 == t) {
            prime = pe;
            got = true;
        }
    }
    if (!got) return refuse("could not identify the prime above " + p.str());

    FieldDescriptor k = FieldDescriptor::real_quadratic(2);
    QuadFieldElement delta(0, Rational(branch_sign), k);
    if (!splits_in_sqrt_ext(prime, delta))
        return refuse("prime does not split in the sqrt(" + delta.str() + ") extension");
    out.checks.push_back("residue field of " + prime.str() + " contains sqrt(" + delta.str() +
                         ")");

    out.checks.push_back("rank " + std::to_string(n) +
                         " is even: discriminant classes of a*f0 and f0 agree");
    out.checks.push_back("scaled Hasse invariant collapses to (" + delta.str() +
                         ", a)_v = +1 at every place");
    out.verdict = Equivalent{};
    return out;
}

}  // namespace traceforge
