#include "traceforge/twist.hpp"

#include "traceforge/tower.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace traceforge {

namespace {

Matrix<QuadFieldElement> diag_matrix(const DiagonalForm& f) {
    std::size_t n = f.rank();
    Matrix<QuadFieldElement> d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = promote(f.entries()[i], f.field());
    return d;
}

Matrix<QuadFieldElement> promote_matrix(const Matrix<QuadFieldElement>& m,
                                        const FieldDescriptor& field) {
    Matrix<QuadFieldElement> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = promote(m(i, j), field);
    return r;
}

bool integral_matrix(const Matrix<QuadFieldElement>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integral(m(i, j))) return false;
    return true;
}

unsigned worker_count() {
    if (const char* env = std::getenv("TRACEFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

QuadFieldElement fundamental_unit(const FieldDescriptor& field) {
    const Int& m = field.m();
    if (m == 2)
        return QuadFieldElement(Rational(1), Rational(1), field);
    for (Int y = 1; y <= 200000; ++y) {
        Int t = m * y * y;
        for (int s : {-1, 1}) {
            Int target = t + s;
            if (target <= 0) continue;
            Int x = boost::multiprecision::sqrt(target);
            if (x * x == target && x > 0)
                return QuadFieldElement(Rational(x), Rational(y), field);
        }
    }
    throw std::runtime_error("fundamental_unit: no Pell solution within the search bound");
}

}  // namespace

bool is_integral(const QuadFieldElement& e) {
    using boost::multiprecision::denominator;
    if (e.field().is_rational()) return denominator(e.x()) == 1;
    Int r = e.field().m() % 4;
    if (r == 1)
        throw std::invalid_argument(
            "is_integral: ring of integers for m = 1 (mod 4) is not supported");
    return denominator(e.x()) == 1 && denominator(e.y()) == 1;
}

bool admissible_some_embedding(const DiagonalForm& f) {
    if (admissible(f)) return true;
    if (f.field().is_rational()) return false;
    auto [ip, in] = signature(f, Embedding::Id);
    auto [cp, cn] = signature(f, Embedding::Conjugate);
    return in == 0 && cn == 1;
}

std::vector<std::string> BlockCheck::failures() const {
    std::vector<std::string> r;
    if (!shapes_ok) r.push_back("shapes mismatch");
    if (!form_identity) r.push_back("q . A != d q");
    if (!square_identity) r.push_back("A^2 != d I");
    if (!square_orthogonal_integral) r.push_back("(1/d) A^2 not an integral isometry of q");
    return r;
}

BlockCheck verify_block(const DiagonalForm& q, const Matrix<QuadFieldElement>& a,
                        const QuadFieldElement& d) {
    BlockCheck c;
    std::size_t n = q.rank();
    if (a.rows() != n || a.cols() != n || n == 0) return c;
    QuadFieldElement dd = promote(d, q.field());
    if (dd.is_zero()) return c;
    c.shapes_ok = true;

    Matrix<QuadFieldElement> dm = diag_matrix(q);
    Matrix<QuadFieldElement> am = promote_matrix(a, q.field());
    c.form_identity = (am.transpose() * dm * am == dm.scaled(dd));

    QuadFieldElement one = promote(QuadFieldElement(1), q.field());
    Matrix<QuadFieldElement> sq = am * am;
    c.square_identity = (sq == Matrix<QuadFieldElement>::identity(n, one).scaled(dd));

    Matrix<QuadFieldElement> b = sq.scaled(dd.inverse());
    bool orth = (b.transpose() * dm * b == dm);
    bool integral;
    try {
        integral = integral_matrix(b);
    } catch (const std::invalid_argument&) {
        integral = false;
    }
    c.square_orthogonal_integral = orth && integral;
    return c;
}

std::string TwistBlock2::str() const {
    std::ostringstream os;
    os << q.str() << " with [[" << a(0, 0).str() << "," << a(0, 1).str() << "],["
       << a(1, 0).str() << "," << a(1, 1).str() << "]], d = " << d.str();
    return os.str();
}

Lemma61Outcome verify_lemma61(const DiagonalForm& f0, const QuadFieldElement& a,
                              const Matrix<QuadFieldElement>& a0) {
    std::size_t n = f0.rank();
    if (a0.rows() != n || a0.cols() != n)
        throw std::invalid_argument("verify_lemma61: A0 must be square of rank(f0)");
    QuadFieldElement aa = promote(a, f0.field());
    if (aa.is_zero()) throw std::invalid_argument("verify_lemma61: a must be nonzero");
    Matrix<QuadFieldElement> am = promote_matrix(a0, f0.field());

    MultiquadraticField field(f0.field());
    Lemma61Outcome out{TwistCertificate{f0, aa, am, TwistChecks{}, field}, {}};
    TwistChecks& c = out.certificate.checks;

    Matrix<QuadFieldElement> dm = diag_matrix(f0);
    c.condition1 = (am.transpose() * dm * am == dm.scaled(aa));
    if (!c.condition1) out.failures.push_back("condition (1): f0 . A0 != a f0");

    Matrix<QuadFieldElement> b = (am * am).scaled(aa.inverse());
    bool orth = (b.transpose() * dm * b == dm);
    bool integral = true;
    std::string ring_note;
    try {
        integral = integral_matrix(b);
    } catch (const std::invalid_argument& e) {
        integral = false;
        ring_note = std::string(" [") + e.what() + "]";
    }
    c.condition2 = orth && integral;
    if (!c.condition2)
        out.failures.push_back("condition (2): (1/a) A0^2 not in O_{f0}(O_k)" + ring_note);

    bool nonsquare = !qf_is_square(aa).has_value();
    c.a_valid = nonsquare && aa.is_totally_positive();
    if (!c.a_valid) out.failures.push_back("a must be a totally positive non-square");

    c.f0_admissible = admissible_some_embedding(f0);
    if (!c.f0_admissible) out.failures.push_back("f0 is not admissible at any real embedding");

    if (c.condition1 && c.a_valid) {
        // ambient similitude diag(A0 / sqrt a, 1) on f0 + <1>
        ExtMatrix phi(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                phi(i, j) = ExtScalar(QuadFieldElement(0), am(i, j) / aa, aa);
        phi(n, n) = ExtScalar(promote(QuadFieldElement(1), f0.field()));
        DiagonalForm ambient =
            orthogonal_sum(f0, DiagonalForm(f0.field(), {promote(QuadFieldElement(1), f0.field())}));
        DefinitionField fod = field_of_definition(phi, ambient, ambient, true);
        c.field_consistent = (fod == DefinitionField::ReflectionTwist);
    }
    if (!c.field_consistent)
        out.failures.push_back("diag(A0/sqrt a, 1) does not realize the reflection twist");

    if (out.ok()) out.certificate.resulting_field.adjoin(SquareClass(aa));
    return out;
}

std::vector<TwistBlock2> search_blocks(const QuadFieldElement& d, long coeff_bound,
                                       long entry_bound, bool mixed_sign_only) {
    if (coeff_bound < 1 || entry_bound < 1)
        throw std::invalid_argument("search_blocks: bounds must be >= 1");
    std::vector<TwistBlock2> out;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (!d.is_rational_value() || denominator(d.x()) != 1 || d.x() <= 0) return out;
    long long dv = numerator(d.x()).convert_to<long long>();
    Int root = boost::multiprecision::sqrt(Int(dv));
    long long rv = (root * root == dv) ? root.convert_to<long long>() : 0;

    std::vector<long> c1s;
    for (long c1 = -coeff_bound; c1 <= coeff_bound; ++c1)
        if (c1 != 0) c1s.push_back(c1);

    auto scan = [&](std::size_t begin, std::size_t end, std::vector<TwistBlock2>& local) {
        FieldDescriptor q_field = FieldDescriptor::rationals();
        auto emit = [&](long c1, long c2, long long e00, long long e01, long long e10,
                        long long e11) {
            // q . A = d q, entrywise
            auto sq = [](long long v) { return v * v; };
            if (c1 * sq(e00) + c2 * sq(e10) != dv * c1) return;
            if (c1 * sq(e01) + c2 * sq(e11) != dv * c2) return;
            if (c1 * e00 * e01 + c2 * e10 * e11 != 0) return;
            DiagonalForm q(q_field, {QuadFieldElement(int(c1)), QuadFieldElement(int(c2))});
            Matrix<QuadFieldElement> a(
                std::vector<std::vector<QuadFieldElement>>{{Rational(e00), Rational(e01)},
                                                           {Rational(e10), Rational(e11)}});
            local.push_back(TwistBlock2{q, a, QuadFieldElement(Rational(dv))});
        };
        for (std::size_t idx = begin; idx < end; ++idx) {
            long c1 = c1s[idx];
            for (long c2 = -coeff_bound; c2 <= coeff_bound; ++c2) {
                if (c2 == 0) continue;
                if (mixed_sign_only && (c1 > 0) == (c2 > 0)) continue;
                // A^2 = d I with A non-scalar forces tr A = 0 and
                // e00^2 + e01*e10 = d; scalar solutions exist only for square d
                for (long long e00 = -entry_bound; e00 <= entry_bound; ++e00)
                    for (long long e01 = -entry_bound; e01 <= entry_bound; ++e01)
                        for (long long e10 = -entry_bound; e10 <= entry_bound; ++e10)
                            if (e00 * e00 + e01 * e10 == dv) emit(c1, c2, e00, e01, e10, -e00);
                if (rv != 0 && rv <= entry_bound) {
                    emit(c1, c2, rv, 0, 0, rv);
                    emit(c1, c2, -rv, 0, 0, -rv);
                }
            }
        }
    };

    unsigned workers = std::min<unsigned>(worker_count(), unsigned(c1s.size()) ? unsigned(c1s.size()) : 1);
    std::vector<std::vector<TwistBlock2>> buckets(workers);
    std::vector<std::thread> threads;
    std::size_t chunk = (c1s.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = std::min(c1s.size(), std::size_t(w) * chunk);
        std::size_t end = std::min(c1s.size(), begin + chunk);
        threads.emplace_back(scan, begin, end, std::ref(buckets[w]));
    }
    for (auto& t : threads) t.join();
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());

    auto key = [](const TwistBlock2& b) {
        return std::array<Rational, 6>{b.q.entries()[0].x(), b.q.entries()[1].x(),
                                       b.a(0, 0).x(),        b.a(0, 1).x(),
                                       b.a(1, 0).x(),        b.a(1, 1).x()};
    };
    std::sort(out.begin(), out.end(),
              [&](const TwistBlock2& x, const TwistBlock2& y) { return key(x) < key(y); });
    return out;
}

std::pair<DiagonalForm, Matrix<QuadFieldElement>> assemble(
    const std::vector<TwistBlock2>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("assemble: no blocks");
    for (const auto& b : blocks)
        if (!(promote(b.d, blocks[0].q.field()) == promote(blocks[0].d, blocks[0].q.field())))
            throw std::invalid_argument("assemble: blocks disagree on d");

    DiagonalForm f0 = blocks[0].q;
    for (std::size_t i = 1; i < blocks.size(); ++i) f0 = orthogonal_sum(f0, blocks[i].q);

    std::size_t n = f0.rank();
    Matrix<QuadFieldElement> a0(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        std::size_t r = b.q.rank();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                a0(off + i, off + j) = promote(b.a(i, j), f0.field());
        off += r;
    }
    if (!admissible_some_embedding(f0))
        throw std::invalid_argument(
            "assemble: need exactly one negative direction at one real embedding "
            "(admissibility fails for " +
            f0.str() + ")");
    return {f0, a0};
}

TwistCertificate build_odd_twist(const Int& d, int n) {
    if (d <= 1 || d % 2 == 0) throw std::invalid_argument("build_odd_twist: d must be odd > 1");
    if (squarefree_part(Rational(d)).s != d)
        throw std::invalid_argument("build_odd_twist: d must be squarefree");
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("build_odd_twist: n must be even >= 4");

    FieldDescriptor q_field = FieldDescriptor::rationals();
    QuadFieldElement b{Rational(d - 1) / 2};
    QuadFieldElement one(1), zero(0);
    QuadFieldElement dd{Rational(d)};
    TwistBlock2 b1{DiagonalForm(q_field, {QuadFieldElement(-1), one}),
                   Matrix<QuadFieldElement>(std::vector<std::vector<QuadFieldElement>>{
                       {b + one, b}, {-b, -(b + one)}}),
                   dd};
    TwistBlock2 b2{DiagonalForm(q_field, {dd, one}),
                   Matrix<QuadFieldElement>(
                       std::vector<std::vector<QuadFieldElement>>{{zero, one}, {dd, zero}}),
                   dd};
    std::vector<TwistBlock2> blocks{b1};
    for (int i = 1; i < n / 2; ++i) blocks.push_back(b2);

    auto [f0, a0] = assemble(blocks);
    Lemma61Outcome out = verify_lemma61(f0, dd, a0);
    if (!out.ok()) {
        std::string msg = "build_odd_twist: certificate failed:";
        for (const auto& f : out.failures) msg += " " + f + ";";
        throw std::logic_error(msg);
    }
    return out.certificate;
}

QuadTwistBuild build_quadfield_twist(const QuadFieldElement& b, int n) {
    if (b.field().is_rational() || b.is_rational_value())
        throw std::invalid_argument("build_quadfield_twist: b must be irrational");
    if (!b.is_totally_positive())
        throw std::invalid_argument("build_quadfield_twist: b must be totally positive");
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("build_quadfield_twist: n must be even >= 2");

    const FieldDescriptor& field = b.field();
    QuadFieldElement unit = fundamental_unit(field);
    QuadFieldElement one = promote(QuadFieldElement(1), field);

    // b - 1 must have exactly one negative conjugate; scale b by s^2
    std::optional<QuadFieldElement> scale;
    QuadFieldElement bb = b;
    for (int aj = 0; aj <= 6 && !scale; ++aj)
        for (int sgn : {1, -1}) {
            if (aj == 0 && sgn < 0) continue;
            int j = aj * sgn;
            QuadFieldElement uj = one;
            QuadFieldElement step = j >= 0 ? unit : unit.inverse();
            for (int t = 0; t < aj; ++t) uj = uj * step;
            for (int c = 1; c <= 20; ++c) {
                QuadFieldElement s = uj / QuadFieldElement(c);
                QuadFieldElement cand = b * s * s;
                QuadFieldElement shifted = cand - one;
                if (shifted.is_zero()) continue;
                if (shifted.sign() * shifted.sign_conjugate() < 0) {
                    scale = s;
                    bb = cand;
                    break;
                }
            }
            if (scale) break;
        }
    if (!scale)
        throw std::invalid_argument(
            "build_quadfield_twist: no square scaling with b-1 having exactly one "
            "negative conjugate within the search window");

    TwistBlock2 b1{DiagonalForm(field, {bb - one, one}),
                   Matrix<QuadFieldElement>(
                       std::vector<std::vector<QuadFieldElement>>{{one, one}, {bb - one, -one}}),
                   bb};
    TwistBlock2 b2{DiagonalForm(field, {bb, one}),
                   Matrix<QuadFieldElement>(std::vector<std::vector<QuadFieldElement>>{
                       {QuadFieldElement(0), one}, {bb, QuadFieldElement(0)}}),
                   bb};
    std::vector<TwistBlock2> blocks{b1};
    for (int i = 1; i < n / 2; ++i) blocks.push_back(b2);

    auto [f0, a0] = assemble(blocks);
    Lemma61Outcome out = verify_lemma61(f0, bb, a0);
    if (!out.ok()) {
        std::string msg = "build_quadfield_twist: certificate failed:";
        for (const auto& f : out.failures) msg += " " + f + ";";
        throw std::logic_error(msg);
    }
    std::string note = "a = b * (" + scale->str() + ")^2";
    if (n == 2) note += "; n = 2 is below the supported range";
    return QuadTwistBuild{out.certificate, *scale, note};
}

Table1Report reproduce_table1() {
    Table1Report report;
    report.all_pass = true;
    MultiquadraticField q_base(FieldDescriptor::rationals());
    for (const auto& row : table1_rows()) {
        Table1RowReport r;
        r.d = row.d;
        QuadFieldElement d{Rational(row.d)};
        BlockCheck c1 = verify_block(row.q1, row.a1, d);
        BlockCheck c2 = verify_block(row.q2, row.a2, d);
        Lemma61Outcome lemma = verify_lemma61(row.q1, d, row.a1);

        MultiquadraticField expected = q_base;
        expected.adjoin(SquareClass(d));
        bool field_ok = lemma.ok() && lemma.certificate.resulting_field == expected &&
                        lemma.certificate.resulting_field.degree() == 2;

        r.checks = {
            {"q1 form identity", c1.form_identity},
            {"q1 square condition", c1.square_orthogonal_integral},
            {"q2 form identity", c2.form_identity},
            {"q2 square identity", c2.square_identity},
            {"lemma condition (1)", lemma.certificate.checks.condition1},
            {"lemma condition (2)", lemma.certificate.checks.condition2},
            {"d nonsquare totally positive", lemma.certificate.checks.a_valid},
            {"f0 admissible", lemma.certificate.checks.f0_admissible},
            {"field Q(sqrt d)", field_ok},
        };
        r.pass = true;
        for (const auto& [name, ok] : r.checks) r.pass = r.pass && ok;
        report.all_pass = report.all_pass && r.pass;
        report.rows.push_back(std::move(r));
    }
    return report;
}

}  // namespace traceforge
