#pragma once

#include "traceforge/forms.hpp"
#include "traceforge/matrix.hpp"
#include "traceforge/squareclass.hpp"

#include <string>
#include <utility>
#include <vector>

namespace traceforge {

// Per-condition diagnostics for a building block (q, A, d). The strong square
// identity A^2 = d*I holds for the 2x2 blocks and most of the published 4x4
// matrices; the certifying condition is the weaker (1/d)A^2 in O_q(O_k),
// which is what the trace-field lemma actually consumes.
struct BlockCheck {
    bool shapes_ok = false;
    bool form_identity = false;              // q . A = d q
    bool square_identity = false;            // A^2 = d I
    bool square_orthogonal_integral = false; // (1/d) A^2 integral and in O_q

    bool pass() const { return shapes_ok && form_identity && square_orthogonal_integral; }
    std::vector<std::string> failures() const;
};

BlockCheck verify_block(const DiagonalForm& q, const Matrix<QuadFieldElement>& a,
                        const QuadFieldElement& d);

// A rank-2 building block; search output satisfies both identities strictly.
struct TwistBlock2 {
    DiagonalForm q;
    Matrix<QuadFieldElement> a;
    QuadFieldElement d;

    std::string str() const;
};

struct TwistChecks {
    bool condition1 = false;       // f0 . A0 = a f0
    bool condition2 = false;       // (1/a) A0^2 in O_{f0}(O_k)
    bool a_valid = false;          // a totally positive and not a square
    bool f0_admissible = false;    // at one of the real embeddings
    bool field_consistent = false; // diag(A0/sqrt a, 1) has the reflection shape

    bool all() const {
        return condition1 && condition2 && a_valid && f0_admissible && field_consistent;
    }
};

struct TwistCertificate {
    DiagonalForm f0;
    QuadFieldElement a;
    Matrix<QuadFieldElement> a0;
    TwistChecks checks;
    MultiquadraticField resulting_field;

    bool ok() const { return checks.all(); }
};

struct Lemma61Outcome {
    TwistCertificate certificate;
    std::vector<std::string> failures; // empty iff the certificate holds

    bool ok() const { return failures.empty(); }
};

// Checks the closing-up lemma's conditions on (f0, a, A0) and computes the
// resulting field through the ambient (n+1)-variable similitude.
Lemma61Outcome verify_lemma61(const DiagonalForm& f0, const QuadFieldElement& a,
                              const Matrix<QuadFieldElement>& a0);

// The closed-form family realizing Q(sqrt d) for odd squarefree d > 1 in even
// dimension n >= 4: f0 = <-1,1> + <d,1> + ... (n/2 blocks).
TwistCertificate build_odd_twist(const Int& d, int n);

struct QuadTwistBuild {
    TwistCertificate certificate;
    QuadFieldElement scaling; // s with the certified a equal to b * s^2
    std::string note;
};

// Realizes k(sqrt b) for totally positive irrational b over Q(sqrt m); scales
// b by a square so that b-1 has exactly one negative conjugate.
QuadTwistBuild build_quadfield_twist(const QuadFieldElement& b, int n);

// Exhaustive search for 2x2 blocks with integer data: q = <c1, c2> with
// |ci| <= coeff_bound and integer matrices with |entries| <= entry_bound,
// both identities strict. mixed_sign_only restricts to c1*c2 < 0.
std::vector<TwistBlock2> search_blocks(const QuadFieldElement& d, long coeff_bound,
                                       long entry_bound, bool mixed_sign_only = false);

// f0 = orthogonal sum of the q's, A0 block-diagonal. All blocks must share d
// and exactly one real embedding must see exactly one negative direction.
std::pair<DiagonalForm, Matrix<QuadFieldElement>> assemble(
    const std::vector<TwistBlock2>& blocks);

struct Table1Row {
    Int d;
    DiagonalForm q1;
    Matrix<QuadFieldElement> a1;
    DiagonalForm q2;
    Matrix<QuadFieldElement> a2;
};

// The ten published rows (even d <= 42), embedded verbatim.
const std::vector<Table1Row>& table1_rows();

// Stable serialization of the fixture data, for the checksum test.
std::string table1_fingerprint();

struct Table1RowReport {
    Int d;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = false;
};

struct Table1Report {
    std::vector<Table1RowReport> rows;
    bool all_pass = false;
};

Table1Report reproduce_table1();

// Admissibility at the identity or the conjugate embedding. Over Q this is
// plain admissibility; over Q(sqrt m) the distinguished embedding is a choice.
bool admissible_some_embedding(const DiagonalForm& f);

// Entries in O_k: Z over Q, Z[sqrt m] for m = 2, 3 (mod 4). m = 1 (mod 4)
// rings are not supported and throw.
bool is_integral(const QuadFieldElement& e);

}  // namespace traceforge
