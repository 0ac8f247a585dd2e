#pragma once

#include "traceforge/gluing.hpp"
#include "traceforge/json_io.hpp"

#include <string>
#include <vector>

namespace traceforge {

struct ReportStep {
    std::string check;
    std::string inputs;
    std::string result;
    std::string citation;  // rule citation string, e.g. "Thm 4.4"
};

struct Report {
    std::string status = "unknown";  // pass | fail | unknown
    std::vector<ReportStep> steps;
    std::string conclusion;

    json to_json() const;
    std::string text() const;
    int exit_code() const;  // 0 pass, 1 fail, 2 unknown
};

// Canonical gluings of pieces a in {1, p_1, ..., p_r}, primes p_i = 1 (mod 4),
// dimension n = 0 (mod 4): trace field Q(sqrt p_1, ..., sqrt p_r), degree 2^r.
Report run_example_ex45(int r, int n);

// Over Q(sqrt 2): pieces generated by split primes whose residue field
// contains the branch delta = -+sqrt 2 (by n mod 4); degree 2^r over Q(sqrt 2).
Report run_example_ex46(int r, int n, const Int& norm_bound);

// The dimension-5 simplex obstruction, with citations per step.
Report run_delta5();

}  // namespace traceforge
