#include "traceforge/twist.hpp"

#include <array>
#include <sstream>

namespace traceforge {

namespace {

struct RawRow {
    int d;
    std::array<int, 4> q1;
    std::array<std::array<int, 4>, 4> a1;
    std::array<int, 2> q2;
    std::array<std::array<int, 2>, 2> a2;
};

// Transcribed verbatim; guarded by the fingerprint test.
constexpr RawRow kRows[] = {
    {2,
     {-1, 1, 1, 1},
     {{{2, 0, 1, 1}, {0, 0, 1, -1}, {1, 1, 1, 1}, {1, -1, 1, 1}}},
     {1, 1},
     {{{1, 1}, {1, -1}}}},
    {6,
     {-1, 1, 1, 2},
     {{{3, 0, 1, 2}, {0, 0, -2, 2}, {1, 2, 1, 2}, {1, -1, 1, 2}}},
     {1, 2},
     {{{2, 2}, {1, -2}}}},
    {10,
     {-1, 1, 1, 1},
     {{{4, 1, 1, 2}, {1, 3, -1, 1}, {-1, 1, 1, -3}, {2, 1, 3, 2}}},
     {1, 1},
     {{{1, 3}, {3, -1}}}},
    {14,
     {-1, 1, 1, 5},
     {{{4, 1, 1, 0}, {-1, -1, -3, 5}, {-1, -3, -1, -5}, {0, 1, -1, -2}}},
     {1, 5},
     {{{3, 5}, {1, -3}}}},
    {22,
     {-1, 1, 1, 2},
     {{{5, 0, 1, 2}, {0, -4, 2, -2}, {-1, 2, 1, -6}, {-1, -1, -3, -2}}},
     {1, 2},
     {{{2, 6}, {3, -2}}}},
    {26,
     {-1, 1, 1, 1},
     {{{6, 0, 1, 3}, {0, -4, 3, -1}, {-1, 3, 3, -3}, {-3, -1, -3, -5}}},
     {1, 1},
     {{{1, 5}, {5, -1}}}},
    {30,
     {-1, 1, 1, 5},
     {{{6, 0, 1, 5}, {0, 0, 5, -5}, {-1, 5, -1, -5}, {-1, -1, -1, -5}}},
     {1, 5},
     {{{5, 5}, {1, -5}}}},
    {34,
     {-1, 1, 1, 1},
     {{{6, 0, 1, 1}, {0, 4, 3, -3}, {-1, 3, -5, -1}, {-1, -3, -1, -5}}},
     {1, 1},
     {{{3, 5}, {5, -3}}}},
    {38,
     {-1, 1, 1, 2},
     {{{7, 0, 3, 2}, {0, -4, 2, -6}, {-3, 2, -5, -6}, {-1, -3, -3, 2}}},
     {1, 2},
     {{{6, 2}, {1, -6}}}},
    {42,
     {-1, 1, 1, 6},
     {{{7, 0, 1, 6}, {0, 0, 6, -6}, {-1, 6, -1, -6}, {-1, -1, -1, -6}}},
     {1, 6},
     {{{6, 6}, {1, -6}}}},
};

std::vector<Table1Row> build_rows() {
    FieldDescriptor q_field = FieldDescriptor::rationals();
    std::vector<Table1Row> rows;
    for (const RawRow& raw : kRows) {
        std::vector<QuadFieldElement> q1, q2;
        for (int v : raw.q1) q1.emplace_back(v);
        for (int v : raw.q2) q2.emplace_back(v);
        Matrix<QuadFieldElement> a1(4, 4), a2(2, 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a1(i, j) = QuadFieldElement(raw.a1[i][j]);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a2(i, j) = QuadFieldElement(raw.a2[i][j]);
        rows.push_back(Table1Row{Int(raw.d), DiagonalForm(q_field, q1), a1,
                                 DiagonalForm(q_field, q2), a2});
    }
    return rows;
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = build_rows();
    return rows;
}

std::string table1_fingerprint() {
    std::ostringstream os;
    for (const RawRow& raw : kRows) {
        os << raw.d << ":";
        for (int v : raw.q1) os << v << ",";
        os << "|";
        for (const auto& row : raw.a1)
            for (int v : row) os << v << ",";
        os << "|";
        for (int v : raw.q2) os << v << ",";
        os << "|";
        for (const auto& row : raw.a2)
            for (int v : row) os << v << ",";
        os << ";";
    }
    return os.str();
}

}  // namespace traceforge
