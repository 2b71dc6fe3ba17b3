#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syntomic/errors.hpp"
#include "syntomic/linalg.hpp"

using namespace syntomic;

namespace {

PModMatrix from_rows(std::uint32_t p, int N, std::vector<std::vector<std::int64_t>> rows) {
    PModMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), p, N);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    return m;
}

PModMatrix diagonal_of(const SNFResult& s, std::size_t rows, std::size_t cols, std::uint32_t p, int N) {
    PModMatrix d(rows, cols, p, N);
    for (std::size_t k = 0; k < s.diag.size(); ++k) {
        std::int64_t v = 1;
        for (int e = 0; e < s.diag[k]; ++e) v *= p;
        d.set(k, k, s.diag[k] >= N ? 0 : v);
    }
    return d;
}

int vp(std::int64_t x, std::uint32_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % static_cast<std::int64_t>(p) == 0 && v < cap) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    CHECK(snf(PModMatrix::identity(3, 3, 4)).diag == std::vector<int>{0, 0, 0});
    CHECK(snf(from_rows(3, 4, {{3, 0}, {0, 1}})).diag == std::vector<int>{0, 1});
    const PModMatrix m = from_rows(3, 4, {{3, 1}, {9, 6}});
    const SNFResult s = snf(m);
    CHECK(s.diag == std::vector<int>{0, 2});
    CHECK(s.left * m * s.right == diagonal_of(s, 2, 2, 3, 4));
}

TEST_CASE("smith normal form against 2x2 invariants") {
    // e_1 = min entry valuation, e_1 + e_2 = v(det).
    std::mt19937_64 rng(3);
    const std::uint32_t p = 5;
    const int N = 6;
    std::uniform_int_distribution<std::int64_t> entry(-200, 200);
    for (int k = 0; k < 300; ++k) {
        const std::int64_t a = entry(rng) * (k % 3 == 0 ? 5 : 1), b = entry(rng) * (k % 2 == 0 ? 25 : 1);
        const std::int64_t c = entry(rng), d = entry(rng) * 5;
        const PModMatrix m = from_rows(p, N, {{a, b}, {c, d}});
        const SNFResult s = snf(m);
        const int e1 = std::min({vp(a, p, N), vp(b, p, N), vp(c, p, N), vp(d, p, N)});
        const int vdet = vp(a * d - b * c, p, 2 * N);
        CHECK(s.diag[0] == e1);
        CHECK(s.diag[1] == std::min(vdet - e1, N));
        CHECK(s.left * m * s.right == diagonal_of(s, 2, 2, p, N));
    }
}

TEST_CASE("smith normal form of random rectangular matrices") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        PModMatrix m(rows, cols, 3, 5);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % 243) * (rng() % 2 ? 3 : 1));
        const SNFResult s = snf(m);
        CHECK(std::is_sorted(s.diag.begin(), s.diag.end()));
        CHECK(s.left * m * s.right == diagonal_of(s, rows, cols, 3, 5));
        CHECK(inverse(s.left) * s.left == PModMatrix::identity(rows, 3, 5));
    }
}

TEST_CASE("inverse") {
    const PModMatrix m = from_rows(7, 3, {{1, 7}, {2, 3}});
    CHECK(inverse(m) * m == PModMatrix::identity(2, 7, 3));
    CHECK_THROWS_AS(inverse(from_rows(7, 3, {{7, 0}, {0, 1}})), InvalidArgument);
}

TEST_CASE("homology examples") {
    const PModMatrix zero_in(2, 0, 3, 4), zero_out(0, 2, 3, 4);
    const HomologyGroup free2 = homology_at(zero_in, zero_out);
    CHECK(free2.factors == std::vector<int>{4, 4});
    CHECK(free2.saturated);

    const HomologyGroup zp = homology_at(from_rows(3, 4, {{3}}), PModMatrix(0, 1, 3, 4));
    CHECK(zp.factors == std::vector<int>{1});
    CHECK_FALSE(zp.saturated);

    const HomologyGroup z9 = homology_at(from_rows(3, 5, {{9}}), PModMatrix(0, 1, 3, 5));
    CHECK(z9.factors == std::vector<int>{2});
}

TEST_CASE("homology of Z_p -p-> Z_p -> 0 uses the integral kernel") {
    // 0 -> Z_p --p--> Z_p: H^0 = 0 even though p kills p^{N-1} mod p^N.
    const HomologyGroup h0 = homology_at(PModMatrix(1, 0, 3, 4), from_rows(3, 4, {{3}}));
    CHECK(h0.is_zero());
}

TEST_CASE("homology requires a complex") {
    CHECK_THROWS_AS(homology_at(from_rows(3, 3, {{1}}), from_rows(3, 3, {{1}})), CompositionNonzero);
}

TEST_CASE("homology of a two-step complex") {
    // Z_p --(p, p)--> Z_p^2 --(1, -1)--> Z_p: middle homology Z/p.
    const PModMatrix d0 = from_rows(5, 4, {{5}, {5}});
    const PModMatrix d1 = from_rows(5, 4, {{1, -1}});
    CHECK(homology_at(d0, d1).factors == std::vector<int>{1});
}

TEST_CASE("group by multiplicity") {
    HomologyGroup raw;
    raw.factors = {1, 1, 2, 2};
    const HomologyGroup g = group_by_multiplicity(raw, 2);
    CHECK(g.factors == std::vector<int>{1, 2});
    CHECK(g.multiplicity == 2);
    raw.factors = {1, 2, 2};
    CHECK(group_by_multiplicity(raw, 2).factors == std::vector<int>{1, 2, 2});
    CHECK(g.to_string(5) == "(Z/5^1)^2 + (Z/5^2)^2");
}
