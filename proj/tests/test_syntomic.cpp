#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "oracles.hpp"
#include "syntomic/errors.hpp"
#include "syntomic/syntomic.hpp"

using namespace syntomic;

namespace {

SyntomicComplex fiber(std::uint32_t p, int e, std::int64_t i, ConeSign sign = ConeSign::Standard) {
    auto ring = std::make_shared<const WittRing>(p, initial_precision(p, e, i));
    return build_fiber(ring, e, i, initial_max_weight(p, e, i), sign);
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> w;
    for (std::int64_t k = lo; k <= hi; ++k) w.push_back(k);
    return w;
}

}  // namespace

TEST_CASE("fiber complex is a complex") {
    const SyntomicComplex c = fiber(3, 2, 4);
    const auto w = range(0, c.base().max_weight() / 3);
    const FiniteComplex fc = c.restrict_to(w);
    CHECK((fc.d1 * fc.d0).is_zero());
    for (const auto& t : tower_decompose(c)) CHECK((t.complex.d1 * t.complex.d0).is_zero());

    const SyntomicComplex flipped = fiber(3, 2, 4, ConeSign::Flipped);
    const FiniteComplex ff = flipped.restrict_to(w);
    CHECK_FALSE((ff.d1 * ff.d0).is_zero());
}

TEST_CASE("weight-0 block") {
    for (std::int64_t i = 1; i <= 4; ++i) {
        const FiniteComplex z = weight_zero_block(fiber(3, 2, i));
        for (int deg = 0; deg < 3; ++deg) CHECK(z.cohomology(deg).is_zero());
    }
    const SyntomicComplex c0 = fiber(3, 2, 0);
    const FiniteComplex z = weight_zero_block(c0);
    const int N = c0.ring().precision();
    CHECK(z.cohomology(0).factors == std::vector<int>{N});
    CHECK(z.cohomology(1).factors == std::vector<int>{N});
}

TEST_CASE("tower decomposition") {
    const SyntomicComplex c = fiber(3, 2, 2);
    const auto towers = tower_decompose(c);
    for (const auto& t : towers) {
        CHECK(t.d % 3 != 0);
        CHECK(t.d < stable_weight(2, 2));
        CHECK(t.truncation.certified);
    }
    // d = 1 keeps weights 1 and 3.
    const auto it = std::find_if(towers.begin(), towers.end(), [](const TowerComplex& t) { return t.d == 1; });
    REQUIRE(it != towers.end());
    CHECK(it->truncation.a_max == 1);
    CHECK(it->complex.cohomology(1).factors == std::vector<int>{2});
}

TEST_CASE("closed form") {
    using V = std::vector<std::pair<std::int64_t, int>>;
    CHECK(closed_form_h1(3, 1) == V{{1, 1}});
    CHECK(closed_form_h1(3, 2) == V{{1, 2}});
    CHECK(closed_form_h1(5, 3) == V{{1, 2}, {3, 1}});
    CHECK_THROWS_AS(closed_form_h1(2, 3), Unsupported);
    CHECK_THROWS_AS(closed_form_h1(3, 3, 3), Unsupported);
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::int64_t i = 1; i <= 20; ++i) {
            std::vector<int> got;
            for (const auto& [d, n] : closed_form_h1(p, i)) got.push_back(n);
            std::sort(got.begin(), got.end());
            CHECK(got == oracle::closed_form_factors(p, i));
        }
}

TEST_CASE("small cases") {
    const CohomologyResult r1 = zp_i(3, 2, 1, 1);
    CHECK(r1.total(0).is_zero());
    CHECK(r1.total(1).factors == std::vector<int>{1});
    CHECK(r1.total(2).is_zero());
    CHECK(r1.validated == Validation::ClosedForm);

    const CohomologyResult r2 = zp_i(3, 2, 2, 1);
    CHECK(r2.total(1).factors == std::vector<int>{2});
    CHECK(r2.total(0).is_zero());
    CHECK(r2.total(2).is_zero());
    CHECK_FALSE(r2.saturated);

    const CohomologyResult r0 = zp_i(3, 2, 0, 1);
    CHECK(r0.point);
}

TEST_CASE("even towers vanish") {
    for (std::uint32_t p : {3u, 5u})
        for (std::int64_t i = 1; i <= 6; ++i)
            for (const auto& t : zp_i(p, 2, i, 1).towers) CHECK(t.d % 2 == 1);
}

TEST_CASE("relative K-groups") {
    CHECK(relative_k_group(3, 1, 1).factors == std::vector<int>{1});
    CHECK(relative_k_group(3, 2, 1).factors == std::vector<int>{2});
    const HomologyGroup k = relative_k_group(5, 3, 2);
    CHECK(k.factors == std::vector<int>{1, 2});
    CHECK(k.multiplicity == 2);
}

TEST_CASE("K_1 agrees with the unit group") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int e : {2, 3, 4, 5, 6})
            for (int f : {1, 2}) {
                if (oracle::ipow(oracle::ipow(p, f), e - 1) > 10000) continue;  // keep the brute force small
                const HomologyGroup h = zp_i(p, e, 1, f).total(1);
                std::vector<int> got;
                for (int a : h.factors)
                    for (int m = 0; m < h.multiplicity; ++m) got.push_back(a);
                std::sort(got.begin(), got.end());
                CHECK_MESSAGE(got == oracle::relative_units(p, e, default_modulus(p, f)),
                              "p=" << p << " e=" << e << " f=" << f);
            }
}

TEST_CASE("naive oracle agrees") {
    for (auto [p, e, i] : std::vector<std::tuple<std::uint32_t, int, std::int64_t>>{
             {3, 2, 1}, {3, 2, 3}, {3, 3, 2}, {5, 2, 2}, {5, 3, 3}}) {
        const CohomologyResult a = zp_i(p, e, i, 1);
        const CohomologyResult b = zp_i_naive(p, e, i, 1, a.precision, 2 * stable_weight(e, i) + e, 64);
        for (int deg = 0; deg < 3; ++deg) CHECK(a.total(deg) == b.total(deg));
    }
}

TEST_CASE("stability under larger parameters") {
    const CohomologyResult base = zp_i(5, 2, 7, 1);
    SyntomicOptions more;
    more.precision = base.precision + 2;
    more.max_weight = 2 * base.max_weight;
    more.extra_positions = 2;
    const CohomologyResult big = zp_i(5, 2, 7, 1, more);
    for (int deg = 0; deg < 3; ++deg) CHECK(base.total(deg) == big.total(deg));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(zp_i(4, 2, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(zp_i(3, 1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(zp_i(3, 2, -1, 1), InvalidArgument);
    SyntomicOptions tiny;
    tiny.precision_ceiling = 2;
    CHECK_THROWS_AS(zp_i(3, 2, 0, 1, tiny), NonTermination);
}

TEST_CASE("parallel towers give the same result") {
    SyntomicOptions par;
    par.jobs = 4;
    const CohomologyResult a = zp_i(7, 2, 10, 2);
    const CohomologyResult b = zp_i(7, 2, 10, 2, par);
    for (int deg = 0; deg < 3; ++deg) CHECK(a.total(deg) == b.total(deg));
}
