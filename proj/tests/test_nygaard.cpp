#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "syntomic/errors.hpp"
#include "syntomic/nygaard.hpp"

using namespace syntomic;

namespace {

std::shared_ptr<const DPComplexData> base(std::uint32_t p, int e, std::int64_t wmax, int N = 6) {
    return std::make_shared<const DPComplexData>(DPComplexData::build(std::make_shared<const WittRing>(p, N), e, wmax));
}

}  // namespace

TEST_CASE("scaling of generators") {
    const auto b = base(3, 2, 60);
    const NygaardComplex zero(b, 0);
    for (std::int64_t m = 0; m < 30; ++m) {
        CHECK(zero.scaling({m, 0}) == 0);
        CHECK(zero.scaling({m, 1}) == 0);
    }
    const NygaardComplex three(b, 3);
    CHECK(three.scaling({2, 0}) == 2);
    CHECK(three.scaling({4, 1}) == 0);
    CHECK(three.scaling({0, 0}) == 3);
    CHECK(three.scaling({6, 0}) == 0);
}

TEST_CASE("scaled differential is integral") {
    const auto b = base(5, 3, 100);
    for (std::int64_t i = 0; i < 6; ++i) {
        const NygaardComplex ny(b, i);
        for (std::int64_t m = 1; m <= 100; ++m) CHECK_NOTHROW(ny.scaled_d(m));
    }
}

TEST_CASE("divided frobenius examples") {
    const auto b = base(3, 2, 60);
    for (std::int64_t i = 0; i < 5; ++i) {
        const DividedFrobeniusEntry c = NygaardComplex(b, i).divided_frobenius({0, 0});
        CHECK(c.scaling == i);
        CHECK(c.target == DPBasisElem{0, 0});
        CHECK(c.coeff.v == 0);
        CHECK(c.coeff.value(b->ring()) == b->ring().one());
    }
    // p b_2 -> unit * b_6 for i = 2.
    const DividedFrobeniusEntry g = NygaardComplex(b, 2).divided_frobenius({2, 0});
    CHECK(g.scaling == 1);
    CHECK(g.target == DPBasisElem{6, 0});
    CHECK(g.coeff.v == 0);
    // b_{2j} dx with j >= i maps to p^{j-i+1} times a unit: v_3(3 (3j+1)!/j!) = 1 + j.
    for (std::int64_t i = 1; i <= 3; ++i)
        for (std::int64_t j = i; j <= i + 3; ++j) {
            const DividedFrobeniusEntry h = NygaardComplex(b, i).divided_frobenius({2 * j, 1});
            CHECK(h.scaling == 0);
            CHECK(h.coeff.v == j - i + 1);
        }
}

TEST_CASE("divided frobenius is integral on the whole window") {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int e : {2, 3, 4}) {
            const auto b = base(p, e, 40 * e);
            for (std::int64_t i = 0; i <= 8; ++i) CHECK_NOTHROW(divided_frobenius(NygaardComplex(b, i)));
        }
}

TEST_CASE("gr Nygaard isomorphism") {
    const auto b = base(3, 2, 3 * 7);
    for (std::int64_t i : {0, 1, 2}) {
        const GrNygaardReport r = gr_nygaard_check(NygaardComplex(b, i), 6);
        CHECK_MESSAGE(r.pass, r.message);
        CHECK(r.rank == r.expected_rank);
    }
    const auto b5 = base(5, 3, 5 * 13);
    for (std::int64_t i = 0; i <= 3; ++i) CHECK(gr_nygaard_check(NygaardComplex(b5, i), 12).pass);
    CHECK_THROWS_AS(gr_nygaard_check(NygaardComplex(b, 1), 7), WindowTooSmall);
}

TEST_CASE("gr Nygaard rank at i = 0 is e p per level") {
    const auto b = base(5, 2, 5 * 10);
    const GrNygaardReport r = gr_nygaard_check(NygaardComplex(b, 0), 1);
    CHECK(r.pass);
    CHECK(r.rank == 2 * 5);
}
