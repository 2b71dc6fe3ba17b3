#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "syntomic/dpcomplex.hpp"
#include "syntomic/errors.hpp"

using namespace syntomic;

namespace {

std::int64_t factorial(std::int64_t n) {
    std::int64_t r = 1;
    for (std::int64_t k = 2; k <= n; ++k) r *= k;
    return r;
}

// d(x^m / j(m)!) = m x^{m-1} / j(m)! = (m j(m-1)! / j(m)!) b_{m-1} dx, in exact integers.
std::int64_t symbolic_d(std::int64_t m, int e) {
    const std::int64_t num = m * factorial(dp_level(m - 1, e));
    const std::int64_t den = factorial(dp_level(m, e));
    REQUIRE(num % den == 0);
    return num / den;
}

}  // namespace

TEST_CASE("d coefficients agree with symbolic differentiation") {
    auto ring = std::make_shared<const WittRing>(3, 8);
    for (int e : {2, 3, 4})
        for (std::int64_t m = 1; m <= 40; ++m) {
            const WittElem expected = ring->from_int(symbolic_d(m, e));
            CHECK(d_coeff_via_factorials(m, e, *ring).value(*ring) == expected);
            CHECK(d_coeff_direct(m, e, *ring).value(*ring) == expected);
        }
    // e = 2: d(b_{2j}) = 2 b_{2j-1} dx and d(b_{2j+1}) = (2j+1) b_{2j} dx.
    const DPComplexData data = DPComplexData::build(ring, 2, 30);
    for (std::int64_t j = 1; j <= 10; ++j) {
        CHECK(data.d_coeff(2 * j).value(*ring) == ring->from_int(2));
        CHECK(data.d_coeff(2 * j + 1).value(*ring) == ring->from_int(2 * j + 1));
    }
}

TEST_CASE("frobenius on the divided-power basis") {
    auto ring = std::make_shared<const WittRing>(3, 6);
    const DPComplexData data = DPComplexData::build(ring, 2, 40);
    const FrobeniusImage& b0 = data.phi({0, 0});
    CHECK(b0.target == DPBasisElem{0, 0});
    CHECK(b0.coeff.value(*ring) == ring->one());

    const FrobeniusImage& b2 = data.phi({2, 0});
    CHECK(b2.target == DPBasisElem{6, 0});
    CHECK(b2.coeff.v == 1);
    CHECK(ring->residue(b2.coeff.u) == FieldElem{2});

    // phi(b_m dx) = x^{pm} / j(m)! * p x^{p-1} dx = p (j(pm+p-1)! / j(m)!) b_{pm+p-1} dx.
    const FrobeniusImage& b3dx = data.phi({3, 1});
    CHECK(b3dx.target == DPBasisElem{11, 1});
    CHECK(b3dx.coeff.value(*ring) == ring->from_int(3 * factorial(5) / factorial(1)));

    CHECK(data.phi_out_of_window({20, 0}));
    CHECK_FALSE(data.phi_out_of_window({13, 0}));
}

TEST_CASE("window guards") {
    auto ring = std::make_shared<const WittRing>(3, 4);
    const DPComplexData data = DPComplexData::build(ring, 2, 10);
    CHECK_THROWS_AS(data.phi({11, 0}), WeightOverflow);
    CHECK_THROWS_AS(DPComplexData::build(ring, 2, std::int64_t{1} << 40), WeightOverflow);
    CHECK_THROWS_AS(DPComplexData::build(ring, 1, 10), InvalidArgument);
}

TEST_CASE("hodge filtration") {
    CHECK(hodge_level({0, 0}, 2) == 0);
    for (std::int64_t i = 0; i < 8; ++i) {
        CHECK(hodge_level({2 * i, 0}, 2) == i);
        CHECK(hodge_level({2 * i + 1, 0}, 2) == i);
    }
    for (std::int64_t i = 1; i < 8; ++i) CHECK(hodge_level({2 * (i - 1), 1}, 2) == i);
}

TEST_CASE("conjugate filtration") {
    CHECK(conj_level({0, 0}, 2, 3) == 0);
    for (std::int64_t i = 0; i < 6; ++i) {
        CHECK(conj_level({2 * (3 * i + 2), 0}, 2, 3) == i);
        CHECK(conj_level({2 * 3 * (i + 1), 0}, 2, 3) == i + 1);
    }
    CHECK_THROWS_AS(conj_level({1, 1}, 2, 3), DegreeError);
    // dim gr^i = e p
    for (int e : {2, 3, 4})
        for (std::uint32_t p : {3u, 5u})
            for (std::int64_t i = 0; i < 5; ++i) {
                int count = 0;
                for (std::int64_t m = 0; m < 200; ++m) count += conj_level({m, 0}, e, p) == i;
                CHECK(count == e * static_cast<int>(p));
            }
}
