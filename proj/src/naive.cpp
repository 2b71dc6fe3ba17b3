// Brute-force oracle for Z_p(i): the whole truncated fiber complex as one dense
// pair of matrices, indexed by basis element rather than by weight tower.

#include <chrono>
#include <map>

#include "syntomic/errors.hpp"
#include "syntomic/syntomic.hpp"

namespace syntomic {

namespace {

using Key = std::pair<std::int64_t, int>;  // (m, deg) of the underlying basis element

struct Indexer {
    std::map<Key, std::size_t> index;
    std::size_t size = 0;

    void add(Key k) { index.emplace(k, size++); }
    std::optional<std::size_t> find(Key k) const {
        auto it = index.find(k);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

std::int64_t p_adic_valuation(std::int64_t w, std::int64_t p) {
    std::int64_t v = 0;
    while (w % p == 0) {
        w /= p;
        ++v;
    }
    return v;
}

}  // namespace

CohomologyResult zp_i_naive(std::uint32_t p, int e, std::int64_t i, int f, int precision, std::int64_t max_weight,
                            int a_uniform) {
    const auto start = std::chrono::steady_clock::now();
    auto ring = std::make_shared<const WittRing>(p, precision, f);
    auto base = std::make_shared<const DPComplexData>(DPComplexData::build(ring, e, max_weight));
    const NygaardComplex ny(base, i);
    const WittRing& R = *ring;

    auto included = [&](std::int64_t w) {
        if (w == 0) return true;
        return w >= 1 && w <= max_weight && p_adic_valuation(w, p) <= a_uniform;
    };

    // C^0 = N Omega^0, C^1 = N Omega^1 (+) Omega^0, C^2 = Omega^1, each keyed by (m, deg).
    Indexer c0, c1_nygaard, c1_plain, c2;
    for (std::int64_t w = 0; w <= max_weight; ++w) {
        if (!included(w)) continue;
        c0.add({w, 0});
        c1_plain.add({w, 0});
        if (w >= 1) {
            c1_nygaard.add({w - 1, 1});
            c2.add({w - 1, 1});
        }
    }
    const std::size_t fs = static_cast<std::size_t>(f);
    const std::size_t dim0 = c0.size * fs, dim1 = (c1_nygaard.size + c1_plain.size) * fs, dim2 = c2.size * fs;
    const std::size_t plain_offset = c1_nygaard.size;
    PModMatrix d0(dim1, dim0, p, precision), d1(dim2, dim1, p, precision);

    const auto frob = R.frobenius_matrix();
    // Writes coeff * (Frobenius if semilinear) into the f x f block at (row, col).
    auto put = [&](PModMatrix& mat, std::size_t row, std::size_t col, const ValScalar& coeff, bool semilinear,
                   bool negate) {
        const auto mult = R.multiplication_matrix(coeff.value(R));
        for (std::size_t r = 0; r < fs; ++r)
            for (std::size_t c = 0; c < fs; ++c) {
                Residue x = 0;
                if (semilinear) {
                    for (std::size_t k = 0; k < fs; ++k)
                        x = (x + static_cast<Residue>((static_cast<unsigned __int128>(mult[r][k]) * frob[k][c]) % R.modulus())) % R.modulus();
                } else {
                    x = mult[r][c];
                }
                if (negate && x != 0) x = R.modulus() - x;
                mat.accumulate(row * fs + r, col * fs + c, x);
            }
    };

    for (const auto& [key, col] : c0.index) {
        const auto [m, deg] = key;
        if (m >= 1) put(d0, *c1_nygaard.find({m - 1, 1}), col, ny.scaled_d(m), false, false);
        const DividedFrobeniusEntry phi = ny.divided_frobenius({m, 0});
        if (auto row = c1_plain.find({phi.target.m, 0})) put(d0, plain_offset + *row, col, phi.coeff, true, false);
        put(d0, plain_offset + *c1_plain.find({m, 0}), col, ValScalar::unit_power(R, ny.scaling({m, 0})), false, true);
    }
    for (const auto& [key, col] : c1_nygaard.index) {
        const auto [m, deg] = key;
        const DividedFrobeniusEntry phi = ny.divided_frobenius({m, 1});
        if (auto row = c2.find({phi.target.m, 1})) put(d1, *row, col, phi.coeff, true, false);
        put(d1, *c2.find({m, 1}), col, ValScalar::unit_power(R, ny.scaling({m, 1})), false, true);
    }
    for (const auto& [key, col] : c1_plain.index) {
        const auto [m, deg] = key;
        if (m >= 1) put(d1, *c2.find({m - 1, 1}), plain_offset + col, base->d_coeff(m), false, true);
    }

    const FiniteComplex complex{{}, std::move(d0), std::move(d1)};
    CohomologyResult res;
    res.p = p;
    res.e = e;
    res.i = i;
    res.f = f;
    res.precision = precision;
    res.max_weight = max_weight;
    res.point = (i == 0);
    TowerCohomology all;
    all.d = -1;  // every weight at once
    for (int deg = 0; deg < 3; ++deg) {
        all.h[deg] = complex.cohomology(deg);
        res.saturated = res.saturated || all.h[deg].saturated;
    }
    res.towers.push_back(std::move(all));
    res.validated = Validation::InvariantsOnly;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace syntomic
