#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syntomic/dpcomplex.hpp"

namespace syntomic {

/// One entry of phi/p^i: the scaled generator p^{scaling} * source maps to
/// coeff * target, with target in the unscaled basis of the base complex.
struct DividedFrobeniusEntry {
    DPBasisElem source;
    std::int64_t scaling = 0;
    ValScalar coeff;
    DPBasisElem target;
};

/// N^{>= i} of the divided-power de Rham complex, defined as the tensor
/// product of the Hodge filtration with the p-adic filtration. It is stored as
/// a free module on rescaled generators p^{s(m, deg)} * b with
/// s(m, deg) = max(i - j(m) - deg, 0).
class NygaardComplex {
public:
    NygaardComplex(std::shared_ptr<const DPComplexData> base, std::int64_t i);

    const DPComplexData& base() const { return *base_; }
    std::shared_ptr<const DPComplexData> base_ptr() const { return base_; }
    std::int64_t index() const { return i_; }

    std::int64_t scaling(const DPBasisElem& b) const;
    /// Coefficient of the degree-1 generator at m-1 in d(generator at m), in the scaled bases.
    ValScalar scaled_d(std::int64_t m) const;
    /// phi/p^i of the scaled generator at b, expressed in the unscaled target basis.
    DividedFrobeniusEntry divided_frobenius(const DPBasisElem& b) const;

private:
    std::shared_ptr<const DPComplexData> base_;
    std::int64_t i_;
};

NygaardComplex nygaard_complex(std::shared_ptr<const DPComplexData> base, std::int64_t i);

/// Full divided-Frobenius table over every basis element whose image lies in the window.
std::vector<DividedFrobeniusEntry> divided_frobenius(const NygaardComplex& ny);

struct GrNygaardReport {
    bool pass = false;
    std::optional<std::int64_t> first_offending_weight;
    std::int64_t rank = 0;           // F_p-rank of the linearized map
    std::int64_t expected_rank = 0;  // number of b_m with conj_level <= i in the window
    std::string message;
};

/// Checks that phi/p^i mod p on N^{>=i}/N^{>=i+1} in degree 0, linearized along
/// Frobenius (source basis g_m (x) x^r with 0 <= r < p), is injective with image
/// exactly the span of {b_m : conj_level(b_m) <= i} in weights below p * (weight_bound + 1).
GrNygaardReport gr_nygaard_check(const NygaardComplex& ny, std::int64_t weight_bound);

}  // namespace syntomic
