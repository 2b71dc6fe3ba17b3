#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syntomic/witt.hpp"

namespace syntomic {

/// Basis element of the divided-power de Rham complex of W(k)[x] along (x^e):
/// b_m = x^m / floor(m/e)! in degree 0, b_m dx in degree 1.
struct DPBasisElem {
    std::int64_t m = 0;
    int deg = 0;

    friend bool operator==(const DPBasisElem&, const DPBasisElem&) = default;
};

/// floor(m / e), the divided-power level of x^m.
inline std::int64_t dp_level(std::int64_t m, int e) { return m / e; }

/// Internal grading with |x| = 1: b_m has weight m, b_m dx has weight m + 1.
inline std::int64_t weight(const DPBasisElem& b) { return b.m + b.deg; }

/// Image of a basis element under the Frobenius lift x -> x^p: coeff * target.
struct FrobeniusImage {
    ValScalar coeff;
    DPBasisElem target;
};

/// p-completed divided-power de Rham complex
///   W(k)[x, x^{ej}/j!] --d--> W(k)[x, x^{ej}/j!] dx
/// truncated to weights <= max_weight. Immutable after build.
class DPComplexData {
public:
    static DPComplexData build(std::shared_ptr<const WittRing> ring, int e, std::int64_t max_weight);

    std::uint32_t p() const { return ring_->p(); }
    int e() const { return e_; }
    int precision() const { return ring_->precision(); }
    std::int64_t max_weight() const { return max_weight_; }
    const WittRing& ring() const { return *ring_; }
    std::shared_ptr<const WittRing> ring_ptr() const { return ring_; }

    /// Coefficient c_m with d(b_m) = c_m * b_{m-1} dx (m >= 1).
    const ValScalar& d_coeff(std::int64_t m) const;
    /// phi(b_m) for deg 0 (target b_{pm}); phi(b_m dx) for deg 1 (target b_{pm+p-1} dx).
    const FrobeniusImage& phi(const DPBasisElem& b) const;
    /// True when phi(b) lands beyond max_weight.
    bool phi_out_of_window(const DPBasisElem& b) const;
    /// Basis elements whose Frobenius image lies beyond max_weight.
    const std::vector<DPBasisElem>& out_of_window() const { return out_of_window_; }

    /// Human-readable table of d and phi entries, for debugging.
    std::string dump() const;

private:
    DPComplexData() = default;
    void check_weight(const DPBasisElem& b) const;

    std::shared_ptr<const WittRing> ring_;
    int e_ = 2;
    std::int64_t max_weight_ = 0;
    std::vector<ValScalar> d_entries_;
    std::vector<FrobeniusImage> phi0_;
    std::vector<FrobeniusImage> phi1_;
    std::vector<DPBasisElem> out_of_window_;
};

/// d-coefficient computed from the factorial ratio j(m-1)!/j(m)!.
ValScalar d_coeff_via_factorials(std::int64_t m, int e, const WittRing& ring);
/// d-coefficient from the direct rule: e when e | m, m otherwise.
ValScalar d_coeff_direct(std::int64_t m, int e, const WittRing& ring);

/// Hodge (divided-power) filtration level: j(m) in degree 0, j(m) + 1 in degree 1.
std::int64_t hodge_level(const DPBasisElem& b, int e);

/// Conjugate filtration level of b_m mod p, floor(j(m) / p).
/// Convention: Fil_conj^{<= i} is spanned by the b_m with j(m) < p(i + 1).
std::int64_t conj_level(const DPBasisElem& b, int e, std::uint32_t p);

}  // namespace syntomic
