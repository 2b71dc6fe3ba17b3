#include "syntomic/dpcomplex.hpp"

#include <sstream>

#include "syntomic/errors.hpp"

namespace syntomic {

ValScalar d_coeff_via_factorials(std::int64_t m, int e, const WittRing& ring) {
    if (m < 1) throw InvalidArgument("d_coeff defined for m >= 1");
    // m * j(m-1)! / j(m)!: divide m by the ratio j(m)!/j(m-1)!.
    const ValScalar ratio = factorial_ratio(dp_level(m, e), dp_level(m - 1, e), ring);
    const ValScalar mm = ValScalar::from_integer(ring, m);
    if (mm.v < ratio.v) throw IntegralityViolation("d coefficient is not integral");
    return ValScalar{mm.v - ratio.v, ring.mul(mm.u, ring.inverse(ratio.u))};
}

ValScalar d_coeff_direct(std::int64_t m, int e, const WittRing& ring) {
    if (m < 1) throw InvalidArgument("d_coeff defined for m >= 1");
    return ValScalar::from_integer(ring, m % e == 0 ? e : m);
}

std::int64_t hodge_level(const DPBasisElem& b, int e) { return dp_level(b.m, e) + b.deg; }

std::int64_t conj_level(const DPBasisElem& b, int e, std::uint32_t p) {
    if (b.deg != 0) throw DegreeError("conjugate filtration is defined on degree 0 only");
    return dp_level(b.m, e) / static_cast<std::int64_t>(p);
}

DPComplexData DPComplexData::build(std::shared_ptr<const WittRing> ring, int e, std::int64_t max_weight) {
    if (!ring) throw InvalidArgument("null ring");
    if (e < 2) throw InvalidArgument("exponent e must be >= 2");
    if (max_weight < 1) throw InvalidArgument("max_weight must be >= 1");
    const std::int64_t p = ring->p();
    // Factorial ratios up to j(p * max_weight + p - 1) must stay cheap and overflow-free.
    if (max_weight > (std::int64_t{1} << 24) / p) throw WeightOverflow("max_weight exceeds internal headroom");

    DPComplexData c;
    c.ring_ = std::move(ring);
    c.e_ = e;
    c.max_weight_ = max_weight;
    const WittRing& R = *c.ring_;
    const FactorialTable fact(R, static_cast<std::uint64_t>(dp_level(p * max_weight + p - 1, e)));

    c.d_entries_.resize(max_weight + 1);
    for (std::int64_t m = 1; m <= max_weight; ++m) c.d_entries_[m] = d_coeff_via_factorials(m, e, R);

    // Degree 0: b_m, 0 <= m <= W. phi(x^m / j(m)!) = (j(pm)!/j(m)!) b_{pm}.
    c.phi0_.resize(max_weight + 1);
    for (std::int64_t m = 0; m <= max_weight; ++m) {
        const std::int64_t target = p * m;
        c.phi0_[m] = FrobeniusImage{fact.ratio(dp_level(target, e), dp_level(m, e)), {target, 0}};
        if (target > max_weight) c.out_of_window_.push_back({m, 0});
    }
    // Degree 1: b_m dx, 0 <= m <= W - 1. phi(x^m dx / j(m)!) = p x^{pm+p-1} dx / j(m)!.
    c.phi1_.resize(max_weight);
    for (std::int64_t m = 0; m + 1 <= max_weight; ++m) {
        const std::int64_t target = p * m + p - 1;
        const ValScalar ratio = fact.ratio(dp_level(target, e), dp_level(m, e));
        c.phi1_[m] = FrobeniusImage{shift(ratio, 1), {target, 1}};
        if (target + 1 > max_weight) c.out_of_window_.push_back({m, 1});
    }
    return c;
}

void DPComplexData::check_weight(const DPBasisElem& b) const {
    if (b.m < 0 || b.deg < 0 || b.deg > 1) throw InvalidArgument("invalid basis element");
    if (weight(b) > max_weight_) throw WeightOverflow("basis element beyond max_weight");
}

const ValScalar& DPComplexData::d_coeff(std::int64_t m) const {
    if (m < 1) throw InvalidArgument("d_coeff defined for m >= 1");
    check_weight({m, 0});
    return d_entries_[m];
}

const FrobeniusImage& DPComplexData::phi(const DPBasisElem& b) const {
    check_weight(b);
    return b.deg == 0 ? phi0_[b.m] : phi1_[b.m];
}

bool DPComplexData::phi_out_of_window(const DPBasisElem& b) const { return weight(phi(b).target) > max_weight_; }

std::string DPComplexData::dump() const {
    std::ostringstream os;
    os << "p=" << p() << " e=" << e_ << " N=" << precision() << " Wmax=" << max_weight_ << '\n';
    os << "m\tj\td(b_m)\tphi(b_m)\tphi(b_m dx)\n";
    for (std::int64_t m = 0; m <= max_weight_; ++m) {
        os << m << '\t' << dp_level(m, e_) << '\t';
        if (m >= 1) os << "p^" << d_entries_[m].v << "*" << ring().to_string(d_entries_[m].u);
        os << '\t' << "p^" << phi0_[m].coeff.v << " b_" << phi0_[m].target.m;
        if (m < max_weight_) os << '\t' << "p^" << phi1_[m].coeff.v << " b_" << phi1_[m].target.m << "dx";
        os << '\n';
    }
    return os.str();
}

}  // namespace syntomic
