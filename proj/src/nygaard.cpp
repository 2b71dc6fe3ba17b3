#include "syntomic/nygaard.hpp"

#include <algorithm>
#include <sstream>

#include "syntomic/errors.hpp"
#include "syntomic/linalg.hpp"

namespace syntomic {

NygaardComplex::NygaardComplex(std::shared_ptr<const DPComplexData> base, std::int64_t i)
    : base_(std::move(base)), i_(i) {
    if (!base_) throw InvalidArgument("null base complex");
    if (i < 0) throw InvalidArgument("Nygaard index must be >= 0");
}

NygaardComplex nygaard_complex(std::shared_ptr<const DPComplexData> base, std::int64_t i) {
    return NygaardComplex(std::move(base), i);
}

std::int64_t NygaardComplex::scaling(const DPBasisElem& b) const {
    return std::max<std::int64_t>(i_ - hodge_level(b, base_->e()), 0);
}

ValScalar NygaardComplex::scaled_d(std::int64_t m) const {
    const std::int64_t exponent = scaling({m, 0}) - scaling({m - 1, 1});
    if (exponent < 0) throw NegativeScaling("differential needs a negative power of p at m = " + std::to_string(m));
    return shift(base_->d_coeff(m), exponent);
}

DividedFrobeniusEntry NygaardComplex::divided_frobenius(const DPBasisElem& b) const {
    const FrobeniusImage& img = base_->phi(b);
    const std::int64_t s = scaling(b);
    DividedFrobeniusEntry entry{b, s, shift(img.coeff, s - i_), img.target};
    if (!entry.coeff.is_zero() && entry.coeff.v < 0)
        throw IntegralityViolation("phi/p^i has negative valuation at m = " + std::to_string(b.m));
    return entry;
}

std::vector<DividedFrobeniusEntry> divided_frobenius(const NygaardComplex& ny) {
    std::vector<DividedFrobeniusEntry> out;
    const DPComplexData& base = ny.base();
    for (int deg = 0; deg <= 1; ++deg)
        for (std::int64_t m = 0; m + deg <= base.max_weight(); ++m) {
            const DPBasisElem b{m, deg};
            if (base.phi_out_of_window(b)) continue;
            out.push_back(ny.divided_frobenius(b));
        }
    return out;
}

GrNygaardReport gr_nygaard_check(const NygaardComplex& ny, std::int64_t weight_bound) {
    const DPComplexData& base = ny.base();
    const std::int64_t p = base.p();
    const int e = base.e();
    const std::int64_t i = ny.index();
    const std::int64_t top = p * weight_bound + p - 1;  // largest target weight
    if (weight_bound < 0 || top > base.max_weight())
        throw WindowTooSmall("gr_nygaard_check needs p * (weight_bound + 1) - 1 <= max_weight");

    const WittRing& ring = base.ring();
    const NygaardComplex next(ny.base_ptr(), i + 1);

    GrNygaardReport report;
    auto fail = [&](std::int64_t w, std::string why) {
        if (!report.first_offending_weight || w < *report.first_offending_weight) {
            report.first_offending_weight = w;
            report.message = std::move(why);
        }
    };

    // Sources: generators of N^{>=i} that survive in N^{>=i}/N^{>=i+1}, i.e. j(m) <= i.
    std::vector<std::int64_t> sources;
    for (std::int64_t m = 0; m <= weight_bound; ++m) {
        // phi/p^i must send N^{>=i+1} into p * D for the quotient map to exist.
        const DividedFrobeniusEntry deeper = next.divided_frobenius({m, 0});
        const std::int64_t v = deeper.coeff.is_zero() ? ValScalar::kZeroValuation : deeper.coeff.v + 1;
        if (v < 1) fail(p * m, "phi/p^i is not divisible by p on N^{>=i+1}");
        if (dp_level(m, e) <= i) sources.push_back(m);
    }

    PModMatrix mat(static_cast<std::size_t>(top + 1), sources.size() * p, static_cast<std::uint32_t>(p), 1);
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const std::int64_t m = sources[k];
        const DividedFrobeniusEntry entry = ny.divided_frobenius({m, 0});
        for (std::int64_t r = 0; r < p; ++r) {
            // x^r * b_{pm} = (j(pm+r)!/j(pm)!) b_{pm+r}
            const std::int64_t target = entry.target.m + r;
            const ValScalar shift_coeff = factorial_ratio(dp_level(target, e), dp_level(entry.target.m, e), ring);
            const ValScalar total = multiply(ring, entry.coeff, shift_coeff);
            const WittElem value = total.value(ring);
            mat.set(static_cast<std::size_t>(target), k * p + r, static_cast<std::int64_t>(value.coords[0] % p));
            const bool nonzero = !total.is_zero() && total.v == 0;
            if (!nonzero) fail(target, "linearized divided Frobenius is not injective");
            if (nonzero && conj_level({target, 0}, e, static_cast<std::uint32_t>(p)) > i)
                fail(target, "image leaves Fil_conj^{<=i}");
        }
    }

    std::vector<bool> hit(static_cast<std::size_t>(top + 1), false);
    for (std::size_t k = 0; k < mat.cols(); ++k)
        for (std::size_t r = 0; r < mat.rows(); ++r)
            if (mat(r, k) != 0) hit[r] = true;
    for (std::int64_t w = 0; w <= top; ++w) {
        const bool expected = conj_level({w, 0}, e, static_cast<std::uint32_t>(p)) <= i;
        if (expected) ++report.expected_rank;
        if (expected && !hit[w]) fail(w, "Fil_conj^{<=i} element missing from the image");
    }

    const SNFResult s = snf(mat);
    report.rank = std::count_if(s.diag.begin(), s.diag.end(), [](int d) { return d == 0; });
    if (report.rank != static_cast<std::int64_t>(mat.cols())) fail(top, "linearized map has a kernel");
    if (report.rank != report.expected_rank) fail(top, "rank differs from dim Fil_conj^{<=i}");

    report.pass = !report.first_offending_weight.has_value();
    if (report.pass) {
        std::ostringstream os;
        os << "rank " << report.rank << " = dim Fil_conj^{<=" << i << "} in window";
        report.message = os.str();
    }
    return report;
}

}  // namespace syntomic
