#include "syntomic/checks.hpp"

#include <random>
#include <sstream>

#include "syntomic/errors.hpp"

namespace syntomic {

namespace {

WittElem random_elem(const WittRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<Residue> dist(0, R.modulus() - 1);
    WittElem x = R.zero();
    for (auto& c : x.coords) c = dist(rng);
    return x;
}

FieldElem random_field_elem(const WittRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, R.p() - 1);
    FieldElem a(R.degree());
    for (auto& c : a) c = dist(rng);
    return a;
}

std::string label(std::uint32_t p, int e, std::int64_t i) {
    std::ostringstream os;
    os << "p=" << p << " e=" << e << " i=" << i;
    return os.str();
}

}  // namespace

std::vector<CheckResult> check_witt_properties(std::uint32_t p, int precision, int f, int cases, std::uint64_t seed) {
    const WittRing R(p, precision, f);
    std::mt19937_64 rng(seed);
    int fv = 0, teich = 0, frob = 0, codec = 0;
    for (int k = 0; k < cases; ++k) {
        const WittElem x = random_elem(R, rng);
        const WittElem px = R.scale(x, p);
        if (R.frobenius(R.verschiebung(x)) != px || R.verschiebung(R.frobenius(x)) != px) ++fv;

        const FieldElem a = random_field_elem(R, rng), b = random_field_elem(R, rng);
        if (R.mul(R.teichmuller(a), R.teichmuller(b)) != R.teichmuller(R.residue_mul(a, b))) ++teich;

        if (R.residue(R.frobenius(x)) != R.residue(R.pow(x, p))) ++frob;

        if (R.from_witt_coords(R.to_witt_coords(x)) != x) ++codec;
    }
    auto mk = [&](const char* name, int failures) {
        std::ostringstream os;
        os << failures << " failures in " << cases << " cases (p=" << p << " N=" << precision << " f=" << f << ")";
        return CheckResult{name, failures == 0, os.str()};
    };
    return {mk("witt:FV=VF=p", fv), mk("witt:teichmuller-multiplicative", teich), mk("witt:frobenius-mod-p", frob),
            mk("witt:codec-round-trip", codec)};
}

CheckResult check_closed_form(std::uint32_t p, std::int64_t i, int f, const SyntomicOptions& options) {
    CheckResult c{"closed-form " + label(p, 2, i) + " f=" + std::to_string(f), false, {}};
    try {
        const CohomologyResult r = zp_i(p, 2, i, f, options);
        c.pass = r.validated == Validation::ClosedForm;
        c.detail = "H^1 = " + r.total(1).to_string(p) + ", validated " + to_string(r.validated);
    } catch (const std::exception& ex) {
        c.detail = ex.what();
    }
    return c;
}

CheckResult check_oracle_agreement(std::uint32_t p, int e, std::int64_t i, int f) {
    CheckResult c{"oracle " + label(p, e, i), false, {}};
    try {
        const CohomologyResult main = zp_i(p, e, i, f);
        const std::int64_t window = stable_weight(e, i) * 2 + e;
        const CohomologyResult naive = zp_i_naive(p, e, i, f, main.precision, window, 64);
        bool same = true;
        std::ostringstream os;
        for (int deg = 0; deg < 3; ++deg) {
            const HomologyGroup a = main.total(deg), b = naive.total(deg);
            if (a.factors != b.factors || a.multiplicity != b.multiplicity) same = false;
            os << "H^" << deg << ": " << a.to_string(p) << " vs " << b.to_string(p) << "; ";
        }
        c.pass = same;
        c.detail = os.str();
    } catch (const std::exception& ex) {
        c.detail = ex.what();
    }
    return c;
}

CheckResult check_nygaard(std::uint32_t p, int e, std::int64_t i) {
    CheckResult c{"nygaard " + label(p, e, i), false, {}};
    try {
        const std::int64_t bound = e * (i + 1);
        auto ring = std::make_shared<const WittRing>(p, 4, 1);
        auto base = std::make_shared<const DPComplexData>(DPComplexData::build(ring, e, p * (bound + 1)));
        const NygaardComplex ny(base, i);
        const auto entries = divided_frobenius(ny);  // throws on a negative valuation
        const GrNygaardReport rep = gr_nygaard_check(ny, bound);
        c.pass = rep.pass;
        c.detail = std::to_string(entries.size()) + " integral entries; " + rep.message;
    } catch (const std::exception& ex) {
        c.detail = ex.what();
    }
    return c;
}

CheckResult check_composition(std::uint32_t p, int e, std::int64_t i, ConeSign sign) {
    CheckResult c{"D1*D0=0 " + label(p, e, i), false, {}};
    try {
        auto ring = std::make_shared<const WittRing>(p, initial_precision(p, e, i), 1);
        const SyntomicComplex complex = build_fiber(ring, e, i, initial_max_weight(p, e, i) * p, sign);
        std::vector<std::int64_t> weights;
        for (std::int64_t w = 0; w <= stable_weight(e, i) * p; ++w) weights.push_back(w);
        std::vector<FiniteComplex> pieces{complex.restrict_to(weights)};
        for (auto& t : tower_decompose(complex)) pieces.push_back(std::move(t.complex));
        for (const auto& fc : pieces)
            if (!(fc.d1 * fc.d0).is_zero()) throw CompositionNonzero("D1*D0 != 0");
        c.pass = true;
        c.detail = std::to_string(pieces.size()) + " complexes";
    } catch (const std::exception& ex) {
        c.detail = ex.what();
    }
    return c;
}

std::vector<CheckResult> run_verify(const VerifyConfig& config) {
    std::vector<CheckResult> out;
    SyntomicOptions options;
    options.jobs = config.jobs;
    options.sign = config.sign;
    for (std::uint32_t p : config.primes) {
        for (auto& r : check_witt_properties(p, 6, 2, 200, 0x5eed + p)) out.push_back(std::move(r));
        for (std::int64_t i = 1; i <= config.i_max; ++i) {
            out.push_back(check_composition(p, 2, i, config.sign));
            out.push_back(check_closed_form(p, i, config.f, options));
            if (i <= 6) {
                out.push_back(check_oracle_agreement(p, 2, i, config.f));
                out.push_back(check_nygaard(p, 2, i));
            }
        }
    }
    return out;
}

}  // namespace syntomic
