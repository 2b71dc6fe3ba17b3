// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "syntomic/basecase.hpp"
#include "syntomic/checks.hpp"
#include "syntomic/syntomic.hpp"

using namespace syntomic;

namespace {

std::vector<int> expanded(const HomologyGroup& g) {
    std::vector<int> out;
    for (int a : g.factors)
        for (int m = 0; m < g.multiplicity; ++m) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

bool same_cohomology(const CohomologyResult& a, const CohomologyResult& b) {
    for (int deg = 0; deg < 3; ++deg)
        if (!(a.total(deg) == b.total(deg))) return false;
    return true;
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& what) {
        if (pass) detail << what;
        pass = false;
    }
};

std::vector<std::tuple<std::uint32_t, int, std::int64_t>> criterion1_cases() {
    std::vector<std::tuple<std::uint32_t, int, std::int64_t>> cases;
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int f : {1, 2})
            for (std::int64_t i = 1; i <= 12; ++i) cases.emplace_back(p, f, i);
    return cases;
}

Outcome closed_form() {
    Outcome o;
    for (auto [p, f, i] : criterion1_cases()) {
        const CohomologyResult r = zp_i(p, 2, i, f);
        std::vector<int> want;
        for (int n : oracle::closed_form_factors(p, i))
            for (int m = 0; m < f; ++m) want.push_back(n);
        std::sort(want.begin(), want.end());
        const bool ok = r.total(0).is_zero() && r.total(2).is_zero() && r.total(1).free_rank == 0 &&
                        expanded(r.total(1)) == want && r.validated == Validation::ClosedForm;
        if (!ok) o.fail("p=" + std::to_string(p) + " f=" + std::to_string(f) + " i=" + std::to_string(i));
    }
    if (o.pass) o.detail << "72 cases";
    return o;
}

Outcome units_oracle() {
    Outcome o;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const HomologyGroup k = relative_k_group(p, 1, 1);
        const std::vector<int> units = oracle::relative_units(p, 2, {0});
        if (expanded(k) != units || k.free_rank != 0 || units != std::vector<int>{1})
            o.fail("p=" + std::to_string(p) + ": " + k.to_string(p));
    }
    if (o.pass) o.detail << "K_1 = Z/p = (1 + x F_p[x]/x^2)^x for p = 3, 5, 7";
    return o;
}

Outcome naive_equivalence() {
    Outcome o;
    int n = 0;
    for (std::uint32_t p : {3u, 5u})
        for (int e : {2, 3})
            for (std::int64_t i = 1; i <= 6; ++i) {
                const CohomologyResult a = zp_i(p, e, i, 1);
                const CohomologyResult b = zp_i_naive(p, e, i, 1, a.precision, 2 * stable_weight(e, i) + e, 64);
                if (!same_cohomology(a, b))
                    o.fail("p=" + std::to_string(p) + " e=" + std::to_string(e) + " i=" + std::to_string(i));
                ++n;
            }
    if (o.pass) o.detail << n << " cases";
    return o;
}

Outcome stability() {
    Outcome o;
    for (auto [p, f, i] : criterion1_cases()) {
        const CohomologyResult base = zp_i(p, 2, i, f);
        SyntomicOptions more_n, more_w, more_a;
        more_n.precision = base.precision + 2;
        more_w.max_weight = 2 * base.max_weight;
        more_a.extra_positions = 2;
        const std::string tag = "p=" + std::to_string(p) + " f=" + std::to_string(f) + " i=" + std::to_string(i);
        if (!same_cohomology(base, zp_i(p, 2, i, f, more_n))) o.fail(tag + " N+2");
        if (!same_cohomology(base, zp_i(p, 2, i, f, more_w))) o.fail(tag + " 2*Wmax");
        if (!same_cohomology(base, zp_i(p, 2, i, f, more_a))) o.fail(tag + " A_max+2");
    }
    if (o.pass) o.detail << "72 cases x {N+2, 2*Wmax, A_max+2}";
    return o;
}

Outcome nygaard() {
    Outcome o;
    for (std::uint32_t p : {3u, 5u})
        for (std::int64_t i = 0; i <= 6; ++i) {
            const CheckResult c = check_nygaard(p, 2, i);
            if (!c.pass) o.fail(c.name + ": " + c.detail);
        }
    if (o.pass) o.detail << "integral, gr isomorphism for i <= 6, p = 3, 5";
    return o;
}

Outcome witt() {
    Outcome o;
    std::uint64_t seed = 2024;
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int f : {1, 2})
            for (const CheckResult& c : check_witt_properties(p, 6, f, 1000, seed++))
                if (!c.pass) o.fail(c.name + ": " + c.detail);
    if (o.pass) o.detail << "4 laws x 1000 cases x 6 rings";
    return o;
}

Outcome base_point() {
    Outcome o;
    for (auto [p, f] : std::vector<std::pair<std::uint32_t, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        for (const TcGroup& g : tc_homotopy(p, f, -6, 12, 8)) {
            const bool zp = g.group.free_rank == 1 && g.group.factors.empty();
            const bool ok = (g.degree == 0 || g.degree == -1) ? zp : g.group.is_zero();
            if (!ok) o.fail("q=" + std::to_string(p) + "^" + std::to_string(f) + " pi_" + std::to_string(g.degree));
        }
        for (std::int64_t i = 0; i <= 6; ++i) {
            const auto h = zp_i_point(p, f, i, 8);
            const bool ok = i == 0 ? (h[0].free_rank == 1 && h[1].free_rank == 1 && h[0].factors.empty() &&
                                      h[1].factors.empty())
                                   : (h[0].is_zero() && h[1].is_zero());
            if (!ok) o.fail("zp_i_point q=" + std::to_string(p) + "^" + std::to_string(f) + " i=" + std::to_string(i));
        }
    }
    if (o.pass) o.detail << "q = 3, 9, 5 over degrees [-6, 12]";
    return o;
}

Outcome conjugate_dimension() {
    // dim gr^i = rank(gr-Nygaard map at i) - rank at i - 1, checked against e p.
    Outcome o;
    const std::int64_t i_max = 4;
    for (int e : {2, 3, 4})
        for (std::uint32_t p : {3u, 5u}) {
            const std::int64_t bound = e * (i_max + 1);
            auto base = std::make_shared<const DPComplexData>(
                DPComplexData::build(std::make_shared<const WittRing>(p, 4), e, p * (bound + 1)));
            std::int64_t previous = 0;
            for (std::int64_t i = 0; i <= i_max; ++i) {
                const GrNygaardReport r = gr_nygaard_check(NygaardComplex(base, i), bound);
                std::int64_t counted = 0;
                for (std::int64_t m = 0; m <= base->max_weight(); ++m) counted += conj_level({m, 0}, e, p) == i;
                const std::int64_t ep = e * static_cast<std::int64_t>(p);
                if (!r.pass || r.rank - previous != ep || counted != ep)
                    o.fail("e=" + std::to_string(e) + " p=" + std::to_string(p) + " i=" + std::to_string(i));
                previous = r.rank;
            }
        }
    if (o.pass) o.detail << "e = 2, 3, 4; p = 3, 5; i <= 4";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 closed-form H^1 for p in {3,5,7}, f in {1,2}, i <= 12", closed_form},
        {"2 K_1 against the unit group of the dual numbers", units_oracle},
        {"3 tower engine against the dense oracle", naive_equivalence},
        {"4 stability under N+2, 2*Wmax, A_max+2", stability},
        {"5 divided-Frobenius integrality and gr-Nygaard isomorphism", nygaard},
        {"6 Witt vector laws", witt},
        {"7 TC and Z_p(i) of finite fields", base_point},
        {"8 conjugate filtration dimension e*p", conjugate_dimension},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail.str() << "; " << secs << " s)" << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
