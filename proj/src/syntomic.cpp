#include "syntomic/syntomic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

#include "syntomic/errors.hpp"

namespace syntomic {

namespace {

using Block = std::vector<std::vector<Residue>>;

Block block_product(const Block& a, const Block& b, Residue m) {
    const std::size_t f = a.size();
    Block out(f, std::vector<Residue>(f, 0));
    for (std::size_t r = 0; r < f; ++r)
        for (std::size_t k = 0; k < f; ++k)
            for (std::size_t c = 0; c < f; ++c)
                out[r][c] = (out[r][c] + static_cast<Residue>((static_cast<unsigned __int128>(a[r][k]) * b[k][c]) % m)) % m;
    return out;
}

void add_block(PModMatrix& mat, std::size_t row0, std::size_t col0, const Block& block, bool negate) {
    const Residue m = mat.modulus();
    for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < block.size(); ++c) {
            const Residue x = block[r][c] % m;
            mat.accumulate(row0 + r, col0 + c, negate ? (x == 0 ? 0 : m - x) : x);
        }
}

// Multiplication by a W(k)-scalar (can, d).
Block scalar_block(const WittRing& ring, const ValScalar& c) { return ring.multiplication_matrix(c.value(ring)); }

// a * b -> c * sigma(a) * b' (phi is sigma-semilinear).
Block frobenius_block(const WittRing& ring, const ValScalar& c) {
    return block_product(ring.multiplication_matrix(c.value(ring)), ring.frobenius_matrix(), ring.modulus());
}

int precision_from_env() {
    if (const char* env = std::getenv("SYNTOMIC_MAX_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    return 0;
}

HomologyGroup merge(const std::vector<const HomologyGroup*>& parts) {
    HomologyGroup out;
    for (const HomologyGroup* g : parts) {
        for (int a : g->factors)
            for (int k = 0; k < g->multiplicity; ++k) out.factors.push_back(a);
        out.free_rank += g->free_rank;
        out.saturated = out.saturated || g->saturated;
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

// Runs job(k) for k in [0, count) on up to `jobs` threads; the first exception is rethrown.
template <class Job>
void run_parallel(std::size_t count, int jobs, Job job) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) job(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                try {
                    job(k);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace

HomologyGroup FiniteComplex::cohomology(int deg) const {
    const std::uint32_t p = d0.p();
    const int N = d0.precision();
    switch (deg) {
        case 0: return homology_at(PModMatrix(d0.cols(), 0, p, N), d0);
        case 1: return homology_at(d0, d1);
        case 2: return homology_at(d1, PModMatrix(0, d1.rows(), p, N));
        default: throw InvalidArgument("cohomological degree must be 0, 1 or 2");
    }
}

SyntomicComplex::SyntomicComplex(std::shared_ptr<const DPComplexData> base, std::int64_t i, ConeSign sign)
    : nygaard_(std::move(base), i), sign_(sign) {}

SyntomicComplex build_fiber(std::shared_ptr<const WittRing> ring, int e, std::int64_t i, std::int64_t max_weight,
                            ConeSign sign) {
    auto base = std::make_shared<const DPComplexData>(DPComplexData::build(std::move(ring), e, max_weight));
    return SyntomicComplex(std::move(base), i, sign);
}

FiniteComplex SyntomicComplex::restrict_to(std::span<const std::int64_t> weights) const {
    if (!std::is_sorted(weights.begin(), weights.end())) throw InvalidArgument("weights must be sorted");
    if (!weights.empty() && weights.back() > base().max_weight()) throw WeightOverflow("weight beyond max_weight");
    const WittRing& R = ring();
    const std::size_t f = static_cast<std::size_t>(R.degree());
    const std::size_t n = weights.size();
    const auto p = R.p();
    const int N = R.precision();

    auto lookup = [&](std::int64_t w) -> std::optional<std::size_t> {
        auto it = std::lower_bound(weights.begin(), weights.end(), w);
        if (it == weights.end() || *it != w) return std::nullopt;
        return static_cast<std::size_t>(it - weights.begin());
    };

    // C^1 layout: N^{>=i} Omega^1 generators (weights >= 1), then Omega^0.
    // C^2 uses the same indices as the N^{>=i} Omega^1 block.
    std::vector<std::size_t> n1(n, 0);
    std::size_t count1 = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (weights[k] >= 1) n1[k] = count1++;
    const std::size_t om0_offset = count1;
    const std::vector<std::size_t>& om1 = n1;

    const std::size_t dim0 = n * f, dim1 = (count1 + n) * f, dim2 = count1 * f;
    FiniteComplex out{std::vector<std::int64_t>(weights.begin(), weights.end()), PModMatrix(dim1, dim0, p, N),
                      PModMatrix(dim2, dim1, p, N)};

    for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t w = weights[k];
        const std::size_t col0 = k * f;
        // D^0 on the degree-0 generator of weight w.
        if (w >= 1) add_block(out.d0, n1[k] * f, col0, scalar_block(R, nygaard_.scaled_d(w)), false);
        const DividedFrobeniusEntry phi0 = nygaard_.divided_frobenius({w, 0});
        if (auto t = lookup(weight(phi0.target)))
            add_block(out.d0, (om0_offset + *t) * f, col0, frobenius_block(R, phi0.coeff), false);
        add_block(out.d0, (om0_offset + k) * f, col0,
                  scalar_block(R, ValScalar::unit_power(R, nygaard_.scaling({w, 0}))), true);

        if (w < 1) continue;
        // D^1 on the degree-1 generator b_{w-1} dx of weight w.
        const std::size_t col1 = n1[k] * f;
        const DividedFrobeniusEntry phi1 = nygaard_.divided_frobenius({w - 1, 1});
        if (auto t = lookup(weight(phi1.target)))
            add_block(out.d1, om1[*t] * f, col1, frobenius_block(R, phi1.coeff), false);
        add_block(out.d1, om1[k] * f, col1,
                  scalar_block(R, ValScalar::unit_power(R, nygaard_.scaling({w - 1, 1}))), true);
        // D^1 on Omega^0: -d f0.
        add_block(out.d1, om1[k] * f, (om0_offset + k) * f, scalar_block(R, base().d_coeff(w)),
                  sign_ == ConeSign::Standard);
    }
    return out;
}

PModMatrix SyntomicComplex::tail_map(std::span<const std::int64_t> weights, int deg) const {
    if (deg != 0 && deg != 1) throw InvalidArgument("tail_map degree must be 0 or 1");
    const WittRing& R = ring();
    const std::size_t f = static_cast<std::size_t>(R.degree());
    const std::size_t n = weights.size();
    PModMatrix out(n * f, n * f, R.p(), R.precision());
    for (std::size_t k = 0; k < n; ++k) {
        const DPBasisElem b{weights[k] - deg, deg};
        if (b.m < 0) throw InvalidArgument("no degree-1 generator in weight 0");
        const DividedFrobeniusEntry phi = nygaard_.divided_frobenius(b);
        auto it = std::find(weights.begin(), weights.end(), weight(phi.target));
        if (it != weights.end())
            add_block(out, static_cast<std::size_t>(it - weights.begin()) * f, k * f, frobenius_block(R, phi.coeff), false);
        add_block(out, k * f, k * f, scalar_block(R, ValScalar::unit_power(R, nygaard_.scaling(b))), true);
    }
    return out;
}

std::int64_t stable_weight(int e, std::int64_t i) { return static_cast<std::int64_t>(e) * i; }

std::vector<TowerComplex> tower_decompose(const SyntomicComplex& c, int extra_positions) {
    const std::int64_t p = c.ring().p();
    const int N = c.ring().precision();
    const std::int64_t W = c.base().max_weight();
    const std::int64_t stable = stable_weight(c.base().e(), c.i());

    std::vector<TowerComplex> out;
    for (std::int64_t d = 1; d < stable; ++d) {
        if (d % p == 0) continue;
        TowerTruncation cert;
        cert.d = d;
        int a0 = 0;
        for (std::int64_t w = d; w * p < stable; w *= p) ++a0;
        cert.a_max = a0 + extra_positions;

        std::vector<std::int64_t> kept;
        std::int64_t w = d;
        for (int a = 0; a <= cert.a_max; ++a, w *= p) {
            if (w > W) throw CertificateFailure("tower " + std::to_string(d) + " does not fit the weight window");
            kept.push_back(w);
        }

        // Tail: positions > a_max, all of weight >= stable, so can = id there and
        // phi/p^i has valuation >= j(w) - i, which grows along the tower.
        const std::int64_t first_tail = w;
        if (c.nygaard().scaling({first_tail, 0}) != 0 || c.nygaard().scaling({first_tail - 1, 1}) != 0)
            throw CertificateFailure("canonical map is not the identity on the tail of tower " + std::to_string(d));
        std::vector<std::int64_t> window;
        std::int64_t sum0 = 0, sum1 = 0;
        for (std::int64_t t = first_tail; std::min(sum0, sum1) < N; t *= p) {
            if (t > W)
                throw CertificateFailure("tail window of tower " + std::to_string(d) + " exceeds the weight window");
            window.push_back(t);
            const ValScalar v0 = c.nygaard().divided_frobenius({t, 0}).coeff;
            const ValScalar v1 = c.nygaard().divided_frobenius({t - 1, 1}).coeff;
            sum0 = v0.is_zero() ? N : std::min<std::int64_t>(sum0 + v0.v, N);
            sum1 = v1.is_zero() ? N : std::min<std::int64_t>(sum1 + v1.v, N);
        }
        for (int deg = 0; deg <= 1; ++deg) {
            const SNFResult s = snf(c.tail_map(window, deg));
            if (std::any_of(s.diag.begin(), s.diag.end(), [](int x) { return x != 0; }))
                throw CertificateFailure("tail map of tower " + std::to_string(d) + " is not invertible");
        }
        cert.window = static_cast<int>(window.size());
        cert.valuation_sum = std::min(sum0, sum1);
        cert.certified = true;
        out.push_back(TowerComplex{d, c.restrict_to(kept), cert});
    }
    return out;
}

FiniteComplex weight_zero_block(const SyntomicComplex& c) {
    const std::int64_t zero[] = {0};
    return c.restrict_to(zero);
}

std::string to_string(Validation v) {
    switch (v) {
        case Validation::ClosedForm: return "closed-form";
        case Validation::InvariantsOnly: return "invariants-only";
        case Validation::Mismatch: return "mismatch";
    }
    return "unknown";
}

HomologyGroup CohomologyResult::total(int deg) const {
    std::vector<const HomologyGroup*> parts;
    for (const auto& t : towers) parts.push_back(&t.h.at(deg));
    return group_by_multiplicity(merge(parts), f);
}

int initial_precision(std::uint32_t p, int e, std::int64_t i) {
    // ceil(log_p(e * i)) + 3
    const std::int64_t target = std::max<std::int64_t>(static_cast<std::int64_t>(e) * i, 1);
    int k = 0;
    for (std::int64_t pk = 1; pk < target; pk *= p) ++k;
    return k + 3;
}

std::int64_t initial_max_weight(std::uint32_t p, int e, std::int64_t i) {
    return static_cast<std::int64_t>(e) * std::max<std::int64_t>(i, 1) * p * p;
}

int default_precision_ceiling(std::uint32_t p) {
    int n = 0;
    for (unsigned __int128 pk = p; pk < (static_cast<unsigned __int128>(1) << 62); pk *= p) ++n;
    const int env = precision_from_env();
    return env > 0 ? std::min(env, n) : n;
}

std::vector<std::pair<std::int64_t, int>> closed_form_h1(std::uint32_t p, std::int64_t i, int e) {
    if (e != 2) throw Unsupported("closed form is known only for e = 2");
    if (p <= 2 || !is_prime(p)) throw Unsupported("closed form requires an odd prime p");
    if (i < 1) throw InvalidArgument("closed form requires i >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    const std::int64_t bound = 2 * i - 1;
    for (std::int64_t d = 1; d <= bound; d += 2) {
        if (d % p == 0) continue;
        int n = 0;
        for (std::int64_t pd = d; pd <= bound; pd *= p) ++n;  // smallest n with p^n d > 2i - 1
        out.emplace_back(d, n);
    }
    return out;
}

CohomologyResult zp_i(std::uint32_t p, int e, std::int64_t i, int f, const SyntomicOptions& options) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    if (e < 2) throw InvalidArgument("e must be >= 2");
    if (i < 0) throw InvalidArgument("i must be >= 0");
    if (f < 1) throw InvalidArgument("f must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    const int ceiling = options.precision_ceiling.value_or(default_precision_ceiling(p));
    int N = options.precision.value_or(initial_precision(p, e, i));
    std::int64_t W = options.max_weight.value_or(initial_max_weight(p, e, i));
    if (N > ceiling) throw NonTermination("starting precision exceeds the precision ceiling");

    CohomologyResult res;
    res.p = p;
    res.e = e;
    res.i = i;
    res.f = f;
    res.point = (i == 0);

    for (;;) {
        auto ring = std::make_shared<const WittRing>(p, N, f);
        std::vector<TowerComplex> towers;
        std::optional<SyntomicComplex> complex;
        try {
            complex.emplace(build_fiber(ring, e, i, W, options.sign));
            towers = tower_decompose(*complex, options.extra_positions);
        } catch (const CertificateFailure&) {
            W *= 2;
            continue;
        }

        std::vector<TowerCohomology> computed(towers.size() + 1);
        run_parallel(towers.size() + 1, options.jobs, [&](std::size_t k) {
            TowerCohomology& out = computed[k];
            const FiniteComplex& fc = k == 0 ? weight_zero_block(*complex) : towers[k - 1].complex;
            if (k > 0) {
                out.d = towers[k - 1].d;
                out.truncation = towers[k - 1].truncation;
            }
            for (int deg = 0; deg < 3; ++deg) out.h[deg] = fc.cohomology(deg);
        });

        bool saturated = false;
        for (std::size_t k = 0; k < computed.size(); ++k)
            for (auto& g : computed[k].h) {
                if (k == 0 && i == 0 && g.saturated) {
                    // Weight-0 block at i = 0 is phi - 1 on W(k): its kernel and
                    // cokernel are free of rank 1, not precision artifacts.
                    auto it = std::remove_if(g.factors.begin(), g.factors.end(), [&](int a) { return a >= N; });
                    g.free_rank += static_cast<int>(g.factors.end() - it);
                    g.factors.erase(it, g.factors.end());
                    g.saturated = false;
                }
                saturated = saturated || g.saturated;
                g = group_by_multiplicity(g, f);
            }
        if (saturated) {
            if (N + 2 > ceiling)
                throw NonTermination("cohomology still saturated at precision " + std::to_string(N) +
                                     "; ceiling is " + std::to_string(ceiling));
            N += 2;
            ++res.escalations;
            continue;
        }

        for (auto& t : computed)
            if (!(t.h[0].is_zero() && t.h[1].is_zero() && t.h[2].is_zero())) res.towers.push_back(std::move(t));
        res.precision = N;
        res.max_weight = W;
        res.saturated = false;
        break;
    }

    if (e == 2 && p > 2 && i >= 1) {
        bool ok = true;
        std::map<std::int64_t, std::vector<int>> got;
        for (const auto& t : res.towers) {
            if (!t.h[0].is_zero() || !t.h[2].is_zero()) ok = false;
            if (!t.h[1].is_zero()) {
                if (t.h[1].multiplicity != f || t.h[1].free_rank != 0) ok = false;
                got[t.d] = t.h[1].factors;
            }
        }
        std::map<std::int64_t, std::vector<int>> expected;
        for (const auto& [d, n] : closed_form_h1(p, i)) expected[d] = {n};
        res.validated = ok && got == expected ? Validation::ClosedForm : Validation::Mismatch;
    } else {
        res.validated = Validation::InvariantsOnly;
    }

    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

HomologyGroup relative_k_group(std::uint32_t p, std::int64_t i, int f, const SyntomicOptions& options) {
    if (i < 1) throw InvalidArgument("relative K-groups are indexed by i >= 1");
    const CohomologyResult r = zp_i(p, 2, i, f, options);
    if (!r.total(0).is_zero() || !r.total(2).is_zero())
        throw Error("Z_p(" + std::to_string(i) + ") has cohomology outside degree 1");
    return r.total(1);
}

}  // namespace syntomic
