#include "syntomic/basecase.hpp"

#include <algorithm>

#include "syntomic/errors.hpp"

namespace syntomic {

namespace {

// Kernel and cokernel of a square Z_p-matrix, as H^0 and H^1 of [W -> W].
// Factors saturated at the precision are reported as free summands.
std::vector<HomologyGroup> kernel_cokernel(const PModMatrix& map) {
    const std::uint32_t p = map.p();
    const int N = map.precision();
    std::vector<HomologyGroup> out{homology_at(PModMatrix(map.cols(), 0, p, N), map),
                                   homology_at(map, PModMatrix(0, map.rows(), p, N))};
    for (auto& g : out) {
        auto it = std::remove_if(g.factors.begin(), g.factors.end(), [&](int a) { return a >= N; });
        g.free_rank = static_cast<int>(g.factors.end() - it);
        g.factors.erase(it, g.factors.end());
        g.saturated = false;
    }
    return out;
}

Residue power_mod(Residue base, std::int64_t e, Residue m) {
    Residue r = 1 % m;
    for (std::int64_t k = 0; k < e; ++k) r = static_cast<Residue>((static_cast<unsigned __int128>(r) * base) % m);
    return r;
}

}  // namespace

PerfectBaseData::PerfectBaseData(std::shared_ptr<const WittRing> ring, std::int64_t j_min, std::int64_t j_max)
    : ring_(std::move(ring)), j_min_(j_min), j_max_(j_max) {
    if (!ring_) throw InvalidArgument("null ring");
    if (j_min > j_max) throw InvalidArgument("empty degree range");
}

TcMinusMonomial PerfectBaseData::tc_minus_generator(std::int64_t j) const {
    return j >= 0 ? TcMinusMonomial{0, j, 0} : TcMinusMonomial{0, 0, -j};
}

TcMinusMonomial PerfectBaseData::multiply(const TcMinusMonomial& a, const TcMinusMonomial& b) const {
    TcMinusMonomial r{a.xi_power + b.xi_power, a.sigma + b.sigma, a.x + b.x};
    const std::int64_t common = std::min(r.sigma, r.x);  // x sigma = xi
    r.sigma -= common;
    r.x -= common;
    r.xi_power += common;
    return r;
}

TpMonomial PerfectBaseData::can(const TcMinusMonomial& a) const {
    // sigma -> xi u, x -> u^{-1}
    return TpMonomial{a.xi_power + a.sigma, a.sigma - a.x};
}

TpMonomial PerfectBaseData::phi(const TcMinusMonomial& a) const {
    // sigma -> u, x -> phi(xi) u^{-1}; phi(xi) = xi in characteristic p.
    return TpMonomial{a.xi_power + a.x, a.sigma - a.x};
}

PModMatrix PerfectBaseData::equalizer_map(std::int64_t j) const {
    const WittRing& R = *ring_;
    const std::size_t f = static_cast<std::size_t>(R.degree());
    const TcMinusMonomial g = tc_minus_generator(j);
    const TpMonomial via_phi = phi(g), via_can = can(g);
    if (via_phi.u != j || via_can.u != j) throw Error("presentation maps do not preserve degree");
    // a g -> sigma(a) p^{phi power} u^j - a p^{can power} u^j
    const Residue phi_scale = power_mod(xi(), via_phi.xi_power, R.modulus());
    const Residue can_scale = power_mod(xi(), via_can.xi_power, R.modulus());
    PModMatrix m(f, f, R.p(), R.precision());
    const auto& frob = R.frobenius_matrix();
    for (std::size_t r = 0; r < f; ++r)
        for (std::size_t c = 0; c < f; ++c) {
            const Residue a = static_cast<Residue>((static_cast<unsigned __int128>(frob[r][c]) * phi_scale) % R.modulus());
            const Residue b = r == c ? can_scale : 0;
            m.set_residue(r, c, (a + R.modulus() - b) % R.modulus());
        }
    return m;
}

std::vector<TcGroup> tc_homotopy(std::uint32_t p, int f, std::int64_t n_min, std::int64_t n_max, int precision) {
    if (n_min > n_max) throw InvalidArgument("empty degree range");
    // Degree 2j contributes pi_{2j} (kernel) and pi_{2j-1} (cokernel).
    const std::int64_t j_lo = (n_min >= 0 ? n_min : n_min - 1) / 2;
    const std::int64_t j_hi = (n_max + 1 >= 0 ? n_max + 1 : n_max) / 2;
    PerfectBaseData base(std::make_shared<const WittRing>(p, precision, f), j_lo, j_hi + 1);
    std::vector<TcGroup> out;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        const bool even = (n % 2 == 0);
        const std::int64_t j = even ? n / 2 : (n + 1) / 2;
        const auto groups = kernel_cokernel(base.equalizer_map(j));
        out.push_back(TcGroup{n, even ? groups[0] : groups[1]});
    }
    return out;
}

std::vector<HomologyGroup> zp_i_point(std::uint32_t p, int f, std::int64_t i, int precision) {
    if (i < 0) throw InvalidArgument("i must be >= 0");
    const WittRing R(p, precision, f);
    const std::size_t fs = static_cast<std::size_t>(f);
    // Generator p^i a of N^{>=i} W(k) = p^i W(k): phi/p^i(p^i a) = sigma(a), can(p^i a) = p^i a.
    const Residue pi = power_mod(p, i, R.modulus());
    PModMatrix m(fs, fs, p, precision);
    const auto& frob = R.frobenius_matrix();
    for (std::size_t r = 0; r < fs; ++r)
        for (std::size_t c = 0; c < fs; ++c) m.set_residue(r, c, (frob[r][c] + R.modulus() - (r == c ? pi : 0)) % R.modulus());
    return kernel_cokernel(m);
}

}  // namespace syntomic
