#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syntomic/linalg.hpp"
#include "syntomic/witt.hpp"

namespace syntomic {

/// Monomial sigma^a x^b in TC^-_*(k) = W(k)[x, sigma]/(x sigma = xi), normalized
/// so that at most one of a, b is nonzero; `xi_power` collects the relation.
struct TcMinusMonomial {
    std::int64_t xi_power = 0;
    std::int64_t sigma = 0;
    std::int64_t x = 0;

    std::int64_t degree() const { return 2 * (sigma - x); }
    friend bool operator==(const TcMinusMonomial&, const TcMinusMonomial&) = default;
};

/// xi^c u^j in TP_*(k) = W(k)[u^{+-1}].
struct TpMonomial {
    std::int64_t xi_power = 0;
    std::int64_t u = 0;
    friend bool operator==(const TpMonomial&, const TpMonomial&) = default;
};

/// Graded presentations of TC^- and TP for a perfect field k of characteristic p,
/// with can(sigma) = xi u, can(x) = u^{-1}, phi(sigma) = u, phi(x) = phi(xi) u^{-1}.
/// Only xi = p is supported (characteristic p), so phi(xi) = p as well.
class PerfectBaseData {
public:
    PerfectBaseData(std::shared_ptr<const WittRing> ring, std::int64_t j_min, std::int64_t j_max);

    const WittRing& ring() const { return *ring_; }
    std::int64_t j_min() const { return j_min_; }
    std::int64_t j_max() const { return j_max_; }
    /// The only value of xi accepted, as an integer.
    std::int64_t xi() const { return ring_->p(); }

    /// Generator of pi_{2j} TC^-: sigma^j for j >= 0, x^{-j} for j < 0.
    TcMinusMonomial tc_minus_generator(std::int64_t j) const;
    TcMinusMonomial multiply(const TcMinusMonomial& a, const TcMinusMonomial& b) const;
    TpMonomial can(const TcMinusMonomial& a) const;
    TpMonomial phi(const TcMinusMonomial& a) const;

    /// The map pi_{2j} TC^- -> pi_{2j} TP, a -> phi(a) - can(a), as a Z_p-matrix
    /// on W(k) (f x f), using the generators above.
    PModMatrix equalizer_map(std::int64_t j) const;

private:
    std::shared_ptr<const WittRing> ring_;
    std::int64_t j_min_;
    std::int64_t j_max_;
};

struct TcGroup {
    std::int64_t degree = 0;
    HomologyGroup group;
};

/// pi_n TC(F_q; Z_p) for n in [n_min, n_max], from the equalizer of phi and can:
/// pi_{2j} = kernel and pi_{2j-1} = cokernel of the degree-2j map.
std::vector<TcGroup> tc_homotopy(std::uint32_t p, int f, std::int64_t n_min, std::int64_t n_max, int precision);

/// Z_p(i)(F_q) = fib(phi/p^i - can : p^i W(k) -> W(k)); returns {H^0, H^1}.
std::vector<HomologyGroup> zp_i_point(std::uint32_t p, int f, std::int64_t i, int precision);

}  // namespace syntomic
