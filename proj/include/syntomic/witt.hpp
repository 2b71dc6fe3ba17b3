#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace syntomic {

using Residue = std::uint64_t;

/// Element of the residue field F_q, as coordinates in the basis 1, t, ..., t^{f-1}.
using FieldElem = std::vector<std::uint32_t>;

/// Element of W_N(F_q) = Z_q / p^N, stored as coordinates over Z/p^N in the
/// power basis of the chosen modulus. Entries are canonical residues in [0, p^N).
struct WittElem {
    std::vector<Residue> coords;

    friend bool operator==(const WittElem&, const WittElem&) = default;
};

bool is_prime(std::uint64_t n);

/// Truncated Witt ring W_N(F_q), realized as (Z/p^N)[t]/(modulus).
///
/// The modulus is a monic integer lift of an irreducible polynomial of degree f
/// over F_p; the default is the lexicographically smallest one. The Witt
/// Frobenius is the Z/p^N-linear map sending t to the Hensel-lifted root of the
/// modulus congruent to t^p.
///
/// Verschiebung lives in a fixed-length model: since F is bijective on
/// W(F_q), V = p * F^{-1}. This agrees with V : W_{N-1} -> W_N under the usual
/// identification W_N(F_q) = Z_q/p^N (V does not lengthen vectors here, it
/// shifts them by one Witt coordinate and drops the last one).
class WittRing {
public:
    /// Default modulus: lexicographically smallest monic irreducible of degree f.
    WittRing(std::uint32_t p, int precision, int degree = 1);
    /// `modulus_low` holds the non-leading coefficients c_0..c_{f-1} of the monic modulus.
    WittRing(std::uint32_t p, int precision, std::vector<std::uint32_t> modulus_low);

    std::uint32_t p() const { return p_; }
    int precision() const { return N_; }
    int degree() const { return f_; }
    Residue modulus() const { return pN_; }  // p^N
    std::uint64_t q() const;
    const std::vector<std::uint32_t>& modulus_coefficients() const { return mod_low_; }

    WittElem zero() const;
    WittElem one() const;
    WittElem from_int(std::int64_t n) const;
    /// Element with the given coordinates, reduced into [0, p^N).
    WittElem from_coords(std::vector<std::int64_t> coords) const;
    bool is_zero(const WittElem& x) const;

    WittElem add(const WittElem& a, const WittElem& b) const;
    WittElem sub(const WittElem& a, const WittElem& b) const;
    WittElem neg(const WittElem& a) const;
    WittElem mul(const WittElem& a, const WittElem& b) const;
    WittElem scale(const WittElem& a, Residue c) const;
    WittElem pow(WittElem a, std::uint64_t e) const;

    /// p-adic valuation; returns kInfiniteValuation for zero (at this precision).
    int valuation(const WittElem& x) const;
    bool is_unit(const WittElem& x) const { return valuation(x) == 0; }
    WittElem inverse(const WittElem& unit) const;
    /// Exact division by p^k of an element of valuation >= k. The result is
    /// only determined modulo p^{N-k}; the upper digits are filled with zero.
    WittElem divide_by_p_power(const WittElem& x, int k) const;

    WittElem frobenius(const WittElem& x) const;
    WittElem frobenius_inverse(const WittElem& x) const;
    WittElem verschiebung(const WittElem& x) const;
    /// Matrix of F in the power basis; column k holds the coordinates of F(t^k).
    const std::vector<std::vector<Residue>>& frobenius_matrix() const { return frob_; }
    /// Matrix of multiplication by c in the power basis.
    std::vector<std::vector<Residue>> multiplication_matrix(const WittElem& c) const;

    // Residue field F_q.
    FieldElem residue(const WittElem& x) const;
    WittElem naive_lift(const FieldElem& a) const;
    FieldElem residue_mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem residue_pow(const FieldElem& a, std::uint64_t e) const;
    bool residue_is_zero(const FieldElem& a) const;

    /// Unique multiplicative lift of a fixed by the q-power map.
    WittElem teichmuller(const FieldElem& a) const;

    /// Canonical Witt coordinates (a_0, ..., a_{N-1}) with x = sum V^n [a_n].
    std::vector<FieldElem> to_witt_coords(const WittElem& x) const;
    WittElem from_witt_coords(const std::vector<FieldElem>& coords) const;

    /// "c0 + c1*t + ..." debug rendering.
    std::string to_string(const WittElem& x) const;

    static constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

private:
    void init();
    Residue mulmod(Residue a, Residue b) const;
    WittElem eval_modulus(const WittElem& x) const;
    WittElem eval_modulus_derivative(const WittElem& x) const;

    std::uint32_t p_;
    int N_;
    int f_;
    Residue pN_;
    std::vector<std::uint32_t> mod_low_;
    std::vector<std::vector<Residue>> frob_;
    std::vector<std::vector<Residue>> frob_inv_;
};

/// v_p(j!) by Legendre's formula (j - s_p(j)) / (p - 1).
std::int64_t legendre_valuation(std::uint64_t j, std::uint32_t p);

/// A scalar p^v * u with u a unit of W_N(F_q). The valuation is kept exactly,
/// even when v >= N, so that later exact division by p^i stays correct.
struct ValScalar {
    std::int64_t v = kZeroValuation;
    WittElem u;

    static constexpr std::int64_t kZeroValuation = std::numeric_limits<std::int64_t>::max();

    bool is_zero() const { return v == kZeroValuation; }
    /// The represented value in W_N (zero when v >= N).
    WittElem value(const WittRing& ring) const;

    static ValScalar zero();
    static ValScalar from_integer(const WittRing& ring, std::int64_t n);
    static ValScalar unit_power(const WittRing& ring, std::int64_t v);
};

ValScalar multiply(const WittRing& ring, const ValScalar& a, const ValScalar& b);
/// p^k * a; k may be negative provided the result valuation stays >= 0 or a is zero.
ValScalar shift(const ValScalar& a, std::int64_t k);
bool same_value(const WittRing& ring, const ValScalar& a, const ValScalar& b);

/// j_hi! / j_lo! as valuation and unit mod p^N. Requires j_hi >= j_lo.
ValScalar factorial_ratio(std::uint64_t j_hi, std::uint64_t j_lo, const WittRing& ring);

/// Prefix tables of v_p(j!) and the unit part of j! mod p^N for j <= j_max,
/// giving factorial_ratio in constant time.
class FactorialTable {
public:
    FactorialTable(const WittRing& ring, std::uint64_t j_max);
    std::uint64_t j_max() const { return valuation_.size() - 1; }
    ValScalar ratio(std::uint64_t j_hi, std::uint64_t j_lo) const;

private:
    const WittRing* ring_;
    std::vector<std::int64_t> valuation_;
    std::vector<Residue> unit_;
    std::vector<Residue> unit_inverse_;
};

/// Lexicographically smallest monic irreducible polynomial of degree f over F_p;
/// returns its non-leading coefficients c_0..c_{f-1}.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, int degree);
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& modulus_low, std::uint32_t p);

}  // namespace syntomic
