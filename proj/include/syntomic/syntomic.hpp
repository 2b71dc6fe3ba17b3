#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syntomic/dpcomplex.hpp"
#include "syntomic/linalg.hpp"
#include "syntomic/nygaard.hpp"

namespace syntomic {

/// Sign in front of d f_0 in the second differential of the mapping fiber.
/// `Flipped` exists only as a negative control for the verification suite.
enum class ConeSign { Standard, Flipped };

/// A finite three-term complex C^0 -> C^1 -> C^2 over Z/p^N.
struct FiniteComplex {
    std::vector<std::int64_t> weights;
    PModMatrix d0;  // C^1 x C^0
    PModMatrix d1;  // C^2 x C^1

    /// Integral cohomology H^deg, deg in {0, 1, 2}.
    HomologyGroup cohomology(int deg) const;
};

/// Mapping fiber of phi/p^i - can : N^{>=i} Omega -> Omega, the complex
/// computing Z_p(i)(k[x]/x^e):
///
///   C^0 = N^{>=i} Omega^0
///   C^1 = N^{>=i} Omega^1 (+) Omega^0
///   C^2 = Omega^1
///   D^0(n0)     = (d n0, (phi/p^i - can)(n0))
///   D^1(n1, f0) = (phi/p^i - can)(n1) - d f0
///
/// Every generator carries a weight (|x| = 1); d and can preserve it and phi
/// multiplies it by p, so the complex splits over towers {d p^a : a >= 0}.
class SyntomicComplex {
public:
    SyntomicComplex(std::shared_ptr<const DPComplexData> base, std::int64_t i, ConeSign sign = ConeSign::Standard);

    const NygaardComplex& nygaard() const { return nygaard_; }
    const DPComplexData& base() const { return nygaard_.base(); }
    const WittRing& ring() const { return base().ring(); }
    std::int64_t i() const { return nygaard_.index(); }
    ConeSign sign() const { return sign_; }

    /// Quotient complex on the generators whose weight lies in `weights`
    /// (sorted ascending). The complement must be closed under w -> p w for this
    /// to be a quotient; Frobenius images leaving the set are dropped.
    FiniteComplex restrict_to(std::span<const std::int64_t> weights) const;

    /// (phi/p^i - can) on degree `deg` generators at the given weights, as a
    /// square matrix; used to certify that a tail is acyclic.
    PModMatrix tail_map(std::span<const std::int64_t> weights, int deg) const;

private:
    NygaardComplex nygaard_;
    ConeSign sign_;
};

/// Builds the fiber complex over W_N(F_q) with the given weight window.
SyntomicComplex build_fiber(std::shared_ptr<const WittRing> ring, int e, std::int64_t i, std::int64_t max_weight,
                            ConeSign sign = ConeSign::Standard);

/// Weights >= this value have can = identity in both degrees.
std::int64_t stable_weight(int e, std::int64_t i);

struct TowerTruncation {
    std::int64_t d = 0;
    int a_max = -1;             // last retained position; -1 when the whole tower is a tail
    int window = 0;             // tail positions inverted explicitly
    std::int64_t valuation_sum = 0;  // min over degrees of summed phi/p^i valuations across the window
    bool certified = false;
};

struct TowerComplex {
    std::int64_t d = 0;
    FiniteComplex complex;
    TowerTruncation truncation;
};

/// Splits the fiber complex over towers d p^a (p does not divide d, d < e*i),
/// keeping positions a <= A_max(d) + extra_positions and certifying the tail.
/// The weight-0 block is not included; see weight_zero_block.
std::vector<TowerComplex> tower_decompose(const SyntomicComplex& c, int extra_positions = 0);

/// Weight-0 block, phi/p^i - p^i on p^i W(k) -> W(k).
FiniteComplex weight_zero_block(const SyntomicComplex& c);

struct TowerCohomology {
    std::int64_t d = 0;  // 0 for the weight-0 block
    std::array<HomologyGroup, 3> h;
    TowerTruncation truncation;
};

enum class Validation { ClosedForm, InvariantsOnly, Mismatch };
std::string to_string(Validation v);

struct CohomologyResult {
    std::uint32_t p = 0;
    int e = 0;
    std::int64_t i = 0;
    int f = 1;
    int precision = 0;  // N_final
    std::int64_t max_weight = 0;
    std::vector<TowerCohomology> towers;  // sorted by d, only towers with nonzero cohomology
    bool saturated = false;
    Validation validated = Validation::InvariantsOnly;
    bool point = false;  // i = 0: the weight-0 block carries free Z_p summands
    int escalations = 0;
    double seconds = 0.0;

    /// Direct sum over towers, regrouped by the residue degree.
    HomologyGroup total(int deg) const;
};

struct SyntomicOptions {
    std::optional<int> precision;          // starting N, default auto
    std::optional<std::int64_t> max_weight;  // starting window, default auto; doubled on certificate failure
    int extra_positions = 0;
    int jobs = 1;
    std::optional<int> precision_ceiling;  // default: SYNTOMIC_MAX_PRECISION or the largest p^N < 2^62
    ConeSign sign = ConeSign::Standard;
};

/// Z_p(i)(F_q[x]/x^e) with precision escalation until no factor is saturated.
CohomologyResult zp_i(std::uint32_t p, int e, std::int64_t i, int f, const SyntomicOptions& options = {});

/// Brute-force oracle: one dense complex on weights {0} and {1 <= w <= max_weight
/// with v_p(w) <= a_uniform}, no tower decomposition, no certificate, fixed N.
CohomologyResult zp_i_naive(std::uint32_t p, int e, std::int64_t i, int f, int precision, std::int64_t max_weight,
                            int a_uniform);

/// (d, n(i, d)) for odd d coprime to p with d <= 2i - 1, where p^{n-1} d <= 2i - 1 < p^n d.
std::vector<std::pair<std::int64_t, int>> closed_form_h1(std::uint32_t p, std::int64_t i, int e = 2);

/// K_{2i-1}(F_q[x]/x^2, (x); Z_p) = H^1(Z_p(i)); throws if H^0 or H^2 is nonzero.
HomologyGroup relative_k_group(std::uint32_t p, std::int64_t i, int f, const SyntomicOptions& options = {});

/// Default starting precision ceil(log_p(e*i)) + 3.
int initial_precision(std::uint32_t p, int e, std::int64_t i);
/// Default weight window e * max(i, 1) * p^2.
std::int64_t initial_max_weight(std::uint32_t p, int e, std::int64_t i);
int default_precision_ceiling(std::uint32_t p);

}  // namespace syntomic
