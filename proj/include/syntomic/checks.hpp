#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syntomic/syntomic.hpp"

namespace syntomic {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// FV = VF = p, Teichmüller multiplicativity, F = (p-power) mod p, codec round trip.
std::vector<CheckResult> check_witt_properties(std::uint32_t p, int precision, int f, int cases, std::uint64_t seed);

/// zp_i against the closed form for e = 2.
CheckResult check_closed_form(std::uint32_t p, std::int64_t i, int f, const SyntomicOptions& options = {});

/// zp_i against the dense oracle zp_i_naive, total cohomology in every degree.
CheckResult check_oracle_agreement(std::uint32_t p, int e, std::int64_t i, int f);

/// Divided-Frobenius integrality on the whole window and the gr-Nygaard isomorphism.
CheckResult check_nygaard(std::uint32_t p, int e, std::int64_t i);

/// D^1 D^0 = 0 on every tower (and the naive complex) of the fiber complex.
CheckResult check_composition(std::uint32_t p, int e, std::int64_t i, ConeSign sign = ConeSign::Standard);

struct VerifyConfig {
    std::vector<std::uint32_t> primes{3, 5};
    std::int64_t i_max = 8;
    int f = 1;
    ConeSign sign = ConeSign::Standard;
    int jobs = 1;
};

std::vector<CheckResult> run_verify(const VerifyConfig& config);

}  // namespace syntomic
