#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "syntomic/basecase.hpp"
#include "syntomic/syntomic.hpp"

namespace syntomic {

using ordered_json = nlohmann::ordered_json;

/// Result document, keys in a fixed order:
/// {"p","e","i","f","precision","max_weight","h":[{"deg","towers":[{"d","factors"}]}],
///  "saturated","validated","point"}.
ordered_json to_json(const CohomologyResult& r);
std::string to_text(const CohomologyResult& r);

/// One row of the H^1 table for a range of weights i.
struct TableRow {
    std::int64_t i = 0;
    std::vector<std::pair<std::int64_t, std::vector<int>>> h1;  // (tower d, factor exponents)
    std::int64_t log_order = 0;  // log_p |H^1| = f * sum of exponents
    bool has_order = false;      // false unless e = 2
};

TableRow table_row(const CohomologyResult& r);
std::string table_csv(std::uint32_t p, int f, const std::vector<TableRow>& rows);
std::string table_text(std::uint32_t p, int f, const std::vector<TableRow>& rows);
/// p^k as a decimal string (arbitrary size).
std::string power_string(std::uint32_t p, std::int64_t k);

ordered_json tc_json(std::uint32_t p, int f, const std::vector<TcGroup>& groups);
std::string tc_text(std::uint32_t p, int f, const std::vector<TcGroup>& groups);

}  // namespace syntomic
