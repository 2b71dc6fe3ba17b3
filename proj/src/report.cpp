#include "syntomic/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace syntomic {

namespace {

std::string format_h1(const TableRow& row) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, factors] : row.h1)
        for (int n : factors) {
            os << (first ? "" : ";") << d << ':' << n;
            first = false;
        }
    return first ? "0" : os.str();
}

}  // namespace

ordered_json to_json(const CohomologyResult& r) {
    ordered_json doc;
    doc["p"] = r.p;
    doc["e"] = r.e;
    doc["i"] = r.i;
    doc["f"] = r.f;
    doc["precision"] = r.precision;
    doc["max_weight"] = r.max_weight;
    ordered_json h = ordered_json::array();
    for (int deg = 0; deg < 3; ++deg) {
        ordered_json towers = ordered_json::array();
        for (const auto& t : r.towers) {
            const HomologyGroup& g = t.h[deg];
            if (g.is_zero()) continue;
            ordered_json entry;
            entry["d"] = t.d;
            entry["factors"] = g.factors;
            if (g.multiplicity != r.f) entry["multiplicity"] = g.multiplicity;
            if (g.free_rank > 0) entry["free_rank"] = g.free_rank;
            towers.push_back(std::move(entry));
        }
        h.push_back(ordered_json{{"deg", deg}, {"towers", std::move(towers)}});
    }
    doc["h"] = std::move(h);
    doc["saturated"] = r.saturated;
    doc["validated"] = to_string(r.validated);
    doc["point"] = r.point;
    return doc;
}

std::string to_text(const CohomologyResult& r) {
    std::ostringstream os;
    os << "Z_" << r.p << "(" << r.i << ")(F_" << r.p;
    if (r.f > 1) os << '^' << r.f;
    os << "[x]/x^" << r.e << ")  precision " << r.precision << ", weights <= " << r.max_weight << '\n';
    for (int deg = 0; deg < 3; ++deg) {
        os << "  H^" << deg << ": ";
        bool any = false;
        for (const auto& t : r.towers) {
            if (t.h[deg].is_zero()) continue;
            os << (any ? ", " : "") << "[d=" << t.d << "] " << t.h[deg].to_string(r.p);
            any = true;
        }
        os << (any ? "" : "0") << '\n';
    }
    os << "  validated: " << to_string(r.validated) << (r.point ? " (point: free summands from weight 0)" : "")
       << '\n';
    return os.str();
}

TableRow table_row(const CohomologyResult& r) {
    TableRow row;
    row.i = r.i;
    for (const auto& t : r.towers) {
        const HomologyGroup& g = t.h[1];
        if (g.factors.empty()) continue;
        row.h1.emplace_back(t.d, g.factors);
        for (int a : g.factors) row.log_order += static_cast<std::int64_t>(a) * g.multiplicity;
    }
    row.has_order = (r.e == 2);
    return row;
}

std::string power_string(std::uint32_t p, std::int64_t k) {
    std::vector<int> digits{1};  // little-endian decimal
    for (std::int64_t s = 0; s < k; ++s) {
        int carry = 0;
        for (int& d : digits) {
            const int v = d * static_cast<int>(p) + carry;
            d = v % 10;
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(carry % 10);
            carry /= 10;
        }
    }
    std::string out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
    return out;
}

std::string table_csv(std::uint32_t p, int /*f*/, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    const bool with_order = !rows.empty() && rows.front().has_order;
    os << "i,h1_factors" << (with_order ? ",k_order" : "") << '\n';
    for (const auto& row : rows) {
        os << row.i << ',' << format_h1(row);
        if (with_order) os << ',' << power_string(p, row.log_order);
        os << '\n';
    }
    return os.str();
}

std::string table_text(std::uint32_t p, int f, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    const bool with_order = !rows.empty() && rows.front().has_order;
    os << "p = " << p << ", q = " << p << '^' << f << "   (h1 lists d:n for each W_n(k) summand)\n";
    os << std::left << std::setw(6) << "i" << std::setw(28) << "h1";
    if (with_order) os << "|K_{2i-1}|";
    os << '\n';
    for (const auto& row : rows) {
        os << std::setw(6) << row.i << std::setw(28) << format_h1(row);
        if (with_order) os << power_string(p, row.log_order);
        os << '\n';
    }
    return os.str();
}

ordered_json tc_json(std::uint32_t p, int f, const std::vector<TcGroup>& groups) {
    ordered_json doc;
    doc["p"] = p;
    doc["f"] = f;
    ordered_json list = ordered_json::array();
    for (const auto& g : groups)
        list.push_back(ordered_json{{"degree", g.degree},
                                    {"free_rank", g.group.free_rank},
                                    {"factors", g.group.factors}});
    doc["pi"] = std::move(list);
    return doc;
}

std::string tc_text(std::uint32_t p, int f, const std::vector<TcGroup>& groups) {
    std::ostringstream os;
    os << "pi_* TC(F_" << p;
    if (f > 1) os << '^' << f;
    os << "; Z_" << p << ")\n";
    for (const auto& g : groups) os << std::setw(5) << g.degree << "  " << g.group.to_string(p) << '\n';
    return os.str();
}

}  // namespace syntomic
