#include "syntomic/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "syntomic/basecase.hpp"
#include "syntomic/checks.hpp"
#include "syntomic/errors.hpp"
#include "syntomic/report.hpp"
#include "syntomic/syntomic.hpp"

namespace syntomic {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct RunConfig {
    std::uint32_t p = 3;
    int e = 2;
    std::int64_t i = 1;
    std::int64_t i_max = 8;
    int f = 1;
    std::optional<int> precision;
    std::optional<std::int64_t> wmax;
    std::string format;
    int jobs = 1;
    bool strict = false;
    bool verbose = false;
    bool sign_flip = false;
    std::vector<std::uint32_t> primes{3, 5};
    std::int64_t n_min = -6;
    std::int64_t n_max = 12;
};

// Rejects overrides below the auto-sized values for weight i.
void check_overrides(const RunConfig& c, std::int64_t i) {
    if (c.e < 2) return;
    if (c.precision && *c.precision < initial_precision(c.p, c.e, i))
        throw InvalidArgument("--precision below the minimum " + std::to_string(initial_precision(c.p, c.e, i)));
    if (c.wmax && *c.wmax < initial_max_weight(c.p, c.e, i))
        throw InvalidArgument("--wmax below the minimum " + std::to_string(initial_max_weight(c.p, c.e, i)));
}

void check_strict(const RunConfig& c, std::uint32_t p) {
    if (!c.strict) return;
    if (p == 2) throw Unsupported("--strict: no closed form at p = 2");
    if (c.e != 2) throw Unsupported("--strict: closed form requires e = 2");
}

SyntomicOptions options_of(const RunConfig& c) {
    SyntomicOptions o;
    o.precision = c.precision;
    o.max_weight = c.wmax;
    o.jobs = c.jobs;
    o.sign = c.sign_flip ? ConeSign::Flipped : ConeSign::Standard;
    return o;
}

CohomologyResult compute(const RunConfig& c, std::int64_t i) {
    if (c.e >= 2) return zp_i(c.p, c.e, i, c.f, options_of(c));
    // e = 1: the ring is k itself.
    CohomologyResult r;
    r.p = c.p;
    r.e = 1;
    r.i = i;
    r.f = c.f;
    r.precision = c.precision.value_or(initial_precision(c.p, 2, std::max<std::int64_t>(i, 1)));
    r.point = (i == 0);
    const auto groups = zp_i_point(c.p, c.f, i, r.precision);
    TowerCohomology t;
    t.h[0] = groups[0];
    t.h[1] = groups[1];
    if (!t.h[0].is_zero() || !t.h[1].is_zero()) r.towers.push_back(t);
    return r;
}

int cmd_zpi(const RunConfig& c, std::ostream& out, std::ostream& err) {
    check_strict(c, c.p);
    check_overrides(c, c.i);
    const CohomologyResult r = compute(c, c.i);
    if (c.verbose) err << "precision " << r.precision << ", escalations " << r.escalations << ", " << r.seconds << " s\n";
    if (c.format == "text")
        out << to_text(r);
    else if (c.format == "json" || c.format.empty())
        out << to_json(r).dump() << '\n';
    else
        throw InvalidArgument("zpi supports --format json|text");
    return r.validated == Validation::Mismatch ? kMismatch : kOk;
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
    check_strict(c, c.p);
    if (c.i_max < 1) throw InvalidArgument("--imax must be >= 1");
    check_overrides(c, c.i_max);
    std::vector<TableRow> rows;
    bool mismatch = false;
    ordered_json docs = ordered_json::array();
    for (std::int64_t i = 1; i <= c.i_max; ++i) {
        const CohomologyResult r = compute(c, i);
        if (c.verbose) err << "i=" << i << ": " << r.seconds << " s\n";
        mismatch = mismatch || r.validated == Validation::Mismatch;
        rows.push_back(table_row(r));
        docs.push_back(to_json(r));
    }
    if (c.format == "text")
        out << table_text(c.p, c.f, rows);
    else if (c.format == "json")
        out << docs.dump() << '\n';
    else if (c.format == "csv" || c.format.empty())
        out << table_csv(c.p, c.f, rows);
    else
        throw InvalidArgument("unknown --format");
    return mismatch ? kMismatch : kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    for (std::uint32_t p : c.primes) check_strict(c, p);
    VerifyConfig vc;
    vc.primes = c.primes;
    vc.i_max = c.i_max;
    vc.f = c.f;
    vc.jobs = c.jobs;
    vc.sign = c.sign_flip ? ConeSign::Flipped : ConeSign::Standard;
    const auto results = run_verify(vc);
    bool all = true;
    ordered_json failures = ordered_json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (!r.pass) failures.push_back(ordered_json{{"check", r.name}, {"detail", r.detail}});
        if (c.verbose) err << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
    if (c.format == "text") {
        out << (all ? "all " : "") << results.size() - failures.size() << '/' << results.size() << " checks passed\n";
        for (const auto& f : failures)
            out << "FAIL " << f["check"].get<std::string>() << ": " << f["detail"].get<std::string>() << '\n';
    } else {
        out << ordered_json{{"pass", all}, {"checks", results.size()}, {"failures", failures}}.dump() << '\n';
    }
    return all ? kOk : kMismatch;
}

int cmd_tc(const RunConfig& c, std::ostream& out) {
    if (c.n_min > c.n_max) throw InvalidArgument("--nmin must not exceed --nmax");
    const int precision = c.precision.value_or(8);
    const auto groups = tc_homotopy(c.p, c.f, c.n_min, c.n_max, precision);
    if (c.format == "json")
        out << tc_json(c.p, c.f, groups).dump() << '\n';
    else
        out << tc_text(c.p, c.f, groups);
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Syntomic cohomology of truncated polynomial rings over finite fields", "syntomic"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"json", "csv", "text"});

    auto common = [&](CLI::App* sub, bool single_prime) {
        if (single_prime) sub->add_option("--p", c.p, "prime p")->check(CLI::PositiveNumber);
        sub->add_option("--f", c.f, "residue degree, q = p^f")->check(CLI::Range(1, 64));
        sub->add_option("--precision", c.precision, "starting precision N");
        sub->add_option("--format", c.format, "json | csv | text")->check(formats);
        sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));
        sub->add_flag("--strict", c.strict, "refuse cases without a closed form");
        sub->add_flag("-v,--verbose", c.verbose, "timing on stderr");
    };

    CLI::App* zpi = app.add_subcommand("zpi", "Z_p(i)(F_q[x]/x^e)");
    common(zpi, true);
    zpi->add_option("--e", c.e, "truncation degree e")->check(CLI::PositiveNumber);
    zpi->add_option("--i", c.i, "weight i")->check(CLI::NonNegativeNumber);
    zpi->add_option("--wmax", c.wmax, "weight window");
    zpi->add_flag("--inject-sign-flip", c.sign_flip)->group("");

    CLI::App* table = app.add_subcommand("table", "H^1 factors and |K_{2i-1}| for i = 1..imax");
    common(table, true);
    table->add_option("--e", c.e, "truncation degree e")->check(CLI::PositiveNumber);
    table->add_option("--imax", c.i_max, "largest weight")->check(CLI::PositiveNumber);
    table->add_option("--wmax", c.wmax, "weight window");

    CLI::App* verify = app.add_subcommand("verify", "self-checks against closed form, oracle and Witt laws");
    common(verify, false);
    verify->add_option("--p", c.primes, "primes to sweep")->check(CLI::PositiveNumber);
    verify->add_option("--imax", c.i_max, "largest weight")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-sign-flip", c.sign_flip)->group("");

    CLI::App* tc = app.add_subcommand("tc", "pi_* TC(F_q; Z_p)");
    common(tc, true);
    tc->add_option("--nmin", c.n_min, "lowest degree");
    tc->add_option("--nmax", c.n_max, "highest degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!is_prime(c.p)) throw InvalidArgument("--p must be prime");
        for (std::uint32_t q : c.primes)
            if (!is_prime(q)) throw InvalidArgument("--p must be prime");
        if (zpi->parsed()) return cmd_zpi(c, out, err);
        if (table->parsed()) return cmd_table(c, out, err);
        if (verify->parsed()) return cmd_verify(c, out, err);
        return cmd_tc(c, out);
    } catch (const CompositionNonzero& e) {
        err << "validation failed: " << e.what() << '\n';
        return kMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace syntomic
