#include "fermat/cli.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/errors.hpp"
#include "fermat/lucas.hpp"
#include "fermat/primality.hpp"
#include "fermat/verify.hpp"

namespace fermat::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Upper bound on rows for dense uv-mod tables.
constexpr unsigned long kModTableRowCap = 1'000'000;

struct Common {
    bool human = false;
    bool no_timing = false;
};

struct TestArgs {
    std::string kind;
    unsigned long index = 0;
    long seed = 5;
    bool experimental = false;
    bool trace = false;
};

struct TableArgs {
    std::string which;
    std::int64_t r = 7;
    std::int64_t q = 1;
    std::optional<unsigned> modulus_fermat;
    std::optional<std::string> modulus;
    std::optional<unsigned long> max;
    unsigned long min = 0;
    std::vector<std::string> indices;
};

struct VerifyArgs {
    std::string suite;
    std::optional<unsigned long> m_max;
    std::optional<unsigned long> n_max;
    std::optional<std::uint64_t> p_max;
    std::vector<unsigned> appendix_n;
};

struct RankArgs {
    std::uint64_t m = 0;
    std::uint64_t cap = kDefaultRankCap;
    std::int64_t r = 7;
    std::int64_t q = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigInt parse_big(const std::string& s)
{
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw UsageError("not an integer: " + s);
    return v;
}

void emit(std::ostream& out, const Common& common, const std::string& command, json inputs, json result,
          Clock::time_point start)
{
    json record;
    record["command"] = command;
    record["inputs"] = std::move(inputs);
    record["result"] = std::move(result);
    if (!common.no_timing) {
        const std::chrono::duration<double, std::milli> ms = Clock::now() - start;
        record["timing_ms"] = std::round(ms.count() * 1000.0) / 1000.0;
    }
    out << record.dump() << '\n';
}

// "197 = -60" when the balanced form is a small negative number.
std::string render_residue(const BigInt& canonical, const BigInt& modulus)
{
    const BigInt b = balanced(canonical, modulus);
    if (sgn(b) < 0 && b > -100)
        return canonical.get_str() + " = " + b.get_str();
    return canonical.get_str();
}

json verdict_json(const Verdict& v)
{
    json j;
    j["classification"] = std::string(to_string(v.classification));
    j["method"] = std::string(to_string(v.method));
    j["witness"] = v.witness ? json(v.witness->get_str()) : json(nullptr);
    j["proven"] = v.proven;
    return j;
}

int cmd_test(const TestArgs& a, const Common& common, std::ostream& out)
{
    const auto start = Clock::now();
    json inputs{{"kind", a.kind}, {"index", a.index}};
    Verdict v;
    json extra = json::object();
    if (a.kind == "fermat") {
        if (a.index == 0 || a.index > 40)
            throw PreconditionError("Fermat index must be in [1, 40]");
        const unsigned n = static_cast<unsigned>(a.index);
        const LltOptions options{a.seed, a.experimental};
        inputs["seed"] = a.seed;
        if (a.trace) {
            const auto trace = s_sequence(n, true, options);
            json residues = json::array();
            for (const auto& r : trace.residues)
                residues.push_back(r.get_str());
            extra["trace"] = std::move(residues);
            v.method = Method::llt_fermat;
            v.proven = a.seed == 5;
            if (sgn(trace.final_residue) == 0)
                v.classification = Classification::prime;
            else
                v.witness = trace.final_residue;
        } else {
            v = fermat_llt(n, options);
        }
    } else if (a.kind == "pepin") {
        if (a.index == 0 || a.index > 40)
            throw PreconditionError("Fermat index must be in [1, 40]");
        v = pepin(static_cast<unsigned>(a.index));
    } else {
        v = mersenne_llt(a.index);
    }

    if (common.human) {
        const std::string subject = a.kind == "mersenne" ? "M_" + std::to_string(a.index)
                                                         : "F_" + std::to_string(a.index);
        out << subject << " is " << to_string(v.classification) << " (" << to_string(v.method) << ")";
        if (!v.proven)
            out << " [unproven seed " << a.seed << "]";
        out << '\n';
        if (extra.contains("trace")) {
            out << "trace:";
            for (const auto& r : extra["trace"])
                out << ' ' << r.get<std::string>();
            out << '\n';
        }
    } else {
        json result = verdict_json(v);
        result.update(extra);
        emit(out, common, "test", std::move(inputs), std::move(result), start);
    }
    return v.is_prime() ? kExitPrime : kExitComposite;
}

void human_exact_table(std::ostream& out, const LucasParams& params, const std::vector<LehmerPair>& rows)
{
    const std::string tag = "x sqrt(" + std::to_string(params.r()) + ")";
    const std::string blank(tag.size(), ' ');
    out << std::setw(5) << "i" << " | " << std::setw(15) << "U_i" << ' ' << blank << " | " << std::setw(15)
        << "V_i" << '\n';
    for (const auto& row : rows) {
        const bool even = mpz_even_p(row.index.get_mpz_t());
        out << std::setw(5) << row.index.get_str() << " | " << std::setw(15) << row.u_bar.get_str() << ' '
            << (even ? tag : blank) << " | " << std::setw(15) << row.v_bar.get_str() << ' '
            << (even ? blank : tag) << '\n';
    }
}

void human_mod_table(std::ostream& out, const BigInt& modulus, const std::vector<LehmerPair>& rows)
{
    out << std::setw(7) << "i" << " | " << std::setw(16) << "Ubar_i mod N" << " | " << std::setw(16)
        << "Vbar_i mod N" << "   (N = " << modulus.get_str() << ")\n";
    for (const auto& row : rows)
        out << std::setw(7) << row.index.get_str() << " | " << std::setw(16) << render_residue(row.u_bar, modulus)
            << " | " << std::setw(16) << render_residue(row.v_bar, modulus) << '\n';
}

int cmd_table(const TableArgs& a, const Common& common, std::ostream& out)
{
    const auto start = Clock::now();
    const LucasParams params(a.r, a.q);
    json inputs{{"which", a.which}, {"r", a.r}, {"q", a.q}};
    json rows = json::array();

    if (a.which == "uv-exact") {
        if (!a.max)
            throw UsageError("table uv-exact needs --max");
        if (a.min > *a.max)
            throw UsageError("--min exceeds --max");
        inputs["min"] = a.min;
        inputs["max"] = *a.max;
        auto table = lehmer_table_exact(params, *a.max);
        table.erase(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(a.min));
        if (common.human) {
            human_exact_table(out, params, table);
            return 0;
        }
        for (const auto& row : table) {
            const bool even = mpz_even_p(row.index.get_mpz_t());
            rows.push_back({{"i", row.index.get_str()},
                            {"u_bar", row.u_bar.get_str()},
                            {"v_bar", row.v_bar.get_str()},
                            {"u_times_sqrt_r", even},
                            {"v_times_sqrt_r", !even}});
        }
    } else {
        if (a.modulus_fermat.has_value() == a.modulus.has_value())
            throw UsageError("table uv-mod needs exactly one of --modulus-fermat, --modulus");
        const Modulus modulus = a.modulus_fermat ? Modulus::fermat(*a.modulus_fermat) : Modulus(parse_big(*a.modulus));
        if (a.modulus_fermat)
            inputs["modulus_fermat"] = *a.modulus_fermat;
        inputs["modulus"] = modulus.value().get_str();

        std::vector<LehmerPair> table;
        if (!a.indices.empty()) {
            json idx = json::array();
            for (const auto& s : a.indices) {
                const BigInt i = parse_big(s);
                if (sgn(i) < 0)
                    throw UsageError("negative index " + s);
                table.push_back(uv_mod(params, i, modulus));
                idx.push_back(s);
            }
            inputs["indices"] = std::move(idx);
        } else {
            if (!a.max)
                throw UsageError("table uv-mod needs --max or --indices");
            if (a.min > *a.max)
                throw UsageError("--min exceeds --max");
            if (*a.max > kModTableRowCap)
                throw CapExceeded("table uv-mod: --max above " + std::to_string(kModTableRowCap) +
                                  "; use --indices for sparse rows");
            inputs["min"] = a.min;
            inputs["max"] = *a.max;
            table = lehmer_range_mod(params, *a.max, modulus);
            table.erase(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(a.min));
        }
        if (common.human) {
            human_mod_table(out, modulus.value(), table);
            return 0;
        }
        for (const auto& row : table) {
            json j{{"i", row.index.get_str()}, {"u_bar", row.u_bar.get_str()}, {"v_bar", row.v_bar.get_str()}};
            for (const auto& [key, value] : {std::pair{"u_bar_balanced", &row.u_bar}, {"v_bar_balanced", &row.v_bar}}) {
                const BigInt b = balanced(*value, modulus.value());
                if (sgn(b) < 0 && b > -100)
                    j[key] = b.get_si();
            }
            rows.push_back(std::move(j));
        }
    }
    emit(out, common, "table", std::move(inputs), json{{"rows", std::move(rows)}}, start);
    return 0;
}

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out)
{
    const auto start = Clock::now();
    VerifyOptions options;
    json inputs{{"suite", a.suite}};
    if (a.m_max) {
        options.m_max = *a.m_max;
        inputs["m_max"] = *a.m_max;
    }
    if (a.n_max) {
        options.n_max = *a.n_max;
        inputs["n_max"] = *a.n_max;
    }
    if (a.p_max) {
        options.p_limit = *a.p_max;
        inputs["p_max"] = *a.p_max;
    }
    if (!a.appendix_n.empty()) {
        options.appendix_ns = a.appendix_n;
        inputs["n"] = a.appendix_n;
    }
    const auto report = run_suite(a.suite, options);
    if (!report)
        throw UsageError("unknown suite " + a.suite);

    if (common.human) {
        for (const auto& c : report->checks)
            out << (c.pass ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
        out << (report->all_pass() ? "suite passed" : "suite FAILED") << '\n';
    } else {
        json checks = json::array();
        for (const auto& c : report->checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(out, common, "verify", std::move(inputs),
             json{{"passed", report->all_pass()}, {"checks", std::move(checks)}}, start);
    }
    return report->all_pass() ? 0 : 1;
}

int cmd_rank(const RankArgs& a, const Common& common, std::ostream& out)
{
    const auto start = Clock::now();
    const LucasParams params(a.r, a.q);
    const auto result = rank_of_apparition(params, a.m, a.cap);
    if (common.human) {
        if (result.omega)
            out << "omega(" << a.m << ") = " << *result.omega << '\n';
        else
            out << "omega(" << a.m << ") not found below cap " << a.cap << '\n';
    } else {
        json res;
        res["omega"] = result.omega ? json(*result.omega) : json(nullptr);
        if (!result.omega)
            res["message"] = "not found below cap";
        emit(out, common, "rank", json{{"m", a.m}, {"cap", a.cap}, {"r", a.r}, {"q", a.q}}, std::move(res), start);
    }
    return result.omega ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lucas/Lehmer sequences over Z[sqrt(R)] and the seed-5 Fermat primality test", "fermat-llt"};
    app.require_subcommand(1);

    Common common;
    const auto add_common = [&common](CLI::App* sub) {
        sub->add_flag("--human", common.human, "aligned text instead of JSON records");
        sub->add_flag("--no-timing", common.no_timing, "omit timing_ms from records");
    };

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "classify F_n or M_q; exit 0 prime, 1 composite");
    test->add_option("kind", test_args.kind)->required()->check(CLI::IsMember({"fermat", "mersenne", "pepin"}));
    test->add_option("index", test_args.index, "n for F_n, q for M_q")->required();
    test->add_option("--seed", test_args.seed, "chain seed (fermat only)")->capture_default_str();
    test->add_flag("--experimental", test_args.experimental, "allow unproven seeds");
    test->add_flag("--trace", test_args.trace, "emit every residue (n <= 6)");
    add_common(test);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "rows (i, Ubar_i, Vbar_i)");
    table->add_option("which", table_args.which)->required()->check(CLI::IsMember({"uv-exact", "uv-mod"}));
    table->add_option("--r", table_args.r, "radicand R")->capture_default_str();
    table->add_option("--q", table_args.q, "Q")->capture_default_str();
    table->add_option("--modulus-fermat", table_args.modulus_fermat, "reduce mod F_n");
    table->add_option("--modulus", table_args.modulus, "reduce mod an odd N");
    table->add_option("--max", table_args.max, "last index");
    table->add_option("--min", table_args.min, "first index")->capture_default_str();
    table->add_option("--indices", table_args.indices, "explicit indices (uv-mod)")->delimiter(',');
    add_common(table);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff all checks pass");
    verify->add_option("suite", verify_args.suite)->required();
    verify->add_option("--m-max", verify_args.m_max, "identities: largest m");
    verify->add_option("--n-max", verify_args.n_max, "identities: largest n");
    verify->add_option("--p-max", verify_args.p_max, "congruences: primes below this bound");
    verify->add_option("--n", verify_args.appendix_n, "appendix: Fermat index (2, 3 or 4), repeatable");
    add_common(verify);

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "rank of apparition of m");
    rank->add_option("m", rank_args.m)->required();
    rank->add_option("--cap", rank_args.cap, "search bound")->capture_default_str();
    rank->add_option("--r", rank_args.r, "radicand R")->capture_default_str();
    rank->add_option("--q", rank_args.q, "Q")->capture_default_str();
    add_common(rank);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fermat-llt: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (test->parsed())
            return cmd_test(test_args, common, out);
        if (table->parsed())
            return cmd_table(table_args, common, out);
        if (verify->parsed())
            return cmd_verify(verify_args, common, out);
        return cmd_rank(rank_args, common, out);
    } catch (const std::exception& e) {
        err << "fermat-llt: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace fermat::cli
