// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/errors.hpp"
#include "fermat/lucas.hpp"
#include "fermat/parallel.hpp"
#include "fermat/primality.hpp"
#include "fermat/verify.hpp"
#include "golden.hpp"

using namespace fermat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

std::string first_failure(const SuiteReport& r)
{
    for (const auto& c : r.checks)
        if (!c.pass)
            return c.name + " (" + c.detail + ")";
    return {};
}

Outcome suite_outcome(const SuiteReport& r)
{
    Outcome o;
    if (r.checks.empty())
        o.fail("no checks ran");
    else if (!r.all_pass())
        o.fail(first_failure(r));
    else
        o.detail = std::to_string(r.checks.size()) + " checks";
    return o;
}

Outcome classification()
{
    Outcome o;
    const auto start = Clock::now();
    double at_12 = 0;
    for (unsigned n = 1; n <= 14; ++n) {
        const bool prime = fermat_llt(n).is_prime();
        if (prime != (n <= 4))
            o.fail("F_" + std::to_string(n) + " misclassified");
        if (n == 12)
            at_12 = seconds_since(start);
    }
    const double total = seconds_since(start);
    if (at_12 >= 5.0)
        o.fail("n <= 12 took " + std::to_string(at_12) + " s");
    if (total >= 60.0)
        o.fail("n <= 14 took " + std::to_string(total) + " s");
    if (o.pass) {
        std::ostringstream s;
        s.precision(3);
        s << "n<=12 in " << at_12 << " s, n<=14 in " << total << " s";
        o.detail = s.str();
    }
    return o;
}

Outcome pepin_agreement()
{
    Outcome o;
    for (unsigned n = 1; n <= 14; ++n)
        if (pepin(n).classification != fermat_llt(n).classification)
            o.fail("disagree at n=" + std::to_string(n));
    return o;
}

std::string render_exact(std::int64_t i, const std::string& u, bool u_root, const std::string& v, bool v_root)
{
    return std::to_string(i) + "\t" + u + "\t" + (u_root ? "1" : "0") + "\t" + v + "\t" + (v_root ? "1" : "0");
}

Outcome table1()
{
    Outcome o;
    const auto rows = golden::load("table1.tsv");
    const auto table = lehmer_table_exact(LucasParams::standard(), 40);
    if (rows.size() != 41 || table.size() != 41) {
        o.fail("expected 41 rows");
        return o;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& g = rows[k];
        const std::string want = render_exact(g[0], std::to_string(g[1]), g[2] != 0, std::to_string(g[3]), g[4] != 0);
        const bool even = k % 2 == 0;
        const std::string got = render_exact(static_cast<std::int64_t>(k), table[k].u_bar.get_str(), even,
                                             table[k].v_bar.get_str(), !even);
        if (got != want)
            o.fail("row " + std::to_string(k) + ": got '" + got + "' want '" + want + "'");
    }
    if (table[40].u_bar != BigInt("8870244889325") || table[40].v_bar != BigInt("40648568638127"))
        o.fail("row 40 mismatch");
    return o;
}

Outcome tables_mod()
{
    Outcome o;
    const LucasParams params = LucasParams::standard();
    std::size_t total = 0;
    for (unsigned n = 1; n <= 4; ++n) {
        const Modulus f = Modulus::fermat(n);
        for (const auto& g : golden::load("table" + std::to_string(n + 1) + ".tsv")) {
            const auto pair = uv_mod(params, BigInt(static_cast<long>(g[0])), f);
            // the printed tables mix canonical and balanced representatives
            const BigInt du = pair.u_bar - g[1];
            const BigInt dv = pair.v_bar - g[2];
            if (!mpz_divisible_p(du.get_mpz_t(), f.value().get_mpz_t()) ||
                !mpz_divisible_p(dv.get_mpz_t(), f.value().get_mpz_t()))
                o.fail("F_" + std::to_string(n) + " row i=" + std::to_string(g[0]));
            ++total;
        }
    }
    const auto zero_at = [&](unsigned n, unsigned long i, bool want_u) {
        const auto p = uv_mod(params, BigInt(i), Modulus::fermat(n));
        return sgn(want_u ? p.u_bar : p.v_bar) == 0;
    };
    if (!zero_at(2, 8, false))
        o.fail("Vbar_8 mod 17 != 0");
    if (!zero_at(3, 128, false))
        o.fail("Vbar_128 mod 257 != 0");
    if (!zero_at(4, 32768, false))
        o.fail("Vbar_32768 mod 65537 != 0");
    if (!zero_at(3, 256, true))
        o.fail("Ubar_256 mod 257 != 0");
    if (o.pass)
        o.detail = std::to_string(total) + " rows";
    return o;
}

Outcome traces()
{
    Outcome o;
    const std::vector<std::vector<long>> want{
        {5, 6, 0},
        {5, 23, 13, 167, 131, 197, 0},
        {5, 23, 527, 15579, 21728, 42971, 1864, 1033, 18495, 27420, 15934, 2016, 960, 4080, 0},
    };
    for (unsigned n = 2; n <= 4; ++n) {
        std::vector<long> got;
        for (const auto& r : s_sequence(n, true).residues)
            got.push_back(r.get_si());
        if (got != want[n - 2])
            o.fail("chain for F_" + std::to_string(n) + " differs");
    }
    if (balanced(BigInt(197), BigInt(257)) != -60)
        o.fail("197 is not -60 mod 257");
    return o;
}

Outcome timed_suite(SuiteReport (*suite)(const VerifyOptions&), double limit)
{
    const auto start = Clock::now();
    Outcome o = suite_outcome(suite({}));
    const double t = seconds_since(start);
    if (limit > 0 && t >= limit)
        o.fail("took " + std::to_string(t) + " s");
    else if (o.pass)
        o.detail += ", " + std::to_string(t).substr(0, 5) + " s";
    return o;
}

Outcome rank_machinery()
{
    Outcome o;
    const LucasParams params = LucasParams::standard();
    for (auto [m, w] : {std::pair<std::uint64_t, std::uint64_t>{5, 4}, {17, 16}, {257, 256}})
        if (rank_of_apparition(params, m).omega != w)
            o.fail("omega(" + std::to_string(m) + ") != " + std::to_string(w));
    const auto sweep = suite_outcome(verify_rank({}));
    if (!sweep.pass)
        o.fail(sweep.detail);
    for (const char* p : {"17", "257", "65537"})
        if (!certify_via_rank(params, BigInt(p)).is_prime())
            o.fail(std::string("certify did not prove ") + p);
    if (certify_via_rank(params, fermat_number(5)).is_prime())
        o.fail("certify called F_5 prime");
    return o;
}

Outcome cross_reduction()
{
    Outcome o;
    for (unsigned n : {5u, 10u, 14u}) {
        const auto r = reduction_crosscheck(n, 10'000, 2024 + n);
        if (r.samples != 10'000 || r.mismatches != 0)
            o.fail("n=" + std::to_string(n) + ": " + std::to_string(r.mismatches) + " mismatches");
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 classification F_1..F_14", classification},
        {"AC2 Pepin agreement n=1..14", pepin_agreement},
        {"AC3 exact table (sqrt7, 1), 41 rows", table1},
        {"AC4 residue tables mod F_1..F_4", tables_mod},
        {"AC5 squaring-chain traces", traces},
        {"AC6 identity suite", [] { return timed_suite(verify_identities, 10.0); }},
        {"AC7 congruence suite p < 2000", [] { return timed_suite(verify_congruences, 0); }},
        {"AC8 rank machinery", rank_machinery},
        {"AC9 appendix residues and (sqrt3, -1) transform", [] { return timed_suite(verify_appendix, 0); }},
        {"AC10 special vs generic reduction", cross_reduction},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
