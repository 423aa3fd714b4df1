#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fermat/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    json record() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = fermat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, TestFermatExitCodes)
{
    EXPECT_EQ(run({"test", "fermat", "4"}).code, 0);
    const auto r5 = run({"test", "fermat", "5"});
    EXPECT_EQ(r5.code, 1);
    EXPECT_EQ(r5.record()["result"]["classification"], "composite");
    EXPECT_TRUE(r5.record()["result"]["witness"].is_string());
    EXPECT_EQ(run({"test", "fermat", "0"}).code, 2);
}

TEST(Cli, TestOtherKinds)
{
    EXPECT_EQ(run({"test", "mersenne", "7"}).code, 0);
    EXPECT_EQ(run({"test", "mersenne", "11"}).code, 1);
    EXPECT_EQ(run({"test", "mersenne", "9"}).code, 2);
    EXPECT_EQ(run({"test", "pepin", "3"}).code, 0);
    EXPECT_EQ(run({"test", "pepin", "6"}).code, 1);
    EXPECT_EQ(run({"test", "lucas", "3"}).code, 2);
}

TEST(Cli, RecordShape)
{
    const auto r = run({"test", "fermat", "3"}).record();
    EXPECT_EQ(r["command"], "test");
    EXPECT_EQ(r["inputs"]["index"], 3);
    EXPECT_EQ(r["result"]["method"], "llt-fermat");
    EXPECT_TRUE(r["result"]["proven"].get<bool>());
    EXPECT_TRUE(r.contains("timing_ms"));
    EXPECT_FALSE(run({"test", "fermat", "3", "--no-timing"}).record().contains("timing_ms"));
}

TEST(Cli, SeedRequiresExperimental)
{
    EXPECT_EQ(run({"test", "fermat", "3", "--seed", "6"}).code, 2);
    const auto r = run({"test", "fermat", "3", "--seed", "6", "--experimental"});
    EXPECT_NE(r.code, 2);
    EXPECT_FALSE(r.record()["result"]["proven"].get<bool>());
}

TEST(Cli, Trace)
{
    const auto r = run({"test", "fermat", "3", "--trace", "--no-timing"}).record();
    EXPECT_EQ(r["result"]["trace"], (json{"5", "23", "13", "167", "131", "197", "0"}));
    EXPECT_EQ(run({"test", "fermat", "7", "--trace"}).code, 2);
    const auto h = run({"test", "fermat", "2", "--trace", "--human"});
    EXPECT_NE(h.out.find("trace: 5 6 0"), std::string::npos);
}

TEST(Cli, ExactTable)
{
    const auto r = run({"table", "uv-exact", "--max", "40", "--no-timing"});
    ASSERT_EQ(r.code, 0);
    const auto rows = r.record()["result"]["rows"];
    ASSERT_EQ(rows.size(), 41u);
    EXPECT_EQ(rows[40]["u_bar"], "8870244889325");
    EXPECT_EQ(rows[40]["v_bar"], "40648568638127");
    EXPECT_EQ(rows[40]["u_times_sqrt_r"], true);
    EXPECT_EQ(rows[1]["v_times_sqrt_r"], true);

    const auto zero = run({"table", "uv-exact", "--max", "0"}).record()["result"]["rows"];
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0]["u_bar"], "0");
    EXPECT_EQ(zero[0]["v_bar"], "2");
}

TEST(Cli, ModTable)
{
    const auto r = run({"table", "uv-mod", "--modulus-fermat", "2", "--max", "24"});
    ASSERT_EQ(r.code, 0);
    const auto rows = r.record()["result"]["rows"];
    ASSERT_EQ(rows.size(), 25u);
    EXPECT_EQ(rows[0]["u_bar"], "0");
    EXPECT_EQ(rows[1]["u_bar"], "1");
    for (const auto& row : rows)
        EXPECT_LT(std::stol(row["u_bar"].get<std::string>()), 17);

    const auto sparse = run({"table", "uv-mod", "--modulus-fermat", "3", "--indices", "128,257"});
    ASSERT_EQ(sparse.code, 0);
    EXPECT_EQ(sparse.record()["result"]["rows"][0]["v_bar"], "0");

    EXPECT_EQ(run({"table", "uv-mod", "--max", "5"}).code, 2);
    EXPECT_EQ(run({"table", "uv-mod", "--modulus", "16", "--max", "5"}).code, 2);
    EXPECT_EQ(run({"table", "uv-mod", "--modulus", "15", "--max", "5"}).code, 0);
}

TEST(Cli, HumanModTableShowsBalancedForm)
{
    const auto r = run({"table", "uv-mod", "--modulus-fermat", "3", "--indices", "2", "--human"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("N = 257"), std::string::npos);
}

TEST(Cli, Verify)
{
    const auto traces = run({"verify", "traces"});
    EXPECT_EQ(traces.code, 0) << traces.out;
    EXPECT_TRUE(traces.record()["result"]["passed"].get<bool>());
    EXPECT_EQ(run({"verify", "appendix", "--n", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "identities", "--m-max", "9", "--n-max", "9"}).code, 0);
    EXPECT_EQ(run({"verify", "bogus"}).code, 2);
}

TEST(Cli, Rank)
{
    EXPECT_EQ(run({"rank", "17"}).record()["result"]["omega"], 16);
    EXPECT_EQ(run({"rank", "5"}).record()["result"]["omega"], 4);
    EXPECT_EQ(run({"rank", "31"}).record()["result"]["omega"], 16);
    const auto capped = run({"rank", "65537", "--cap", "100"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_TRUE(capped.record()["result"]["omega"].is_null());
    EXPECT_EQ(run({"rank", "1"}).code, 2);
    EXPECT_EQ(run({"rank", "abc"}).code, 2);
}

TEST(Cli, ByteStableWithoutTiming)
{
    const std::vector<std::string> args{"table", "uv-mod", "--modulus-fermat", "4", "--max", "50", "--no-timing"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"test", "fermat"}).code, 2);
    EXPECT_EQ(run({"test", "fermat", "x"}).code, 2);
}
