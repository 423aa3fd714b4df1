#include <gtest/gtest.h>

#include "fermat/parallel.hpp"

using namespace fermat;

TEST(Parallel, ClassifyMatchesSerial)
{
    const auto serial = classify_fermat_range_serial(1, 10);
    const auto par = classify_fermat_range(1, 10);
    ASSERT_EQ(serial.size(), par.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].n, par[i].n);
        EXPECT_EQ(serial[i].llt.classification, par[i].llt.classification);
        EXPECT_EQ(serial[i].llt.witness, par[i].llt.witness);
        EXPECT_EQ(serial[i].pepin.witness, par[i].pepin.witness);
        EXPECT_TRUE(par[i].agree()) << par[i].n;
        EXPECT_EQ(par[i].llt.is_prime(), par[i].n <= 4) << par[i].n;
    }
}

TEST(Parallel, CongruencePrimes)
{
    // 7 * 1 * 3 * 2: excludes 3 and 7
    const auto ps = congruence_primes(LucasParams::standard(), 30);
    EXPECT_EQ(ps, (std::vector<std::uint64_t>{5, 11, 13, 17, 19, 23, 29}));
}

TEST(Parallel, CongruenceSweepMatchesSerial)
{
    for (const auto& params : {LucasParams::standard(), LucasParams::alternate()}) {
        const auto serial = congruence_sweep_serial(params, 500);
        const auto par = congruence_sweep(params, 500);
        ASSERT_EQ(serial.size(), par.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            EXPECT_EQ(serial[i].p, par[i].p);
            EXPECT_EQ(serial[i].symbols, par[i].symbols);
            EXPECT_EQ(serial[i].all_pass(), par[i].all_pass());
            EXPECT_TRUE(par[i].all_pass()) << par[i].p;
        }
    }
}

TEST(Parallel, ReductionSamplesAreDeterministic)
{
    for (std::uint64_t i = 0; i < 40; ++i)
        EXPECT_EQ(reduction_sample(5, 9, i), reduction_sample(5, 9, i));
    EXPECT_NE(reduction_sample(5, 9, 30), reduction_sample(5, 10, 30));
}

TEST(Parallel, ReductionCrossCheckHasNoMismatch)
{
    for (unsigned n : {1u, 3u, 5u, 8u}) {
        const auto serial = reduction_crosscheck_serial(n, 2000, 17);
        const auto par = reduction_crosscheck(n, 2000, 17);
        EXPECT_EQ(serial.samples, 2000u);
        EXPECT_EQ(par.samples, 2000u);
        EXPECT_EQ(serial.mismatches, 0u) << n;
        EXPECT_EQ(par.mismatches, 0u) << n;
        EXPECT_FALSE(par.first_mismatch.has_value());
    }
}

TEST(Parallel, RankSweepMatchesSerial)
{
    const auto params = LucasParams::standard();
    const auto serial = rank_divisibility_sweep_serial(params, 150, 1000, 3000);
    const auto par = rank_divisibility_sweep(params, 150, 1000, 3000);
    EXPECT_TRUE(serial.empty());
    EXPECT_TRUE(par.empty());
}
