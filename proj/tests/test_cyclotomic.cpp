#include <fuglede/cyclotomic.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace fuglede;

namespace
{
    IntPoly poly(std::initializer_list<long long> coeffs)
    {
        IntPoly p;
        for (auto c : coeffs)
            p.emplace_back(c);
        return p;
    }

    IntPoly multiply(const IntPoly &a, const IntPoly &b)
    {
        IntPoly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    }

    // Direct oracle: reduce sum c_k x^{k} modulo Phi_N by long division over
    // the rationals and test the remainder, N being the common order.
    bool zero_by_long_division(const CycloSum &s)
    {
        if (s.empty())
            return true;
        const auto n = s.order().convert_to<std::uint64_t>();
        std::vector<Rational> p(n, 0);
        for (const auto &[r, c] : s.terms())
            p[numerator(r.exponent() * n).convert_to<std::size_t>()] += c;
        const auto phi = cyclotomic_poly(n);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = p.size(); i-- > deg;)
        {
            const Rational lead = p[i];
            if (lead == 0)
                continue;
            for (std::size_t j = 0; j <= deg; ++j)
                p[i - deg + j] -= lead * Rational(phi[j]);
        }
        for (std::size_t i = 0; i < std::min(deg, p.size()); ++i)
            if (p[i] != 0)
                return false;
        return true;
    }

    RootOfUnity e(long long p, long long q) { return RootOfUnity(BigInt(p), BigInt(q)); }

    // Orders are divisors of `modulus`, which keeps the common order bounded.
    CycloSum random_sum(std::mt19937_64 &rng, int modulus = 360)
    {
        std::vector<int> divisors;
        for (int d = 1; d <= modulus; ++d)
            if (modulus % d == 0)
                divisors.push_back(d);
        std::uniform_int_distribution<std::size_t> order(0, divisors.size() - 1);
        std::uniform_int_distribution<int> terms(1, 8), coef(-5, 5);
        CycloSum s;
        const int k = terms(rng);
        for (int i = 0; i < k; ++i)
        {
            const int q = divisors[order(rng)];
            std::uniform_int_distribution<int> num(0, q - 1);
            s.add(coef(rng), e(num(rng), q));
        }
        return s;
    }
}

TEST(CyclotomicPoly, SmallCases)
{
    EXPECT_EQ(cyclotomic_poly(1), poly({-1, 1}));
    EXPECT_EQ(cyclotomic_poly(2), poly({1, 1}));
    EXPECT_EQ(cyclotomic_poly(6), poly({1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), poly({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(30), poly({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST(CyclotomicPoly, HundredFiveHasCoefficientMinusTwo)
{
    const auto phi = cyclotomic_poly(105);
    EXPECT_EQ(phi.size(), 49u);
    EXPECT_NE(std::find(phi.begin(), phi.end(), BigInt(-2)), phi.end());
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne)
{
    for (std::uint64_t n = 1; n <= 120; ++n)
    {
        IntPoly prod = poly({1});
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = multiply(prod, cyclotomic_poly(d));
        IntPoly expected(n + 1, 0);
        expected[0] = -1;
        expected[n] = 1;
        EXPECT_EQ(prod, expected) << "n = " << n;
    }
}

TEST(RootOfUnity, ExponentIsReducedModOne)
{
    EXPECT_EQ(RootOfUnity(Rational(7, 3)), e(1, 3));
    EXPECT_EQ(RootOfUnity(Rational(-1, 4)), e(3, 4));
    EXPECT_EQ(e(2, 6).order(), 3);
    EXPECT_TRUE(RootOfUnity(Rational(5)).is_one());
    EXPECT_EQ(-e(0, 1), RootOfUnity::minus_one());
    EXPECT_EQ(e(1, 3).conj(), e(2, 3));
    EXPECT_EQ(e(1, 6).pow(4), e(2, 3));
}

TEST(CycloSum, MergesEqualRootsAndDropsZeros)
{
    CycloSum s;
    s.add(1, e(1, 3)).add(2, e(4, 12)).add(-3, e(2, 6));
    EXPECT_TRUE(s.empty());
    CycloSum t{{1, e(1, 4)}, {1, e(1, 6)}};
    EXPECT_EQ(t.order(), 12);
}

TEST(CycloZero, KnownIdentities)
{
    EXPECT_TRUE(cyclo_is_zero(CycloSum{{1, e(0, 1)}, {1, e(1, 3)}, {1, e(2, 3)}}));
    EXPECT_TRUE(cyclo_is_zero(CycloSum{{1, e(0, 1)}, {-1, e(0, 1)}}));
    CycloSum t3;
    for (int k = 1; k <= 4; ++k)
        t3.add(1, e(k, 5));
    t3.add(1, -e(1, 3));
    t3.add(1, -e(2, 3));
    EXPECT_TRUE(cyclo_is_zero(t3));
    EXPECT_FALSE(cyclo_is_zero(CycloSum{{1, e(0, 1)}, {1, e(0, 1)}}));
    EXPECT_FALSE(cyclo_is_zero(CycloSum{{1, e(1, 5)}, {1, e(4, 5)}, {1, e(1, 2)}}));
}

TEST(CycloZero, NonSquarefreeOrders)
{
    // full sums of n-th roots vanish for n > 1, partial ones do not
    for (int n : {4, 8, 9, 12, 18, 27, 36, 50, 72})
    {
        CycloSum s;
        for (int k = 0; k < n; ++k)
            s.add(1, e(k, n));
        EXPECT_TRUE(cyclo_is_zero(s)) << n;
        s.add(-1, e(0, 1));
        EXPECT_FALSE(cyclo_is_zero(s)) << n;
    }
    // 1 + i^2 = 0 but 1 + i != 0
    EXPECT_TRUE(cyclo_is_zero(CycloSum{{1, e(0, 1)}, {1, e(2, 4)}}));
    EXPECT_FALSE(cyclo_is_zero(CycloSum{{1, e(0, 1)}, {1, e(1, 4)}}));
}

TEST(CycloZero, LargeExponentDenominators)
{
    // 1 + w + w^2 scaled into the 3^12-th roots
    const long long q = 531441;
    CycloSum s{{1, e(5, q)}, {1, e(5 + q / 3, q)}, {1, e(5 + 2 * q / 3, q)}};
    EXPECT_TRUE(cyclo_is_zero(s));
    s.add(Rational(1, 7), e(1, q));
    EXPECT_FALSE(cyclo_is_zero(s));
}

TEST(CycloZero, AgreesWithLongDivisionOracle)
{
    std::mt19937_64 rng(20240611);
    int zeros = 0;
    for (int i = 0; i < 3000; ++i)
    {
        CycloSum s = random_sum(rng, 180);
        if (i % 3 == 0)
        {
            // a vanishing block, sometimes with a stray term, so both
            // outcomes are exercised
            if (i % 2 == 0)
                s = CycloSum{{1, e(i % 5, 5)}};
            else
                s = CycloSum{};
            std::uniform_int_distribution<int> q(2, 6);
            const int n = q(rng);
            for (int k = 0; k < n; ++k)
                s.add(2, e(k, n) * e(1, 6));
        }
        const bool z = cyclo_is_zero(s);
        zeros += z;
        ASSERT_EQ(z, zero_by_long_division(s)) << i;
    }
    EXPECT_GT(zeros, 0);
}

TEST(CycloZero, RotationInvariant)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i)
    {
        CycloSum s = random_sum(rng);
        const auto by = e(static_cast<long long>(rng() % 11), 11);
        EXPECT_EQ(cyclo_is_zero(s), cyclo_is_zero(s.rotated(by)));
    }
}

TEST(CycloFloat, Examples)
{
    EXPECT_LT(std::abs(cyclo_eval_float(CycloSum{{1, e(0, 1)}, {1, e(1, 3)}, {1, e(2, 3)}})), 1e-12);
    EXPECT_NEAR(std::abs(cyclo_eval_float(CycloSum{{2, e(0, 1)}}) - std::complex<double>(2, 0)), 0, 1e-15);
    CycloSum g;
    for (int k = 1; k <= 4; ++k)
        g.add(1, e(k, 5));
    EXPECT_NEAR(std::abs(cyclo_eval_float(g) - std::complex<double>(-1, 0)), 0, 1e-12);
}

TEST(CyclotomicBasis, MatchesExactZeroTest)
{
    const CyclotomicBasis basis(60);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> k(0, 59);
    for (int i = 0; i < 20000; ++i)
    {
        std::array<std::uint32_t, 6> ex;
        for (auto &x : ex)
            x = k(rng);
        if (i % 4 == 0)
            ex[1] = (ex[0] + 30) % 60, ex[3] = (ex[2] + 30) % 60, ex[5] = (ex[4] + 30) % 60;
        CycloSum s;
        for (auto x : ex)
            s.add(1, e(x, 60));
        ASSERT_EQ(basis.is_zero_sum(ex), cyclo_is_zero(s));
    }
}

TEST(CycloArithmetic, ProductAndConjugate)
{
    const CycloSum a{{1, e(0, 1)}, {1, e(1, 3)}};
    const CycloSum b{{1, e(0, 1)}, {-1, e(1, 3)}};
    // (1 + w)(1 - w) = 1 - w^2
    EXPECT_EQ(a * b, (CycloSum{{1, e(0, 1)}, {-1, e(2, 3)}}));
    // |1 + w|^2 = 1
    EXPECT_TRUE(cyclo_is_zero(a * a.conj() - CycloSum{{1, e(0, 1)}}));
}

TEST(CycloZero, PrimePowerSplittingMatchesRadicalReduction)
{
    // orders dividing 2^2 * 3 * 5 * 7 * 11, whose radical is above the
    // splitting threshold, so both paths run and must agree
    std::mt19937_64 rng(61);
    int zeros = 0;
    for (int i = 0; i < 400; ++i)
    {
        CycloSum s = random_sum(rng, 4620);
        if (i % 2 == 0)
        {
            const std::array<int, 5> primes{2, 3, 5, 7, 11};
            const int n = primes[rng() % primes.size()];
            const auto shift = e(static_cast<long long>(rng() % 4620), 4620);
            const int c = static_cast<int>(rng() % 3) + 1;
            for (int k = 0; k < n; ++k)
                s.add(c, shift * e(k, n));
            if (i % 4 == 0)
                s = s.rotated(e(1, 11)) - s;
        }
        const bool z = cyclo_is_zero(s);
        zeros += z;
        ASSERT_EQ(z, cyclo_is_zero_by_radical(s)) << i;
    }
    EXPECT_GT(zeros, 0);
}

TEST(CycloZero, HugeCommonOrder)
{
    // common order is the product of the primes up to 59, about 1.9e21
    const std::array<int, 17> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    CycloSum s;
    for (std::size_t i = 0; i < primes.size(); ++i)
    {
        const int p = primes[i];
        const auto shift = e(static_cast<long long>(i + 1), primes[(i + 5) % primes.size()]);
        for (int k = 0; k < p; ++k)
            s.add(1, shift * e(k, p));
    }
    EXPECT_TRUE(cyclo_is_zero(s));
    EXPECT_FALSE(cyclo_is_zero(s + CycloSum{{1, e(1, 59)}}));
    EXPECT_FALSE(cyclo_is_zero(CycloSum{{1, e(1, 53)}, {1, e(1, 59)}, {-1, e(1, 47)}}));
    EXPECT_LT(std::abs(cyclo_eval_float(s)), 1e-9);
}
