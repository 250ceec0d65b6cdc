#include <fuglede/spectra.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fuglede;

namespace
{
    Rational q(long long p, long long d = 1) { return make_rational(p, d); }

    RootOfUnity e(long long p, long long d) { return RootOfUnity(q(p, d)); }

    std::vector<Rational> qs(std::initializer_list<Rational> xs) { return xs; }

    // Every odd/even perfect matching through equal nodes, by brute force over
    // permutations of the even positions.
    bool some_pairing_exists(const std::vector<RootOfUnity> &z)
    {
        const std::size_t n = z.size() / 2;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do
        {
            bool ok = true;
            for (std::size_t o = 0; o < n && ok; ++o)
                ok = z[2 * o] == z[2 * perm[o] + 1];
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    // Maximal progressions by direct set lookups.
    std::vector<ArithmeticProgression> aps_by_scan(std::vector<Rational> pts, std::size_t min_length)
    {
        std::sort(pts.begin(), pts.end());
        const std::set<Rational> in(pts.begin(), pts.end());
        std::vector<ArithmeticProgression> out;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
            {
                const Rational d = pts[j] - pts[i];
                if (in.count(pts[i] - d))
                    continue;
                std::size_t len = 1;
                while (in.count(pts[i] + d * Rational(static_cast<long long>(len))))
                    ++len;
                if (len >= min_length)
                    out.push_back({pts[i], d, len});
            }
        std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
            return std::tie(x.start, x.difference, x.length) < std::tie(y.start, y.difference, y.length);
        });
        return out;
    }
}

TEST(PeriodicSet, Validation)
{
    const PeriodicSet s(1, qs({0, q(1, 3), q(2, 3)}));
    EXPECT_EQ(s.density(), 3);
    EXPECT_TRUE(s.contains(q(-5, 3)));
    EXPECT_FALSE(s.contains(q(1, 2)));
    EXPECT_EQ(s.points_in_window(1).size(), 7u);
    EXPECT_THROW(PeriodicSet(1, qs({q(1, 3)})), std::invalid_argument);
    EXPECT_THROW(PeriodicSet(1, qs({0, 1})), std::invalid_argument);
    EXPECT_THROW(PeriodicSet(0, qs({0})), std::invalid_argument);
}

TEST(Orthogonality, Examples)
{
    const IntervalUnion three{{0, 1}, {4, 1}, {2, 1}};
    const PeriodicSet thirds(1, qs({0, q(1, 3), q(2, 3)}));
    EXPECT_TRUE(check_orthogonality(three, FiniteSpectrumWindow::from_periodic(thirds, 3)).orthogonal);

    const auto bad = check_orthogonality(IntervalUnion{{0, 1}}, FiniteSpectrumWindow(qs({0, q(1, 2)}), 1));
    EXPECT_FALSE(bad.orthogonal);
    ASSERT_TRUE(bad.violation);
    EXPECT_EQ(bad.violation->first, 0);
    EXPECT_EQ(bad.violation->second, q(1, 2));

    EXPECT_TRUE(check_orthogonality(three, FiniteSpectrumWindow(qs({0}), 5)).orthogonal);
}

TEST(Orthogonality, WindowValidation)
{
    EXPECT_THROW(FiniteSpectrumWindow(qs({1, 2}), 3), std::invalid_argument);
    EXPECT_THROW(FiniteSpectrumWindow(qs({0, 4}), 3), std::invalid_argument);
}

TEST(CompletenessMatrix, Examples)
{
    EXPECT_TRUE(completeness_matrix(IntegerSet{0, 4, 2}, qs({0, q(1, 3), q(2, 3)})));
    EXPECT_TRUE(completeness_matrix(IntegerSet{0, 1}, qs({0, q(1, 2)})));
    EXPECT_FALSE(completeness_matrix(IntegerSet{0, 2}, qs({0, q(1, 3)})));
    EXPECT_THROW(completeness_matrix(IntegerSet{0, 2}, qs({0})), std::invalid_argument);
}

TEST(ScaledCompleteness, DecidesOnlyUnitCells)
{
    const PeriodicSet thirds(1, qs({0, q(1, 3), q(2, 3)}));
    EXPECT_EQ(scaled_completeness(IntervalUnion{{0, 1}, {4, 1}, {2, 1}}, thirds), Completeness::unitary);
    EXPECT_EQ(scaled_completeness(IntervalUnion{{0, 1}, {3, 1}, {2, 1}}, thirds), Completeness::not_unitary);
    EXPECT_EQ(scaled_completeness(IntervalUnion{{0, 1}, {2, 1}}, thirds), Completeness::not_unitary);
    EXPECT_EQ(scaled_completeness(IntervalUnion{{0, q(1, 2)}, {2, q(5, 2)}}, thirds), Completeness::not_decided);
    EXPECT_EQ(to_string(Completeness::not_decided), "not-decided");
}

TEST(Case3, Examples)
{
    auto c = construct_spectrum_case3(0, 1, 0);
    EXPECT_EQ(c.parameters.at("a"), 4);
    EXPECT_EQ(c.parameters.at("b"), 2);
    EXPECT_EQ(c.lambda.cosets(), qs({0, q(1, 3), q(2, 3)}));

    c = construct_spectrum_case3(1, 0, 0);
    EXPECT_EQ(c.parameters.at("a"), 3);
    EXPECT_EQ(c.parameters.at("b"), 6);
    EXPECT_EQ(c.lambda.cosets(), qs({0, q(1, 9), q(2, 9)}));

    c = construct_spectrum_case3(0, 0, 0);
    EXPECT_EQ(c.omega.measure(), 3);
    EXPECT_EQ(c.omega.pieces().back().right(), 3);
}

TEST(Case3, SpectraAreOrthogonalCompleteAndDense)
{
    for (int j = 0; j <= 1; ++j)
        for (int r = -1; r <= 1; ++r)
            for (int s = -1; s <= 1; ++s)
            {
                const auto c = construct_spectrum_case3(j, r, s);
                EXPECT_TRUE(check_orthogonality(c.omega, FiniteSpectrumWindow::from_periodic(c.lambda, 6)).orthogonal);
                EXPECT_EQ(scaled_completeness(c.omega, c.lambda), Completeness::unitary);
                EXPECT_EQ(c.lambda.density(), c.omega.measure());
            }
}

TEST(Case2b, Examples)
{
    auto c = construct_spectrum_case2b(1, 1, 1);
    EXPECT_EQ(c.parameters.at("a"), 3);
    EXPECT_EQ(c.parameters.at("b"), 2);
    EXPECT_EQ(c.lambda.cosets(), qs({0, q(1, 4), q(1, 2), q(3, 4)}));

    c = construct_spectrum_case2b(2, 1, 1);
    EXPECT_EQ(c.parameters.at("a"), 5);
    EXPECT_EQ(c.parameters.at("b"), 4);
    EXPECT_EQ(c.lambda.cosets(), qs({0, q(1, 8), q(1, 2), q(5, 8)}));

    c = construct_spectrum_case2b(1, 1, 3);
    EXPECT_EQ(c.parameters.at("b"), 6);
    EXPECT_TRUE(check_orthogonality(c.omega, FiniteSpectrumWindow::from_periodic(c.lambda, 6)).orthogonal);
    EXPECT_EQ(scaled_completeness(c.omega, c.lambda), Completeness::unitary);
    EXPECT_EQ(c.lambda.density(), 4);

    EXPECT_THROW(construct_spectrum_case2b(1, 2, 1), precondition_failure);
    EXPECT_THROW(construct_spectrum_case2b(0, 1, 1), precondition_failure);
}

TEST(Case2a, Examples)
{
    auto c = construct_spectrum_case2a(1, 3, 1, q(1, 4));
    EXPECT_EQ(c.lambda.cosets(), qs({0, 1}));
    EXPECT_EQ(c.omega.measure(), 1);
    EXPECT_TRUE(check_orthogonality(c.omega, FiniteSpectrumWindow::from_periodic(c.lambda, 6)).orthogonal);

    c = construct_spectrum_case2a(2, 6, 2, q(1, 4));
    EXPECT_EQ(c.lambda.cosets(), qs({0, q(1, 2)}));
    EXPECT_TRUE(check_orthogonality(c.omega, FiniteSpectrumWindow::from_periodic(c.lambda, 6)).orthogonal);
    for (const auto &x : c.lambda.points_in_window(6))
        EXPECT_TRUE(case2a_identity_holds(c, x)) << to_string(x);

    EXPECT_THROW(construct_spectrum_case2a(2, 5, 1, q(1, 4)), precondition_failure);
    EXPECT_THROW(construct_spectrum_case2a(2, 4, 2, q(1, 4)), precondition_failure); // k0 does not divide l = 1
    EXPECT_THROW(construct_spectrum_case2a(2, 4, 1, q(1, 4)), precondition_failure); // n/k0 even
    EXPECT_THROW(construct_spectrum_case2a(1, 3, 1, q(1, 2)), precondition_failure);
}

TEST(GoodPairing, Examples)
{
    const auto z = e(0, 1), w = e(1, 3), u = e(1, 5);
    using P = std::vector<std::pair<int, int>>;
    EXPECT_EQ(good_pairing({z, z, w, w, u, u}).pairs, (P{{1, 2}, {3, 4}, {5, 6}}));
    EXPECT_EQ(good_pairing({z, w, w, z, u, u}).pairs, (P{{1, 4}, {2, 3}, {5, 6}}));
    EXPECT_THROW(good_pairing({z, z, z, w, w, w}), no_good_pairing);
    EXPECT_THROW(good_pairing({z, z, w}), std::invalid_argument);
}

TEST(GoodPairing, AgreesWithExhaustiveMatching)
{
    std::mt19937_64 rng(17);
    int found = 0;
    for (int trial = 0; trial < 2000; ++trial)
    {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::uniform_int_distribution<int> pick(0, 2);
        std::vector<RootOfUnity> z;
        for (int i = 0; i < 2 * n; ++i)
            z.push_back(e(pick(rng), 3));
        const bool exists = some_pairing_exists(z);
        if (exists)
        {
            const auto g = good_pairing(z);
            EXPECT_TRUE(is_good_pairing(z, g));
            for (auto [i, j] : g.pairs)
                EXPECT_EQ((i + j) % 2, 1);
            ++found;
        }
        else
            EXPECT_THROW(good_pairing(z), no_good_pairing);
    }
    EXPECT_GT(found, 0);
}

TEST(APExtension, Examples)
{
    EXPECT_TRUE(ap_extension_check(IntervalUnion{{0, q(1, 3)}, {q(4, 3), q(1, 3)}, {q(2, 3), q(1, 3)}}, 1, 50));
    EXPECT_TRUE(ap_extension_check(IntervalUnion{{0, 1}}, 1, 50));
    EXPECT_THROW(ap_extension_check(IntervalUnion{{0, q(1, 2)}, {q(3, 4), q(1, 2)}}, 1, 50), precondition_failure);
}

TEST(APExtension, SpectrumExamples)
{
    const IntervalUnion three{{0, 3}};
    const PeriodicSet thirds(q(1, 3), qs({0}));
    auto r = spectrum_ap_extension(three, FiniteSpectrumWindow::from_periodic(thirds, 3), 0, 1);
    EXPECT_TRUE(r.holds);

    const auto c = construct_spectrum_case2b(1, 1, 1);
    // four pieces, so a, a + d, ..., a + 7d must lie in the window
    r = spectrum_ap_extension(c.omega, FiniteSpectrumWindow::from_periodic(c.lambda, 8), 0, 1);
    EXPECT_TRUE(r.holds);

    auto pts = thirds.points_in_window(3);
    pts.erase(std::find(pts.begin(), pts.end(), Rational(1)));
    r = spectrum_ap_extension(three, FiniteSpectrumWindow(pts, 3), 0, q(1, 3));
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, 1);
    EXPECT_EQ(r.reason, "missing");

    EXPECT_THROW(spectrum_ap_extension(three, FiniteSpectrumWindow(pts, 3), 0, 1), precondition_failure);
}

TEST(Separation, Examples)
{
    EXPECT_EQ(separation(qs({0, 1, 2})), 1);
    EXPECT_EQ(separation(qs({0, q(1, 3), 1})), q(1, 3));
    // differences -4/5, -1/2, -3/10, 0, 3/10, 1/2, 4/5 are 1/5-separated
    EXPECT_EQ(separation(qs({0, q(1, 2), q(4, 5)})), q(1, 5));
    EXPECT_THROW(separation(qs({0})), std::invalid_argument);
}

TEST(FindAPs, Examples)
{
    using V = std::vector<ArithmeticProgression>;
    EXPECT_EQ(find_aps(qs({0, 1, 2, 3, 4, 5, q(15, 2)}), 6), (V{{0, 1, 6}}));
    EXPECT_EQ(find_aps(qs({0, 2, 4, 6}), 4), (V{{0, 2, 4}}));
    EXPECT_EQ(find_aps(qs({0, 1, 3, 6, 10}), 3), (V{{0, 3, 3}}));
}

TEST(FindAPs, AgreesWithDirectScanAndReflects)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int den = std::uniform_int_distribution<int>(1, 6)(rng);
        std::uniform_int_distribution<int> num(-20, 20);
        std::set<Rational> s{0};
        const int count = std::uniform_int_distribution<int>(2, 12)(rng);
        while (static_cast<int>(s.size()) < count)
            s.insert(q(num(rng), den));
        std::vector<Rational> pts(s.begin(), s.end());
        const auto found = find_aps(pts, 3);
        EXPECT_EQ(found, aps_by_scan(pts, 3));

        std::vector<Rational> neg;
        for (const auto &x : pts)
            neg.push_back(-x);
        const auto mirrored = find_aps(neg, 3);
        for (const auto &ap : found)
        {
            const ArithmeticProgression r{-(ap.start + ap.difference * Rational(static_cast<long long>(ap.length - 1))),
                                          ap.difference, ap.length};
            EXPECT_NE(std::find(mirrored.begin(), mirrored.end(), r), mirrored.end());
        }
    }
}

TEST(RankCase, EqualIntervals)
{
    const IntervalUnion omega{{0, q(1, 3)}, {1, q(1, 3)}, {2, q(1, 3)}};
    const auto rep = rank_case(omega, 3, q(1, 3));
    EXPECT_EQ(rep.rank, 1);
    EXPECT_EQ(rep.case_tag, 3);
    ASSERT_TRUE(rep.decomposition);
    EXPECT_EQ(rep.decomposition->l2, 3);
    EXPECT_EQ(rep.decomposition->l3, 6);
    EXPECT_EQ(rep.decomposition->k1 + rep.decomposition->k2 + rep.decomposition->k3, 3);
    EXPECT_EQ(rep.decomposition->k1, 1);
}

TEST(RankCase, Preconditions)
{
    const IntervalUnion omega{{0, q(1, 3)}, {1, q(1, 3)}, {2, q(1, 3)}};
    EXPECT_THROW(rank_case(omega, 3, 6), precondition_failure);
    EXPECT_THROW(rank_case(omega, 1, q(1, 3)), precondition_failure);
    EXPECT_THROW(rank_case(IntervalUnion{{0, 1}}, 1, q(1, 2)), precondition_failure);
}

TEST(RankCase, DistinctAndTwoNodeShapes)
{
    const auto a = e(0, 1), b = e(1, 3), c = e(2, 3);
    std::array<RootOfUnity, 6> xi{a, a, b, b, c, c};
    auto rep = classify_rank({a, a, b, b, c, c}, xi);
    EXPECT_EQ(rep.rank, 3);
    EXPECT_EQ(rep.case_tag, 1);
    EXPECT_EQ(rep.xi_pairs_equal, (std::array<bool, 3>{true, true, true}));

    rep = classify_rank({a, a, b, b, a, a}, xi);
    EXPECT_EQ(rep.rank, 2);
    EXPECT_EQ(rep.case_tag, 2);
    // after relabelling the shared node sits in slots 1 and 3
    EXPECT_EQ(rep.order[2], 3);
    ASSERT_TRUE(rep.z_membership);
}

TEST(RankCase, InvariantUnderIntervalRelabelling)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 5);
    std::array<int, 3> perm{0, 1, 2};
    for (int trial = 0; trial < 300; ++trial)
    {
        std::array<RootOfUnity, 6> zeta, xi;
        for (int t = 0; t < 3; ++t)
        {
            zeta[2 * t] = zeta[2 * t + 1] = e(pick(rng), 6);
            xi[2 * t] = e(pick(rng), 6);
            xi[2 * t + 1] = e(pick(rng), 6);
        }
        const auto base = classify_rank(zeta, xi);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::array<RootOfUnity, 6> zp, xp;
        for (int t = 0; t < 3; ++t)
            for (int h = 0; h < 2; ++h)
            {
                zp[2 * t + h] = zeta[2 * perm[t] + h];
                xp[2 * t + h] = xi[2 * perm[t] + h];
            }
        const auto moved = classify_rank(zp, xp);
        EXPECT_EQ(base.rank, moved.rank);
        EXPECT_EQ(base.case_tag, moved.case_tag);
        if (base.rank == 3)
        {
            auto x = base.xi_pairs_equal, y = moved.xi_pairs_equal;
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            EXPECT_EQ(x, y);
        }
    }
}
