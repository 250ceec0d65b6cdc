#pragma once

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "intervals.hpp"
#include "rational.hpp"
#include "ztiling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuglede
{
    struct no_good_pairing : precondition_failure
    {
        using precondition_failure::precondition_failure;
    };

    /// L + period*Z with L a finite set of representatives in [0, period).
    class PeriodicSet
    {
    public:
        PeriodicSet(Rational period, std::vector<Rational> cosets) : period_(std::move(period)), cosets_(std::move(cosets))
        {
            if (period_ <= 0)
                throw std::invalid_argument("PeriodicSet: period must be positive");
            for (auto &c : cosets_)
                if (c < 0 || c >= period_)
                    throw std::invalid_argument("PeriodicSet: coset " + to_string(c) + " outside [0, " +
                                                to_string(period_) + ")");
            std::sort(cosets_.begin(), cosets_.end());
            if (std::adjacent_find(cosets_.begin(), cosets_.end()) != cosets_.end())
                throw std::invalid_argument("PeriodicSet: cosets must be distinct");
            if (cosets_.empty() || cosets_.front() != 0)
                throw std::invalid_argument("PeriodicSet: 0 must be one of the cosets");
        }

        const Rational &period() const { return period_; }
        const std::vector<Rational> &cosets() const { return cosets_; }
        Rational density() const { return Rational(static_cast<long long>(cosets_.size())) / period_; }

        bool contains(const Rational &x) const
        {
            const Rational q = x / period_;
            const Rational r = (q - Rational(floor(q))) * period_;
            return std::binary_search(cosets_.begin(), cosets_.end(), r);
        }

        /// All points in the closed window [-w, w], sorted.
        std::vector<Rational> points_in_window(const Rational &w) const
        {
            std::vector<Rational> out;
            const BigInt lo = floor(-w / period_) - 1;
            const BigInt hi = floor(w / period_) + 1;
            for (BigInt k = lo; k <= hi; ++k)
                for (const auto &c : cosets_)
                {
                    Rational x = c + Rational(k) * period_;
                    if (-w <= x && x <= w)
                        out.push_back(std::move(x));
                }
            std::sort(out.begin(), out.end());
            return out;
        }

        friend bool operator==(const PeriodicSet &, const PeriodicSet &) = default;

    private:
        Rational period_;
        std::vector<Rational> cosets_;
    };

    /// A finite piece of a candidate spectrum, restricted to [-window, window].
    class FiniteSpectrumWindow
    {
    public:
        FiniteSpectrumWindow(std::vector<Rational> points, Rational window)
            : points_(std::move(points)), window_(std::move(window))
        {
            std::sort(points_.begin(), points_.end());
            points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
            if (!std::binary_search(points_.begin(), points_.end(), Rational(0)))
                throw std::invalid_argument("spectrum window must contain 0");
            for (const auto &p : points_)
                if (p < -window_ || p > window_)
                    throw std::invalid_argument("point " + to_string(p) + " outside window [-" + to_string(window_) +
                                                ", " + to_string(window_) + "]");
        }

        static FiniteSpectrumWindow from_periodic(const PeriodicSet &set, const Rational &window)
        {
            return FiniteSpectrumWindow(set.points_in_window(window), window);
        }

        const std::vector<Rational> &points() const { return points_; }
        const Rational &window() const { return window_; }
        bool contains(const Rational &x) const { return std::binary_search(points_.begin(), points_.end(), x); }

    private:
        std::vector<Rational> points_;
        Rational window_;
    };

    struct OrthogonalityReport
    {
        bool orthogonal = true;
        std::optional<std::pair<Rational, Rational>> violation; // (lambda, lambda'), lambda < lambda'
        std::size_t differences_checked = 0;
    };

    /// Every difference of distinct points must lie in Z_Omega. The first
    /// failing pair in lexicographic order is reported.
    inline OrthogonalityReport check_orthogonality(const IntervalUnion &omega, const FiniteSpectrumWindow &lambda)
    {
        OrthogonalityReport report;
        std::map<Rational, bool> cache;
        const auto &pts = lambda.points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
            {
                // Z_Omega is symmetric, so one sign suffices
                const Rational diff = pts[j] - pts[i];
                auto it = cache.find(diff);
                if (it == cache.end())
                {
                    it = cache.emplace(diff, in_zero_set(omega, diff)).first;
                    ++report.differences_checked;
                }
                if (!it->second)
                {
                    report.orthogonal = false;
                    report.violation = std::pair{pts[i], pts[j]};
                    return report;
                }
            }
        return report;
    }

    /// Is the matrix (e^{2 pi i mu_i a_j}) a scaled unitary, i.e. are its rows
    /// pairwise orthogonal? Decided exactly on the cyclotomic row products.
    inline bool completeness_matrix(const IntegerSet &a, const std::vector<Rational> &mu)
    {
        if (a.size() != mu.size())
            throw std::invalid_argument("completeness_matrix: |A| = " + std::to_string(a.size()) +
                                        " but |mu| = " + std::to_string(mu.size()));
        for (std::size_t i = 0; i < mu.size(); ++i)
            for (std::size_t l = i + 1; l < mu.size(); ++l)
            {
                CycloSum row;
                for (const auto &x : a.elements())
                    row.add(1, RootOfUnity((mu[i] - mu[l]) * x));
                if (!cyclo_is_zero(row))
                    return false;
            }
        return true;
    }

    enum class Completeness
    {
        unitary,
        not_unitary,
        not_decided
    };

    inline std::string to_string(Completeness c)
    {
        switch (c)
        {
        case Completeness::unitary:
            return "unitary";
        case Completeness::not_unitary:
            return "not-unitary";
        default:
            return "not-decided";
        }
    }

    /// Completeness of Lambda = L + pZ for Omega, decided only when p*Omega is
    /// a union of unit cells A + [0,1). Then Lambda/p = L/p + Z is a spectrum
    /// of p*Omega iff |A| = |L| and the matrix criterion holds for (A, L/p).
    inline Completeness scaled_completeness(const IntervalUnion &omega, const PeriodicSet &lambda)
    {
        const IntervalUnion scaled = omega.scaled(lambda.period());
        for (const auto &piece : scaled.pieces())
            if (!is_integer(piece.left) || !is_integer(piece.length))
                return Completeness::not_decided;
        const auto cells = unit_interval_factor(scaled);
        if (cells.size() != lambda.cosets().size())
            return Completeness::not_unitary;
        std::vector<Rational> mu;
        for (const auto &c : lambda.cosets())
            mu.push_back(c / lambda.period());
        return completeness_matrix(IntegerSet(cells), mu) ? Completeness::unitary : Completeness::not_unitary;
    }

    // ---------------------------------------------------------------------
    // Explicit spectra

    struct ConstructedSpectrum
    {
        IntervalUnion omega;
        PeriodicSet lambda;
        std::map<std::string, Rational> parameters;
    };

    inline BigInt ipow(std::int64_t base, std::int64_t exp)
    {
        BigInt r = 1;
        for (std::int64_t i = 0; i < exp; ++i)
            r *= base;
        return r;
    }

    /// Three unit intervals at 0, a = 3^j(3r+1), b = 3^j(3s+2), with the
    /// spectrum Z + {0, 1, 2}/3^{j+1}.
    inline ConstructedSpectrum construct_spectrum_case3(std::int64_t j, std::int64_t r, std::int64_t s)
    {
        if (j < 0)
            throw precondition_failure("case 3: j must be non-negative");
        const BigInt p = ipow(3, j);
        const BigInt a = p * (3 * BigInt(r) + 1);
        const BigInt b = p * (3 * BigInt(s) + 2);
        const BigInt q = p * 3;
        return {IntervalUnion::unit_cells({0, a, b}),
                PeriodicSet(1, {Rational(0), make_rational(1, q), make_rational(2, q)}),
                {{"j", j}, {"r", r}, {"s", s}, {"a", Rational(a)}, {"b", Rational(b)}}};
    }

    /// [0,2) u [a,a+1) u [b,b+1) with a = 2^l r + 1, b = 2^l s (r, s odd) and
    /// the spectrum Z + {0, 1/2^{l+1}, 1/2, 1/2 + 1/2^{l+1}}.
    inline ConstructedSpectrum construct_spectrum_case2b(std::int64_t l, std::int64_t r, std::int64_t s)
    {
        if (l < 1)
            throw precondition_failure("case 2b: l must be at least 1");
        if (r % 2 == 0 || s % 2 == 0)
            throw precondition_failure("case 2b: r and s must be odd");
        const BigInt p = ipow(2, l);
        const BigInt a = p * r + 1;
        const BigInt b = p * s;
        const Rational beta = make_rational(1, 2 * p);
        return {IntervalUnion::unit_cells({0, 1, a, b}),
                PeriodicSet(1, {Rational(0), beta, Rational(1, 2), Rational(1, 2) + beta}),
                {{"l", l}, {"r", r}, {"s", s}, {"a", Rational(a)}, {"b", Rational(b)}}};
    }

    struct Case2aSpectrum : ConstructedSpectrum
    {
        IntervalUnion omega1; // [0,1/2) u [b, b+1/2)
    };

    /// Omega = [0,1/2) u [b,b+r) u [c,c+1/2-r) with b = n/2, c = k/2 + r and
    /// Lambda = 2Z u (2Z + 1/k0). Requires l = (k-n)/2 a non-negative
    /// integer, k0 | l and n/k0 odd.
    inline Case2aSpectrum construct_spectrum_case2a(std::int64_t n, std::int64_t k, std::int64_t k0, const Rational &r)
    {
        if (n < 1)
            throw precondition_failure("case 2a: n must be positive");
        if (k0 < 1)
            throw precondition_failure("case 2a: k0 must be positive");
        if (r <= 0 || r >= Rational(1, 2))
            throw precondition_failure("case 2a: r must lie in (0, 1/2)");
        if ((k - n) % 2 != 0)
            throw precondition_failure("case 2a: l = (k - n)/2 is not an integer");
        const std::int64_t l = (k - n) / 2;
        if (l < 0)
            throw precondition_failure("case 2a: need k >= n so the intervals are disjoint");
        if (l % k0 != 0)
            throw precondition_failure("case 2a: k0 does not divide l = " + std::to_string(l));
        if (n % k0 != 0 || (n / k0) % 2 == 0)
            throw precondition_failure("case 2a: n/k0 must be an odd integer");
        const Rational half(1, 2);
        const Rational b = Rational(n) / 2;
        const Rational c = Rational(k) / 2 + r;
        Case2aSpectrum out{{IntervalUnion({{0, half}, {b, r}, {c, half - r}}),
                            PeriodicSet(2, {Rational(0), make_rational(1, k0)}),
                            {{"n", n}, {"k", k}, {"k0", k0}, {"r", r}, {"l", l}, {"b", b}, {"c", c}}},
                           IntervalUnion({{0, half}, {b, half}})};
        return out;
    }

    /// For lambda in 2Z u (2Z +- 1/k0) the Fourier numerators of Omega and of
    /// the two-interval set Omega_1 agree exactly.
    inline bool case2a_identity_holds(const Case2aSpectrum &c, const Rational &lambda)
    {
        return fourier_numerator(c.omega, lambda) == fourier_numerator(c.omega1, lambda);
    }

    // ---------------------------------------------------------------------
    // Good pairs and arithmetic progressions

    /// Pairs (i, j), 1-based with i < j and i + j odd, ordered by i.
    struct GoodPairing
    {
        std::vector<std::pair<int, int>> pairs;
    };

    namespace detail
    {
        inline bool match_odd(const std::vector<RootOfUnity> &z, std::size_t odd_slot, std::vector<int> &partner,
                              std::vector<char> &used)
        {
            const std::size_t n = z.size() / 2;
            if (odd_slot == n)
                return true;
            const std::size_t i = 2 * odd_slot; // 0-based position of index 2*odd_slot+1
            for (std::size_t e = 0; e < n; ++e)
            {
                const std::size_t j = 2 * e + 1;
                if (used[e] || !(z[i] == z[j]))
                    continue;
                used[e] = 1;
                partner[odd_slot] = static_cast<int>(j);
                if (match_odd(z, odd_slot + 1, partner, used))
                    return true;
                used[e] = 0;
            }
            return false;
        }
    }

    /// Perfect matching of odd-indexed with even-indexed nodes through equal
    /// values. Throws no_good_pairing if none exists.
    inline GoodPairing good_pairing(const std::vector<RootOfUnity> &zetas)
    {
        if (zetas.size() % 2 != 0 || zetas.empty())
            throw std::invalid_argument("good_pairing: need an even, positive number of nodes");
        if (zetas.size() > 16)
            throw std::invalid_argument("good_pairing: at most 16 nodes supported");
        const std::size_t n = zetas.size() / 2;
        std::vector<int> partner(n, -1);
        std::vector<char> used(n, 0);
        if (!detail::match_odd(zetas, 0, partner, used))
            throw no_good_pairing("no good pairing: the nodes admit no odd/even perfect matching");
        GoodPairing g;
        for (std::size_t o = 0; o < n; ++o)
        {
            int i = static_cast<int>(2 * o) + 1, j = partner[o] + 1;
            g.pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
        std::sort(g.pairs.begin(), g.pairs.end());
        return g;
    }

    inline bool is_good_pairing(const std::vector<RootOfUnity> &zetas, const GoodPairing &g)
    {
        std::vector<char> seen(zetas.size(), 0);
        for (auto [i, j] : g.pairs)
        {
            if (i < 1 || j < 1 || i > static_cast<int>(zetas.size()) || j > static_cast<int>(zetas.size()))
                return false;
            if ((i + j) % 2 == 0 || seen[i - 1] || seen[j - 1] || !(zetas[i - 1] == zetas[j - 1]))
                return false;
            seen[i - 1] = seen[j - 1] = 1;
        }
        return g.pairs.size() * 2 == zetas.size();
    }

    /// zeta_{2j-1} = e(d (a_j + r_j)), zeta_{2j} = e(d a_j) over the pieces.
    inline std::vector<RootOfUnity> endpoint_nodes(const IntervalUnion &omega, const Rational &d)
    {
        std::vector<RootOfUnity> z;
        for (const auto &p : omega.pieces())
        {
            z.emplace_back(d * p.right());
            z.emplace_back(d * p.left);
        }
        return z;
    }

    /// With 0, d, ..., (2n-1)d in Z_Omega, checks kd in Z_Omega for 0 < |k| <= K.
    /// A false return contradicts the AP extension property.
    inline bool ap_extension_check(const IntervalUnion &omega, const Rational &d, std::int64_t window)
    {
        if (d == 0)
            throw precondition_failure("ap_extension_check: d must be non-zero");
        const auto n = static_cast<std::int64_t>(omega.size());
        for (std::int64_t k = 1; k < 2 * n; ++k)
            if (!in_zero_set(omega, d * k))
                throw precondition_failure("ap_extension_check: " + std::to_string(k) + "*d = " + to_string(d * k) +
                                           " is not in Z_Omega");
        for (std::int64_t k = 1; k <= window; ++k)
            if (!in_zero_set(omega, d * k) || !in_zero_set(omega, -d * k))
                return false;
        return true;
    }

    struct APExtensionReport
    {
        bool holds = true;
        std::optional<Rational> witness;
        std::string reason; // "missing" or "not-orthogonal" when it fails
    };

    /// With a, a+d, ..., a+(2n-1)d in the window, every point of a + dZ in the
    /// window should be in Lambda and orthogonal to all of it.
    inline APExtensionReport spectrum_ap_extension(const IntervalUnion &omega, const FiniteSpectrumWindow &lambda,
                                                   const Rational &a, const Rational &d)
    {
        if (d == 0)
            throw precondition_failure("spectrum_ap_extension: d must be non-zero");
        const Rational step = abs(d);
        const auto n = static_cast<std::int64_t>(omega.size());
        for (std::int64_t k = 0; k < 2 * n; ++k)
            if (!lambda.contains(a + d * k))
                throw precondition_failure("spectrum_ap_extension: a + " + std::to_string(k) + "d = " +
                                           to_string(a + d * k) + " is not in the window");
        const Rational &w = lambda.window();
        APExtensionReport report;
        const BigInt lo = floor((-w - a) / step);
        const BigInt hi = floor((w - a) / step);
        for (BigInt k = lo; k <= hi; ++k)
        {
            const Rational x = a + step * Rational(k);
            if (x < -w || x > w)
                continue;
            for (const auto &y : lambda.points())
                if (y != x && !in_zero_set(omega, x - y))
                {
                    report.holds = false;
                    report.witness = x;
                    report.reason = "not-orthogonal";
                    return report;
                }
            if (!lambda.contains(x))
            {
                report.holds = false;
                report.witness = x;
                report.reason = "missing";
                return report;
            }
        }
        return report;
    }

    /// Minimum positive gap of the difference set P - P.
    inline Rational separation(const std::vector<Rational> &points)
    {
        if (points.size() < 2)
            throw std::invalid_argument("separation: need at least 2 points");
        std::vector<Rational> gamma;
        gamma.reserve(points.size() * points.size());
        for (const auto &x : points)
            for (const auto &y : points)
                gamma.push_back(x - y);
        std::sort(gamma.begin(), gamma.end());
        gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
        Rational best = gamma.back() - gamma.front();
        for (std::size_t i = 1; i < gamma.size(); ++i)
            best = std::min(best, Rational(gamma[i] - gamma[i - 1]));
        return best;
    }

    struct ArithmeticProgression
    {
        Rational start;
        Rational difference;
        std::size_t length = 0;
        friend bool operator==(const ArithmeticProgression &, const ArithmeticProgression &) = default;
    };

    /// Maximal arithmetic progressions of length >= min_length. Points are
    /// indexed by their cell floor(x / (delta/2)), delta = separation, which
    /// holds at most one point; every hit is confirmed exactly.
    inline std::vector<ArithmeticProgression> find_aps(const std::vector<Rational> &input, std::size_t min_length)
    {
        std::vector<Rational> pts = input;
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<ArithmeticProgression> out;
        if (pts.size() < 2 || min_length > pts.size())
            return out;
        const Rational cell = separation(pts) / 2;
        std::map<BigInt, Rational> grid;
        for (const auto &x : pts)
            grid.emplace(floor(x / cell), x);
        auto present = [&](const Rational &x) {
            auto it = grid.find(floor(x / cell));
            return it != grid.end() && it->second == x;
        };
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
            {
                const Rational diff = pts[j] - pts[i];
                if (present(pts[i] - diff))
                    continue; // not the start of a maximal progression
                std::size_t len = 2;
                Rational next = pts[j] + diff;
                while (present(next))
                {
                    ++len;
                    next += diff;
                }
                if (len >= std::max<std::size_t>(min_length, 2))
                    out.push_back({pts[i], diff, len});
            }
        std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
            return std::tie(x.start, x.difference, x.length) < std::tie(y.start, y.difference, y.length);
        });
        return out;
    }

    // ---------------------------------------------------------------------
    // Three intervals: rank of the reduced Vandermonde system

    struct EqualIntervalData
    {
        BigInt l2, l3, k1, k2, k3;
    };

    struct RankReport
    {
        int rank = 0;
        int case_tag = 0; // 4 - rank
        GoodPairing pairing;
        // slot s holds the original 1-based node index placed at position s+1,
        // after relabelling so that zeta_{2j-1} = zeta_{2j}
        std::array<int, 6> order{};
        std::array<bool, 3> xi_pairs_equal{}; // xi1=xi2, xi3=xi4, xi5=xi6
        std::optional<std::array<bool, 3>> z_membership; // Z(1), Z(2), Z(3) in case 2
        std::optional<EqualIntervalData> decomposition;  // case 3
    };

    /// Rank classification from the nodes zeta and the phases xi (six each,
    /// odd positions right endpoints, even positions left endpoints).
    inline RankReport classify_rank(const std::array<RootOfUnity, 6> &zeta, const std::array<RootOfUnity, 6> &xi)
    {
        RankReport rep;
        rep.pairing = good_pairing(std::vector<RootOfUnity>(zeta.begin(), zeta.end()));

        // pair slot t: (odd index, its even partner)
        std::array<std::pair<int, int>, 3> slots{};
        for (auto [i, j] : rep.pairing.pairs)
        {
            const int odd = (i % 2 == 1) ? i : j;
            const int even = (i % 2 == 1) ? j : i;
            slots[(odd - 1) / 2] = {odd, even};
        }
        auto node = [&](int t) { return zeta[slots[t].first - 1]; };
        std::set<RootOfUnity> distinct{node(0), node(1), node(2)};
        rep.rank = static_cast<int>(distinct.size());
        rep.case_tag = 4 - rep.rank;

        if (rep.rank == 2)
        {
            // move the slot with the unshared node to the middle, so zeta1 = zeta5
            int lone = 0;
            for (int t = 0; t < 3; ++t)
            {
                int same = 0;
                for (int u = 0; u < 3; ++u)
                    if (u != t && node(u) == node(t))
                        ++same;
                if (same == 0)
                    lone = t;
            }
            std::array<std::pair<int, int>, 3> moved{};
            int k = 0;
            for (int t = 0; t < 3; ++t)
                if (t != lone)
                    moved[k == 0 ? 0 : 2] = slots[t], ++k;
            moved[1] = slots[lone];
            slots = moved;
        }

        for (int t = 0; t < 3; ++t)
        {
            rep.order[2 * t] = slots[t].first;
            rep.order[2 * t + 1] = slots[t].second;
        }
        auto x = [&](int pos) { return xi[rep.order[pos - 1] - 1]; };
        for (int t = 0; t < 3; ++t)
            rep.xi_pairs_equal[t] = x(2 * t + 1) == x(2 * t + 2);
        if (rep.rank == 2)
        {
            const bool x34 = x(3) == x(4);
            rep.z_membership = std::array<bool, 3>{x34 && x(1) == x(2) && x(5) == x(6),
                                                   x34 && x(1) == x(6) && x(2) == x(5),
                                                   x34 && x(1) == -x(5) && x(2) == -x(6)};
        }
        return rep;
    }

    /// Preconditions: Omega has three pieces, d, 2d, ..., 5d in Z_Omega,
    /// lambda not in dZ, and lambda + kd in Z_Omega for k = 0..5.
    inline RankReport rank_case(const IntervalUnion &omega, const Rational &d, const Rational &lambda)
    {
        if (omega.size() != 3)
            throw precondition_failure("rank_case: Omega must consist of three intervals");
        if (d == 0)
            throw precondition_failure("rank_case: d must be non-zero");
        for (int k = 1; k <= 5; ++k)
            if (!in_zero_set(omega, d * k))
                throw precondition_failure("rank_case: " + std::to_string(k) + "d is not in Z_Omega");
        if (is_integer(lambda / d))
            throw precondition_failure("rank_case: lambda lies in dZ");
        for (int k = 0; k <= 5; ++k)
            if (!in_zero_set(omega, lambda + d * k))
                throw precondition_failure("rank_case: lambda + " + std::to_string(k) + "d is not in Z_Omega");

        std::array<RootOfUnity, 6> zeta, xi;
        const auto &ps = omega.pieces();
        for (int j = 0; j < 3; ++j)
        {
            zeta[2 * j] = RootOfUnity(d * ps[j].right());
            zeta[2 * j + 1] = RootOfUnity(d * ps[j].left);
            xi[2 * j] = RootOfUnity(lambda * ps[j].right());
            xi[2 * j + 1] = RootOfUnity(lambda * ps[j].left);
        }
        RankReport rep = classify_rank(zeta, xi);
        if (rep.rank == 1)
        {
            const Rational a1 = ps[0].left;
            auto whole = [&](const Rational &x) {
                if (!is_integer(x))
                    throw std::logic_error("rank_case: equal-interval data not integral: " + to_string(x));
                return numerator(x);
            };
            rep.decomposition = EqualIntervalData{whole(d * (ps[1].left - a1)), whole(d * (ps[2].left - a1)),
                                                  whole(d * ps[0].length), whole(d * ps[1].length),
                                                  whole(d * ps[2].length)};
        }
        return rep;
    }
}
