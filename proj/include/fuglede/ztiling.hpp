#pragma once

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuglede
{
    /// Finite set of distinct integers, kept sorted.
    class IntegerSet
    {
    public:
        IntegerSet() = default;
        explicit IntegerSet(std::vector<BigInt> elements) : elements_(std::move(elements))
        {
            std::sort(elements_.begin(), elements_.end());
            if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
                throw std::invalid_argument("IntegerSet: elements must be distinct");
        }
        IntegerSet(std::initializer_list<long long> elements)
            : IntegerSet([&] {
                  std::vector<BigInt> v;
                  for (auto e : elements)
                      v.emplace_back(e);
                  return v;
              }())
        {
        }

        const std::vector<BigInt> &elements() const { return elements_; }
        std::size_t size() const { return elements_.size(); }
        bool empty() const { return elements_.empty(); }
        BigInt diameter() const { return empty() ? BigInt(0) : elements_.back() - elements_.front(); }

        friend bool operator==(const IntegerSet &, const IntegerSet &) = default;

    private:
        std::vector<BigInt> elements_;
    };

    struct NewmanReport
    {
        std::uint64_t p = 0;
        unsigned alpha = 0;
        std::set<unsigned> valuations; // S
        bool tiles = false;
    };

    /// (p, alpha) with k = p^alpha, alpha >= 1; nullopt if k is not a prime power.
    inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t k)
    {
        if (k < 2)
            return std::nullopt;
        std::uint64_t p = 0;
        for (std::uint64_t q = 2; q * q <= k; ++q)
            if (k % q == 0)
            {
                p = q;
                break;
            }
        if (p == 0)
            return std::pair{k, 1u};
        unsigned alpha = 0;
        while (k % p == 0)
        {
            k /= p;
            ++alpha;
        }
        if (k != 1)
            return std::nullopt;
        return std::pair{p, alpha};
    }

    /// Largest e with p^e | n, n != 0.
    inline unsigned p_adic_valuation(BigInt n, std::uint64_t p)
    {
        if (n == 0)
            throw std::invalid_argument("p_adic_valuation of 0");
        unsigned e = 0;
        while (n % p == 0)
        {
            n /= p;
            ++e;
        }
        return e;
    }

    /// Newman's criterion: a set of p^alpha integers tiles Z iff the p-adic
    /// valuations of its pairwise differences take at most alpha values.
    inline NewmanReport newman_tiles(const IntegerSet &a)
    {
        auto pp = prime_power(a.size());
        if (!pp)
            throw std::invalid_argument("newman_tiles: |A| = " + std::to_string(a.size()) + " is not a prime power");
        NewmanReport r;
        r.p = pp->first;
        r.alpha = pp->second;
        const auto &el = a.elements();
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = i + 1; j < el.size(); ++j)
                r.valuations.insert(p_adic_valuation(el[j] - el[i], r.p));
        r.tiles = r.valuations.size() <= r.alpha;
        return r;
    }

    struct TilingWitness
    {
        std::uint64_t period = 0;
        std::vector<std::uint64_t> translates; // T subset of Z_m, sorted
    };

    /// Default brute-force period bound: min(2^diam(A), cap).
    inline std::uint64_t tile_period_bound(const IntegerSet &a, std::uint64_t cap = 4096)
    {
        const BigInt diam = a.diameter();
        if (diam >= 63)
            return cap;
        return std::min<std::uint64_t>(std::uint64_t{1} << diam.convert_to<unsigned>(), cap);
    }

    namespace detail
    {
        // Exact cover of Z_m by translates of A, always covering the smallest
        // uncovered residue first and trying translates in increasing order.
        class CyclicExactCover
        {
        public:
            CyclicExactCover(std::uint64_t m, std::vector<std::uint64_t> residues)
                : m_(m), residues_(std::move(residues)), covered_(m, 0)
            {
            }

            std::optional<std::vector<std::uint64_t>> solve()
            {
                if (search(0))
                {
                    auto t = chosen_;
                    std::sort(t.begin(), t.end());
                    return t;
                }
                return std::nullopt;
            }

        private:
            bool fits(std::uint64_t t) const
            {
                for (auto a : residues_)
                    if (covered_[(t + a) % m_])
                        return false;
                return true;
            }
            void mark(std::uint64_t t, char v)
            {
                for (auto a : residues_)
                    covered_[(t + a) % m_] = v;
            }

            bool search(std::uint64_t from)
            {
                while (from < m_ && covered_[from])
                    ++from;
                if (from == m_)
                    return true;
                std::vector<std::uint64_t> candidates;
                candidates.reserve(residues_.size());
                for (auto a : residues_)
                    candidates.push_back((from + m_ - a) % m_);
                std::sort(candidates.begin(), candidates.end());
                for (auto t : candidates)
                {
                    if (!fits(t))
                        continue;
                    mark(t, 1);
                    chosen_.push_back(t);
                    if (search(from + 1))
                        return true;
                    chosen_.pop_back();
                    mark(t, 0);
                }
                return false;
            }

            std::uint64_t m_;
            std::vector<std::uint64_t> residues_;
            std::vector<char> covered_;
            std::vector<std::uint64_t> chosen_;
        };
    }

    /// Smallest m <= max_period with k | m admitting T with A (+) T = Z_m,
    /// together with the first T found. Absence only means none up to the bound.
    inline std::optional<TilingWitness> brute_force_tile_period(const IntegerSet &a, std::uint64_t max_period)
    {
        const std::uint64_t k = a.size();
        if (k == 0)
            return std::nullopt;
        for (std::uint64_t m = k; m <= max_period; m += k)
        {
            std::vector<std::uint64_t> residues;
            for (const auto &x : a.elements())
                residues.push_back(mod_floor(x, BigInt(m)).convert_to<std::uint64_t>());
            auto sorted = residues;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;
            if (auto t = detail::CyclicExactCover(m, residues).solve())
                return TilingWitness{m, std::move(*t)};
        }
        return std::nullopt;
    }

    // ---------------------------------------------------------------------
    // Tiling patterns of three-interval tiles

    struct Placement
    {
        Rational offset;
        char label; // 'A', 'B' or 'C'
        friend bool operator==(const Placement &, const Placement &) = default;
    };

    /// One period [0, window) of a periodic tiling by a three-piece tile,
    /// recorded as the left-to-right sequence of pieces. b_shift and c_shift
    /// are the offsets of B and C relative to A inside one tile (mod window).
    struct TilePattern
    {
        Rational window;
        std::vector<Placement> placements;
        Rational b_shift;
        Rational c_shift;

        std::string labels() const
        {
            std::string s;
            for (const auto &p : placements)
                s.push_back(p.label);
            return s;
        }
    };

    using PieceLengths = std::array<Rational, 3>;

    inline const Rational &piece_length(const PieceLengths &lengths, char label)
    {
        switch (label)
        {
        case 'A':
            return lengths[0];
        case 'B':
            return lengths[1];
        case 'C':
            return lengths[2];
        default:
            throw std::invalid_argument(std::string("unknown piece label '") + label + "'");
        }
    }

    /// Placements start at 0, are contiguous, and end exactly at the window.
    inline bool partitions_window(const TilePattern &pattern, const PieceLengths &lengths)
    {
        Rational cursor = 0;
        for (const auto &p : pattern.placements)
        {
            if (p.offset != cursor)
                return false;
            cursor += piece_length(lengths, p.label);
        }
        return cursor == pattern.window;
    }

    /// Cyclic scan: the pattern is one period of a periodic tiling.
    inline bool motif_scan(const TilePattern &pattern, const std::string &motif)
    {
        const std::string s = pattern.labels();
        if (motif.empty())
            return true;
        if (s.empty())
            return false;
        std::string doubled = s;
        while (doubled.size() < s.size() + motif.size() - 1)
            doubled += s;
        const std::size_t limit = s.size();
        for (std::size_t i = 0; i < limit; ++i)
            if (doubled.compare(i, motif.size(), motif) == 0)
                return true;
        return false;
    }

    /// Smallest positive translation mapping the periodic pattern onto itself.
    inline Rational pattern_period(const TilePattern &pattern, const PieceLengths &lengths)
    {
        const std::string s = pattern.labels();
        const std::size_t n = s.size();
        Rational shift = 0;
        for (std::size_t j = 1; j <= n; ++j)
        {
            shift += piece_length(lengths, s[j - 1]);
            if (j == n || (n % j == 0 && std::equal(s.begin() + j, s.end(), s.begin())))
                return shift;
        }
        return pattern.window;
    }

    namespace detail
    {
        inline std::string minimal_rotation(const std::string &s)
        {
            std::string best = s;
            for (std::size_t i = 1; i < s.size(); ++i)
            {
                std::string r = s.substr(i) + s.substr(0, i);
                if (r < best)
                    best = r;
            }
            return best;
        }

        // Is `target` equal (as a set mod period) to `source + shift` for some shift?
        // Returns the shift.
        inline std::optional<std::int64_t> matching_shift(const std::vector<std::int64_t> &source,
                                                          const std::vector<std::int64_t> &target, std::int64_t period)
        {
            std::vector<std::int64_t> moved(source.size());
            for (auto s0 : source)
            {
                const std::int64_t shift = ((target.front() - s0) % period + period) % period;
                for (std::size_t i = 0; i < source.size(); ++i)
                    moved[i] = (source[i] + shift) % period;
                std::sort(moved.begin(), moved.end());
                if (moved == target)
                    return shift;
            }
            return std::nullopt;
        }

        class PatternEnumerator
        {
        public:
            PatternEnumerator(const PieceLengths &lengths, std::int64_t copies)
                : copies_(copies)
            {
                BigInt den = 1;
                for (const auto &l : lengths)
                    den = lcm(den, denominator(l));
                scale_ = Rational(den);
                for (std::size_t i = 0; i < 3; ++i)
                    units_[i] = to_int64(numerator(lengths[i] * scale_));
                period_ = copies * (units_[0] + units_[1] + units_[2]);
            }

            std::vector<TilePattern> run()
            {
                std::array<std::int64_t, 3> left{copies_, copies_, copies_};
                dfs(left, 0);
                std::sort(found_.begin(), found_.end(),
                          [](const TilePattern &a, const TilePattern &b) { return a.labels() < b.labels(); });
                return std::move(found_);
            }

        private:
            void dfs(std::array<std::int64_t, 3> &left, std::int64_t cursor)
            {
                if (left[0] == 0 && left[1] == 0 && left[2] == 0)
                {
                    accept();
                    return;
                }
                for (int piece = 0; piece < 3; ++piece)
                {
                    if (left[piece] == 0)
                        continue;
                    // the canonical rotation starts with the first label used
                    if (seq_.empty() && piece != 0)
                        continue;
                    --left[piece];
                    seq_.push_back(static_cast<char>('A' + piece));
                    pos_[piece].push_back(cursor);
                    dfs(left, cursor + units_[piece]);
                    pos_[piece].pop_back();
                    seq_.pop_back();
                    ++left[piece];
                }
            }

            void accept()
            {
                auto b = matching_shift(pos_[0], pos_[1], period_);
                if (!b)
                    return;
                auto c = matching_shift(pos_[0], pos_[2], period_);
                if (!c)
                    return;
                if (minimal_rotation(seq_) != seq_)
                    return;
                TilePattern p;
                p.window = Rational(period_) / scale_;
                std::int64_t cursor = 0;
                for (char l : seq_)
                {
                    p.placements.push_back({Rational(cursor) / scale_, l});
                    cursor += units_[l - 'A'];
                }
                p.b_shift = Rational(*b) / scale_;
                p.c_shift = Rational(*c) / scale_;
                found_.push_back(std::move(p));
            }

            std::int64_t copies_;
            Rational scale_;
            std::array<std::int64_t, 3> units_{};
            std::int64_t period_ = 0;
            std::string seq_;
            std::array<std::vector<std::int64_t>, 3> pos_;
            std::vector<TilePattern> found_;
        };
    }

    /// All periodic tilings with period `window` by a tile made of three
    /// pieces A, B, C of the given lengths (summing to 1), up to translation.
    ///
    /// A piece sequence filling [0, window) is realisable iff the B-positions
    /// and the C-positions are each a single translate (mod window) of the
    /// A-positions; the two shifts then define the tile. Every complete
    /// window holds exactly `window` pieces of each label.
    inline std::vector<TilePattern> pattern_search(const PieceLengths &lengths, const Rational &window)
    {
        for (const auto &l : lengths)
            if (l <= 0)
                throw std::invalid_argument("pattern_search: piece lengths must be positive");
        if (lengths[0] + lengths[1] + lengths[2] != 1)
            throw std::invalid_argument("pattern_search: piece lengths must sum to 1");
        if (!is_integer(window) || window <= 0)
            throw std::invalid_argument("pattern_search: window must be a positive integer");
        return detail::PatternEnumerator(lengths, to_int64(numerator(window))).run();
    }
}
