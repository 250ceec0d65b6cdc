#pragma once

#include "cyclotomic.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fuglede
{
    /// Half-open interval [left, left + length).
    struct Piece
    {
        Rational left;
        Rational length;

        Rational right() const { return left + length; }
        friend bool operator==(const Piece &, const Piece &) = default;
    };

    /// A finite union of disjoint half-open intervals with rational endpoints.
    /// Pieces are sorted by left endpoint; touching pieces are allowed and
    /// kept separate.
    class IntervalUnion
    {
    public:
        IntervalUnion() = default;

        explicit IntervalUnion(std::vector<Piece> pieces) : pieces_(std::move(pieces))
        {
            for (const auto &p : pieces_)
                if (p.length <= 0)
                    throw std::invalid_argument("interval length must be positive");
            std::sort(pieces_.begin(), pieces_.end(),
                      [](const Piece &a, const Piece &b) { return a.left < b.left; });
            for (std::size_t i = 1; i < pieces_.size(); ++i)
                if (pieces_[i - 1].right() > pieces_[i].left)
                    throw std::invalid_argument("intervals overlap: [" + to_string(pieces_[i - 1].left) + ", " +
                                                to_string(pieces_[i - 1].right()) + ") and [" +
                                                to_string(pieces_[i].left) + ", " + to_string(pieces_[i].right()) + ")");
        }

        IntervalUnion(std::initializer_list<Piece> pieces) : IntervalUnion(std::vector<Piece>(pieces)) {}

        /// Union of the unit cells [a, a+1), a in cells.
        static IntervalUnion unit_cells(const std::vector<BigInt> &cells)
        {
            std::vector<Piece> ps;
            for (const auto &a : cells)
                ps.push_back({Rational(a), Rational(1)});
            return IntervalUnion(std::move(ps));
        }

        const std::vector<Piece> &pieces() const { return pieces_; }
        std::size_t size() const { return pieces_.size(); }

        Rational measure() const
        {
            Rational m = 0;
            for (const auto &p : pieces_)
                m += p.length;
            return m;
        }

        IntervalUnion scaled(const Rational &s) const
        {
            if (s <= 0)
                throw std::invalid_argument("scale factor must be positive");
            std::vector<Piece> ps;
            for (const auto &p : pieces_)
                ps.push_back({p.left * s, p.length * s});
            return IntervalUnion(std::move(ps));
        }

        IntervalUnion translated(const Rational &t) const
        {
            std::vector<Piece> ps;
            for (const auto &p : pieces_)
                ps.push_back({p.left + t, p.length});
            return IntervalUnion(std::move(ps));
        }

        /// Least common denominator of all endpoints.
        BigInt common_denominator() const
        {
            BigInt q = 1;
            for (const auto &p : pieces_)
                q = lcm(lcm(q, denominator(p.left)), denominator(p.right()));
            return q;
        }

        friend bool operator==(const IntervalUnion &, const IntervalUnion &) = default;

    private:
        std::vector<Piece> pieces_;
    };

    /// sum_j (e^{2 pi i lambda (a_j + r_j)} - e^{2 pi i lambda a_j}), which is
    /// 2 pi i lambda times the conjugate Fourier transform of the indicator.
    inline CycloSum fourier_numerator(const IntervalUnion &omega, const Rational &lambda)
    {
        CycloSum s;
        for (const auto &p : omega.pieces())
        {
            s.add(1, RootOfUnity(lambda * p.right()));
            s.add(-1, RootOfUnity(lambda * p.left));
        }
        return s;
    }

    /// Membership in Z_Omega. 0 is a member by convention.
    inline bool in_zero_set(const IntervalUnion &omega, const Rational &lambda)
    {
        if (lambda == 0)
            return true;
        return cyclo_is_zero(fourier_numerator(omega, lambda));
    }

    /// For a union of integer-length intervals on integer endpoints, the
    /// unit-cell offsets A with 2 pi i lambda chi^(lambda) =
    /// (e^{2 pi i lambda} - 1) * sum_{a in A} e^{2 pi i lambda a}.
    /// Longer pieces are split into unit cells. Result is sorted.
    inline std::vector<BigInt> unit_interval_factor(const IntervalUnion &omega)
    {
        std::vector<BigInt> cells;
        for (const auto &p : omega.pieces())
        {
            if (!is_integer(p.left) || !is_integer(p.length))
                throw std::invalid_argument("unit_interval_factor: piece [" + to_string(p.left) + ", " +
                                            to_string(p.right()) + ") is not a union of unit cells on integers");
            const BigInt a = numerator(p.left);
            const BigInt len = numerator(p.length);
            for (BigInt i = 0; i < len; ++i)
                cells.push_back(a + i);
        }
        std::sort(cells.begin(), cells.end());
        return cells;
    }

    /// Step profile of F(x) = sum_k chi_Omega(x + k/d) on [0, 1/d), one value
    /// per grid cell of width 1/lcm(q, d).
    struct LevelProfile
    {
        std::uint64_t d = 1;
        Rational cell_width;
        std::vector<std::int64_t> levels;

        bool is_constant(std::int64_t value) const
        {
            return std::all_of(levels.begin(), levels.end(), [&](auto v) { return v == value; });
        }
    };

    inline LevelProfile level_function(const IntervalUnion &omega, std::uint64_t d, std::uint64_t max_cells = 1u << 24)
    {
        if (d == 0)
            throw std::invalid_argument("level_function: d must be positive");
        const BigInt grid = lcm(omega.common_denominator(), BigInt(d));
        const BigInt cells_per_period = grid / d;
        if (cells_per_period > max_cells)
            throw std::invalid_argument("level_function: grid too fine (" + cells_per_period.str() + " cells)");
        const auto period = cells_per_period.convert_to<std::uint64_t>();

        LevelProfile out;
        out.d = d;
        out.cell_width = make_rational(1, grid);
        out.levels.assign(period, 0);
        for (const auto &p : omega.pieces())
        {
            // piece covers grid cells [s, e)
            const BigInt s = numerator(p.left * grid);
            const BigInt e = numerator(p.right() * grid);
            const BigInt len = e - s;
            const auto full = (len / period).convert_to<std::int64_t>();
            const auto rem = (len % period).convert_to<std::uint64_t>();
            const auto start = mod_floor(s, BigInt(period)).convert_to<std::uint64_t>();
            if (full != 0)
                for (auto &v : out.levels)
                    v += full;
            for (std::uint64_t i = 0; i < rem; ++i)
                out.levels[(start + i) % period] += 1;
        }
        return out;
    }

    /// Does Omega (of measure 1) d-tile, i.e. is F identically d?
    inline bool d_tiles(const IntervalUnion &omega, std::uint64_t d)
    {
        if (omega.measure() != 1)
            throw std::invalid_argument("d_tiles: Omega must have measure 1, got " + to_string(omega.measure()));
        return level_function(omega, d).is_constant(static_cast<std::int64_t>(d));
    }
}
