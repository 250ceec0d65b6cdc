#pragma once

#include "rational.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fuglede
{
    /// Dense integer polynomial, coefficient i multiplies x^i.
    using IntPoly = std::vector<BigInt>;

    namespace detail
    {
        inline void trim(IntPoly &p)
        {
            while (!p.empty() && p.back() == 0)
                p.pop_back();
        }

        // Remainder of p modulo a monic divisor; p is reduced in place.
        inline void reduce_monic(IntPoly &p, const IntPoly &monic)
        {
            const std::size_t dm = monic.size() - 1;
            if (dm == 0)
            {
                p.clear();
                return;
            }
            for (std::size_t i = p.size(); i-- > dm;)
            {
                if (p[i] == 0)
                    continue;
                const BigInt c = p[i];
                for (std::size_t j = 0; j <= dm; ++j)
                    if (monic[j] != 0)
                        p[i - dm + j] -= c * monic[j];
            }
            if (p.size() > dm)
                p.resize(dm);
            trim(p);
        }

        // Exact quotient p / monic; throws if the division leaves a remainder.
        inline IntPoly divide_monic_exact(IntPoly p, const IntPoly &monic)
        {
            const std::size_t dm = monic.size() - 1;
            if (p.size() <= dm)
                throw std::logic_error("divide_monic_exact: dividend degree too small");
            IntPoly q(p.size() - dm);
            for (std::size_t i = p.size(); i-- > dm;)
            {
                const BigInt c = p[i];
                q[i - dm] = c;
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j <= dm; ++j)
                    if (monic[j] != 0)
                        p[i - dm + j] -= c * monic[j];
            }
            for (std::size_t i = 0; i < dm; ++i)
                if (p[i] != 0)
                    throw std::logic_error("divide_monic_exact: nonzero remainder");
            return q;
        }

        inline std::vector<std::uint64_t> divisors(std::uint64_t n)
        {
            std::vector<std::uint64_t> small, large;
            for (std::uint64_t d = 1; d * d <= n; ++d)
                if (n % d == 0)
                {
                    small.push_back(d);
                    if (d * d != n)
                        large.push_back(n / d);
                }
            small.insert(small.end(), large.rbegin(), large.rend());
            return small;
        }

        inline std::uint64_t radical(std::uint64_t n)
        {
            std::uint64_t r = 1;
            for (std::uint64_t p = 2; p * p <= n; ++p)
                if (n % p == 0)
                {
                    r *= p;
                    while (n % p == 0)
                        n /= p;
                }
            return n > 1 ? r * n : r;
        }
    }

    /// The n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d
    /// for every proper divisor d of n. Results are memoised process-wide.
    inline IntPoly cyclotomic_poly(std::uint64_t n)
    {
        if (n == 0)
            throw std::invalid_argument("cyclotomic_poly: n must be positive");
        static std::mutex mutex;
        static std::map<std::uint64_t, IntPoly> cache;
        {
            std::lock_guard lock(mutex);
            if (auto it = cache.find(n); it != cache.end())
                return it->second;
        }
        IntPoly p(n + 1);
        p[0] = -1;
        p[n] = 1;
        for (auto d : detail::divisors(n))
            if (d != n)
                p = detail::divide_monic_exact(std::move(p), cyclotomic_poly(d));
        std::lock_guard lock(mutex);
        return cache.emplace(n, std::move(p)).first->second;
    }

    /// e^{2 pi i * exponent}, exponent kept reduced into [0, 1).
    class RootOfUnity
    {
    public:
        RootOfUnity() = default;
        explicit RootOfUnity(const Rational &exponent) : exponent_(frac(exponent)) {}
        RootOfUnity(const BigInt &p, const BigInt &q) : RootOfUnity(make_rational(p, q)) {}

        /// e^{2 pi i / n}
        static RootOfUnity primitive(std::uint64_t n) { return RootOfUnity(BigInt(1), BigInt(n)); }
        static RootOfUnity minus_one() { return RootOfUnity(BigInt(1), BigInt(2)); }

        const Rational &exponent() const { return exponent_; }
        BigInt order() const { return denominator(exponent_); }
        bool is_one() const { return exponent_ == 0; }

        RootOfUnity operator*(const RootOfUnity &o) const { return RootOfUnity(exponent_ + o.exponent_); }
        RootOfUnity operator/(const RootOfUnity &o) const { return RootOfUnity(exponent_ - o.exponent_); }
        RootOfUnity operator-() const { return RootOfUnity(exponent_ + Rational(1, 2)); }
        RootOfUnity conj() const { return RootOfUnity(-exponent_); }
        RootOfUnity pow(const BigInt &k) const { return RootOfUnity(exponent_ * k); }

        std::complex<double> to_complex() const
        {
            const long double angle = 2.0L * std::numbers::pi_v<long double> * exponent_.convert_to<long double>();
            return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
        }

        friend bool operator==(const RootOfUnity &, const RootOfUnity &) = default;
        friend bool operator<(const RootOfUnity &a, const RootOfUnity &b) { return a.exponent_ < b.exponent_; }

    private:
        Rational exponent_{0};
    };

    /// Finite sum of rational multiples of roots of unity. Equal roots are
    /// merged and zero coefficients dropped on insertion.
    class CycloSum
    {
    public:
        using Terms = std::map<RootOfUnity, Rational>;

        CycloSum() = default;
        CycloSum(std::initializer_list<std::pair<Rational, RootOfUnity>> terms)
        {
            for (const auto &[c, r] : terms)
                add(c, r);
        }

        static CycloSum root(const RootOfUnity &r) { return CycloSum{{Rational(1), r}}; }

        CycloSum &add(const Rational &coefficient, const RootOfUnity &root)
        {
            if (coefficient == 0)
                return *this;
            auto [it, inserted] = terms_.try_emplace(root, coefficient);
            if (!inserted)
            {
                it->second += coefficient;
                if (it->second == 0)
                    terms_.erase(it);
            }
            return *this;
        }

        const Terms &terms() const { return terms_; }
        bool empty() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }

        /// Least common multiple of the orders of the roots present.
        BigInt order() const
        {
            BigInt n = 1;
            for (const auto &[r, c] : terms_)
                n = lcm(n, r.order());
            return n;
        }

        CycloSum &operator+=(const CycloSum &o)
        {
            for (const auto &[r, c] : o.terms_)
                add(c, r);
            return *this;
        }
        CycloSum &operator-=(const CycloSum &o)
        {
            for (const auto &[r, c] : o.terms_)
                add(-c, r);
            return *this;
        }
        friend CycloSum operator+(CycloSum a, const CycloSum &b) { return a += b; }
        friend CycloSum operator-(CycloSum a, const CycloSum &b) { return a -= b; }
        friend CycloSum operator*(const CycloSum &a, const CycloSum &b)
        {
            CycloSum out;
            for (const auto &[ra, ca] : a.terms_)
                for (const auto &[rb, cb] : b.terms_)
                    out.add(ca * cb, ra * rb);
            return out;
        }

        CycloSum scaled(const Rational &k) const
        {
            CycloSum out;
            for (const auto &[r, c] : terms_)
                out.add(c * k, r);
            return out;
        }
        CycloSum rotated(const RootOfUnity &by) const
        {
            CycloSum out;
            for (const auto &[r, c] : terms_)
                out.add(c, r * by);
            return out;
        }
        CycloSum conj() const
        {
            CycloSum out;
            for (const auto &[r, c] : terms_)
                out.add(c, r.conj());
            return out;
        }

        friend bool operator==(const CycloSum &, const CycloSum &) = default;

    private:
        Terms terms_;
    };

    namespace detail
    {
        /// Radical reduction: with N the common order, the sum is P(zeta_N) for
        /// P(x) = sum c_i x^{e_i N}, and it vanishes iff Phi_N divides P. Writing
        /// N = s * rad(N), P(x) = sum_t x^t Q_t(x^s) over t < s, and since
        /// 1, zeta_N, ..., zeta_N^{s-1} is a basis of Q(zeta_N) over Q(zeta_rad),
        /// Phi_N | P iff Phi_rad | Q_t for every t. The remainders are taken
        /// against Phi_rad, which keeps the dense polynomials at degree < rad(N).
        inline bool is_zero_by_radical(const CycloSum &s, const BigInt &big_n)
        {
            if (big_n > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
                throw std::overflow_error("cyclo_is_zero: common order too large");
            const auto n = big_n.convert_to<std::uint64_t>();
            if (n == 1)
            {
                // every term is the root 1 after merging, at most one term remains
                return false;
            }
            const std::uint64_t rad = radical(n);
            const std::uint64_t stride = n / rad;

            BigInt scale = 1;
            for (const auto &[r, c] : s.terms())
                scale = lcm(scale, denominator(c));

            std::map<std::uint64_t, IntPoly> parts;
            for (const auto &[r, c] : s.terms())
            {
                const auto k = (numerator(r.exponent()) * (big_n / denominator(r.exponent()))).convert_to<std::uint64_t>();
                auto &q = parts[k % stride];
                if (q.empty())
                    q.assign(rad, BigInt(0));
                q[k / stride] += numerator(c) * (scale / denominator(c));
            }
            const IntPoly &phi = cyclotomic_poly(rad);
            for (auto &[t, q] : parts)
            {
                trim(q);
                reduce_monic(q, phi);
                if (!q.empty())
                    return false;
            }
            return true;
        }

        inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
        {
            std::int64_t t = 0, new_t = 1;
            std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
            while (new_r != 0)
            {
                const std::int64_t q = r / new_r;
                t = std::exchange(new_t, t - q * new_t);
                r = std::exchange(new_r, r - q * new_r);
            }
            return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
        }

        /// Largest prime dividing any root order of the sum, with the prime
        /// power of it that divides the common order.
        inline std::pair<std::uint64_t, std::uint64_t> largest_prime_power(const CycloSum &s)
        {
            std::uint64_t best = 1, power = 1;
            for (const auto &[r, c] : s.terms())
            {
                const BigInt d = r.order();
                if (d > BigInt(std::numeric_limits<std::uint32_t>::max()))
                    throw std::overflow_error("cyclo_is_zero: root order too large");
                std::uint64_t n = d.convert_to<std::uint64_t>();
                for (std::uint64_t p = 2; p * p <= n; ++p)
                {
                    std::uint64_t pk = 1;
                    while (n % p == 0)
                        n /= p, pk *= p;
                    if (pk > 1 && (p > best || (p == best && pk > power)))
                        best = p, power = pk;
                }
                if (n > 1 && (n > best || (n == best && n > power)))
                    best = n, power = n;
            }
            return {best, power};
        }

        inline constexpr std::uint64_t radical_limit = 2048;

        inline bool is_zero_rec(const CycloSum &s)
        {
            if (s.empty())
                return true;
            if (s.size() == 1)
                return false;
            const BigInt n = s.order();
            if (n <= BigInt(std::numeric_limits<std::uint32_t>::max()) &&
                radical(n.convert_to<std::uint64_t>()) <= radical_limit)
                return is_zero_by_radical(s, n);

            // Split off the largest prime power P = p^a of N = P * m. Every root
            // is zeta_P^j zeta_m^w, and 1, zeta_P, ..., zeta_P^{phi(P)-1} is a
            // basis of Q(zeta_N) over Q(zeta_m). Reducing j modulo Phi_P gives
            // one coefficient in Q(zeta_m) per basis element, and the sum
            // vanishes iff each of them does.
            const auto [p, pa] = largest_prime_power(s);
            const std::uint64_t q = pa / p;
            const std::uint64_t top = (p - 1) * q;
            const BigInt big_m = n / pa;
            const std::uint64_t m_inv = inverse_mod((big_m % pa).convert_to<std::uint64_t>(), pa);
            std::map<std::uint64_t, CycloSum> parts;
            for (const auto &[r, c] : s.terms())
            {
                const BigInt k = numerator(r.exponent()) * (n / denominator(r.exponent()));
                const std::uint64_t j = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(mod_floor(k, BigInt(pa)).convert_to<std::uint64_t>()) * m_inv) %
                    pa);
                const RootOfUnity rest(r.exponent() - make_rational(BigInt(j), BigInt(pa)));
                if (j < top)
                    parts[j].add(c, rest);
                else
                    for (std::uint64_t i = 0; i + 1 < p; ++i)
                        parts[i * q + (j - top)].add(-c, rest);
            }
            for (const auto &[j, part] : parts)
                if (!is_zero_rec(part))
                    return false;
            return true;
        }
    }

    /// Exact test for a sum of roots of unity being 0.
    ///
    /// Small common orders go straight to radical reduction. Larger ones are
    /// first split one prime power at a time, so the work depends on the
    /// primes present rather than on the size of the common order.
    inline bool cyclo_is_zero(const CycloSum &s) { return detail::is_zero_rec(s); }

    /// The radical reduction alone, without prime power splitting. Exposed as
    /// an independent path for cross-checks.
    inline bool cyclo_is_zero_by_radical(const CycloSum &s)
    {
        return s.empty() || detail::is_zero_by_radical(s, s.order());
    }

    /// Floating-point value of the sum; a cross-check oracle only.
    inline std::complex<double> cyclo_eval_float(const CycloSum &s)
    {
        std::complex<long double> acc{0.0L, 0.0L};
        for (const auto &[r, c] : s.terms())
        {
            const long double angle = 2.0L * std::numbers::pi_v<long double> * r.exponent().convert_to<long double>();
            const long double coef = c.convert_to<long double>();
            acc += std::complex<long double>(coef * std::cos(angle), coef * std::sin(angle));
        }
        return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }

    /// Fixed-order exact kernel for hot loops: every power x^k (k < n) is
    /// pre-reduced modulo Phi_n into machine integers, so a sum of n-th roots
    /// with small integer coefficients is zero iff its reduced vector is zero.
    class CyclotomicBasis
    {
    public:
        explicit CyclotomicBasis(std::uint32_t n) : n_(n)
        {
            if (n == 0)
                throw std::invalid_argument("CyclotomicBasis: order must be positive");
            const IntPoly phi = cyclotomic_poly(n);
            dim_ = phi.size() - 1;
            table_.assign(static_cast<std::size_t>(n) * dim_, 0);
            const BigInt coefficient_limit = BigInt(1) << 40;
            IntPoly cur{BigInt(1)};
            for (std::uint32_t k = 0; k < n; ++k)
            {
                IntPoly r = cur;
                detail::reduce_monic(r, phi);
                for (std::size_t j = 0; j < r.size(); ++j)
                {
                    if (r[j] > coefficient_limit || r[j] < -coefficient_limit)
                        throw std::overflow_error("CyclotomicBasis: reduced coefficient too large");
                    table_[k * dim_ + j] = r[j].convert_to<std::int64_t>();
                }
                cur.insert(cur.begin(), BigInt(0));
            }
        }

        std::uint32_t order() const { return n_; }
        std::size_t dimension() const { return dim_; }

        /// Coordinates of zeta_n^k.
        std::span<const std::int64_t> power(std::uint32_t k) const
        {
            return {table_.data() + static_cast<std::size_t>(k % n_) * dim_, dim_};
        }

        void accumulate(std::span<std::int64_t> acc, std::uint32_t k, std::int64_t coefficient = 1) const
        {
            auto row = power(k);
            for (std::size_t j = 0; j < dim_; ++j)
                acc[j] += coefficient * row[j];
        }

        /// Is sum_i zeta_n^{exponents[i]} zero?
        bool is_zero_sum(std::span<const std::uint32_t> exponents) const
        {
            std::int64_t buf[64];
            std::vector<std::int64_t> heap;
            std::span<std::int64_t> acc;
            if (dim_ <= 64)
                acc = std::span<std::int64_t>(buf, dim_);
            else
            {
                heap.assign(dim_, 0);
                acc = heap;
            }
            std::fill(acc.begin(), acc.end(), 0);
            for (auto k : exponents)
                accumulate(acc, k);
            for (auto v : acc)
                if (v != 0)
                    return false;
            return true;
        }

    private:
        std::uint32_t n_;
        std::size_t dim_ = 0;
        std::vector<std::int64_t> table_;
    };
}
