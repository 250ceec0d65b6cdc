#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuglede
{
    using BigInt = boost::multiprecision::cpp_int;

    // Always kept in lowest terms with a positive denominator by the backend.
    using Rational = boost::multiprecision::cpp_rational;

    inline Rational make_rational(const BigInt &num, const BigInt &den)
    {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        return Rational(num, den);
    }

    inline BigInt numerator(const Rational &x) { return boost::multiprecision::numerator(x); }
    inline BigInt denominator(const Rational &x) { return boost::multiprecision::denominator(x); }

    inline bool is_integer(const Rational &x) { return denominator(x) == 1; }

    // floor(a / b) for b > 0
    inline BigInt floor_div(const BigInt &a, const BigInt &b)
    {
        BigInt q = a / b;
        if (a % b != 0 && a < 0)
            q -= 1;
        return q;
    }

    inline BigInt mod_floor(const BigInt &a, const BigInt &b)
    {
        BigInt r = a % b;
        if (r < 0)
            r += b;
        return r;
    }

    inline BigInt floor(const Rational &x) { return floor_div(numerator(x), denominator(x)); }

    // x mod 1, in [0, 1)
    inline Rational frac(const Rational &x) { return x - Rational(floor(x)); }

    inline BigInt gcd(const BigInt &a, const BigInt &b) { return boost::multiprecision::gcd(a, b); }

    inline BigInt lcm(const BigInt &a, const BigInt &b)
    {
        if (a == 0 || b == 0)
            return 0;
        BigInt l = boost::multiprecision::lcm(a, b);
        return l < 0 ? BigInt(-l) : l;
    }

    inline Rational abs(const Rational &x) { return x < 0 ? Rational(-x) : x; }

    inline std::int64_t to_int64(const BigInt &x)
    {
        if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
        return x.convert_to<std::int64_t>();
    }

    inline double to_double(const Rational &x) { return x.convert_to<double>(); }

    inline std::string to_string(const BigInt &x) { return x.str(); }

    // "p" for integers, "p/q" otherwise
    inline std::string to_string(const Rational &x)
    {
        if (is_integer(x))
            return numerator(x).str();
        return numerator(x).str() + "/" + denominator(x).str();
    }

    inline BigInt parse_bigint(std::string_view text)
    {
        std::string s(text);
        while (!s.empty() && s.front() == ' ')
            s.erase(s.begin());
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        if (s[0] == '+')
            s.erase(s.begin());
        return BigInt(s);
    }

    // Accepts "p" or "p/q" with optional sign.
    inline Rational parse_rational(std::string_view text)
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_bigint(text));
        return make_rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
    }

    inline std::vector<Rational> parse_rational_list(std::string_view text)
    {
        std::vector<Rational> out;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            auto comma = text.find(',', pos);
            auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (!item.empty())
                out.push_back(parse_rational(item));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return out;
    }
}
