#pragma once

// JSON forms used by the command-line front end. Rationals are written as
// ["num", "den"] pairs of decimal strings; on input "p/q" strings and plain
// integers are accepted as well.

#include "intervals.hpp"
#include "rational.hpp"
#include "spectra.hpp"
#include "vansum.hpp"
#include "ztiling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fuglede::json_io
{
    using json = nlohmann::json;

    inline json from_rational(const Rational &x)
    {
        return json::array({numerator(x).str(), denominator(x).str()});
    }

    inline BigInt to_bigint(const json &j)
    {
        if (j.is_string())
            return parse_bigint(j.get<std::string>());
        if (j.is_number_integer())
            return BigInt(j.get<long long>());
        throw std::invalid_argument("expected an integer, got " + j.dump());
    }

    inline Rational to_rational(const json &j)
    {
        if (j.is_array())
        {
            if (j.size() != 2)
                throw std::invalid_argument("rational must be [num, den], got " + j.dump());
            return make_rational(to_bigint(j[0]), to_bigint(j[1]));
        }
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
        throw std::invalid_argument("expected a rational, got " + j.dump());
    }

    inline json from_rationals(const std::vector<Rational> &xs)
    {
        json out = json::array();
        for (const auto &x : xs)
            out.push_back(from_rational(x));
        return out;
    }

    inline std::vector<Rational> to_rationals(const json &j)
    {
        if (j.is_string())
            return parse_rational_list(j.get<std::string>());
        std::vector<Rational> out;
        for (const auto &x : j)
            out.push_back(to_rational(x));
        return out;
    }

    inline json from_interval_union(const IntervalUnion &omega)
    {
        json pieces = json::array();
        for (const auto &p : omega.pieces())
            pieces.push_back(json::array({from_rational(p.left), from_rational(p.length)}));
        return {{"pieces", pieces}};
    }

    inline IntervalUnion to_interval_union(const json &j)
    {
        const json &pieces = j.contains("pieces") ? j.at("pieces") : j;
        std::vector<Piece> ps;
        for (const auto &p : pieces)
        {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("interval piece must be [left, length], got " + p.dump());
            ps.push_back({to_rational(p[0]), to_rational(p[1])});
        }
        return IntervalUnion(std::move(ps));
    }

    inline json from_integer_set(const IntegerSet &a)
    {
        json el = json::array();
        for (const auto &x : a.elements())
            el.push_back(x.str());
        return {{"elements", el}};
    }

    inline IntegerSet to_integer_set(const json &j)
    {
        const json &el = j.is_object() ? j.at("elements") : j;
        std::vector<BigInt> xs;
        for (const auto &x : el)
            xs.push_back(to_bigint(x));
        return IntegerSet(std::move(xs));
    }

    inline json from_periodic_set(const PeriodicSet &s)
    {
        return {{"period", from_rational(s.period())}, {"cosets", from_rationals(s.cosets())}};
    }

    inline PeriodicSet to_periodic_set(const json &j)
    {
        return PeriodicSet(to_rational(j.at("period")), to_rationals(j.at("cosets")));
    }

    inline json from_newman(const NewmanReport &r)
    {
        return {{"p", r.p}, {"alpha", r.alpha}, {"S", r.valuations}, {"tiles", r.tiles}};
    }

    inline json from_pattern(const TilePattern &p, const PieceLengths &lengths)
    {
        json placements = json::array();
        for (const auto &pl : p.placements)
            placements.push_back(json::array({from_rational(pl.offset), std::string(1, pl.label)}));
        return {{"labels", p.labels()},
                {"window", from_rational(p.window)},
                {"placements", placements},
                {"bShift", from_rational(p.b_shift)},
                {"cShift", from_rational(p.c_shift)},
                {"period", from_rational(pattern_period(p, lengths))}};
    }

    inline json from_signed_vector(const SignedRootVector &v)
    {
        json terms = json::array();
        for (const auto &t : v.terms())
            terms.push_back(json::array({t.sign, from_rational(t.root.exponent())}));
        return {{"terms", terms}};
    }

    /// {"terms": [[sign, exponent], ...]} with six entries.
    inline SignedRootVector to_signed_vector(const json &j)
    {
        const json &terms = j.is_object() ? j.at("terms") : j;
        if (terms.size() != 6)
            throw std::invalid_argument("a signed root vector needs exactly 6 terms");
        std::array<SignedRootVector::Term, 6> t;
        for (std::size_t i = 0; i < 6; ++i)
        {
            const auto &e = terms[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
                throw std::invalid_argument("term must be [sign, exponent], got " + e.dump());
            t[i] = {e[0].get<int>(), RootOfUnity(to_rational(e[1]))};
        }
        return SignedRootVector(t);
    }

    inline json from_type_tag(const TypeTag &tag)
    {
        json out = {{"type", to_string(tag.type)}};
        if (tag.type == VanishingType::type1)
            out["pairs"] = tag.pairs;
        if (tag.type == VanishingType::type2)
            out["triples"] = tag.triples;
        if (tag.type3)
            out["type3"] = {{"x", from_rational(tag.type3->x)}, {"roles", tag.type3->role}};
        return out;
    }

    inline json from_exponent_vector(const ExponentVector &e, std::uint32_t m)
    {
        json out = json::array();
        for (auto k : e)
            out.push_back(from_rational(make_rational(k, m)));
        return out;
    }

    inline json from_interaction(const InteractionReport &r)
    {
        json witnesses = json::array();
        for (const auto &v : r.witness)
            witnesses.push_back({{"alpha", from_exponent_vector(v.alpha, r.modulus)}, {"type", to_string(v.type)}});
        json diffs = json::array();
        for (auto t : r.witness_differences)
            diffs.push_back(to_string(t));
        return {{"maxFamily", r.max_family},
                {"witnesses", witnesses},
                {"witnessDifferenceTypes", diffs},
                {"type2Vertices", r.type2_vertices},
                {"type3Vertices", r.type3_vertices},
                {"edges", r.edges},
                {"maxType2Cosets", r.max_type2_cosets},
                {"maxType3Cosets", r.max_type3_cosets}};
    }

    inline json from_type_counts(const std::map<VanishingType, std::size_t> &counts)
    {
        json out = json::object();
        for (const auto &[t, n] : counts)
            out[to_string(t)] = n;
        return out;
    }

    inline json from_canonical_array(const CanonicalArrayReport &r)
    {
        return {{"configurations", r.configurations}, {"vanishing", r.vanishing}, {"byType", from_type_counts(r.by_type)}};
    }

    inline json from_weight6(const Weight6Report &r)
    {
        json out = {{"orderBound", r.order_bound},
                    {"modulus", r.modulus},
                    {"tuples", r.tuples},
                    {"byType", from_type_counts(r.by_type)},
                    {"exhaustive", r.exhaustive()}};
        out["counterexample"] = r.counterexample ? from_exponent_vector(*r.counterexample, r.modulus) : json(nullptr);
        return out;
    }

    inline json from_rank(const RankReport &r)
    {
        json pairs = json::array();
        for (auto [i, j] : r.pairing.pairs)
            pairs.push_back(json::array({i, j}));
        json out = {{"rank", r.rank},
                    {"case", r.case_tag},
                    {"goodPairs", pairs},
                    {"relabelledOrder", r.order},
                    {"xiPairsEqual", r.xi_pairs_equal}};
        if (r.z_membership)
            out["zMembership"] = {{"Z1", (*r.z_membership)[0]}, {"Z2", (*r.z_membership)[1]}, {"Z3", (*r.z_membership)[2]}};
        if (r.decomposition)
        {
            const auto &d = *r.decomposition;
            out["decomposition"] = {{"l2", d.l2.str()}, {"l3", d.l3.str()}, {"k1", d.k1.str()}, {"k2", d.k2.str()},
                                    {"k3", d.k3.str()}};
        }
        return out;
    }
}
