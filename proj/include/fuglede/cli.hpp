#pragma once

#include "errors.hpp"
#include "intervals.hpp"
#include "json_io.hpp"
#include "rational.hpp"
#include "spectra.hpp"
#include "vansum.hpp"
#include "ztiling.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace fuglede::cli
{
    using json = nlohmann::json;

    enum ExitStatus : int
    {
        verified = 0,
        refuted = 1,
        input_error = 2
    };

    struct RunConfig
    {
        std::string subcommand;
        std::string input; // file path, "-" for stdin, or inline JSON
        Rational window = 12;
        std::uint64_t order_bound = 60;
        std::uint64_t max_period = 4096;
        bool assumption_filter = true;
        std::string output = "-";
        std::map<std::string, std::string> options; // subcommand flags, by long name
    };

    struct RunResult
    {
        int status = verified;
        json report;
    };

    inline const std::vector<std::string> &subcommands()
    {
        static const std::vector<std::string> names{"newman", "tile-search", "pattern", "zeroset",
                                                    "ortho", "complete", "construct", "ap",
                                                    "rank", "vansum-classify", "vansum-enum", "verify-weight6"};
        return names;
    }

    struct input_error_exception : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    inline json load_input(const std::string &input)
    {
        if (input.empty())
            return json::object();
        std::string text;
        const auto first = input.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
            text = input;
        else if (input == "-")
            text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        else
        {
            std::ifstream in(input);
            if (!in)
                throw input_error_exception("cannot read input file '" + input + "'");
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        try
        {
            return json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw input_error_exception("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
        }
    }

    namespace detail
    {
        class Inputs
        {
        public:
            Inputs(const RunConfig &cfg, json doc) : cfg_(cfg), doc_(std::move(doc)) {}

            bool has(const std::string &flag, const char *key = nullptr) const
            {
                return cfg_.options.count(flag) || (key && doc_.is_object() && doc_.contains(key));
            }

            std::optional<std::string> flag(const std::string &name) const
            {
                auto it = cfg_.options.find(name);
                if (it == cfg_.options.end())
                    return std::nullopt;
                return it->second;
            }

            const json *field(const char *key) const
            {
                if (doc_.is_object() && doc_.contains(key))
                    return &doc_.at(key);
                return nullptr;
            }

            std::string require_flag(const std::string &name) const
            {
                if (auto f = flag(name))
                    return *f;
                throw input_error_exception("missing --" + name);
            }

            Rational rational(const std::string &name, const char *key) const
            {
                if (auto f = flag(name))
                    return parse_rational(*f);
                if (auto j = field(key))
                    return json_io::to_rational(*j);
                throw input_error_exception("missing --" + name);
            }

            std::int64_t integer(const std::string &name, const char *key) const
            {
                return to_int64(numerator(require_integer(rational(name, key), name)));
            }

            IntegerSet integer_set() const
            {
                if (auto f = flag("set"))
                {
                    std::vector<BigInt> xs;
                    for (const auto &x : parse_rational_list(*f))
                        xs.push_back(numerator(require_integer(x, "set")));
                    return IntegerSet(std::move(xs));
                }
                if (auto j = field("elements"))
                    return json_io::to_integer_set(*j);
                if (auto j = field("set"))
                    return json_io::to_integer_set(*j);
                throw input_error_exception("missing --set or an \"elements\" field");
            }

            /// --omega "left:length,left:length,..." or an "omega" / "pieces" field.
            IntervalUnion omega() const
            {
                if (auto f = flag("omega"))
                {
                    std::vector<Piece> ps;
                    std::stringstream ss(*f);
                    std::string item;
                    while (std::getline(ss, item, ','))
                    {
                        auto colon = item.find(':');
                        if (colon == std::string::npos)
                            throw input_error_exception("--omega entries must be left:length, got '" + item + "'");
                        ps.push_back({parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
                    }
                    return IntervalUnion(std::move(ps));
                }
                if (auto j = field("omega"))
                    return json_io::to_interval_union(*j);
                if (auto j = field("pieces"))
                    return json_io::to_interval_union(*j);
                throw input_error_exception("missing --omega or an \"omega\" field");
            }

            /// Candidate spectrum: --points list, or a "lambda" field holding a
            /// periodic set or {"points": [...]}.
            std::pair<std::optional<PeriodicSet>, FiniteSpectrumWindow> spectrum(const Rational &window) const
            {
                if (auto f = flag("points"))
                    return {std::nullopt, FiniteSpectrumWindow(parse_rational_list(*f), window)};
                if (auto f = flag("cosets"))
                {
                    PeriodicSet s(rational("period", "period"), parse_rational_list(*f));
                    return {s, FiniteSpectrumWindow::from_periodic(s, window)};
                }
                if (auto j = field("lambda"))
                {
                    if (j->contains("points"))
                        return {std::nullopt, FiniteSpectrumWindow(json_io::to_rationals(j->at("points")), window)};
                    PeriodicSet s = json_io::to_periodic_set(*j);
                    return {s, FiniteSpectrumWindow::from_periodic(s, window)};
                }
                throw input_error_exception("missing --points, --cosets/--period or a \"lambda\" field");
            }

            std::vector<Rational> rationals(const std::string &name, const char *key) const
            {
                if (auto f = flag(name))
                    return parse_rational_list(*f);
                if (auto j = field(key))
                    return json_io::to_rationals(*j);
                throw input_error_exception("missing --" + name);
            }

        private:
            static const Rational &require_integer(const Rational &x, const std::string &name)
            {
                if (!is_integer(x))
                    throw input_error_exception("--" + name + " expects integers, got " + to_string(x));
                return x;
            }

            const RunConfig &cfg_;
            json doc_;
        };

        inline json config_echo(const RunConfig &cfg)
        {
            json opts = json::object();
            for (const auto &[k, v] : cfg.options)
                opts[k] = v;
            return {{"subcommand", cfg.subcommand},
                    {"window", json_io::from_rational(cfg.window)},
                    {"orderBound", cfg.order_bound},
                    {"mMax", cfg.max_period},
                    {"assumptionFilter", cfg.assumption_filter},
                    {"options", opts}};
        }

        inline RunResult cmd_newman(const Inputs &in)
        {
            const auto a = in.integer_set();
            json r = json_io::from_newman(newman_tiles(a));
            r["set"] = json_io::from_integer_set(a);
            return {verified, r};
        }

        inline RunResult cmd_tile_search(const Inputs &in, const RunConfig &cfg)
        {
            const auto a = in.integer_set();
            const auto bound = tile_period_bound(a, cfg.max_period);
            auto found = brute_force_tile_period(a, bound);
            json r = {{"set", json_io::from_integer_set(a)}, {"bound", bound}, {"found", found.has_value()}};
            if (found)
            {
                r["period"] = found->period;
                r["T"] = found->translates;
            }
            return {found ? verified : refuted, r};
        }

        // (3W)! / (W!)^3 piece sequences are scanned by pattern_search
        inline double pattern_sequences(std::int64_t w)
        {
            return std::exp(std::lgamma(3.0 * w + 1) - 3 * std::lgamma(w + 1.0));
        }

        inline RunResult cmd_pattern(const Inputs &in, const RunConfig &cfg)
        {
            const auto ls = in.rationals("lengths", "lengths");
            if (ls.size() != 3)
                throw input_error_exception("--lengths needs three values");
            const PieceLengths lengths{ls[0], ls[1], ls[2]};
            // the shared default window is far beyond exhaustive reach here
            const Rational window = in.flag("window") ? cfg.window : Rational(4);
            if (!is_integer(window) || window <= 0)
                throw input_error_exception("pattern window must be a positive integer");
            const auto w = to_int64(numerator(window));
            const double limit = 5e7;
            if (pattern_sequences(w) > limit)
                throw precondition_failure("pattern window " + std::to_string(w) +
                                           " is too large for exhaustive search; use --window 6 or less");
            const auto patterns = pattern_search(lengths, window);
            json list = json::array();
            for (const auto &p : patterns)
                list.push_back(json_io::from_pattern(p, lengths));
            json r = {{"lengths", json_io::from_rationals(ls)}, {"window", json_io::from_rational(window)},
                      {"count", patterns.size()}, {"patterns", list}};
            if (auto motif = in.flag("motif"))
            {
                json hits = json::array();
                for (const auto &p : patterns)
                    if (motif_scan(p, *motif))
                        hits.push_back(p.labels());
                r["motif"] = *motif;
                r["motifOccurrences"] = hits;
            }
            return {verified, r};
        }

        inline RunResult cmd_zeroset(const Inputs &in)
        {
            const auto omega = in.omega();
            const auto lambdas = in.rationals("lambda", "lambda");
            json members = json::array();
            json numeric = json::array();
            bool all = true;
            json witness = nullptr;
            for (const auto &l : lambdas)
            {
                const bool z = in_zero_set(omega, l);
                members.push_back({{"lambda", json_io::from_rational(l)}, {"inZeroSet", z}});
                numeric.push_back(std::abs(cyclo_eval_float(fourier_numerator(omega, l))));
                if (!z && all)
                {
                    all = false;
                    witness = json_io::from_rational(l);
                }
            }
            json r = {{"omega", json_io::from_interval_union(omega)},
                      {"members", members},
                      {"allInZeroSet", all},
                      {"witness", witness},
                      {"numericCrossCheck", {{"absFourierNumerator", numeric}}}};
            return {all ? verified : refuted, r};
        }

        inline RunResult cmd_ortho(const Inputs &in, const RunConfig &cfg)
        {
            const auto omega = in.omega();
            const auto [periodic, win] = in.spectrum(cfg.window);
            const auto rep = check_orthogonality(omega, win);
            json violations = json::array();
            if (rep.violation)
                violations.push_back(
                    json::array({json_io::from_rational(rep.violation->first), json_io::from_rational(rep.violation->second)}));
            json r = {{"orthogonal", rep.orthogonal},
                      {"window", json_io::from_rational(cfg.window)},
                      {"points", win.points().size()},
                      {"violations", violations},
                      {"measure", json_io::from_rational(omega.measure())}};
            if (periodic)
            {
                r["completeness"] = to_string(scaled_completeness(omega, *periodic));
                r["density"] = json_io::from_rational(periodic->density());
            }
            else
                r["completeness"] = to_string(Completeness::not_decided);
            return {rep.orthogonal ? verified : refuted, r};
        }

        inline RunResult cmd_complete(const Inputs &in, const RunConfig &cfg)
        {
            if (in.has("mu", "mu"))
            {
                const auto a = in.integer_set();
                const auto mu = in.rationals("mu", "mu");
                const bool ok = completeness_matrix(a, mu);
                json r = {{"set", json_io::from_integer_set(a)}, {"mu", json_io::from_rationals(mu)},
                          {"completeness", ok ? "unitary" : "not-unitary"}};
                return {ok ? verified : refuted, r};
            }
            const auto omega = in.omega();
            const auto [periodic, win] = in.spectrum(cfg.window);
            if (!periodic)
                throw precondition_failure("completeness is only decided for periodic candidate spectra");
            const auto c = scaled_completeness(omega, *periodic);
            json r = {{"omega", json_io::from_interval_union(omega)},
                      {"lambda", json_io::from_periodic_set(*periodic)},
                      {"completeness", to_string(c)}};
            if (c == Completeness::not_decided)
                return {input_error, r};
            return {c == Completeness::unitary ? verified : refuted, r};
        }

        inline json spectrum_json(const ConstructedSpectrum &c)
        {
            json params = json::object();
            for (const auto &[k, v] : c.parameters)
                params[k] = json_io::from_rational(v);
            return {{"omega", json_io::from_interval_union(c.omega)},
                    {"lambda", json_io::from_periodic_set(c.lambda)},
                    {"parameters", params},
                    {"measure", json_io::from_rational(c.omega.measure())},
                    {"density", json_io::from_rational(c.lambda.density())}};
        }

        inline RunResult cmd_construct(const Inputs &in)
        {
            const std::string which = in.require_flag("case");
            json r;
            if (which == "3")
                r = spectrum_json(construct_spectrum_case3(in.integer("j", "j"), in.integer("r", "r"), in.integer("s", "s")));
            else if (which == "2b")
                r = spectrum_json(construct_spectrum_case2b(in.integer("l", "l"), in.integer("r", "r"), in.integer("s", "s")));
            else if (which == "2a")
            {
                const auto c = construct_spectrum_case2a(in.integer("n", "n"), in.integer("k", "k"),
                                                         in.integer("k0", "k0"), in.rational("r", "r"));
                r = spectrum_json(c);
                r["omega1"] = json_io::from_interval_union(c.omega1);
            }
            else
                throw input_error_exception("--case must be 3, 2a or 2b");
            r["case"] = which;
            return {verified, r};
        }

        inline RunResult cmd_ap(const Inputs &in, const RunConfig &cfg)
        {
            const auto omega = in.omega();
            const auto d = in.rational("d", "d");
            if (in.has("a", "a"))
            {
                const auto a = in.rational("a", "a");
                const auto [periodic, win] = in.spectrum(cfg.window);
                const auto rep = spectrum_ap_extension(omega, win, a, d);
                json r = {{"mode", "spectrum"},
                          {"a", json_io::from_rational(a)},
                          {"d", json_io::from_rational(d)},
                          {"window", json_io::from_rational(cfg.window)},
                          {"holds", rep.holds},
                          {"witness", rep.witness ? json_io::from_rational(*rep.witness) : json(nullptr)},
                          {"reason", rep.reason}};
                return {rep.holds ? verified : refuted, r};
            }
            if (!is_integer(cfg.window))
                throw input_error_exception("ap: the window K must be an integer");
            const auto k = to_int64(numerator(cfg.window));
            const bool holds = ap_extension_check(omega, d, k);
            json r = {{"mode", "zeroset"}, {"d", json_io::from_rational(d)}, {"K", k}, {"holds", holds}};
            if (is_integer(d) && d > 0)
                r["dTiles"] = omega.measure() == 1 && d_tiles(omega, numerator(d).convert_to<std::uint64_t>());
            return {holds ? verified : refuted, r};
        }

        inline RunResult cmd_rank(const Inputs &in)
        {
            const auto omega = in.omega();
            const auto d = in.rational("d", "d");
            const auto lambda = in.rational("lambda", "lambda");
            json r = json_io::from_rank(rank_case(omega, d, lambda));
            r["d"] = json_io::from_rational(d);
            r["lambda"] = json_io::from_rational(lambda);
            return {verified, r};
        }

        /// --vector "s:e,s:e,..." with sign s = +1/-1 and exponent e, or a "vector" field.
        inline SignedRootVector parse_vector(const Inputs &in)
        {
            if (auto f = in.flag("vector"))
            {
                json terms = json::array();
                std::stringstream ss(*f);
                std::string item;
                while (std::getline(ss, item, ','))
                {
                    auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw input_error_exception("--vector entries must be sign:exponent, got '" + item + "'");
                    terms.push_back(json::array({std::stoi(item.substr(0, colon)), item.substr(colon + 1)}));
                }
                return json_io::to_signed_vector(terms);
            }
            if (auto j = in.field("vector"))
                return json_io::to_signed_vector(*j);
            if (auto j = in.field("terms"))
                return json_io::to_signed_vector(*j);
            throw input_error_exception("missing --vector or a \"vector\" field");
        }

        inline RunResult cmd_vansum_classify(const Inputs &in)
        {
            const auto v = parse_vector(in);
            json r = json_io::from_type_tag(classify(v));
            r["vector"] = json_io::from_signed_vector(v);
            r["numericCrossCheck"] = {{"absValue", std::abs(cyclo_eval_float(v.value()))}};
            return {verified, r};
        }

        inline RunResult cmd_vansum_enum(const Inputs &in, const RunConfig &cfg)
        {
            const std::string pair = in.flag("pair").value_or("all");
            if (pair != "all" && pair != "type2" && pair != "type3" && pair != "mixed")
                throw input_error_exception("--pair must be type2, type3, mixed or all");
            json r = {{"orderBound", cfg.order_bound}, {"assumptionFilter", cfg.assumption_filter}};
            if (pair == "all" || pair == "type2")
            {
                r["type2type2"] = json_io::from_interaction(enumerate_type2_type2(cfg.order_bound, cfg.assumption_filter));
                const CyclotomicBasis basis(signed_modulus(cfg.order_bound));
                r["type2type2"]["canonicalArray"] =
                    json_io::from_canonical_array(canonical_type2_array(basis, cfg.order_bound));
            }
            if (pair == "all" || pair == "type3")
                r["type3type3"] = json_io::from_interaction(enumerate_type3_type3(cfg.order_bound, cfg.assumption_filter));
            if (pair == "all" || pair == "mixed")
                r["type3type2"] = json_io::from_interaction(enumerate_type3_type2(cfg.order_bound, cfg.assumption_filter));
            return {verified, r};
        }

        inline RunResult cmd_verify_weight6(const Inputs &in, const RunConfig &cfg)
        {
            const std::uint64_t cap = in.flag("cap") ? std::stoull(*in.flag("cap")) : 60;
            const auto rep = verify_weight6_classification(cfg.order_bound, cap);
            json r = json_io::from_weight6(rep);
            r["cap"] = cap;
            return {rep.exhaustive() ? verified : refuted, r};
        }
    }

    /// Runs one subcommand. Input problems and unmet preconditions give
    /// status 2 with an "error" field instead of throwing.
    inline RunResult run(const RunConfig &cfg)
    {
        RunResult result;
        try
        {
            detail::Inputs in(cfg, load_input(cfg.input));
            const auto &s = cfg.subcommand;
            if (s == "newman")
                result = detail::cmd_newman(in);
            else if (s == "tile-search")
                result = detail::cmd_tile_search(in, cfg);
            else if (s == "pattern")
                result = detail::cmd_pattern(in, cfg);
            else if (s == "zeroset")
                result = detail::cmd_zeroset(in);
            else if (s == "ortho")
                result = detail::cmd_ortho(in, cfg);
            else if (s == "complete")
                result = detail::cmd_complete(in, cfg);
            else if (s == "construct")
                result = detail::cmd_construct(in);
            else if (s == "ap")
                result = detail::cmd_ap(in, cfg);
            else if (s == "rank")
                result = detail::cmd_rank(in);
            else if (s == "vansum-classify")
                result = detail::cmd_vansum_classify(in);
            else if (s == "vansum-enum")
                result = detail::cmd_vansum_enum(in, cfg);
            else if (s == "verify-weight6")
                result = detail::cmd_verify_weight6(in, cfg);
            else
                throw input_error_exception("unknown subcommand '" + s + "'");
        }
        catch (const precondition_failure &e)
        {
            result = {input_error, {{"error", e.what()}, {"errorKind", "precondition"}}};
        }
        catch (const std::invalid_argument &e)
        {
            result = {input_error, {{"error", e.what()}, {"errorKind", "input"}}};
        }
        catch (const nlohmann::json::exception &e)
        {
            result = {input_error, {{"error", e.what()}, {"errorKind", "input"}}};
        }
        catch (const std::out_of_range &e)
        {
            result = {input_error, {{"error", e.what()}, {"errorKind", "input"}}};
        }
        catch (const std::overflow_error &e)
        {
            result = {input_error, {{"error", e.what()}, {"errorKind", "input"}}};
        }
        result.report["config"] = detail::config_echo(cfg);
        result.report["exitStatus"] = result.status;
        return result;
    }
}
