#pragma once

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "intervals.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fuglede
{
    /// Six signed roots of unity (sign_i * root_i), the image of a frequency
    /// under lambda -> (e(lambda(a_1+r_1)), -e(lambda a_1), ...).
    class SignedRootVector
    {
    public:
        struct Term
        {
            int sign = 1;
            RootOfUnity root;
        };

        SignedRootVector() = default;
        explicit SignedRootVector(const std::array<Term, 6> &terms) : terms_(terms)
        {
            for (const auto &t : terms_)
                if (t.sign != 1 && t.sign != -1)
                    throw std::invalid_argument("SignedRootVector: signs must be +1 or -1");
        }

        /// All signs +, roots given.
        static SignedRootVector from_roots(const std::array<RootOfUnity, 6> &roots)
        {
            std::array<Term, 6> t;
            for (int i = 0; i < 6; ++i)
                t[i] = {1, roots[i]};
            return SignedRootVector(t);
        }

        /// v_lambda for a three-interval Omega.
        static SignedRootVector from_frequency(const IntervalUnion &omega, const Rational &lambda)
        {
            if (omega.size() != 3)
                throw std::invalid_argument("from_frequency: Omega must have three intervals");
            std::array<Term, 6> t;
            for (int j = 0; j < 3; ++j)
            {
                const auto &p = omega.pieces()[j];
                t[2 * j] = {1, RootOfUnity(lambda * p.right())};
                t[2 * j + 1] = {-1, RootOfUnity(lambda * p.left)};
            }
            return SignedRootVector(t);
        }

        /// v_0 = (1, -1, 1, -1, 1, -1)
        static SignedRootVector v0()
        {
            std::array<Term, 6> t;
            for (int i = 0; i < 6; ++i)
                t[i] = {i % 2 == 0 ? 1 : -1, RootOfUnity()};
            return SignedRootVector(t);
        }

        const std::array<Term, 6> &terms() const { return terms_; }

        /// The signed entry sign_i * root_i as a single root of unity.
        RootOfUnity alpha(int i) const { return terms_[i].sign == 1 ? terms_[i].root : -terms_[i].root; }

        std::array<RootOfUnity, 6> alphas() const
        {
            std::array<RootOfUnity, 6> a;
            for (int i = 0; i < 6; ++i)
                a[i] = alpha(i);
            return a;
        }

        CycloSum value() const
        {
            CycloSum s;
            for (int i = 0; i < 6; ++i)
                s.add(1, alpha(i));
            return s;
        }

        SignedRootVector rotated(const RootOfUnity &by) const
        {
            auto t = terms_;
            for (auto &x : t)
                x.root = x.root * by;
            return SignedRootVector(t);
        }

        friend bool operator==(const SignedRootVector &a, const SignedRootVector &b) { return a.alphas() == b.alphas(); }

    private:
        std::array<Term, 6> terms_{};
    };

    /// Skew sign pattern (+, -, +, -, +, -) of the SDP and G operators.
    inline constexpr std::array<int, 6> skew_signs{1, -1, 1, -1, 1, -1};

    /// G(v, w) = (x_1 conj(y_1), -x_2 conj(y_2), ..., -x_6 conj(y_6)).
    inline SignedRootVector g_product(const SignedRootVector &v, const SignedRootVector &w)
    {
        std::array<SignedRootVector::Term, 6> t;
        for (int i = 0; i < 6; ++i)
            t[i] = {skew_signs[i] * v.terms()[i].sign * w.terms()[i].sign,
                    v.terms()[i].root * w.terms()[i].root.conj()};
        return SignedRootVector(t);
    }

    struct SdpResult
    {
        CycloSum value;
        SignedRootVector terms;
    };

    /// SDP(v, w) = x_1 conj(y_1) - x_2 conj(y_2) + ... - x_6 conj(y_6), together
    /// with its six signed terms (which form G(v, w)).
    inline SdpResult sdp(const SignedRootVector &v, const SignedRootVector &w)
    {
        auto g = g_product(v, w);
        return {g.value(), g};
    }

    // ---------------------------------------------------------------------
    // Classification

    enum class VanishingType
    {
        not_vanishing,
        type1,
        type2,
        type3,
        unclassified // vanishing, but none of the three shapes
    };

    inline std::string to_string(VanishingType t)
    {
        switch (t)
        {
        case VanishingType::not_vanishing:
            return "NotVanishing";
        case VanishingType::type1:
            return "Type1";
        case VanishingType::type2:
            return "Type2";
        case VanishingType::type3:
            return "Type3";
        default:
            return "Unclassified";
        }
    }

    /// Type3 roles: 1..4 stand for rho^1..rho^4 with rho = e(1/5); 5 for
    /// -omega and 6 for -omega^2 with omega = e(1/3).
    struct Type3Witness
    {
        Rational x; // exponent of the common factor
        std::array<int, 6> role{};
    };

    struct TypeTag
    {
        VanishingType type = VanishingType::not_vanishing;
        std::vector<std::array<int, 2>> pairs;   // Type1: three zero pairs (0-based)
        std::vector<std::array<int, 3>> triples; // Type2: two zero triples (0-based)
        std::optional<Type3Witness> type3;
    };

    namespace detail
    {
        // Roots of unity as exponents mod m.
        struct ExponentGroup
        {
            std::uint32_t m;
            using value_type = std::uint32_t;
            value_type mul(value_type a, value_type b) const { return (a + b) % m; }
            value_type div(value_type a, value_type b) const { return (a + m - b) % m; }
            std::optional<value_type> root(std::uint32_t p, std::uint32_t q) const
            {
                if ((std::uint64_t{m} * p) % q != 0)
                    return std::nullopt;
                return static_cast<value_type>((std::uint64_t{m} * p / q) % m);
            }
            Rational exponent(value_type a) const { return make_rational(a, m); }
        };

        struct RootGroup
        {
            using value_type = RootOfUnity;
            value_type mul(const value_type &a, const value_type &b) const { return a * b; }
            value_type div(const value_type &a, const value_type &b) const { return a / b; }
            std::optional<value_type> root(std::uint32_t p, std::uint32_t q) const { return RootOfUnity(BigInt(p), BigInt(q)); }
            Rational exponent(const value_type &a) const { return a.exponent(); }
        };

        template <class Group>
        bool match_zero_pairs(const Group &g, const std::array<typename Group::value_type, 6> &a, std::array<bool, 6> &used,
                              std::vector<std::array<int, 2>> &pairs)
        {
            int i = 0;
            while (i < 6 && used[i])
                ++i;
            if (i == 6)
                return true;
            const auto minus = *g.root(1, 2);
            for (int j = i + 1; j < 6; ++j)
            {
                if (used[j] || !(a[j] == g.mul(a[i], minus)))
                    continue;
                used[i] = used[j] = true;
                pairs.push_back({i, j});
                if (match_zero_pairs(g, a, used, pairs))
                    return true;
                pairs.pop_back();
                used[i] = used[j] = false;
            }
            return false;
        }

        template <class Group>
        bool zero_triple(const Group &g, const typename Group::value_type &x, const typename Group::value_type &y,
                         const typename Group::value_type &z, const typename Group::value_type &omega)
        {
            const auto omega2 = g.mul(omega, omega);
            const auto wx = g.mul(x, omega), w2x = g.mul(x, omega2);
            return (y == wx && z == w2x) || (y == w2x && z == wx);
        }

        /// Shape of a vanishing six-term sum; Type1 takes precedence over Type2.
        template <class Group>
        TypeTag classify_shape(const Group &g, const std::array<typename Group::value_type, 6> &a)
        {
            TypeTag tag;
            if (g.root(1, 2))
            {
                std::array<bool, 6> used{};
                if (match_zero_pairs(g, a, used, tag.pairs))
                {
                    tag.type = VanishingType::type1;
                    return tag;
                }
                tag.pairs.clear();
            }
            if (auto omega = g.root(1, 3))
            {
                for (int j = 1; j < 6; ++j)
                    for (int k = j + 1; k < 6; ++k)
                    {
                        std::array<int, 3> first{0, j, k}, second{};
                        int n = 0;
                        for (int i = 1; i < 6; ++i)
                            if (i != j && i != k)
                                second[n++] = i;
                        if (zero_triple(g, a[0], a[j], a[k], *omega) &&
                            zero_triple(g, a[second[0]], a[second[1]], a[second[2]], *omega))
                        {
                            tag.type = VanishingType::type2;
                            tag.triples = {first, second};
                            return tag;
                        }
                    }
            }
            auto rho = g.root(1, 5);
            auto minus_omega = g.root(5, 6);
            if (rho && minus_omega)
            {
                std::array<typename Group::value_type, 7> shape;
                for (int r = 1; r <= 4; ++r)
                    shape[r] = *g.root(r, 5);
                shape[5] = *g.root(5, 6);
                shape[6] = *g.root(1, 6);
                for (int r0 = 1; r0 <= 6; ++r0)
                {
                    const auto x = g.div(a[0], shape[r0]);
                    Type3Witness w;
                    std::array<bool, 7> taken{};
                    bool ok = true;
                    for (int i = 0; i < 6 && ok; ++i)
                    {
                        ok = false;
                        for (int r = 1; r <= 6; ++r)
                            if (!taken[r] && a[i] == g.mul(x, shape[r]))
                            {
                                taken[r] = true;
                                w.role[i] = r;
                                ok = true;
                                break;
                            }
                    }
                    if (ok)
                    {
                        w.x = g.exponent(x);
                        tag.type = VanishingType::type3;
                        tag.type3 = w;
                        return tag;
                    }
                }
            }
            tag.type = VanishingType::unclassified;
            return tag;
        }
    }

    inline TypeTag classify(const SignedRootVector &v)
    {
        if (!cyclo_is_zero(v.value()))
            return {};
        return detail::classify_shape(detail::RootGroup{}, v.alphas());
    }

    /// Six roots given by exponents mod m (signs already absorbed).
    using ExponentVector = std::array<std::uint32_t, 6>;

    inline TypeTag classify_exponents(const ExponentVector &e, const CyclotomicBasis &basis)
    {
        if (!basis.is_zero_sum(e))
            return {};
        return detail::classify_shape(detail::ExponentGroup{basis.order()}, e);
    }

    inline SignedRootVector to_signed_vector(const ExponentVector &e, std::uint32_t m)
    {
        std::array<RootOfUnity, 6> r;
        for (int i = 0; i < 6; ++i)
            r[i] = RootOfUnity(make_rational(e[i], m));
        return SignedRootVector::from_roots(r);
    }

    /// The skew sign pattern as exponent shifts mod m (m even).
    inline ExponentVector g_exponents(const ExponentVector &v, const ExponentVector &w, std::uint32_t m)
    {
        ExponentVector out;
        for (int i = 0; i < 6; ++i)
            out[i] = (v[i] + m - w[i] + (skew_signs[i] == 1 ? 0 : m / 2)) % m;
        return out;
    }

    // ---------------------------------------------------------------------
    // Enumerations

    inline std::uint32_t signed_modulus(std::uint64_t order_bound)
    {
        if (order_bound == 0)
            throw precondition_failure("order bound must be positive");
        const std::uint64_t m = order_bound % 2 == 0 ? order_bound : 2 * order_bound;
        if (m > 100000)
            throw precondition_failure("order bound too large");
        return static_cast<std::uint32_t>(m);
    }

    /// Vanishing vectors in mu_m^6 whose second entry is -1, by meeting in the
    /// middle on the reduced coordinates modulo Phi_m. Sorted.
    inline std::vector<ExponentVector> vanishing_with_minus_one(const CyclotomicBasis &basis)
    {
        const std::uint32_t m = basis.order();
        if (m % 2 != 0)
            throw std::invalid_argument("vanishing_with_minus_one: modulus must be even");
        const std::size_t dim = basis.dimension();
        using Key = std::vector<std::int64_t>;
        struct KeyHash
        {
            std::size_t operator()(const Key &k) const
            {
                std::size_t h = 1469598103934665603ull;
                for (auto v : k)
                    h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
                return h;
            }
        };
        std::unordered_map<Key, std::vector<std::array<std::uint32_t, 3>>, KeyHash> right;
        Key acc(dim);
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                for (std::uint32_t c = 0; c < m; ++c)
                {
                    std::fill(acc.begin(), acc.end(), 0);
                    basis.accumulate(acc, a);
                    basis.accumulate(acc, b);
                    basis.accumulate(acc, c);
                    right[acc].push_back({a, b, c});
                }
        std::vector<ExponentVector> out;
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t c = 0; c < m; ++c)
            {
                std::fill(acc.begin(), acc.end(), 0);
                basis.accumulate(acc, a, -1);
                basis.accumulate(acc, m / 2, -1);
                basis.accumulate(acc, c, -1);
                auto it = right.find(acc);
                if (it == right.end())
                    continue;
                for (const auto &r : it->second)
                    out.push_back({a, m / 2, c, r[0], r[1], r[2]});
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    namespace detail
    {
        // Lexicographically first maximum clique; vertices are 0..n-1 in
        // their canonical order.
        class MaxClique
        {
        public:
            explicit MaxClique(const std::vector<std::vector<int>> &adj) : adj_(adj) {}

            std::vector<int> run()
            {
                std::vector<int> all(adj_.size());
                for (std::size_t i = 0; i < all.size(); ++i)
                    all[i] = static_cast<int>(i);
                expand(all);
                return best_;
            }

        private:
            void expand(const std::vector<int> &candidates)
            {
                if (current_.size() > best_.size())
                    best_ = current_;
                for (std::size_t idx = 0; idx < candidates.size(); ++idx)
                {
                    if (current_.size() + (candidates.size() - idx) <= best_.size())
                        return;
                    const int v = candidates[idx];
                    std::vector<int> next;
                    const auto &nv = adj_[v];
                    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(idx) + 1, candidates.end(),
                                          nv.begin(), nv.end(), std::back_inserter(next));
                    current_.push_back(v);
                    expand(next);
                    current_.pop_back();
                }
            }

            const std::vector<std::vector<int>> &adj_;
            std::vector<int> current_, best_;
        };
    }

    struct InteractionVertex
    {
        ExponentVector alpha;
        VanishingType type;
    };

    struct InteractionReport
    {
        std::string pair;
        std::uint64_t order_bound = 0;
        std::uint32_t modulus = 0;
        bool assumption_filter = true;
        std::size_t type2_vertices = 0;
        std::size_t type3_vertices = 0;
        std::size_t edges = 0;
        std::size_t max_family = 0; // largest clique plus the coset dZ itself
        std::vector<InteractionVertex> witness;
        std::vector<VanishingType> witness_differences; // types of G over witness pairs, in (i<j) order
        std::size_t max_type2_cosets = 0;               // largest number of Type2 cosets in one family
        std::size_t max_type3_cosets = 0;
    };

    /// Compatibility graph over candidate coset vectors. Two vertices u, w are
    /// joined when G(u, w) vanishes and, with the filter on, is not Type1.
    inline InteractionReport interaction_report(std::string pair, std::uint64_t order_bound,
                                                const std::vector<InteractionVertex> &vertices,
                                                const CyclotomicBasis &basis, bool assumption_filter)
    {
        InteractionReport rep;
        rep.pair = std::move(pair);
        rep.order_bound = order_bound;
        rep.modulus = basis.order();
        rep.assumption_filter = assumption_filter;
        for (const auto &v : vertices)
            (v.type == VanishingType::type2 ? rep.type2_vertices : rep.type3_vertices) += 1;

        auto admissible = [&](const ExponentVector &u, const ExponentVector &w) {
            const auto t = classify_exponents(g_exponents(u, w, basis.order()), basis).type;
            if (t == VanishingType::not_vanishing)
                return false;
            return !assumption_filter || t != VanishingType::type1;
        };

        const std::size_t n = vertices.size();
        std::vector<std::vector<int>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (admissible(vertices[i].alpha, vertices[j].alpha))
                {
                    adj[i].push_back(static_cast<int>(j));
                    adj[j].push_back(static_cast<int>(i));
                    ++rep.edges;
                }
        for (auto &a : adj)
            std::sort(a.begin(), a.end());

        const auto clique = detail::MaxClique(adj).run();
        rep.max_family = clique.size() + 1;
        for (int v : clique)
            rep.witness.push_back(vertices[v]);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                rep.witness_differences.push_back(
                    classify_exponents(g_exponents(vertices[clique[i]].alpha, vertices[clique[j]].alpha, basis.order()),
                                       basis)
                        .type);

        auto restricted = [&](VanishingType t) {
            std::vector<int> keep;
            for (std::size_t i = 0; i < n; ++i)
                if (vertices[i].type == t)
                    keep.push_back(static_cast<int>(i));
            std::vector<int> index(n, -1);
            for (std::size_t k = 0; k < keep.size(); ++k)
                index[keep[k]] = static_cast<int>(k);
            std::vector<std::vector<int>> sub(keep.size());
            for (std::size_t k = 0; k < keep.size(); ++k)
                for (int w : adj[keep[k]])
                    if (index[w] >= 0)
                        sub[k].push_back(index[w]);
            return detail::MaxClique(sub).run().size();
        };
        rep.max_type2_cosets = restricted(VanishingType::type2);
        rep.max_type3_cosets = restricted(VanishingType::type3);
        return rep;
    }

    /// Candidate coset vectors: vanishing alpha-vectors with alpha_2 = -1 and
    /// entries of order dividing the (even) modulus, of the requested types.
    inline std::vector<InteractionVertex> coset_candidates(const CyclotomicBasis &basis, bool with_type2, bool with_type3)
    {
        std::vector<InteractionVertex> out;
        for (const auto &e : vanishing_with_minus_one(basis))
        {
            const auto t = detail::classify_shape(detail::ExponentGroup{basis.order()}, e).type;
            if ((t == VanishingType::type2 && with_type2) || (t == VanishingType::type3 && with_type3))
                out.push_back({e, t});
        }
        return out;
    }

    /// The configurations of the 3x6 array: signs (+,+,+,-,-,-) or the
    /// reverse, u[x] = (1, w, w^2, x, xw, xw^2), and u[y] with its two blocks
    /// permuted by sigma, mu and placed in either order.
    struct CanonicalArrayReport
    {
        std::size_t configurations = 0;
        std::size_t vanishing = 0;
        std::map<VanishingType, std::size_t> by_type;
    };

    inline CanonicalArrayReport canonical_type2_array(const CyclotomicBasis &basis, std::uint64_t order_bound)
    {
        const std::uint32_t m = basis.order();
        const std::uint32_t third = m / 3, half = m / 2;
        CanonicalArrayReport rep;
        const std::uint32_t step = static_cast<std::uint32_t>(m / order_bound);
        std::vector<std::uint32_t> allowed;
        for (std::uint32_t x = 0; x < m; x += step)
            if (x != half && x != (half + third) % m && x != (half + 2 * third) % m)
                allowed.push_back(x);
        std::array<std::uint32_t, 3> base{0, third, 2 * third};
        std::vector<std::array<std::uint32_t, 3>> perms;
        auto p = base;
        std::sort(p.begin(), p.end());
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        for (auto x : allowed)
            for (auto y : allowed)
                for (const auto &sigma : perms)
                    for (const auto &mu : perms)
                        for (int order = 0; order < 2; ++order)
                            for (int flip = 0; flip < 2; ++flip)
                            {
                                ExponentVector ux{0, third, 2 * third, x, (x + third) % m, (x + 2 * third) % m};
                                ExponentVector uy;
                                for (int i = 0; i < 3; ++i)
                                {
                                    const std::uint32_t plain = sigma[i];
                                    const std::uint32_t shifted = (y + mu[i]) % m;
                                    uy[i] = order == 0 ? plain : shifted;
                                    uy[i + 3] = order == 0 ? shifted : plain;
                                }
                                ExponentVector t;
                                for (int i = 0; i < 6; ++i)
                                {
                                    const bool plus = (i < 3) != (flip == 1);
                                    t[i] = (ux[i] + m - uy[i] + (plus ? 0 : half)) % m;
                                }
                                ++rep.configurations;
                                const auto tag = classify_exponents(t, basis);
                                if (tag.type != VanishingType::not_vanishing)
                                    ++rep.vanishing;
                                ++rep.by_type[tag.type];
                            }
        return rep;
    }

    inline void require_divisible(std::uint64_t order_bound, std::uint64_t by, const char *what)
    {
        if (order_bound % by != 0)
            throw precondition_failure(std::string(what) + ": order bound " + std::to_string(order_bound) +
                                       " must be a multiple of " + std::to_string(by));
    }

    inline InteractionReport enumerate_type2_type2(std::uint64_t order_bound, bool assumption_filter = true)
    {
        require_divisible(order_bound, 6, "type2 x type2");
        const CyclotomicBasis basis(signed_modulus(order_bound));
        return interaction_report("type2type2", order_bound, coset_candidates(basis, true, false), basis,
                                  assumption_filter);
    }

    inline InteractionReport enumerate_type3_type3(std::uint64_t order_bound, bool assumption_filter = true)
    {
        require_divisible(order_bound, 30, "type3 x type3");
        const CyclotomicBasis basis(signed_modulus(order_bound));
        return interaction_report("type3type3", order_bound, coset_candidates(basis, false, true), basis,
                                  assumption_filter);
    }

    inline InteractionReport enumerate_type3_type2(std::uint64_t order_bound, bool assumption_filter = true)
    {
        require_divisible(order_bound, 30, "type3 x type2");
        const CyclotomicBasis basis(signed_modulus(order_bound));
        return interaction_report("type3type2", order_bound, coset_candidates(basis, true, true), basis,
                                  assumption_filter);
    }

    struct Weight6Report
    {
        std::uint64_t order_bound = 0;
        std::uint32_t modulus = 0;
        std::size_t tuples = 0; // multisets containing the root 1
        std::map<VanishingType, std::size_t> by_type;
        std::optional<ExponentVector> counterexample;
        bool exhaustive() const { return !counterexample.has_value(); }
    };

    /// Every vanishing sum of six roots of order dividing lcm(N, 2) is of
    /// Type1, 2 or 3. Sums are taken up to rotation, as sorted multisets
    /// containing the root 1.
    inline Weight6Report verify_weight6_classification(std::uint64_t order_bound, std::uint64_t cap = 60)
    {
        if (order_bound > cap)
            throw precondition_failure("verify-weight6: order bound " + std::to_string(order_bound) +
                                       " exceeds the cap " + std::to_string(cap));
        Weight6Report rep;
        rep.order_bound = order_bound;
        rep.modulus = signed_modulus(order_bound);
        const CyclotomicBasis basis(rep.modulus);
        const std::uint32_t m = rep.modulus;
        const std::size_t dim = basis.dimension();
        std::array<std::vector<std::int64_t>, 6> acc;
        for (auto &a : acc)
            a.assign(dim, 0);
        basis.accumulate(acc[0], 0);
        ExponentVector e{0, 0, 0, 0, 0, 0};
        const detail::ExponentGroup group{m};
        std::function<void(int, std::uint32_t)> step = [&](int depth, std::uint32_t from) {
            for (std::uint32_t k = from; k < m; ++k)
            {
                e[depth] = k;
                acc[depth] = acc[depth - 1];
                basis.accumulate(acc[depth], k);
                if (depth < 5)
                {
                    step(depth + 1, k);
                    continue;
                }
                ++rep.tuples;
                if (std::any_of(acc[5].begin(), acc[5].end(), [](auto c) { return c != 0; }))
                    continue;
                const auto t = detail::classify_shape(group, e).type;
                ++rep.by_type[t];
                if (t == VanishingType::unclassified && !rep.counterexample)
                    rep.counterexample = e;
            }
        };
        step(1, 0);
        return rep;
    }

    /// Two disjoint index pairs whose ratios are powers of -omega (sixth
    /// roots of unity). Such pairs cannot both occur in a Type3 vector.
    inline bool has_two_sixth_root_pairs(const ExponentVector &e, std::uint32_t m)
    {
        const std::uint32_t sixth = m / 6;
        auto related = [&](int i, int j) { return ((e[i] + m - e[j]) % m) % sixth == 0; };
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
            {
                if (!related(i, j))
                    continue;
                for (int k = 0; k < 6; ++k)
                    for (int l = k + 1; l < 6; ++l)
                        if (k != i && k != j && l != i && l != j && related(k, l))
                            return true;
            }
        return false;
    }
}
