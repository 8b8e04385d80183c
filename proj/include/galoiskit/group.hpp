#pragma once

// Explicitly enumerated finite permutation groups and the structural
// queries built on them: subgroups, normality, quotients, derived series,
// conjugacy, actions, Sylow/Cauchy, simplicity and small-group names.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "exactnum.hpp"
#include "perm.hpp"

namespace galoiskit {

inline constexpr std::size_t kDefaultClosureCap = 20160;
inline constexpr std::size_t kDefaultSubgroupCap = 200;

namespace detail {

struct ImageHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

inline constexpr std::size_t kTableLimit = 1024;

struct GroupData {
    int degree = 0;
    std::vector<Perm> elements;
    std::unordered_map<std::vector<int>, std::uint32_t, ImageHash> index;
    std::vector<std::uint32_t> generators;
    std::vector<std::uint32_t> inverse;
    std::vector<std::uint32_t> table;  // row-major, present when order <= kTableLimit
};

} // namespace detail

/// A permutation group with every element listed; identity at index 0.
/// Cheap to copy (shared immutable state).
class FiniteGroup {
public:
    FiniteGroup() = default;

    int degree() const { return d_->degree; }
    std::size_t order() const { return d_->elements.size(); }
    const Perm& element(std::size_t i) const { return d_->elements[i]; }
    const std::vector<Perm>& elements() const { return d_->elements; }
    const std::vector<std::uint32_t>& generators() const { return d_->generators; }

    std::optional<std::size_t> index_of(const Perm& p) const {
        auto it = d_->index.find(p.images());
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Perm& p) const { return index_of(p).has_value(); }

    /// Index of element(a) * element(b) (b applied first).
    std::size_t mul(std::size_t a, std::size_t b) const {
        if (!d_->table.empty()) return d_->table[a * order() + b];
        return *index_of(element(a) * element(b));
    }

    std::size_t inv(std::size_t a) const { return d_->inverse[a]; }

    bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }

    /// Builds the group closed under the given generators, capped at `cap` elements.
    friend FiniteGroup generate(const std::vector<Perm>& gens, std::size_t cap);

private:
    std::shared_ptr<const detail::GroupData> d_;
};

inline FiniteGroup generate(const std::vector<Perm>& gens, std::size_t cap = kDefaultClosureCap) {
    if (gens.empty()) throw DomainError("generate: empty generator list");
    const int n = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != n) throw DomainError("generate: generator degrees differ");

    auto data = std::make_shared<detail::GroupData>();
    data->degree = n;
    auto add = [&](const Perm& p) -> std::uint32_t {
        auto [it, fresh] = data->index.emplace(p.images(), static_cast<std::uint32_t>(data->elements.size()));
        if (fresh) {
            data->elements.push_back(p);
            if (data->elements.size() > cap)
                throw CapExceeded("group closure exceeded cap of " + std::to_string(cap) + " elements",
                                  data->elements.size());
        }
        return it->second;
    };
    add(Perm::identity(n));
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
        for (const auto& g : gens) {
            const Perm next = data->elements[i] * g;
            add(next);
        }
    }
    for (const auto& g : gens) data->generators.push_back(data->index.at(g.images()));

    const std::size_t m = data->elements.size();
    data->inverse.resize(m);
    for (std::size_t i = 0; i < m; ++i) data->inverse[i] = data->index.at(data->elements[i].inverse().images());
    if (m <= detail::kTableLimit) {
        data->table.resize(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                data->table[a * m + b] = data->index.at((data->elements[a] * data->elements[b]).images());
    }
    FiniteGroup G;
    G.d_ = std::move(data);
    return G;
}

inline FiniteGroup symmetric_group(int n) {
    if (n == 1) return generate({Perm::identity(1)});
    if (n == 2) return generate({Perm({2, 1})});
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    return generate({Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{1, 2}})});
}

inline FiniteGroup alternating_group(int n) {
    if (n < 3) return generate({Perm::identity(std::max(n, 1))});
    std::vector<Perm> gens;
    for (int k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
    return generate(gens);
}

inline FiniteGroup cyclic_group(int n) {
    if (n == 1) return generate({Perm::identity(1)});
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    return generate({Perm::from_cycles(n, {cyc})});
}

/// Symmetries of the regular n-gon, order 2n, acting on the vertices.
inline FiniteGroup dihedral_group(int n) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n + 1;
        refl[i] = (n - i) % n + 1;
    }
    return generate({Perm(rot), Perm(refl)});
}

/// A subgroup of a FiniteGroup, stored as the sorted positions of its
/// members in the parent's element list.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(FiniteGroup parent, std::vector<std::uint32_t> members)
        : parent_(std::move(parent)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        mask_.assign(parent_.order(), false);
        for (auto m : members_) mask_[m] = true;
    }

    const FiniteGroup& parent() const { return parent_; }
    std::size_t order() const { return members_.size(); }
    const std::vector<std::uint32_t>& members() const { return members_; }
    bool contains(std::size_t idx) const { return mask_[idx]; }
    bool is_trivial() const { return members_.size() == 1; }
    bool is_whole() const { return members_.size() == parent_.order(); }

    bool subset_of(const Subgroup& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
    FiniteGroup parent_;
    std::vector<std::uint32_t> members_;
    std::vector<bool> mask_;
};

/// Subgroup of G generated by the elements at the given positions.
inline Subgroup closure(const FiniteGroup& G, std::span<const std::uint32_t> gens) {
    std::vector<bool> in(G.order(), false);
    std::vector<std::uint32_t> members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto g : gens) {
            const auto next = static_cast<std::uint32_t>(G.mul(members[i], g));
            if (!in[next]) {
                in[next] = true;
                members.push_back(next);
            }
        }
    }
    return Subgroup(G, std::move(members));
}

inline Subgroup whole_group(const FiniteGroup& G) {
    std::vector<std::uint32_t> all(G.order());
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup(G, std::move(all));
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {0}); }

/// Small generating set picked greedily from the member list.
inline std::vector<std::uint32_t> generators_of(const Subgroup& H) {
    std::vector<std::uint32_t> gens;
    std::vector<bool> covered(H.parent().order(), false);
    covered[0] = true;
    std::size_t covered_count = 1;
    // Try members of largest order first, so cyclic parts come out as one generator.
    std::vector<std::uint32_t> cand = H.members();
    std::stable_sort(cand.begin(), cand.end(), [&](auto a, auto b) {
        return order_of(H.parent().element(a)) > order_of(H.parent().element(b));
    });
    for (auto m : cand) {
        if (covered_count == H.order()) break;
        if (covered[m]) continue;
        gens.push_back(m);
        const Subgroup S = closure(H.parent(), gens);
        covered.assign(H.parent().order(), false);
        for (auto x : S.members()) covered[x] = true;
        covered_count = S.order();
    }
    return gens;
}

/// The subgroup as a permutation group in its own right.
inline FiniteGroup as_group(const Subgroup& H) {
    std::vector<Perm> gens;
    for (auto g : generators_of(H)) gens.push_back(H.parent().element(g));
    if (gens.empty()) gens.push_back(Perm::identity(H.parent().degree()));
    return generate(gens, H.order());
}

inline bool is_abelian(const FiniteGroup& G) {
    const auto& gens = G.generators();
    for (auto a : gens)
        for (auto b : gens)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

/// Enumerates every subgroup by closing generating sets of bounded size.
/// Sorted by order, then by member positions.
inline std::vector<Subgroup> subgroups(const FiniteGroup& G, std::size_t cap = kDefaultSubgroupCap) {
    if (G.order() > cap)
        throw CapExceeded("subgroup enumeration: group order " + std::to_string(G.order()) + " above cap " +
                              std::to_string(cap),
                          G.order());
    const std::size_t max_gens = G.order() <= 60 ? 2 : 3;

    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> found;  // members -> generators
    found.emplace(std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{});
    std::vector<std::vector<std::uint32_t>> frontier;  // generator lists at the current level
    for (std::uint32_t g = 1; g < G.order(); ++g) {
        std::vector<std::uint32_t> gens{g};
        auto S = closure(G, gens);
        if (found.emplace(S.members(), gens).second) frontier.push_back(gens);
    }
    for (std::size_t level = 2; level <= max_gens; ++level) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& gens : frontier) {
            const Subgroup base = closure(G, gens);
            if (base.is_whole()) continue;
            for (std::uint32_t g = 1; g < G.order(); ++g) {
                if (base.contains(g)) continue;
                auto ext = gens;
                ext.push_back(g);
                auto S = closure(G, ext);
                if (found.emplace(S.members(), ext).second) next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& [members, gens] : found) out.emplace_back(G, members);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members() < b.members();
    });
    return out;
}

inline void require_subgroup_of(const FiniteGroup& G, const Subgroup& H) {
    if (!H.parent().same_as(G)) throw DomainError("subgroup belongs to a different group");
}

/// g H g^{-1} = H for every g in G (checked on generators of G and H).
inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    require_subgroup_of(G, H);
    const auto hgens = generators_of(H);
    for (auto g : G.generators())
        for (auto h : hgens)
            if (!H.contains(G.mul(G.mul(g, h), G.inv(g)))) return false;
    return true;
}

/// Smallest normal subgroup of G containing the given elements.
inline Subgroup normal_closure(const FiniteGroup& G, std::vector<std::uint32_t> seeds) {
    for (;;) {
        Subgroup N = closure(G, seeds);
        bool grew = false;
        for (auto g : G.generators()) {
            for (std::size_t k = 0; k < seeds.size(); ++k) {
                const auto c = static_cast<std::uint32_t>(G.mul(G.mul(g, seeds[k]), G.inv(g)));
                if (!N.contains(c)) {
                    seeds.push_back(c);
                    N = closure(G, seeds);
                    grew = true;
                }
            }
        }
        if (!grew) return N;
    }
}

/// Multiplication table of a finite group; identity at index 0.
class AbstractGroup {
public:
    AbstractGroup() = default;
    AbstractGroup(std::size_t order, std::vector<std::uint32_t> table) : m_(order), table_(std::move(table)) {
        if (table_.size() != m_ * m_) throw DomainError("abstract group table has wrong size");
    }

    std::size_t order() const { return m_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * m_ + b]; }

    std::size_t inv(std::size_t a) const {
        for (std::size_t b = 0; b < m_; ++b)
            if (mul(a, b) == 0) return b;
        throw InternalError("abstract group element without inverse");
    }

    /// Latin-square, identity and associativity checks.
    bool is_valid_group() const {
        for (std::size_t a = 0; a < m_; ++a) {
            if (mul(0, a) != a || mul(a, 0) != a) return false;
            std::vector<bool> row(m_, false), col(m_, false);
            for (std::size_t b = 0; b < m_; ++b) {
                row[mul(a, b)] = true;
                col[mul(b, a)] = true;
            }
            if (std::find(row.begin(), row.end(), false) != row.end()) return false;
            if (std::find(col.begin(), col.end(), false) != col.end()) return false;
        }
        for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = 0; b < m_; ++b)
                for (std::size_t c = 0; c < m_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        return true;
    }

    bool is_abelian() const {
        for (std::size_t a = 0; a < m_; ++a)
            for (std::size_t b = a + 1; b < m_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
        return k;
    }

private:
    std::size_t m_ = 0;
    std::vector<std::uint32_t> table_;
};

inline AbstractGroup cayley_table(const FiniteGroup& G) {
    const std::size_t m = G.order();
    std::vector<std::uint32_t> t(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<std::uint32_t>(G.mul(a, b));
    return AbstractGroup(m, std::move(t));
}

/// Coset multiplication table of G/N; coset k is listed in order of first
/// appearance in G's element list, so the identity coset is 0.
inline AbstractGroup quotient(const FiniteGroup& G, const Subgroup& N) {
    require_subgroup_of(G, N);
    if (!is_normal(G, N)) throw DomainError("quotient: subgroup is not normal");
    std::vector<std::uint32_t> coset_of(G.order(), UINT32_MAX);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        if (coset_of[g] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(g);
        for (auto n : N.members()) coset_of[G.mul(g, n)] = id;
    }
    const std::size_t m = reps.size();
    std::vector<std::uint32_t> t(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t[a * m + b] = coset_of[G.mul(reps[a], reps[b])];
    return AbstractGroup(m, std::move(t));
}

/// Commutator subgroup of H, as a subgroup of H's parent.
inline Subgroup commutator_subgroup(const Subgroup& H) {
    const FiniteGroup& G = H.parent();
    const auto gens = generators_of(H);
    std::vector<std::uint32_t> seeds;
    for (auto a : gens)
        for (auto b : gens) {
            // [a,b] = ab(ba)^{-1}
            const auto c = static_cast<std::uint32_t>(G.mul(G.mul(a, b), G.inv(G.mul(b, a))));
            if (c != 0) seeds.push_back(c);
        }
    if (seeds.empty()) return trivial_subgroup(G);
    // normal closure inside H
    for (;;) {
        Subgroup N = closure(G, seeds);
        bool grew = false;
        for (auto h : gens) {
            for (std::size_t k = 0; k < seeds.size(); ++k) {
                const auto c = static_cast<std::uint32_t>(G.mul(G.mul(h, seeds[k]), G.inv(h)));
                if (!N.contains(c)) {
                    seeds.push_back(c);
                    N = closure(G, seeds);
                    grew = true;
                }
            }
        }
        if (!grew) return N;
    }
}

struct DerivedSeries {
    std::vector<Subgroup> series;        // G, G', G'', ... until it stabilizes
    bool solvable = false;
    std::optional<int> derived_length;   // least n with G^(n) = 1
};

inline DerivedSeries derived_series(const FiniteGroup& G) {
    DerivedSeries out;
    out.series.push_back(whole_group(G));
    while (!out.series.back().is_trivial()) {
        Subgroup next = commutator_subgroup(out.series.back());
        if (next.order() == out.series.back().order()) break;
        out.series.push_back(std::move(next));
    }
    out.solvable = out.series.back().is_trivial();
    if (out.solvable) out.derived_length = static_cast<int>(out.series.size()) - 1;
    return out;
}

inline Subgroup centralizer(const FiniteGroup& G, std::size_t a) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (G.mul(g, a) == G.mul(a, g)) members.push_back(g);
    return Subgroup(G, std::move(members));
}

/// Conjugacy class of element a (sorted positions).
inline std::vector<std::uint32_t> conjugacy_class(const FiniteGroup& G, std::size_t a) {
    std::vector<bool> in(G.order(), false);
    std::vector<std::uint32_t> cls{static_cast<std::uint32_t>(a)};
    in[a] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (auto g : G.generators()) {
            const auto c = static_cast<std::uint32_t>(G.mul(G.mul(g, cls[i]), G.inv(g)));
            if (!in[c]) {
                in[c] = true;
                cls.push_back(c);
            }
        }
    std::sort(cls.begin(), cls.end());
    return cls;
}

struct ClassStructure {
    std::vector<std::vector<std::uint32_t>> classes;  // ordered by least member
    Subgroup center;
};

inline ClassStructure class_structure(const FiniteGroup& G) {
    ClassStructure out;
    std::vector<bool> done(G.order(), false);
    std::vector<std::uint32_t> central;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        if (done[g]) continue;
        auto cls = conjugacy_class(G, g);
        for (auto c : cls) done[c] = true;
        if (cls.size() == 1) central.push_back(g);
        out.classes.push_back(std::move(cls));
    }
    out.center = Subgroup(G, std::move(central));
    return out;
}

struct OrbitStabilizer {
    std::vector<int> orbit;  // sorted points
    Subgroup stabilizer;
};

inline OrbitStabilizer orbit_stabilizer(const FiniteGroup& G, int x) {
    if (x < 1 || x > G.degree()) throw DomainError("orbit_stabilizer: point out of range");
    OrbitStabilizer out;
    std::vector<bool> seen(G.degree() + 1, false);
    std::vector<std::uint32_t> stab;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        const int y = G.element(g)(x);
        if (!seen[y]) {
            seen[y] = true;
            out.orbit.push_back(y);
        }
        if (y == x) stab.push_back(g);
    }
    std::sort(out.orbit.begin(), out.orbit.end());
    out.stabilizer = Subgroup(G, std::move(stab));
    return out;
}

/// An element of order exactly p, for a prime p dividing |G|.
inline Perm cauchy_element(const FiniteGroup& G, const Int& p) {
    if (!is_prime(p)) throw DomainError("cauchy_element: p must be prime");
    if (Int(static_cast<unsigned long>(G.order())) % p != 0)
        throw DomainError("cauchy_element: p does not divide the group order");
    for (std::size_t i = 1; i < G.order(); ++i) {
        const Int ord = order_of(G.element(i));
        if (ord % p == 0) return power(G.element(i), Int(ord / p).get_si());
    }
    throw InternalError("Cauchy's theorem failed");
}

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
    const auto hgens = generators_of(H);
    std::vector<std::uint32_t> members;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (auto h : hgens)
            if (!H.contains(G.mul(G.mul(g, h), G.inv(g)))) {
                ok = false;
                break;
            }
        if (ok) members.push_back(g);
    }
    return Subgroup(G, std::move(members));
}

/// A Sylow p-subgroup: grown from a Cauchy element by adjoining p-elements
/// of the normalizer until the full p-part of |G| is reached.
inline Subgroup sylow(const FiniteGroup& G, const Int& p) {
    if (!is_prime(p)) throw DomainError("sylow: p must be prime");
    const Int order(static_cast<unsigned long>(G.order()));
    Int target = 1;
    for (Int rest = order; rest % p == 0; rest /= p) target *= p;
    if (target == 1) return trivial_subgroup(G);

    const auto c = static_cast<std::uint32_t>(*G.index_of(cauchy_element(G, p)));
    std::vector<std::uint32_t> gens{c};
    Subgroup P = closure(G, gens);
    while (Int(static_cast<unsigned long>(P.order())) < target) {
        const Subgroup N = normalizer(G, P);
        bool extended = false;
        for (auto g : N.members()) {
            if (P.contains(g)) continue;
            // order of gP in N/P
            std::size_t k = 1;
            std::size_t x = g;
            while (!P.contains(x)) {
                x = G.mul(x, g);
                ++k;
            }
            if (k % p.get_ui() != 0) continue;
            std::size_t y = 0;  // g^(k/p) has order p modulo P
            for (std::size_t i = 0; i < k / p.get_ui(); ++i) y = G.mul(y, g);
            gens.push_back(static_cast<std::uint32_t>(y));
            P = closure(G, gens);
            extended = true;
            break;
        }
        if (!extended) throw InternalError("sylow: no p-element found in the normalizer");
    }
    return P;
}

/// True iff the only normal subgroups are 1 and G. Lattice enumeration
/// within `cap`; above it, normal closures of class representatives.
inline bool is_simple(const FiniteGroup& G, std::size_t cap = kDefaultSubgroupCap) {
    if (G.order() == 1) return false;
    if (G.order() <= cap) {
        int normal = 0;
        for (const auto& H : subgroups(G, cap))
            if (is_normal(G, H)) ++normal;
        return normal == 2;
    }
    for (const auto& cls : class_structure(G).classes) {
        if (cls.front() == 0) continue;
        if (!normal_closure(G, {cls.front()}).is_whole()) return false;
    }
    return true;
}

/// Same as is_simple above cap, usable at any size (cross-check route).
inline bool is_simple_by_normal_closures(const FiniteGroup& G) {
    if (G.order() == 1) return false;
    for (const auto& cls : class_structure(G).classes) {
        if (cls.front() == 0) continue;
        if (!normal_closure(G, {cls.front()}).is_whole()) return false;
    }
    return true;
}

/// Exhaustive isomorphism test by extending generator images; only sane
/// for small orders.
inline bool isomorphic(const AbstractGroup& A, const AbstractGroup& B) {
    const std::size_t m = A.order();
    if (m != B.order()) return false;
    if (A.is_abelian() != B.is_abelian()) return false;
    std::vector<std::size_t> ordA(m), ordB(m);
    for (std::size_t i = 0; i < m; ++i) {
        ordA[i] = A.element_order(i);
        ordB[i] = B.element_order(i);
    }
    {
        auto a = ordA, b = ordB;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    // Greedy generating set of A, largest element orders first.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return ordA[x] > ordA[y]; });
    auto span_of = [&](const std::vector<std::size_t>& gens) {
        std::vector<bool> in(m, false);
        std::vector<std::size_t> el{0};
        in[0] = true;
        for (std::size_t i = 0; i < el.size(); ++i)
            for (auto g : gens) {
                auto nx = A.mul(el[i], g);
                if (!in[nx]) {
                    in[nx] = true;
                    el.push_back(nx);
                }
            }
        return in;
    };
    std::vector<std::size_t> gens;
    {
        std::vector<bool> in = span_of(gens);
        for (auto x : idx) {
            if (in[x]) continue;
            gens.push_back(x);
            in = span_of(gens);
        }
    }
    std::vector<std::size_t> images(gens.size());
    auto try_map = [&]() {
        std::vector<std::size_t> phi(m, SIZE_MAX);
        std::vector<bool> used(m, false);
        phi[0] = 0;
        used[0] = true;
        std::vector<std::size_t> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto x = queue[i];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const auto y = A.mul(x, gens[k]);
                const auto fy = B.mul(phi[x], images[k]);
                if (phi[y] == SIZE_MAX) {
                    if (used[fy]) return false;
                    phi[y] = fy;
                    used[fy] = true;
                    queue.push_back(y);
                } else if (phi[y] != fy) {
                    return false;
                }
            }
        }
        return queue.size() == m;
    };
    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == gens.size()) return try_map();
        for (std::size_t b = 0; b < m; ++b) {
            if (ordB[b] != ordA[gens[k]]) continue;
            images[k] = b;
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    return search(search, 0);
}

inline bool isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
    return isomorphic(cayley_table(A), cayley_table(B));
}

namespace detail {

struct Fingerprint {
    std::size_t order;
    bool abelian;
    std::vector<std::size_t> element_orders;
    std::vector<std::size_t> class_sizes;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const FiniteGroup& G) {
    Fingerprint f{G.order(), is_abelian(G), {}, {}};
    for (const auto& p : G.elements()) f.element_orders.push_back(order_of(p).get_ui());
    std::sort(f.element_orders.begin(), f.element_orders.end());
    for (const auto& c : class_structure(G).classes) f.class_sizes.push_back(c.size());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    return f;
}

inline bool same_group(const FiniteGroup& G, const FiniteGroup& R) {
    if (G.order() != R.order()) return false;
    if (G.order() <= 24) return isomorphic(G, R);
    return fingerprint(G) == fingerprint(R);
}

} // namespace detail

/// Name of a small group: "C_n", "V4", "S_n", "A_n", "D_n" (order 2n) or
/// "group of order N". Exhaustive matching up to order 24, fingerprints above.
inline std::string identify(const FiniteGroup& G) {
    const std::size_t m = G.order();
    for (const auto& p : G.elements())
        if (order_of(p) == static_cast<unsigned long>(m)) return "C_" + std::to_string(m);
    if (m == 4) return "V4";
    unsigned long fact = 1;
    for (int n = 1; n <= 7 && fact <= m; ++n) {
        fact *= n;
        if (n >= 3 && fact == m && detail::same_group(G, symmetric_group(n))) return "S_" + std::to_string(n);
        if (n >= 4 && fact / 2 == m && detail::same_group(G, alternating_group(n))) return "A_" + std::to_string(n);
    }
    if (m % 2 == 0 && m >= 6 && m / 2 <= static_cast<std::size_t>(kMaxPermDegree) &&
        detail::same_group(G, dihedral_group(static_cast<int>(m / 2))))
        return "D_" + std::to_string(m / 2);
    return "group of order " + std::to_string(m);
}

} // namespace galoiskit
