#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deckard/canonical.hpp"
#include "deckard/enumerate.hpp"
#include "deckard/graph.hpp"
#include "deckard/linalg.hpp"

namespace deckard {

// Guards for orbit expansion and exact linear algebra. Overridable per
// call; the defaults keep everything at desk scale.
inline constexpr int kOrbitExpansionCap = 9;
inline constexpr std::size_t kOrbitSizeCap = 1'000'000;
inline constexpr int kLinalgMaxN = 6;
inline constexpr int kLinalgMaxDegree = 8;
inline constexpr long long kSubsetEnumerationCap = 2'000'000;

// Sum of all distinct monomials in the S_n-orbit of x^rep. Stored by its
// canonical representative; these sums form a vector-space basis of the
// invariant ring.
struct OrbitSum {
    Multigraph rep;

    int n() const { return rep.n; }
    std::int64_t degree() const { return rep.degree(); }
    friend bool operator==(const OrbitSum& a, const OrbitSum& b) { return a.rep == b.rep; }
    friend bool operator<(const OrbitSum& a, const OrbitSum& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.rep < b.rep;
    }
};

inline OrbitSum make_orbit_sum(const Multigraph& m) { return OrbitSum{canonical_code(m).decode()}; }

// An invariant written in the orbit-sum basis: canonical representative ->
// rational coefficient, zero coefficients dropped.
struct InvariantPolynomial {
    int n = 0;
    std::map<Multigraph, Rational> terms;

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (const auto& [rep, c] : terms) d = std::max(d, rep.degree());
        return d;
    }
    friend bool operator==(const InvariantPolynomial& a, const InvariantPolynomial& b) = default;
};

// The multiplicity-1 monomial of a simple graph (0/1 exponent vector).
inline Multigraph monomial_of_graph(const LabeledGraph& g) {
    Multigraph m(g.n);
    for (auto [i, j] : g.edges) m.mult[pair_slot(i, j)] = 1;
    return m;
}

// ---------------------------------------------------------------------------
// Orbit expansion and evaluation.

inline std::vector<Multigraph> orbit_monomials(const Multigraph& m) {
    const int n = m.n;
    if (n > kOrbitExpansionCap)
        throw ResourceGuardError("orbit expansion capped at n=" + std::to_string(kOrbitExpansionCap));
    const int slots = static_cast<int>(m.mult.size());
    std::vector<Edge> pairs(slots);
    for (int s = 0; s < slots; ++s) pairs[s] = slot_pair(s);
    std::set<std::vector<std::int64_t>> images;
    std::vector<std::int64_t> img(slots);
    bool overflow = false;
    for_each_permutation(n, [&](const std::vector<int>& q) {
        if (overflow) return;
        for (int s = 0; s < slots; ++s) {
            auto [a, b] = pairs[s];
            img[s] = m.mult[GraphTraits<Multigraph>::source_slot(n, q, a, b)];
        }
        images.insert(img);
        if (images.size() > kOrbitSizeCap) overflow = true;
    });
    if (overflow) throw ResourceGuardError("orbit larger than the configured cap");
    std::vector<Multigraph> out;
    out.reserve(images.size());
    for (const auto& v : images) {
        Multigraph g(n);
        g.mult = v;
        out.push_back(std::move(g));
    }
    return out;
}

// Product of w[slot]^mult over the support of m; 0 as soon as a supported
// slot has weight 0.
inline Rational eval_monomial(const Multigraph& m, const WeightedGraph& w) {
    Rational value = 1;
    for (int s = 0; s < static_cast<int>(m.mult.size()); ++s) {
        const std::int64_t e = m.mult[s];
        if (e == 0) continue;
        if (w.w[s] == 0) return Rational(0);
        for (std::int64_t k = 0; k < e; ++k) value *= w.w[s];
    }
    return value;
}

// Direct evaluation: sum the monomial products over the distinct orbit.
inline Rational orbit_sum_eval(const OrbitSum& o, const WeightedGraph& w) {
    if (o.n() != w.n) throw ArgumentError("orbit sum and weighted graph disagree on n");
    Rational total = 0;
    for (const auto& m : orbit_monomials(o.rep)) total += eval_monomial(m, w);
    return total;
}

// Independent evaluation route: sweep the whole group and divide by the
// stabilizer order instead of deduplicating the orbit. Must agree with
// orbit_sum_eval; tests assert this.
inline Rational orbit_sum_eval_via_cosets(const OrbitSum& o, const WeightedGraph& w) {
    if (o.n() != w.n) throw ArgumentError("orbit sum and weighted graph disagree on n");
    const int n = o.n();
    if (n > kOrbitExpansionCap)
        throw ResourceGuardError("orbit expansion capped at n=" + std::to_string(kOrbitExpansionCap));
    const Multigraph& m = o.rep;
    const int slots = static_cast<int>(m.mult.size());
    std::vector<Edge> pairs(slots);
    for (int s = 0; s < slots; ++s) pairs[s] = slot_pair(s);
    Rational total = 0;
    std::uint64_t stabilizer = 0;
    std::vector<std::int64_t> img(slots);
    for_each_permutation(n, [&](const std::vector<int>& q) {
        bool fixes = true;
        for (int s = 0; s < slots; ++s) {
            auto [a, b] = pairs[s];
            img[s] = m.mult[GraphTraits<Multigraph>::source_slot(n, q, a, b)];
            fixes = fixes && img[s] == m.mult[s];
        }
        if (fixes) ++stabilizer;
        Rational value = 1;
        for (int s = 0; s < slots && value != 0; ++s) {
            if (img[s] == 0) continue;
            if (w.w[s] == 0) {
                value = 0;
                break;
            }
            for (std::int64_t k = 0; k < img[s]; ++k) value *= w.w[s];
        }
        total += value;
    });
    return total / Rational(stabilizer);
}

// ---------------------------------------------------------------------------
// Subgraph counting: two algebraically different routes, kept in agreement.

namespace detail {

inline LabeledGraph pad_to(const LabeledGraph& pattern, int n) {
    if (pattern.n > n) throw ArgumentError("pattern has more vertices than host");
    return LabeledGraph(n, pattern.edges);
}

inline long long binomial_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (long long i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return cap + 1;
    }
    return c;
}

}  // namespace detail

// Evaluate the orbit sum of the (padded) pattern monomial on the host read
// as a 0/1 point: this counts subgraphs of the host isomorphic to the
// pattern.
inline long long count_subgraphs_via_orbit_sum(const LabeledGraph& pattern, const LabeledGraph& host) {
    LabeledGraph padded = detail::pad_to(pattern, host.n);
    OrbitSum os = make_orbit_sum(monomial_of_graph(padded));
    Rational v = orbit_sum_eval(os, as_weighted(host));
    if (denominator(v) != 1) throw Error("internal: subgraph count is not an integer");
    return static_cast<long long>(numerator(v));
}

// Combinatorial route: enumerate edge subsets of the host of the right size
// and count those isomorphic to the pattern (as graphs on host.n vertices).
inline long long count_subgraphs_via_subsets(const LabeledGraph& pattern, const LabeledGraph& host,
                                             long long subset_cap = kSubsetEnumerationCap) {
    LabeledGraph padded = detail::pad_to(pattern, host.n);
    const int k = static_cast<int>(padded.edge_count());
    const int e = static_cast<int>(host.edge_count());
    if (detail::binomial_capped(e, k, subset_cap) > subset_cap)
        throw ResourceGuardError("edge-subset enumeration above the configured cap");

    std::vector<int> pattern_degrees = padded.degrees();
    std::sort(pattern_degrees.begin(), pattern_degrees.end());
    const auto pattern_code = canonical_code(padded);

    long long count = 0;
    std::vector<int> chosen;
    std::vector<int> degrees(host.n, 0);
    auto rec = [&](auto&& self, int next_edge, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> deg = degrees;
            std::sort(deg.begin(), deg.end());
            if (deg != pattern_degrees) return;
            std::vector<Edge> edges;
            edges.reserve(chosen.size());
            for (int idx : chosen) edges.push_back(host.edges[idx]);
            if (canonical_code(LabeledGraph(host.n, std::move(edges))) == pattern_code) ++count;
            return;
        }
        if (e - next_edge < remaining) return;
        for (int idx = next_edge; idx <= e - remaining; ++idx) {
            auto [i, j] = host.edges[idx];
            chosen.push_back(idx);
            ++degrees[i];
            ++degrees[j];
            self(self, idx + 1, remaining - 1);
            --degrees[i];
            --degrees[j];
            chosen.pop_back();
        }
    };
    rec(rec, 0, k);
    return count;
}

// Both routes, asserted equal. The subset route is skipped when the host is
// too dense for exhaustive subset enumeration.
inline long long count_subgraphs(const LabeledGraph& pattern, const LabeledGraph& host) {
    const long long via_orbit = count_subgraphs_via_orbit_sum(pattern, host);
    const int k = static_cast<int>(pattern.edge_count());
    const int e = static_cast<int>(host.edge_count());
    if (detail::binomial_capped(e, k, kSubsetEnumerationCap) <= kSubsetEnumerationCap) {
        const long long via_subsets = count_subgraphs_via_subsets(pattern, host);
        if (via_orbit != via_subsets)
            throw Error("internal: subgraph counting routes disagree (" + std::to_string(via_orbit) + " vs " +
                        std::to_string(via_subsets) + ")");
    }
    return via_orbit;
}

// Plain backtracking count of Hamiltonian cycles; no size cap.
inline long long hamiltonian_cycle_count_backtracking(const LabeledGraph& g) {
    if (g.n < 3) throw ArgumentError("Hamiltonian cycles need n >= 3");
    std::vector<std::uint64_t> adj(g.n, 0);
    for (auto [i, j] : g.edges) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    const std::uint64_t full = (std::uint64_t{1} << g.n) - 1;
    long long sequences = 0;
    auto dfs = [&](auto&& self, int v, std::uint64_t visited) -> void {
        if (visited == full) {
            if (adj[v] & 1) ++sequences;
            return;
        }
        std::uint64_t next = adj[v] & ~visited;
        while (next) {
            int u = std::countr_zero(next);
            next &= next - 1;
            self(self, u, visited | (std::uint64_t{1} << u));
        }
    };
    dfs(dfs, 0, 1);
    return sequences / 2;  // each cycle traversed in both directions
}

// Orbit-sum route (n <= 8) cross-checked against backtracking; beyond the
// orbit cap the combinatorial counter stands alone.
inline long long hamiltonian_cycle_count(const LabeledGraph& g) {
    if (g.n < 3) throw ArgumentError("Hamiltonian cycles need n >= 3");
    const long long direct = hamiltonian_cycle_count_backtracking(g);
    if (g.n <= 8) {
        std::vector<Edge> cycle_edges;
        for (int i = 0; i < g.n; ++i) cycle_edges.push_back(make_edge(i, (i + 1) % g.n));
        const long long via_orbit = count_subgraphs(LabeledGraph(g.n, std::move(cycle_edges)), g);
        if (via_orbit != direct)
            throw Error("internal: Hamiltonian counting routes disagree (" + std::to_string(via_orbit) +
                        " vs " + std::to_string(direct) + ")");
    }
    return direct;
}

// ---------------------------------------------------------------------------
// Bases of the graded pieces.

// Canonical representatives of all degree-d monomial orbits on n vertices
// (isomorphism classes of degree-d multigraphs), sorted.
inline std::vector<Multigraph> degree_class_reps(int n, int d) {
    if (n < 0 || d < 0) throw ArgumentError("negative arguments");
    if (n > kOrbitExpansionCap)
        throw ResourceGuardError("monomial enumeration capped at n=" + std::to_string(kOrbitExpansionCap));
    const int slots = pair_slot_count(n);
    std::set<Multigraph> reps;
    Multigraph m(n);
    if (slots == 0) {
        if (d == 0) reps.insert(m);
        return {reps.begin(), reps.end()};
    }
    auto rec = [&](auto&& self, int slot, std::int64_t remaining) -> void {
        if (slot == slots - 1) {
            m.mult[slot] = remaining;
            reps.insert(canonical_code(m).decode());
            m.mult[slot] = 0;
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            m.mult[slot] = v;
            self(self, slot + 1, remaining - v);
        }
        m.mult[slot] = 0;
    };
    rec(rec, 0, d);
    return {reps.begin(), reps.end()};
}

// Dimension of the degree-d graded piece of the invariant ring = number of
// monomial orbits of degree d.
inline std::size_t invariant_space_dimension(int n, int d, int max_n = kLinalgMaxN,
                                             int max_d = kLinalgMaxDegree) {
    if (n > max_n || d > max_d)
        throw ResourceGuardError("invariant_space_dimension capped at n=" + std::to_string(max_n) +
                                 ", d=" + std::to_string(max_d));
    return degree_class_reps(n, d).size();
}

// Orbit sums of multigraphs with at least one isolated vertex (supported on
// at most n-1 vertices), degrees 1..max_degree, in (degree, rep) order.
// These are exactly the invariants a deck determines.
inline std::vector<OrbitSum> isolated_vertex_orbit_sums_of_degree(int n, int d) {
    if (n < 2) throw ArgumentError("need n >= 2");
    if (d < 1) throw ArgumentError("need degree >= 1");
    std::vector<OrbitSum> out;
    const int small_slots = pair_slot_count(n - 1);
    for (const auto& rep_small : degree_class_reps(n - 1, d)) {
        Multigraph lifted(n);
        for (int s = 0; s < small_slots; ++s) lifted.mult[s] = rep_small.mult[s];
        out.push_back(make_orbit_sum(lifted));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<OrbitSum> isolated_vertex_orbit_sums(int n, int max_degree) {
    if (max_degree < 1) throw ArgumentError("need max_degree >= 1");
    std::vector<OrbitSum> out;
    for (int d = 1; d <= max_degree; ++d) {
        auto of_degree = isolated_vertex_orbit_sums_of_degree(n, d);
        out.insert(out.end(), of_degree.begin(), of_degree.end());
    }
    return out;
}

// First isolated-vertex orbit sum (in degree, then representative order)
// that takes different values on w1 and w2; absent if none exists up to the
// degree bound. Graphs with equal decks are never separated.
inline std::optional<OrbitSum> separate_by_isolated(const WeightedGraph& w1, const WeightedGraph& w2,
                                                    int max_degree) {
    if (w1.n != w2.n) throw ArgumentError("weighted graphs disagree on n");
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& o : isolated_vertex_orbit_sums_of_degree(w1.n, d)) {
            if (orbit_sum_eval(o, w1) != orbit_sum_eval(o, w2)) return o;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Products in the orbit-sum basis and graded span ranks.

inline InvariantPolynomial orbit_sum_polynomial(const OrbitSum& o) {
    InvariantPolynomial p;
    p.n = o.n();
    p.terms[o.rep] = 1;
    return p;
}

inline InvariantPolynomial constant_polynomial(int n, const Rational& c = 1) {
    InvariantPolynomial p;
    p.n = n;
    if (c != 0) p.terms[Multigraph(n)] = c;
    return p;
}

inline Rational evaluate(const InvariantPolynomial& p, const WeightedGraph& w) {
    if (p.n != w.n) throw ArgumentError("polynomial and weighted graph disagree on n");
    Rational total = 0;
    for (const auto& [rep, c] : p.terms) total += c * orbit_sum_eval(OrbitSum{rep}, w);
    return total;
}

namespace detail {

using MonomialMap = std::map<std::vector<std::int64_t>, Rational>;

inline MonomialMap monomials_of(const InvariantPolynomial& p) {
    MonomialMap mon;
    for (const auto& [rep, c] : p.terms) {
        for (const auto& m : orbit_monomials(rep)) mon[m.mult] = c;
    }
    return mon;
}

}  // namespace detail

// Exact product of two invariants, re-collected in the orbit-sum basis.
// Every monomial of one orbit must come out with the same coefficient; a
// violation would mean the expansion lost invariance and is reported.
inline InvariantPolynomial expand_product(const InvariantPolynomial& a, const InvariantPolynomial& b,
                                          int max_d = kLinalgMaxDegree) {
    if (a.n != b.n) throw ArgumentError("polynomials disagree on n");
    if (a.degree() + b.degree() > max_d)
        throw ResourceGuardError("product degree above the configured cap d=" + std::to_string(max_d));

    const auto mon_a = detail::monomials_of(a);
    const auto mon_b = detail::monomials_of(b);
    detail::MonomialMap product;
    std::vector<std::int64_t> key;
    for (const auto& [va, ca] : mon_a) {
        for (const auto& [vb, cb] : mon_b) {
            key = va;
            for (std::size_t s = 0; s < key.size(); ++s) key[s] += vb[s];
            product[key] += ca * cb;
        }
    }

    InvariantPolynomial out;
    out.n = a.n;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& [vec, coeff] : product) {
        if (seen.count(vec)) continue;
        Multigraph m(a.n);
        m.mult = vec;
        Multigraph rep = canonical_code(m).decode();
        for (const auto& img : orbit_monomials(rep)) {
            auto it = product.find(img.mult);
            const Rational v = it == product.end() ? Rational(0) : it->second;
            if (v != coeff) throw Error("internal: product expansion is not orbit-constant");
            seen.insert(img.mult);
        }
        if (coeff != 0) out.terms[rep] = coeff;
    }
    return out;
}

struct SpanRank {
    std::size_t rank = 0;
    std::size_t dimension = 0;
};

// Rank of the span of all degree-d products of family members inside the
// degree-d graded piece, over the rationals. family members must be
// homogeneous orbit sums of degree >= 1.
inline SpanRank span_rank(const std::vector<OrbitSum>& family, int n, int d, int max_n = kLinalgMaxN,
                          int max_d = kLinalgMaxDegree) {
    if (n > max_n || d > max_d)
        throw ResourceGuardError("span_rank capped at n=" + std::to_string(max_n) + ", d=" +
                                 std::to_string(max_d));
    if (d < 1) throw ArgumentError("need degree >= 1");
    for (const auto& o : family) {
        if (o.n() != n) throw ArgumentError("family member has wrong n");
        if (o.degree() < 1) throw ArgumentError("family members must have degree >= 1");
    }

    const auto basis = degree_class_reps(n, d);
    std::map<std::vector<std::int64_t>, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i].mult] = i;

    std::vector<std::vector<Integer>> rows;
    auto emit = [&](const InvariantPolynomial& p) {
        std::vector<Integer> row(basis.size(), 0);
        for (const auto& [rep, c] : p.terms) {
            if (denominator(c) != 1) throw Error("internal: non-integer coefficient in an orbit-sum product");
            auto it = column.find(rep.mult);
            if (it == column.end()) throw Error("internal: product term outside the degree-d basis");
            row[it->second] = numerator(c);
        }
        rows.push_back(std::move(row));
    };

    // Multisets of family members with degrees summing to d; the partial
    // product is carried down the recursion.
    auto rec = [&](auto&& self, std::size_t from, int remaining, const InvariantPolynomial& acc) -> void {
        if (remaining == 0) {
            emit(acc);
            return;
        }
        for (std::size_t i = from; i < family.size(); ++i) {
            if (family[i].degree() > remaining) continue;
            self(self, i, remaining - static_cast<int>(family[i].degree()),
                 expand_product(acc, orbit_sum_polynomial(family[i]), max_d));
        }
    };
    rec(rec, 0, d, constant_polynomial(n));

    return SpanRank{integer_matrix_rank(std::move(rows)), basis.size()};
}

// Families used by the span checks.

// One orbit sum per nonempty simple graph class on n vertices with at most
// max_degree edges.
inline std::vector<OrbitSum> simple_graph_orbit_sums(int n, int max_degree,
                                                     int enumeration_cap = kEnumerationCap) {
    std::vector<OrbitSum> out;
    for (const auto& cls : enumerate_nonisomorphic(n, false, enumeration_cap)) {
        LabeledGraph g = cls.decode();
        const auto e = static_cast<std::int64_t>(g.edge_count());
        if (e < 1 || e > max_degree) continue;
        out.push_back(make_orbit_sum(monomial_of_graph(g)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every orbit sum of degree 1..max_degree: the full basis family.
inline std::vector<OrbitSum> all_orbit_sums(int n, int max_degree) {
    std::vector<OrbitSum> out;
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& rep : degree_class_reps(n, d)) out.push_back(OrbitSum{rep});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace deckard
