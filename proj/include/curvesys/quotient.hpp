#pragma once

// The hyperelliptic quotient model: systems of non-separating curves on a
// genus-g surface drawn as simple graphs on the 2g+2 Weierstrass vertices.
// One curve per edge, two curves intersect exactly when their edges share
// a vertex, and homology classes come from the even-subset model.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesys/bitset.hpp"
#include "curvesys/curve_system.hpp"
#include "curvesys/gf2.hpp"

namespace curvesys {

struct QuotientGraph {
    int num_vertices = 0;                // Weierstrass vertices, labeled 1..num_vertices
    std::set<std::pair<int, int>> edges;  // i < j

    QuotientGraph() = default;
    explicit QuotientGraph(int n) : num_vertices(n) {
        if (n < 1) throw std::invalid_argument("QuotientGraph: need at least one vertex");
    }

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("QuotientGraph: no loops");
        if (i < 1 || j < 1 || i > num_vertices || j > num_vertices)
            throw std::invalid_argument("QuotientGraph: vertex out of range");
        if (j < i) std::swap(i, j);
        edges.insert({i, j});
    }

    bool has_edge(int i, int j) const {
        if (j < i) std::swap(i, j);
        return edges.count({i, j}) > 0;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [i, j] : edges)
            if (i == v || j == v) ++d;
        return d;
    }

    std::vector<int> degree_sequence() const {  // descending
        std::vector<int> d;
        for (int v = 1; v <= num_vertices; ++v) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    // 0-based adjacency bitmasks; only valid for <= 64 vertices.
    std::vector<std::uint64_t> adjacency_masks() const {
        std::vector<std::uint64_t> adj(num_vertices, 0);
        for (const auto& [i, j] : edges) {
            adj[i - 1] |= std::uint64_t{1} << (j - 1);
            adj[j - 1] |= std::uint64_t{1} << (i - 1);
        }
        return adj;
    }

    bool operator==(const QuotientGraph& o) const {
        return num_vertices == o.num_vertices && edges == o.edges;
    }
};

// ---------------------------------------------------------------------------
// Planarity by Kuratowski exclusion: a graph is planar iff it contains no
// subdivision of K5 or K3,3. Exhaustive over branch-vertex choices with
// backtracking over internally-disjoint connecting paths; exact, and fast
// at the <= 12 vertex sizes this project enumerates.

namespace planarity_detail {

struct SubdivisionSearch {
    const std::vector<std::uint64_t>& adj;
    int n;
    std::uint64_t branch_mask = 0;
    std::vector<std::pair<int, int>> pairs;

    bool connect(std::size_t idx, std::uint64_t used) const {
        if (idx == pairs.size()) return true;
        auto [u, v] = pairs[idx];
        return path_dfs(u, v, idx, used, 0);
    }

    // Extend a path from cur toward target using free non-branch internals.
    bool path_dfs(int cur, int target, std::size_t idx, std::uint64_t used,
                  std::uint64_t internals) const {
        if ((adj[cur] >> target) & 1)
            if (connect(idx + 1, used | internals)) return true;
        std::uint64_t options = adj[cur] & ~used & ~internals & ~branch_mask;
        while (options) {
            int w = Bitset::ctz64(options);
            options &= options - 1;
            if (path_dfs(w, target, idx, used, internals | (std::uint64_t{1} << w))) return true;
        }
        return false;
    }

    // Necessary condition: every required pair must at least be connected
    // when the other branch vertices are deleted.
    bool pairs_connected() const {
        for (auto [u, v] : pairs) {
            std::uint64_t blocked = branch_mask & ~(std::uint64_t{1} << u) &
                                    ~(std::uint64_t{1} << v);
            std::uint64_t reached = std::uint64_t{1} << u;
            std::uint64_t frontier = reached;
            while (frontier) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int x = Bitset::ctz64(f);
                    f &= f - 1;
                    next |= adj[x] & ~reached & ~blocked;
                }
                reached |= next;
                frontier = next;
            }
            if (!((reached >> v) & 1)) return false;
        }
        return true;
    }
};

inline bool has_k5_subdivision(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (Bitset::popcount64(adj[v]) >= 4) cand.push_back(v);
    if (cand.size() < 5) return false;
    std::vector<int> b(5);
    // iterate 5-subsets of cand
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t start) -> bool {
        if (pos == 5) {
            SubdivisionSearch s{adj, n};
            for (int v : b) s.branch_mask |= std::uint64_t{1} << v;
            for (int x = 0; x < 5; ++x)
                for (int y = x + 1; y < 5; ++y) s.pairs.emplace_back(b[x], b[y]);
            return s.pairs_connected() && s.connect(0, s.branch_mask);
        }
        for (std::size_t t = start; t < cand.size(); ++t) {
            b[pos] = cand[t];
            if (rec(pos + 1, t + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

inline bool has_k33_subdivision(const std::vector<std::uint64_t>& adj, int n) {
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (Bitset::popcount64(adj[v]) >= 3) cand.push_back(v);
    if (cand.size() < 6) return false;
    std::vector<int> b(6);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t start) -> bool {
        if (pos == 6) {
            // bipartitions with b[0] on the left: choose its two partners
            for (int x = 1; x < 6; ++x)
                for (int y = x + 1; y < 6; ++y) {
                    SubdivisionSearch s{adj, n};
                    for (int v : b) s.branch_mask |= std::uint64_t{1} << v;
                    std::vector<int> left{b[0], b[x], b[y]}, right;
                    for (int t = 1; t < 6; ++t)
                        if (t != x && t != y) right.push_back(b[t]);
                    for (int l : left)
                        for (int r : right) s.pairs.emplace_back(l, r);
                    if (s.pairs_connected() && s.connect(0, s.branch_mask)) return true;
                }
            return false;
        }
        for (std::size_t t = start; t < cand.size(); ++t) {
            b[pos] = cand[t];
            if (rec(pos + 1, t + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace planarity_detail

// Exact for any graph that fits in the 64-vertex masks; desk-scale speed is
// guaranteed up to 12 vertices (Euler prefilter plus exhaustive K5/K3,3
// subdivision exclusion).
inline bool is_planar(const QuotientGraph& g) {
    const int n = g.num_vertices;
    if (n > 64) throw std::invalid_argument("is_planar: at most 64 vertices");
    if (n <= 4) return true;
    if (static_cast<long long>(g.edges.size()) > 3LL * n - 6) return false;  // Euler bound
    auto adj = g.adjacency_masks();
    if (planarity_detail::has_k5_subdivision(adj, n)) return false;
    if (planarity_detail::has_k33_subdivision(adj, n)) return false;
    return true;
}

// Intersection parity of the curves through Weierstrass point pairs e1, e2:
// |e1 n e2| mod 2.
inline int weierstrass_pairing(std::pair<int, int> e1, std::pair<int, int> e2) {
    auto check = [](std::pair<int, int> e) {
        if (e.first < 1 || e.second < 1 || e.first == e.second)
            throw std::invalid_argument("weierstrass_pairing: need two distinct positive labels");
    };
    check(e1);
    check(e2);
    int shared = 0;
    if (e1.first == e2.first || e1.first == e2.second) ++shared;
    if (e1.second == e2.first || e1.second == e2.second) ++shared;
    return shared % 2;
}

// Planar triangulation on v vertices built by stacking: start from K4 and
// repeatedly place a vertex inside a face, joined to its three corners.
// Faces are consumed in FIFO order, so early stackings land in distinct
// faces; stacked_triangulation(6) is the doubly stellated tetrahedron.
inline QuotientGraph stacked_triangulation(int v) {
    if (v < 4) throw std::invalid_argument("stacked_triangulation: need at least 4 vertices");
    QuotientGraph g(v);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) g.add_edge(i, j);
    std::queue<std::array<int, 3>> faces;
    faces.push({1, 2, 3});
    faces.push({1, 2, 4});
    faces.push({1, 3, 4});
    faces.push({2, 3, 4});
    for (int w = 5; w <= v; ++w) {
        auto f = faces.front();
        faces.pop();
        for (int c : f) g.add_edge(c, w);
        faces.push({f[0], f[1], w});
        faces.push({f[0], f[2], w});
        faces.push({f[1], f[2], w});
    }
    return g;
}

// ---------------------------------------------------------------------------
// Homology classes from the even-subset model. Even subsets of the 2g+2
// Weierstrass points, modulo complementation, form a 2g-dimensional space
// with pairing |S n T| mod 2. Running symplectic Gram-Schmidt on the chain
// basis {t, t+1}, t = 1..2g, gives an abstract symplectic basis (E_i, F_i);
// the pairing-preserving map to (Z/2Z)^{2g} reads off coordinates:
//   phi(S) has a_i = (S, F_i) and b_i = (S, E_i).

class WeierstrassHomology {
public:
    explicit WeierstrassHomology(int genus) : genus_(genus), points_(2 * genus + 2) {
        if (genus < 1 || genus > gf2::kMaxGenus)
            throw std::invalid_argument("WeierstrassHomology: genus out of range");
        std::vector<Bitset> chain;
        for (int t = 1; t <= 2 * genus; ++t) {
            Bitset c(points_);
            c.set(t - 1);
            c.set(t);
            chain.push_back(std::move(c));
        }
        auto pair_fn = [](const Bitset& a, const Bitset& b) {
            return static_cast<int>((a & b).count() & 1);
        };
        auto add_fn = [](const Bitset& a, const Bitset& b) { return a ^ b; };
        auto dec = gf2::symplectic_span_decompose(chain, pair_fn, add_fn);
        if (!dec.radical.empty() || dec.pairs.size() != static_cast<std::size_t>(genus))
            throw std::logic_error("WeierstrassHomology: chain basis failed to pair up");
        pairs_ = std::move(dec.pairs);
    }

    // Class of an arbitrary even subset of the Weierstrass points.
    gf2::Vector map_subset(const Bitset& s) const {
        gf2::Vector out(genus_);
        for (int i = 0; i < genus_; ++i) {
            const auto& [e, f] = pairs_[static_cast<std::size_t>(i)];
            out.set_bit(2 * i, ((s & f).count() & 1) != 0);
            out.set_bit(2 * i + 1, ((s & e).count() & 1) != 0);
        }
        return out;
    }

    // Class of the curve through Weierstrass points i and j (1-based).
    gf2::Vector edge_class(int i, int j) const {
        if (i < 1 || j < 1 || i > points_ || j > points_ || i == j)
            throw std::invalid_argument("WeierstrassHomology: bad Weierstrass pair");
        Bitset s(points_);
        s.set(i - 1);
        s.set(j - 1);
        return map_subset(s);
    }

    int genus() const { return genus_; }
    int points() const { return points_; }

private:
    int genus_;
    int points_;
    std::vector<std::pair<Bitset, Bitset>> pairs_;
};

// One curve per edge: curves meet once exactly when their edges share a
// Weierstrass point (planarity rules out other crossings). The result
// passes the closed-system verifier checks by construction.
inline CurveSystem graph_to_system(const QuotientGraph& g, int genus) {
    if (g.num_vertices != 2 * genus + 2)
        throw std::invalid_argument("graph_to_system: need 2g+2 Weierstrass vertices");
    if (static_cast<long long>(g.edges.size()) > 3LL * g.num_vertices - 6)
        throw std::invalid_argument("graph_to_system: graph violates the planar edge bound");
    // Full Kuratowski check in the guaranteed regime; above it the caller's
    // construction certifies planarity (generators only emit stackings).
    if (g.num_vertices <= 12 && !is_planar(g))
        throw std::invalid_argument("graph_to_system: graph is not planar");

    WeierstrassHomology hom(genus);
    CurveSystem sys;
    sys.genus = genus;
    sys.boundary = 0;
    sys.k = 1;

    int width = g.num_vertices >= 100 ? 3 : 2;
    auto label = [&](int v) {
        std::string s = std::to_string(v);
        while (static_cast<int>(s.size()) < width) s = "0" + s;
        return s;
    };

    std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    for (const auto& [i, j] : edges) {
        Curve c;
        c.id = "e" + label(i) + "-" + label(j);
        c.homology = hom.edge_class(i, j);
        c.provenance = "quotient edge {" + std::to_string(i) + "," + std::to_string(j) + "}";
        sys.add_curve(std::move(c));
    }
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (weierstrass_pairing(edges[a], edges[b]) == 1) sys.add_intersection(a, b, 1);
    sys.normalize();
    return sys;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration behind N(1,2) = 12: maximum planar graphs on the
// six labeled Weierstrass vertices, classified up to graph isomorphism.

struct Genus2MaxClass {
    QuotientGraph representative;
    std::vector<int> degree_sequence;  // descending
    long long labeled_count = 0;
    int automorphisms = 0;
    bool three_connected = false;
};

struct Genus2Enumeration {
    int max_edges = 0;
    long long labeled_count = 0;
    std::vector<Genus2MaxClass> classes;
};

namespace genus2_detail {

// K6 edge slots in lexicographic order.
inline const std::array<std::pair<int, int>, 15>& k6_edges() {
    static const std::array<std::pair<int, int>, 15> e = [] {
        std::array<std::pair<int, int>, 15> out{};
        std::size_t t = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) out[t++] = {i, j};
        return out;
    }();
    return e;
}

inline QuotientGraph graph_from_mask(std::uint32_t mask) {
    QuotientGraph g(6);
    for (std::size_t t = 0; t < 15; ++t)
        if ((mask >> t) & 1) g.add_edge(k6_edges()[t].first, k6_edges()[t].second);
    return g;
}

inline std::uint32_t permute_mask(std::uint32_t mask, const std::array<int, 6>& perm) {
    std::uint32_t out = 0;
    for (std::size_t t = 0; t < 15; ++t) {
        if (!((mask >> t) & 1)) continue;
        auto [i, j] = k6_edges()[t];
        int a = perm[i - 1], b = perm[j - 1];
        if (a > b) std::swap(a, b);
        std::size_t slot = 0;
        for (; slot < 15; ++slot)
            if (k6_edges()[slot] == std::make_pair(a, b)) break;
        out |= std::uint32_t{1} << slot;
    }
    return out;
}

inline bool three_connected6(const QuotientGraph& g) {
    auto adj = g.adjacency_masks();
    auto connected_without = [&](std::uint64_t removed) {
        std::uint64_t alive = ((std::uint64_t{1} << 6) - 1) & ~removed;
        if (!alive) return true;
        std::uint64_t start = alive & (~alive + 1);
        std::uint64_t reached = start, frontier = start;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int x = Bitset::ctz64(f);
                f &= f - 1;
                next |= adj[x] & alive & ~reached;
            }
            reached |= next;
            frontier = next;
        }
        return reached == alive;
    };
    if (!connected_without(0)) return false;
    for (int u = 0; u < 6; ++u) {
        if (!connected_without(std::uint64_t{1} << u)) return false;
        for (int v = u + 1; v < 6; ++v)
            if (!connected_without((std::uint64_t{1} << u) | (std::uint64_t{1} << v)))
                return false;
    }
    return true;
}

}  // namespace genus2_detail

// Enumerates all graphs on six labeled vertices, finds the maximum planar
// edge count and the isomorphism classes of the maxima. With the Euler
// prefilter only 12-edge candidates (C(15,12) = 455) are tested; without
// it the 13..15-edge subsets are run through the full planarity test as
// a cross-validation.
inline Genus2Enumeration enumerate_max_systems_genus2(bool euler_prefilter = true) {
    Genus2Enumeration out;
    for (int e = euler_prefilter ? 12 : 15; e >= 0; --e) {
        std::vector<std::uint32_t> planar_masks;
        for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
            if (Bitset::popcount64(mask) != e) continue;
            if (is_planar(genus2_detail::graph_from_mask(mask))) planar_masks.push_back(mask);
        }
        if (planar_masks.empty()) continue;
        out.max_edges = e;
        out.labeled_count = static_cast<long long>(planar_masks.size());

        std::map<std::uint32_t, std::pair<std::uint32_t, long long>> by_canon;  // canon -> (rep, count)
        std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
        for (std::uint32_t mask : planar_masks) {
            std::uint32_t canon = mask;
            std::array<int, 6> p = perm;
            do {
                canon = std::min(canon, genus2_detail::permute_mask(mask, p));
            } while (std::next_permutation(p.begin(), p.end()));
            auto it = by_canon.find(canon);
            if (it == by_canon.end())
                by_canon[canon] = {mask, 1};
            else
                it->second.second += 1;
        }
        for (const auto& [canon, info] : by_canon) {
            Genus2MaxClass cls;
            cls.representative = genus2_detail::graph_from_mask(canon);
            cls.degree_sequence = cls.representative.degree_sequence();
            cls.labeled_count = info.second;
            std::array<int, 6> p = perm;
            int aut = 0;
            do {
                if (genus2_detail::permute_mask(canon, p) == canon) ++aut;
            } while (std::next_permutation(p.begin(), p.end()));
            cls.automorphisms = aut;
            cls.three_connected = genus2_detail::three_connected6(cls.representative);
            out.classes.push_back(std::move(cls));
        }
        break;
    }
    return out;
}

}  // namespace curvesys
