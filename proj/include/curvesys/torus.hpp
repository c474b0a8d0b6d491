#pragma once

// Curves on the torus as primitive slope classes (p, q), with geometric
// intersection number |p1 q2 - p2 q1|, and the exhaustive search for
// maximum k-systems within a height bound.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesys/clique.hpp"
#include "curvesys/curve_system.hpp"

namespace curvesys {

struct TorusCurve {
    long long p = 0, q = 0;

    bool operator==(const TorusCurve& o) const { return p == o.p && q == o.q; }
    std::string to_string() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

// Canonical representative of {(p,q), (-p,-q)}: p > 0, or p = 0 and q = 1.
inline TorusCurve make_torus_curve(long long p, long long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("torus curve: (0,0) is not a curve");
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
        throw std::invalid_argument("torus curve: (p,q) must be coprime");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

inline long long torus_intersection(const TorusCurve& c1, const TorusCurve& c2) {
    // re-validate; all public constructors normalize, but be strict here
    make_torus_curve(c1.p, c1.q);
    make_torus_curve(c2.p, c2.q);
    return std::abs(c1.p * c2.q - c2.p * c1.q);
}

// All normalized primitive curves with |p|, |q| <= bound, in slope order
// (q/p ascending, vertical class (0,1) last). Deterministic.
inline std::vector<TorusCurve> enumerate_torus_curves(long long bound) {
    if (bound < 1) throw std::invalid_argument("enumerate_torus_curves: bound must be >= 1");
    std::vector<TorusCurve> out;
    for (long long p = 1; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q)
            if (std::gcd(p, std::abs(q)) == 1) out.push_back({p, q});
    std::sort(out.begin(), out.end(), [](const TorusCurve& a, const TorusCurve& b) {
        return a.q * b.p < b.q * a.p;  // exact slope comparison, p > 0
    });
    out.push_back({0, 1});
    return out;
}

struct TorusSearchOptions {
    // Prune with the known bound N(1,k) <= 2k+3; off by default so the
    // search is an independent oracle for that bound.
    bool jmm_cutoff = false;
    unsigned threads = 1;
};

struct TorusSearchResult {
    std::size_t size = 0;
    std::vector<TorusCurve> witness;
};

// Maximum set of distinct curves within the height bound with pairwise
// intersection at most k: a maximum clique in the compatibility graph.
// The result is a lower bound for N(1,k); for k = 1 it is exact (= 3)
// at any bound >= 1.
inline TorusSearchResult search_torus(int k, long long bound, TorusSearchOptions opts = {}) {
    if (k < 1) throw std::invalid_argument("search_torus: k must be >= 1");
    auto curves = enumerate_torus_curves(bound);
    const std::size_t n = curves.size();
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (torus_intersection(curves[i], curves[j]) <= k) {
                adj[i].set(j);
                adj[j].set(i);
            }
    CliqueOptions copts;
    if (opts.jmm_cutoff) copts.stop_at = static_cast<std::size_t>(2 * k + 3);
    copts.threads = opts.threads;
    CliqueResult res = max_clique(adj, copts);
    TorusSearchResult out;
    out.size = res.size;
    for (std::size_t i : res.members) out.witness.push_back(curves[i]);
    return out;
}

// Export as a genus-1 closed system; the class of (p,q) is (p mod 2, q mod 2),
// which is nonzero since p, q are coprime. Intersection parity then matches
// the symplectic pairing automatically (det mod 2).
inline CurveSystem torus_system(const std::vector<TorusCurve>& curves, unsigned k) {
    CurveSystem sys;
    sys.genus = 1;
    sys.boundary = 0;
    sys.k = k;
    for (const auto& c : curves) {
        make_torus_curve(c.p, c.q);  // validate
        gf2::Vector h(1);
        h.set_bit(0, (c.p & 1) != 0);
        h.set_bit(1, (c.q & 1) != 0);
        sys.add_curve({c.to_string(), h, "torus " + c.to_string()});
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            long long cnt = torus_intersection(curves[i], curves[j]);
            if (cnt > 0) sys.add_intersection(i, j, static_cast<unsigned>(cnt));
        }
    sys.normalize();
    return sys;
}

}  // namespace curvesys
