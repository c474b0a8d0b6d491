#pragma once

// Generators for the explicit lower-bound systems: the 4g-gon family of
// 2g+1 pairwise-intersecting curves, its boundary duplications, the
// handle-glued closed systems, and the hyperelliptic stackings. Every
// generator emits a fully certified CurveSystem.

#include <stdexcept>
#include <string>
#include <vector>

#include "curvesys/curve_system.hpp"
#include "curvesys/gf2.hpp"
#include "curvesys/quotient.hpp"

namespace curvesys {

// Tag for curves produced by duplication: which member of the special
// family Y they parallel, and in which duplication round (0 = original).
struct GenerationTag {
    int base = 0;        // 1..2g+1
    int generation = 0;  // 0..n
};

namespace detail {

inline std::string pad(int value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s = "0" + s;
    return s;
}

inline int digits(int v) {
    int d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

}  // namespace detail

// The 4g-gon system: 2g+1 curves through one common point, every pair
// meeting exactly once. Classes are the canonical family; by the
// canonical-form result any valid assignment is symplectically equivalent
// to this one.
inline CurveSystem polygon_system(int g) {
    if (g < 1) throw std::invalid_argument("polygon_system: genus must be >= 1");
    auto fam = gf2::canonical_family(g);
    CurveSystem sys;
    sys.genus = g;
    sys.boundary = 0;
    sys.k = 1;
    const int n = 2 * g + 1;
    const int w = std::max(2, detail::digits(n));
    for (int i = 1; i <= n; ++i) {
        Curve c;
        c.id = "c" + detail::pad(i, w);
        c.homology = fam[static_cast<std::size_t>(i - 1)];
        c.provenance = "polygon g=" + std::to_string(g) + " i=" + std::to_string(i);
        sys.add_curve(std::move(c));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sys.add_intersection(i, j, 1);
    sys.normalize();
    return sys;
}

// Duplication system on S_{g,n}: (2g+1)(n+1) curves for g >= 2 (3n for
// g = 1, generations 1..n). Parallel duplicates of one base curve are
// disjoint; curves over distinct bases are straight lines of distinct
// slopes in the shared disc and cross exactly once.
inline CurveSystem boundary_system(int g, int n) {
    if (g == 1 && n == 0)
        throw std::invalid_argument(
            "boundary_system: (g,n) = (1,0) is the closed torus; use polygon_system(1)");
    if (g < 1 || n < 0) throw std::invalid_argument("boundary_system: need g >= 1 and n >= 0");
    if (n == 0) {
        // base case: the closed polygon system, tagged as generation 0
        CurveSystem sys = polygon_system(g);
        for (std::size_t i = 0; i < sys.curves.size(); ++i)
            sys.curves[i].provenance = "boundary g=" + std::to_string(g) + " n=0 base=" +
                                       std::to_string(i + 1) + " gen=0";
        return sys;
    }
    CurveSystem sys;
    sys.genus = g;
    sys.boundary = n;
    sys.k = 1;
    const int bases = 2 * g + 1;
    const int first_gen = g == 1 ? 1 : 0;
    const int wb = std::max(2, detail::digits(bases));
    const int wt = std::max(2, detail::digits(n));
    std::vector<GenerationTag> tags;
    for (int t = first_gen; t <= n; ++t) {
        for (int base = 1; base <= bases; ++base) {
            Curve c;
            c.id = "b" + detail::pad(base, wb) + ".t" + detail::pad(t, wt);
            c.provenance = "boundary g=" + std::to_string(g) + " n=" + std::to_string(n) +
                           " base=" + std::to_string(base) + " gen=" + std::to_string(t);
            sys.add_curve(std::move(c));
            tags.push_back({base, t});
        }
    }
    for (std::size_t i = 0; i < tags.size(); ++i)
        for (std::size_t j = i + 1; j < tags.size(); ++j)
            if (tags[i].base != tags[j].base) sys.add_intersection(i, j, 1);
    sys.normalize();
    return sys;
}

// Closed lower-bound system for g >= 4: take the duplication system on
// S_{m,2n} with m = floor(g/2), n = g - m, glue a handle across each
// boundary pair (2j-1, 2j), and add the n handle meridians. Size
// (2m+1)(2n+1) + n >= g^2 + (5/2)g.
//
// Class bookkeeping: embed the genus-m canonical family in the first 2m
// coordinates via iota. A duplicate of generation t and its base cobound
// an annulus through the ceil(t/2)-th handle, so their classes differ by
// that handle's meridian class a_{m + ceil(t/2)}; the meridians are the
// coordinate vectors a_{m+j} themselves. The a-block pairs to zero with
// itself and with the embedded block, so every intersection parity is
// preserved; each nontrivial class is used at most twice, by a parallel
// pair, which is disjoint.
inline CurveSystem closed_lower_system(int g) {
    if (g < 4)
        throw std::invalid_argument(
            "closed_lower_system: g must be >= 4 (use genus2/hyperelliptic paths below)");
    const int m = g % 2 == 0 ? g / 2 : (g - 1) / 2;
    const int n = g - m;
    auto fam = gf2::canonical_family(m);

    auto iota = [&](const gf2::Vector& v) {  // genus-m vector into first 2m coords
        gf2::Vector out(g);
        for (int b = 0; b < 2 * m; ++b) out.set_bit(b, v.bit(b));
        return out;
    };
    auto a_coord = [&](int u) {  // the a_{m+u} coordinate vector, u = 1..n
        gf2::Vector out(g);
        out.set_bit(2 * (m + u - 1), true);
        return out;
    };

    CurveSystem sys;
    sys.genus = g;
    sys.boundary = 0;
    sys.k = 1;
    const int bases = 2 * m + 1;
    const int gens = 2 * n;  // generations 0..2n
    const int wb = std::max(2, detail::digits(bases));
    const int wt = std::max(2, detail::digits(gens));
    std::vector<GenerationTag> tags;
    for (int t = 0; t <= gens; ++t) {
        for (int base = 1; base <= bases; ++base) {
            Curve c;
            c.id = "b" + detail::pad(base, wb) + ".t" + detail::pad(t, wt);
            gf2::Vector h = iota(fam[static_cast<std::size_t>(base - 1)]);
            if (t > 0) h ^= a_coord((t + 1) / 2);
            c.homology = h;
            c.provenance = "closed-lower g=" + std::to_string(g) + " m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + " base=" + std::to_string(base) +
                           " gen=" + std::to_string(t);
            sys.add_curve(std::move(c));
            tags.push_back({base, t});
        }
    }
    const int wh = std::max(2, detail::digits(n));
    for (int j = 1; j <= n; ++j) {
        Curve c;
        c.id = "h" + detail::pad(j, wh);
        c.homology = a_coord(j);
        c.provenance = "closed-lower g=" + std::to_string(g) + " handle=" + std::to_string(j);
        sys.add_curve(std::move(c));  // meridians are disjoint from everything
    }
    for (std::size_t i = 0; i < tags.size(); ++i)
        for (std::size_t j = i + 1; j < tags.size(); ++j)
            if (tags[i].base != tags[j].base) sys.add_intersection(i, j, 1);
    sys.normalize();
    return sys;
}

// Hyperelliptic system: the stacked triangulation on the 2g+2 Weierstrass
// vertices, lifted edge-by-edge; 3(2g+2) - 6 = 6g curves.
inline CurveSystem hyperelliptic_system(int g) {
    if (g < 2) throw std::invalid_argument("hyperelliptic_system: genus must be >= 2");
    CurveSystem sys = graph_to_system(stacked_triangulation(2 * g + 2), g);
    for (auto& c : sys.curves)
        c.provenance = "hyperelliptic g=" + std::to_string(g) + " " + c.provenance;
    return sys;
}

}  // namespace curvesys
