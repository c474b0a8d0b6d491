#pragma once

// Data model for curve systems: labeled curves with optional Z/2Z-homology
// classes and a sparse symmetric intersection matrix, plus the verifier
// checks. Curves are abstract labels with certified data; nothing here
// decides isotopy.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesys/clique.hpp"
#include "curvesys/gf2.hpp"

namespace curvesys {

// Malformed data (as opposed to a failed verification check). `location`
// is a JSON-path-style position when the error comes from a document.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg, std::string loc = "")
        : std::runtime_error(loc.empty() ? msg : msg + " at " + loc), location(std::move(loc)) {}
    std::string location;
};

struct Curve {
    std::string id;
    std::optional<gf2::Vector> homology;
    std::string provenance;

    bool operator==(const Curve& o) const {
        return id == o.id && homology == o.homology && provenance == o.provenance;
    }
};

class CurveSystem {
public:
    int genus = 1;
    int boundary = 0;
    unsigned k = 1;  // declared intersection bound; 0 expresses a 0-system
    std::vector<Curve> curves;

    struct Entry {
        std::uint32_t i, j;  // i < j
        std::uint32_t count;
    };

    std::size_t size() const { return curves.size(); }

    void add_curve(Curve c) { curves.push_back(std::move(c)); }

    void add_intersection(std::size_t i, std::size_t j, unsigned count) {
        if (i == j) throw FormatError("self-intersection entry (diagonal is implicitly 0)");
        if (i > j) std::swap(i, j);
        entries_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                            static_cast<std::uint32_t>(count)});
        sorted_ = false;
    }

    // Sorts the sparse entries, drops zeros, rejects duplicate pairs.
    void normalize() {
        if (!std::is_sorted(entries_.begin(), entries_.end(), entry_less))
            std::sort(entries_.begin(), entries_.end(), entry_less);
        std::vector<Entry> kept;
        kept.reserve(entries_.size());
        for (const Entry& e : entries_) {
            if (!kept.empty() && kept.back().i == e.i && kept.back().j == e.j) {
                if (kept.back().count != e.count)
                    throw FormatError("duplicate intersection pair with conflicting counts");
                continue;  // harmless duplicate
            }
            if (e.count != 0) kept.push_back(e);
        }
        entries_ = std::move(kept);
        sorted_ = true;
    }

    const std::vector<Entry>& intersections() const {
        require_normalized();
        return entries_;
    }

    unsigned count_between(std::size_t i, std::size_t j) const {
        require_normalized();
        if (i == j) return 0;
        if (i > j) std::swap(i, j);
        Entry probe{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0};
        auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, entry_less);
        if (it != entries_.end() && it->i == probe.i && it->j == probe.j) return it->count;
        return 0;
    }

    std::optional<std::size_t> index_of(const std::string& id) const {
        for (std::size_t t = 0; t < curves.size(); ++t)
            if (curves[t].id == id) return t;
        return std::nullopt;
    }

    // Structural validity, separate from the verifier's checks: indices in
    // range, unique ids, homology classes present exactly when the surface
    // is closed and of the right dimension.
    void validate_structure() const {
        if (genus < 1) throw FormatError("genus must be >= 1");
        if (boundary < 0) throw FormatError("boundary must be >= 0");
        require_normalized();
        std::set<std::string> ids;
        for (std::size_t t = 0; t < curves.size(); ++t) {
            const Curve& c = curves[t];
            if (c.id.empty()) throw FormatError("empty curve id");
            if (!ids.insert(c.id).second) throw FormatError("duplicate curve id '" + c.id + "'");
            if (boundary == 0) {
                if (!c.homology)
                    throw FormatError("closed system requires a homology class on '" + c.id + "'");
                if (c.homology->genus() != genus)
                    throw FormatError("homology class of '" + c.id + "' has wrong dimension");
            } else if (c.homology) {
                throw FormatError("system with boundary must not carry homology classes ('" +
                                  c.id + "')");
            }
        }
        for (const Entry& e : entries_) {
            if (e.i >= curves.size() || e.j >= curves.size() || e.i >= e.j)
                throw FormatError("intersection entry with malformed indices");
        }
    }

    // Structural equality, insensitive to curve order.
    bool operator==(const CurveSystem& o) const {
        if (genus != o.genus || boundary != o.boundary || k != o.k ||
            curves.size() != o.curves.size())
            return false;
        std::map<std::string, const Curve*> mine, theirs;
        for (const Curve& c : curves) mine[c.id] = &c;
        for (const Curve& c : o.curves) theirs[c.id] = &c;
        if (mine.size() != curves.size() || theirs.size() != o.curves.size()) return false;
        for (const auto& [id, c] : mine) {
            auto it = theirs.find(id);
            if (it == theirs.end() || !(*c == *it->second)) return false;
        }
        auto pairs = [](const CurveSystem& s) {
            std::map<std::pair<std::string, std::string>, unsigned> m;
            for (const Entry& e : s.intersections()) {
                std::string a = s.curves[e.i].id, b = s.curves[e.j].id;
                if (b < a) std::swap(a, b);
                m[{a, b}] = e.count;
            }
            return m;
        };
        return pairs(*this) == pairs(o);
    }

private:
    static bool entry_less(const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    void require_normalized() const {
        if (!sorted_) throw std::logic_error("CurveSystem: normalize() before reading");
    }

    std::vector<Entry> entries_;
    bool sorted_ = true;
};

// ---------------------------------------------------------------------------
// Verification reports.

struct CheckEntry {
    std::string check;
    bool passed = true;
    std::string note;                    // computed quantities, bounds, ...
    std::vector<std::string> witnesses;  // offending pairs/classes on failure
    std::vector<std::string> warnings;   // non-failing observations
};

struct VerificationReport {
    std::vector<CheckEntry> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed ? "pass" : "FAIL") << "  " << c.check;
            if (!c.note.empty()) os << "  (" << c.note << ")";
            os << "\n";
            for (const auto& w : c.witnesses) os << "      witness: " << w << "\n";
            for (const auto& w : c.warnings) os << "      warning: " << w << "\n";
        }
        return os.str();
    }
};

namespace detail {
inline std::string pair_label(const CurveSystem& sys, std::size_t i, std::size_t j) {
    return "(" + sys.curves[i].id + ", " + sys.curves[j].id + ")";
}
}  // namespace detail

// Checks the declared k bound, id uniqueness and count sanity.
inline VerificationReport verify_k_system(const CurveSystem& sys) {
    sys.validate_structure();
    VerificationReport rep;

    CheckEntry kb{"k-bound"};
    kb.note = "k = " + std::to_string(sys.k);
    for (const auto& e : sys.intersections()) {
        if (e.count > sys.k) {
            kb.passed = false;
            kb.witnesses.push_back(detail::pair_label(sys, e.i, e.j) + " count " +
                                   std::to_string(e.count) + " > " + std::to_string(sys.k));
        }
    }
    rep.checks.push_back(std::move(kb));

    CheckEntry uniq{"ids-unique"};
    std::set<std::string> seen;
    for (const auto& c : sys.curves)
        if (!seen.insert(c.id).second) {
            uniq.passed = false;
            uniq.witnesses.push_back(c.id);
        }
    rep.checks.push_back(std::move(uniq));

    // counts are stored unsigned, so nonnegativity is structural
    rep.checks.push_back(CheckEntry{"counts-nonnegative"});
    return rep;
}

// Necessary condition from the homology model: geometric count mod 2 must
// equal the symplectic pairing of the classes, for every pair.
inline VerificationReport verify_homology_consistency(const CurveSystem& sys) {
    sys.validate_structure();
    if (sys.boundary != 0)
        throw std::invalid_argument("verify_homology_consistency: requires a closed system");
    VerificationReport rep;
    CheckEntry c{"homology-parity"};
    const std::size_t n = sys.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int geo = static_cast<int>(sys.count_between(i, j) % 2);
            int alg = gf2::pairing(*sys.curves[i].homology, *sys.curves[j].homology);
            if (geo != alg) {
                c.passed = false;
                c.witnesses.push_back(detail::pair_label(sys, i, j) + " count mod 2 = " +
                                      std::to_string(geo) + ", pairing = " + std::to_string(alg));
            }
        }
    }
    c.note = std::to_string(n * (n - 1) / 2) + " pairs checked";
    rep.checks.push_back(std::move(c));
    return rep;
}

// Per-class budget: in a closed 1-system, each nontrivial class carries at
// most g-1 curves (genus >= 2), and curves sharing a class are disjoint.
// Zero classes (separating curves) are warnings: they are legal in a
// 1-system, just never in a maximal one.
inline VerificationReport verify_class_budget(const CurveSystem& sys) {
    sys.validate_structure();
    if (sys.boundary != 0)
        throw std::invalid_argument("verify_class_budget: requires a closed system");
    if (sys.k != 1) throw std::invalid_argument("verify_class_budget: requires k = 1");
    VerificationReport rep;
    CheckEntry c{"class-budget"};

    std::map<gf2::Vector, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const gf2::Vector& h = *sys.curves[i].homology;
        if (h.is_zero()) {
            c.warnings.push_back(sys.curves[i].id +
                                 " has zero class (separating - not maximal-compatible)");
            continue;
        }
        by_class[h].push_back(i);
    }

    const std::size_t budget = sys.genus >= 2 ? static_cast<std::size_t>(sys.genus - 1) : 0;
    std::size_t max_used = 0;
    for (const auto& [cls, members] : by_class) {
        max_used = std::max(max_used, members.size());
        if (sys.genus >= 2 && members.size() > budget) {
            c.passed = false;
            std::string w = "class " + cls.to_string() + " used by " +
                            std::to_string(members.size()) + " curves > g-1 = " +
                            std::to_string(budget);
            c.witnesses.push_back(std::move(w));
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (sys.count_between(members[a], members[b]) != 0) {
                    c.passed = false;
                    c.witnesses.push_back("same-class curves " +
                                          detail::pair_label(sys, members[a], members[b]) +
                                          " are not disjoint");
                }
    }
    c.note = "max curves in one class: " + std::to_string(max_used);
    rep.checks.push_back(std::move(c));
    return rep;
}

// ---------------------------------------------------------------------------
// Intersection graphs.

struct IntersectionGraph {
    enum class Flavor { All, Odd };
    Flavor flavor = Flavor::All;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted

    std::size_t edge_count() const { return edges.size(); }
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& [i, j] : edges)
            if (i == v || j == v) ++d;
        return d;
    }
    std::vector<Bitset> adjacency() const {
        std::vector<Bitset> adj(vertices.size(), Bitset(vertices.size()));
        for (const auto& [i, j] : edges) {
            adj[i].set(j);
            adj[j].set(i);
        }
        return adj;
    }
};

inline IntersectionGraph intersection_graph(const CurveSystem& sys,
                                            IntersectionGraph::Flavor flavor) {
    sys.validate_structure();
    IntersectionGraph g;
    g.flavor = flavor;
    for (const auto& c : sys.curves) g.vertices.push_back(c.id);
    for (const auto& e : sys.intersections()) {
        bool edge = flavor == IntersectionGraph::Flavor::All ? e.count > 0 : (e.count % 2) == 1;
        if (edge) g.edges.emplace_back(e.i, e.j);
    }
    return g;
}

// Average-degree bounds on N from the odd and plain intersection graphs,
// with the sharper complete/edgeless cases when they apply. All the
// comparisons are done in exact integer arithmetic:
//   N <= (D+1)(2g+1) with D = N - avgdeg(G_odd)  <=>  N^2 <= (N^2 - 2E_odd + N)(2g+1)
//   N <= (D+1)(3g-3) with D = avgdeg(G)          <=>  N^2 <= (2E + N)(3g-3)
inline VerificationReport check_degree_bounds(const CurveSystem& sys) {
    sys.validate_structure();
    VerificationReport rep;
    const long long n = static_cast<long long>(sys.size());
    const long long g = sys.genus;
    long long e_all = 0, e_odd = 0;
    for (const auto& e : sys.intersections()) {
        if (e.count > 0) ++e_all;
        if (e.count % 2 == 1) ++e_odd;
    }

    {
        CheckEntry c{"odd-degree-bound"};
        c.note = "N = " + std::to_string(n) + ", E_odd = " + std::to_string(e_odd);
        if (n > 0 && n * n > (n * n - 2 * e_odd + n) * (2 * g + 1)) {
            c.passed = false;
            c.witnesses.push_back("N^2 > (N^2 - 2 E_odd + N)(2g+1)");
        }
        rep.checks.push_back(std::move(c));
    }
    if (g >= 2) {
        CheckEntry c{"low-degree-bound"};
        c.note = "N = " + std::to_string(n) + ", E = " + std::to_string(e_all);
        if (n > 0 && n * n > (2 * e_all + n) * (3 * g - 3)) {
            c.passed = false;
            c.witnesses.push_back("N^2 > (2E + N)(3g-3)");
        }
        rep.checks.push_back(std::move(c));
    }
    if (n >= 1 && e_odd == n * (n - 1) / 2) {
        CheckEntry c{"complete-odd-bound"};
        c.note = "G_odd is complete";
        if (n > 2 * g + 1) {
            c.passed = false;
            c.witnesses.push_back("N = " + std::to_string(n) + " > 2g+1 = " +
                                  std::to_string(2 * g + 1));
        }
        rep.checks.push_back(std::move(c));
    }
    if (g >= 2 && e_all == 0) {
        CheckEntry c{"all-disjoint-bound"};
        c.note = "G(X) is edgeless";
        if (n > 3 * g - 3) {
            c.passed = false;
            c.witnesses.push_back("N = " + std::to_string(n) + " > 3g-3 = " +
                                  std::to_string(3 * g - 3));
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Turan step: independent sets of guaranteed size N/(avgdeg+1).

enum class IndependentSetMode { Exact, Greedy };

constexpr std::size_t kExactIndependentSetCap = 24;

inline std::vector<std::size_t> turan_independent_set(const IntersectionGraph& graph,
                                                      IndependentSetMode mode) {
    const std::size_t n = graph.vertices.size();
    if (mode == IndependentSetMode::Exact) {
        if (n > kExactIndependentSetCap)
            throw std::invalid_argument("turan_independent_set: exact mode capped at 24 vertices");
        auto res = max_independent_set(graph.adjacency());
        auto out = res.members;
        std::sort(out.begin(), out.end());
        return out;
    }
    // Greedy minimum-degree-first; meets the Caro-Wei bound sum 1/(d_i+1).
    std::vector<std::size_t> deg(n, 0);
    std::vector<bool> alive(n, true);
    auto adj = graph.adjacency();
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
    std::vector<std::size_t> out;
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && (best == n || deg[v] < deg[best])) best = v;
        out.push_back(best);
        std::vector<std::size_t> removed{best};
        adj[best].for_each([&](std::size_t u) {
            if (alive[u]) removed.push_back(u);
        });
        for (std::size_t r : removed) {
            alive[r] = false;
            --remaining;
            adj[r].for_each([&](std::size_t u) {
                if (alive[u] && deg[u] > 0) --deg[u];
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ceil(N / (avgdeg + 1)) = ceil(N^2 / (2E + N)); the guaranteed size.
inline std::size_t turan_guarantee(std::size_t n, std::size_t edges) {
    if (n == 0) return 0;
    return (n * n + 2 * edges + n - 1) / (2 * edges + n);
}

}  // namespace curvesys
