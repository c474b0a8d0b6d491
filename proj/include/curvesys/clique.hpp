#pragma once

// Exact maximum-clique / maximum-independent-set search, Tomita-style
// branch and bound with greedy coloring bounds. All the exhaustive
// searches in this project (odd pairing families, torus systems, Turan
// independent sets) reduce to this engine.

#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "curvesys/bitset.hpp"

namespace curvesys {

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> members;  // ascending vertex indices
};

struct CliqueOptions {
    // Stop as soon as a clique of this size is found. Only safe when the
    // caller has an external proof that no larger clique exists; leave
    // empty for a certified exhaustive search.
    std::optional<std::size_t> stop_at;
    unsigned threads = 1;
};

namespace detail {

class CliqueSearcher {
public:
    CliqueSearcher(const std::vector<Bitset>& adj, std::optional<std::size_t> stop_at)
        : adj_(adj), stop_at_(stop_at) {}

    void run(std::size_t seed_vertex, Bitset candidates) {
        current_.push_back(seed_vertex);
        if (!candidates.any())
            record();
        else
            expand(std::move(candidates));
        current_.pop_back();
    }

    void run_all() {
        Bitset all(adj_.size());
        all.set_all();
        if (all.any()) expand(std::move(all));
    }

    std::size_t best() const { return best_; }
    const std::vector<std::size_t>& best_members() const { return best_members_; }

private:
    void record() {
        if (current_.size() > best_) {
            best_ = current_.size();
            best_members_ = current_;
            if (stop_at_ && best_ >= *stop_at_) done_ = true;
        }
    }

    // Greedy coloring of P; returns (vertex, color) sorted by color ascending.
    std::vector<std::pair<std::size_t, std::size_t>> color_sort(const Bitset& p) const {
        std::vector<Bitset> classes;
        std::vector<std::vector<std::size_t>> members;
        p.for_each([&](std::size_t v) {
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (!(classes[c] & adj_[v]).any()) {
                    classes[c].set(v);
                    members[c].push_back(v);
                    return;
                }
            }
            classes.emplace_back(adj_.size());
            classes.back().set(v);
            members.push_back({v});
        });
        std::vector<std::pair<std::size_t, std::size_t>> seq;
        for (std::size_t c = 0; c < members.size(); ++c)
            for (std::size_t v : members[c]) seq.emplace_back(v, c + 1);
        return seq;
    }

    void expand(Bitset p) {
        auto seq = color_sort(p);
        for (std::size_t idx = seq.size(); idx-- > 0;) {
            if (done_) return;
            auto [v, color] = seq[idx];
            if (current_.size() + color <= best_) return;  // color bound
            current_.push_back(v);
            Bitset next = p & adj_[v];
            if (!next.any())
                record();
            else
                expand(std::move(next));
            current_.pop_back();
            p.reset(v);
        }
    }

    const std::vector<Bitset>& adj_;
    std::optional<std::size_t> stop_at_;
    std::size_t best_ = 0;
    std::vector<std::size_t> best_members_;
    std::vector<std::size_t> current_;
    bool done_ = false;
};

}  // namespace detail

// adj[v] must be the open neighborhood of v (diagonal clear, symmetric).
inline CliqueResult max_clique(const std::vector<Bitset>& adj, CliqueOptions opts = {}) {
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v)
        if (adj[v].test(v)) throw std::invalid_argument("max_clique: diagonal must be clear");
    if (n == 0) return {};

    if (opts.threads <= 1) {
        detail::CliqueSearcher s(adj, opts.stop_at);
        s.run_all();
        return {s.best(), s.best_members()};
    }

    // Parallel mode: partition by least clique vertex. Workers keep purely
    // local bounds so the merged result is independent of scheduling.
    unsigned nthreads = opts.threads;
    std::vector<CliqueResult> per_root(n);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t]() {
            for (std::size_t v = t; v < n; v += nthreads) {
                detail::CliqueSearcher s(adj, opts.stop_at);
                Bitset cand(n);
                adj[v].for_each([&](std::size_t u) {
                    if (u > v) cand.set(u);
                });
                s.run(v, std::move(cand));
                per_root[v] = {s.best(), s.best_members()};
            }
        });
    }
    for (auto& w : workers) w.join();
    CliqueResult best;
    for (std::size_t v = 0; v < n; ++v)
        if (per_root[v].size > best.size) best = per_root[v];
    return best;
}

inline CliqueResult max_independent_set(const std::vector<Bitset>& adj, CliqueOptions opts = {}) {
    const std::size_t n = adj.size();
    std::vector<Bitset> co(n, Bitset(n));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && !adj[v].test(u)) co[v].set(u);
    }
    return max_clique(co, opts);
}

}  // namespace curvesys
