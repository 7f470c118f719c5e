#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace fbc {

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {

// Johnson-style recursive upper bound for constant-weight codes, even d.
inline long johnson_upper(int m, int d, int w) {
    if (w < 0 || w > m) return 0;
    if (w > m - w) w = m - w;
    if (w == 0) return 1;
    if (2 * w < d) return 1;
    if (d <= 2) return static_cast<long>(binom(m, w));
    long rec = johnson_upper(m - 1, d, w - 1);
    long long v = static_cast<long long>(m) * rec / w;
    long long cap = binom(m, w);
    return static_cast<long>(std::min(v, cap));
}

// Lexicographic greedy packing; a valid (possibly weak) lower bound.
inline long greedy_lower(int m, int d, int w) {
    if (w < 0 || w > m) return 0;
    if (w > m - w) w = m - w;
    if (w == 0) return 1;
    std::vector<std::uint32_t> chosen;
    std::uint32_t limit = 1u << m;
    for (std::uint32_t v = 0; v < limit; ++v) {
        if (std::popcount(v) != w) continue;
        bool ok = true;
        for (std::uint32_t c : chosen)
            if (std::popcount(c ^ v) < d) { ok = false; break; }
        if (ok) chosen.push_back(v);
    }
    return static_cast<long>(chosen.size());
}

// Branch-and-bound maximum clique with greedy colouring bound.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<std::vector<std::uint64_t>>& adj, int nverts, long node_budget)
        : adj_(adj), nv_(nverts), budget_(node_budget) {}

    // Returns {best size, completed} where completed means the search proved
    // optimality within the node budget.
    std::pair<long, bool> run(long initial_best) {
        best_ = initial_best;
        std::vector<int> P(static_cast<std::size_t>(nv_));
        for (int i = 0; i < nv_; ++i) P[static_cast<std::size_t>(i)] = i;
        bool complete = expand(P, 0);
        return {best_, complete};
    }

private:
    bool adjacent(int a, int b) const {
        return (adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] >>
                (static_cast<std::size_t>(b) & 63)) & 1;
    }

    bool expand(std::vector<int>& P, long cur) {
        if (--budget_ < 0) return false;
        if (P.empty()) {
            best_ = std::max(best_, cur);
            return true;
        }
        // Greedy colouring: colour classes are independent sets, so any clique
        // uses at most one vertex per class.
        std::vector<int> color(P.size());
        std::vector<std::vector<int>> classes;
        for (std::size_t idx = 0; idx < P.size(); ++idx) {
            int v = P[idx];
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool indep = true;
                for (int u : classes[k])
                    if (adjacent(u, v)) { indep = false; break; }
                if (indep) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
            color[idx] = static_cast<int>(k) + 1;
        }
        // Order candidates by colour ascending, branch from the top.
        std::vector<std::pair<int, int>> order;  // (color, vertex)
        order.reserve(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) order.push_back({color[i], P[i]});
        std::sort(order.begin(), order.end());
        bool complete = true;
        std::vector<int> live(P.begin(), P.end());
        for (std::size_t i = order.size(); i-- > 0;) {
            auto [col, v] = order[i];
            if (cur + col <= best_) break;  // all remaining have smaller colour
            std::vector<int> next;
            for (int u : live)
                if (u != v && adjacent(u, v)) next.push_back(u);
            if (cur + 1 + static_cast<long>(next.size()) > best_) {
                if (!expand(next, cur + 1)) complete = false;
            } else {
                best_ = std::max(best_, cur + 1);
            }
            live.erase(std::remove(live.begin(), live.end(), v), live.end());
        }
        return complete && budget_ >= 0;
    }

    const std::vector<std::vector<std::uint64_t>>& adj_;
    int nv_;
    long budget_;
    long best_ = 0;
};

}  // namespace detail

struct CwBounds {
    long lower = 0;
    long upper = 0;
    bool exact = false;  // lower == upper proven
};

// Bounds on A(m, d, w), the maximum size of a binary constant-weight code of
// length m, weight w, minimum distance d (d even).  Exact search is attempted
// when the candidate set is small enough; otherwise greedy/Johnson bounds are
// returned with exact = false.
inline CwBounds constant_weight_bounds(int m, int d, int w, long node_budget = 4000000) {
    if (d % 2 != 0 || d <= 0) throw std::invalid_argument("constant_weight_bounds: d must be even");
    if (m < 0) throw std::invalid_argument("constant_weight_bounds: m < 0");
    if (w < 0 || w > m) return {0, 0, true};
    if (w > m - w) w = m - w;  // complement symmetry

    static std::map<std::tuple<int, int, int>, CwBounds> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({m, d, w});
        if (it != cache.end()) return it->second;
    }

    CwBounds out;
    if (w == 0 || 2 * w < d) {
        out = {1, 1, true};
    } else if (d == 2) {
        long v = static_cast<long>(binom(m, w));
        out = {v, v, true};
    } else {
        long long nverts = binom(m, w);
        long lower = detail::greedy_lower(m, d, w);
        long upper = detail::johnson_upper(m, d, w);
        out = {lower, upper, lower == upper};
        if (!out.exact && nverts <= 260 && m <= 30) {
            std::vector<std::uint32_t> verts;
            verts.reserve(static_cast<std::size_t>(nverts));
            for (std::uint32_t v = 0; v < (1u << m); ++v)
                if (std::popcount(v) == w) verts.push_back(v);
            int nv = static_cast<int>(verts.size());
            std::size_t words = (static_cast<std::size_t>(nv) + 63) / 64;
            std::vector<std::vector<std::uint64_t>> adj(static_cast<std::size_t>(nv),
                                                        std::vector<std::uint64_t>(words, 0));
            for (int i = 0; i < nv; ++i)
                for (int j = i + 1; j < nv; ++j)
                    if (std::popcount(verts[static_cast<std::size_t>(i)] ^
                                      verts[static_cast<std::size_t>(j)]) >= d) {
                        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) >> 6] |=
                            1ull << (j & 63);
                        adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) >> 6] |=
                            1ull << (i & 63);
                    }
            detail::CliqueSearch search(adj, nv, node_budget);
            auto [found, complete] = search.run(lower);
            out.lower = std::max(out.lower, found);
            if (complete) out.upper = found;
            out.exact = complete || out.lower == out.upper;
        }
    }

    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(std::make_tuple(m, d, w), out);
    return out;
}

// Exact A(m, d, w); throws if the search cannot prove exactness.
inline long constant_weight_exact(int m, int d, int w) {
    CwBounds b = constant_weight_bounds(m, d, w);
    if (!b.exact)
        throw std::runtime_error("constant_weight_exact: not provable at these parameters");
    return b.upper;
}

}  // namespace fbc
