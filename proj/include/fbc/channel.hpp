#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fbc/word.hpp"

namespace fbc {

// Directed corruption relation on channel symbols: edge (a, b) means a single
// error can turn a transmitted a into a received b.  Self-loops are excluded.
struct ErrorGraph {
    int q = 2;
    std::set<std::pair<int, int>> edges;

    ErrorGraph() = default;
    ErrorGraph(int q_, std::set<std::pair<int, int>> e) : q(q_), edges(std::move(e)) {
        validate();
    }

    void validate() const {
        if (q < 2) throw std::invalid_argument("ErrorGraph: q must be >= 2");
        for (auto& [a, b] : edges) {
            if (a == b) throw std::invalid_argument("ErrorGraph: self-loop");
            if (a < 0 || a >= q || b < 0 || b >= q)
                throw std::invalid_argument("ErrorGraph: symbol out of range");
        }
    }

    bool has_edge(int a, int b) const { return edges.count({a, b}) != 0; }

    std::vector<int> targets(int a) const {
        std::vector<int> out;
        for (auto& [x, y] : edges)
            if (x == a) out.push_back(y);
        return out;
    }

    static ErrorGraph bsc() { return ErrorGraph(2, {{0, 1}, {1, 0}}); }
    static ErrorGraph z_channel() { return ErrorGraph(2, {{1, 0}}); }
    static ErrorGraph one_way_ternary() { return ErrorGraph(3, {{1, 0}, {2, 0}, {2, 1}}); }
};

// All words obtainable from w by corrupting at most t distinct positions,
// each along a graph edge.  Always contains w itself.
inline std::vector<Word> error_ball(const Word& w, const ErrorGraph& graph, int t) {
    if (t < 0) throw std::invalid_argument("error_ball: t must be >= 0");
    std::set<Word> out{w};
    std::set<Word> frontier{w};
    // Track, per reached word, which positions were already corrupted so each
    // position changes at most once.  Because errors act on the transmitted
    // symbol, a corrupted position never matches the original symbol again.
    for (int round = 0; round < t; ++round) {
        std::set<Word> next;
        for (const Word& u : frontier) {
            for (int i = 0; i < w.n; ++i) {
                if (u.symbol(i) != w.symbol(i)) continue;  // position already spent
                for (int tgt : graph.targets(w.symbol(i))) {
                    Word v = u.with_symbol(i, tgt);
                    if (out.insert(v).second) next.insert(v);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return {out.begin(), out.end()};
}

struct Cloud {
    long message = 0;
    std::vector<Word> members;  // sorted
};

// Nonadaptive code: disjoint clouds, each the error ball of its center.
struct NonadaptiveCode {
    int n = 0;
    int t = 1;
    ErrorGraph graph;
    std::vector<Word> centers;  // sorted lexicographically; message id = index

    NonadaptiveCode() = default;
    NonadaptiveCode(int n_, int t_, ErrorGraph g, std::vector<Word> c)
        : n(n_), t(t_), graph(std::move(g)), centers(std::move(c)) {
        std::sort(centers.begin(), centers.end());
        for (const Word& w : centers)
            if (w.n != n || w.q != graph.q)
                throw std::invalid_argument("NonadaptiveCode: center does not match space");
    }

    long size() const { return static_cast<long>(centers.size()); }

    Cloud cloud(long m) const {
        return Cloud{m, error_ball(centers[static_cast<std::size_t>(m)], graph, t)};
    }
};

inline std::uint64_t space_size(const NonadaptiveCode& code) {
    return Word::space_size(code.n, code.graph.q);
}

// Complement of the union of clouds.
inline std::vector<Word> free_points(const NonadaptiveCode& code) {
    std::set<Word> covered;
    for (long m = 0; m < code.size(); ++m) {
        for (const Word& w : code.cloud(m).members) {
            if (!covered.insert(w).second)
                throw std::runtime_error("free_points: clouds overlap at " + w.str());
        }
    }
    std::vector<Word> out;
    std::uint64_t total = space_size(code);
    for (std::uint64_t v = 0; v < total; ++v) {
        Word w(code.n, code.graph.q, v);
        if (!covered.count(w)) out.push_back(w);
    }
    return out;
}

struct ValidationReport {
    bool pass = true;
    std::vector<std::pair<long, long>> overlapping;  // pairs of cloud indices
    long free_count = 0;
};

inline ValidationReport validate_code(const NonadaptiveCode& code) {
    ValidationReport rep;
    std::map<Word, long> owner;
    std::set<std::pair<long, long>> overlaps;
    std::uint64_t covered = 0;
    for (long m = 0; m < code.size(); ++m) {
        for (const Word& w : code.cloud(m).members) {
            auto [it, fresh] = owner.emplace(w, m);
            if (fresh) {
                ++covered;
            } else if (it->second != m) {
                overlaps.insert({std::min(it->second, m), std::max(it->second, m)});
            }
        }
    }
    rep.overlapping.assign(overlaps.begin(), overlaps.end());
    rep.pass = rep.overlapping.empty();
    rep.free_count = static_cast<long>(space_size(code) - covered);
    return rep;
}

// ---- JSON code file format ----------------------------------------------
// { "n": int, "q": int, "t": int, "graph": [[from,to],...],
//   "centers": ["0011", ...] }  (words most significant position first)

inline nlohmann::json code_to_json(const NonadaptiveCode& code) {
    nlohmann::json j;
    j["n"] = code.n;
    j["q"] = code.graph.q;
    j["t"] = code.t;
    auto edges = nlohmann::json::array();
    for (auto& [a, b] : code.graph.edges) edges.push_back({a, b});
    j["graph"] = edges;
    auto centers = nlohmann::json::array();
    for (const Word& w : code.centers) centers.push_back(w.str());
    j["centers"] = centers;
    return j;
}

inline NonadaptiveCode code_from_json(const nlohmann::json& j) {
    int q = j.at("q").get<int>();
    std::set<std::pair<int, int>> edges;
    for (auto& e : j.at("graph")) edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<Word> centers;
    for (auto& s : j.at("centers")) centers.push_back(Word::from_string(s.get<std::string>(), q));
    return NonadaptiveCode(j.at("n").get<int>(), j.at("t").get<int>(), ErrorGraph(q, edges),
                           std::move(centers));
}

inline std::string code_to_string(const NonadaptiveCode& code) {
    return code_to_json(code).dump(2) + "\n";
}

inline NonadaptiveCode code_from_string(const std::string& text) {
    return code_from_json(nlohmann::json::parse(text));
}

}  // namespace fbc
