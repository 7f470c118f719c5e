#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fbc/channel.hpp"
#include "fbc/word.hpp"

namespace fbc {

// Block-structured feedback strategy.  Block i+1 (i >= 1) is a function of
// the message and the received prefix of length N_i = n_1 + ... + n_i; the
// tables below carry entries only for (prefix, message) pairs reachable with
// at most one channel error.
struct FeedbackStrategy {
    int q = 2;
    int n = 0;
    ErrorGraph graph = ErrorGraph::bsc();  // channel the strategy was built for
    std::vector<int> block_lengths;  // k+1 entries summing to n
    long M = 0;
    std::vector<Word> first_block;   // indexed by message
    // stages[i] holds block i+2: key (received prefix of length N_{i+1}, message)
    std::vector<std::map<std::pair<Word, long>, Word>> stages;
    std::map<Word, long> decoder;    // received word -> message

    int feedbacks() const { return static_cast<int>(block_lengths.size()) - 1; }

    int prefix_len(std::size_t stage) const {  // received prefix length keying stage
        int len = 0;
        for (std::size_t i = 0; i <= stage; ++i) len += block_lengths[i];
        return len;
    }

    void validate() const {
        int total = 0;
        for (int b : block_lengths) {
            if (b < 0) throw std::invalid_argument("FeedbackStrategy: negative block");
            total += b;
        }
        if (total != n) throw std::invalid_argument("FeedbackStrategy: blocks do not sum to n");
        if (static_cast<long>(first_block.size()) != M)
            throw std::invalid_argument("FeedbackStrategy: first_block size != M");
        if (stages.size() + 1 != block_lengths.size())
            throw std::invalid_argument("FeedbackStrategy: stage count mismatch");
    }
};

inline nlohmann::json strategy_to_json(const FeedbackStrategy& s) {
    nlohmann::json j;
    j["q"] = s.q;
    j["n"] = s.n;
    auto edges = nlohmann::json::array();
    for (auto& [a, b] : s.graph.edges) edges.push_back({a, b});
    j["graph"] = edges;
    j["block_lengths"] = s.block_lengths;
    j["M"] = s.M;
    auto first = nlohmann::json::array();
    for (const Word& w : s.first_block) first.push_back(w.str());
    j["first"] = first;
    auto stages = nlohmann::json::array();
    for (const auto& stage : s.stages) {
        nlohmann::json st = nlohmann::json::object();
        for (const auto& [key, block] : stage) {
            const auto& [prefix, msg] = key;
            st[prefix.str()][std::to_string(msg)] = block.str();
        }
        stages.push_back(std::move(st));
    }
    j["stages"] = stages;
    nlohmann::json dec = nlohmann::json::object();
    for (const auto& [w, m] : s.decoder) dec[w.str()] = m;
    j["decoder"] = dec;
    return j;
}

inline FeedbackStrategy strategy_from_json(const nlohmann::json& j) {
    FeedbackStrategy s;
    s.q = j.at("q").get<int>();
    s.n = j.at("n").get<int>();
    std::set<std::pair<int, int>> edges;
    for (auto& e : j.at("graph")) edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
    s.graph = ErrorGraph(s.q, edges);
    s.block_lengths = j.at("block_lengths").get<std::vector<int>>();
    s.M = j.at("M").get<long>();
    for (auto& w : j.at("first")) s.first_block.push_back(Word::from_string(w.get<std::string>(), s.q));
    for (auto& st : j.at("stages")) {
        std::map<std::pair<Word, long>, Word> stage;
        for (auto it = st.begin(); it != st.end(); ++it) {
            Word prefix = Word::from_string(it.key(), s.q);
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
                stage[{prefix, std::stol(jt.key())}] =
                    Word::from_string(jt.value().get<std::string>(), s.q);
        }
        s.stages.push_back(std::move(stage));
    }
    for (auto it = j.at("decoder").begin(); it != j.at("decoder").end(); ++it)
        s.decoder[Word::from_string(it.key(), s.q)] = it.value().get<long>();
    s.validate();
    return s;
}

inline std::string strategy_to_string(const FeedbackStrategy& s) {
    return strategy_to_json(s).dump(2) + "\n";
}

inline FeedbackStrategy strategy_from_string(const std::string& text) {
    return strategy_from_json(nlohmann::json::parse(text));
}

inline bool operator==(const FeedbackStrategy& a, const FeedbackStrategy& b) {
    return a.q == b.q && a.n == b.n && a.graph.edges == b.graph.edges &&
           a.block_lengths == b.block_lengths && a.M == b.M &&
           a.first_block == b.first_block && a.stages == b.stages && a.decoder == b.decoder;
}

}  // namespace fbc
