#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fbc/channel.hpp"
#include "fbc/strategy.hpp"

namespace fbc {

// A single-error adversary move: corrupt the symbol at `position` into
// `replacement`, or do nothing (no position).  An attempt whose edge is not
// in the error graph degenerates to no-error.
struct AdversaryAction {
    std::optional<int> position;
    int replacement = 0;
};

struct FailureCase {
    long message = 0;
    AdversaryAction action;
    Word received;
    long decoded = -1;  // -1: decoder has no entry, -2: encoder table incomplete
};

struct VerificationReport {
    long total_cases = 0;
    long legal_cases = 0;
    std::vector<FailureCase> failures;
    std::vector<std::vector<Word>> clouds;  // per-message received words, sorted
    std::vector<Word> roots;                // no-error received word per message
    bool clouds_disjoint = true;
    std::vector<std::pair<long, long>> cloud_overlaps;

    bool pass() const { return failures.empty() && clouds_disjoint; }
};

namespace detail {

struct SimOutcome {
    Word received;
    bool encoder_complete = true;
    bool error_applied = false;
};

inline SimOutcome simulate_impl(const FeedbackStrategy& s, long m, const AdversaryAction& act,
                                const ErrorGraph& graph) {
    Word received(0, s.q, 0);
    int pos = 0;
    bool complete = true;
    bool applied = false;
    for (std::size_t stage = 0; stage < s.block_lengths.size(); ++stage) {
        Word block(0, s.q, 0);
        if (stage == 0) {
            block = s.first_block[static_cast<std::size_t>(m)];
        } else {
            auto it = s.stages[stage - 1].find({received, m});
            if (it == s.stages[stage - 1].end()) {
                complete = false;
                // pad with zeros so the transcript stays well formed
                block = Word(s.block_lengths[stage], s.q, 0);
            } else {
                block = it->second;
            }
        }
        for (int i = 0; i < block.n; ++i) {
            int sym = block.symbol(i);
            int got = sym;
            if (act.position && *act.position == pos && graph.has_edge(sym, act.replacement)) {
                got = act.replacement;
                applied = true;
            }
            received = received.concat(Word(1, s.q, static_cast<std::uint64_t>(got)));
            ++pos;
        }
    }
    return {received, complete, applied};
}

}  // namespace detail

// Deterministic transcript of transmitting message m against one adversary
// action; the feedback loop closes through the corrupted symbols.
inline Word simulate(const FeedbackStrategy& s, long m, const AdversaryAction& act,
                     const ErrorGraph& graph) {
    if (m < 0 || m >= s.M) throw std::invalid_argument("simulate: message out of range");
    auto out = detail::simulate_impl(s, m, act, graph);
    if (!out.encoder_complete)
        throw std::runtime_error("simulate: encoder table has no entry for a reachable prefix");
    return out.received;
}

// Exhausts every message against no-error and every (position, replacement)
// pair.  Illegal replacements are still counted as cases; they degenerate to
// the no-error transcript.
inline VerificationReport verify_strategy(const FeedbackStrategy& s, const ErrorGraph& graph) {
    VerificationReport rep;
    rep.clouds.resize(static_cast<std::size_t>(s.M));
    rep.roots.resize(static_cast<std::size_t>(s.M), Word(0, s.q, 0));
    std::map<Word, long> owner;

    for (long m = 0; m < s.M; ++m) {
        std::set<Word> cloud;
        auto run_case = [&](const AdversaryAction& act) {
            ++rep.total_cases;
            auto out = detail::simulate_impl(s, m, act, graph);
            if (act.position && out.error_applied) ++rep.legal_cases;
            if (!act.position) ++rep.legal_cases;
            long decoded = -1;
            if (!out.encoder_complete) {
                decoded = -2;
            } else {
                auto it = s.decoder.find(out.received);
                if (it != s.decoder.end()) decoded = it->second;
            }
            if (decoded != m) rep.failures.push_back({m, act, out.received, decoded});
            else cloud.insert(out.received);
        };

        AdversaryAction none;
        run_case(none);
        rep.roots[static_cast<std::size_t>(m)] =
            detail::simulate_impl(s, m, none, graph).received;
        Word root = rep.roots[static_cast<std::size_t>(m)];
        for (int p = 0; p < s.n; ++p) {
            int sym = root.symbol(p);
            for (int r = 0; r < s.q; ++r) {
                if (r == sym) continue;
                run_case(AdversaryAction{p, r});
            }
        }

        auto& cl = rep.clouds[static_cast<std::size_t>(m)];
        cl.assign(cloud.begin(), cloud.end());
        for (const Word& w : cl) {
            auto [it, fresh] = owner.emplace(w, m);
            if (!fresh && it->second != m) {
                rep.clouds_disjoint = false;
                rep.cloud_overlaps.push_back({it->second, m});
            }
        }
    }
    return rep;
}

}  // namespace fbc
