#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbc/bounds.hpp"
#include "fbc/channel.hpp"

namespace fbc {

struct FOptimalEntry {
    int n = 0;
    long M = 0;
    int t = 1;
    long F = 0;
    WeightDistribution weights;
    std::vector<Word> centers;
    bool optimal_flag = false;  // F meets the weight-distribution upper bound
    bool exhausted = true;      // search completed (F proven maximal) within budget
    bool augmentable = false;   // a valid (M+1)-word extension exists
};

namespace detail {

struct BudgetExhausted {};

// Covered-point bitset over {0,1}^n for the single-asymmetric-error geometry.
// The cloud of codeword c is c together with all c minus one set bit; two
// codewords are compatible iff their clouds are disjoint.
class ZSearchSpace {
public:
    explicit ZSearchSpace(int n) : n_(n), covered_((std::size_t(1) << n) / 64 + 1, 0) {}

    bool conflicts(std::uint32_t c) const {
        if (test(c)) return true;
        std::uint32_t v = c;
        while (v) {
            std::uint32_t bit = v & (~v + 1);
            if (test(c ^ bit)) return true;
            v ^= bit;
        }
        return false;
    }

    void add(std::uint32_t c) { flip(c, true); }
    void remove(std::uint32_t c) { flip(c, false); }

private:
    bool test(std::uint32_t x) const { return (covered_[x >> 6] >> (x & 63)) & 1; }

    void flip(std::uint32_t c, bool on) {
        auto setbit = [&](std::uint32_t x) {
            if (on) covered_[x >> 6] |= 1ull << (x & 63);
            else covered_[x >> 6] &= ~(1ull << (x & 63));
        };
        setbit(c);
        std::uint32_t v = c;
        while (v) {
            std::uint32_t bit = v & (~v + 1);
            setbit(c ^ bit);
            v ^= bit;
        }
    }

    int n_;
    std::vector<std::uint64_t> covered_;
};

// Depth-first realization of a code with a prescribed weight multiset.
// weights must be given in the order codewords are added; equal weights are
// chosen in increasing numeric order, so the first solution found is the
// lexicographically smallest for that ordering.
class SequenceRealizer {
public:
    SequenceRealizer(int n, std::vector<int> weights, long budget)
        : n_(n), weights_(std::move(weights)), space_(n), budget_(budget) {
        by_weight_.resize(static_cast<std::size_t>(n) + 1);
        for (std::uint32_t v = 0; v < (1u << n); ++v)
            by_weight_[static_cast<std::size_t>(std::popcount(v))].push_back(v);
    }

    std::optional<std::vector<std::uint32_t>> run() {
        chosen_.clear();
        if (rec(0, 0)) return chosen_;
        return std::nullopt;
    }

    long budget_left() const { return budget_; }

private:
    bool rec(std::size_t step, std::uint32_t min_same_weight) {
        if (step == weights_.size()) return true;
        int w = weights_[step];
        std::uint32_t start =
            (step > 0 && weights_[step - 1] == w) ? min_same_weight + 1 : 0;
        const auto& pool = by_weight_[static_cast<std::size_t>(w)];
        auto it = std::lower_bound(pool.begin(), pool.end(), start);
        // Cheap feasibility count: enough untried candidates left for the
        // remaining words of this weight.
        std::size_t same_left = 1;
        for (std::size_t k = step + 1; k < weights_.size() && weights_[k] == w; ++k) ++same_left;
        if (pool.end() - it < static_cast<std::ptrdiff_t>(same_left)) return false;
        for (; it != pool.end(); ++it) {
            if (static_cast<std::size_t>(pool.end() - it) < same_left) break;
            if (budget_ >= 0 && --budget_ < 0) throw BudgetExhausted{};
            std::uint32_t c = *it;
            if (space_.conflicts(c)) continue;
            space_.add(c);
            chosen_.push_back(c);
            if (rec(step + 1, c)) return true;
            chosen_.pop_back();
            space_.remove(c);
        }
        return false;
    }

    int n_;
    std::vector<int> weights_;
    std::vector<std::vector<std::uint32_t>> by_weight_;
    ZSearchSpace space_;
    std::vector<std::uint32_t> chosen_;
    long budget_;
};

inline std::vector<int> weight_sequence(const WeightDistribution& d) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < d.z.size(); ++i)
        for (long k = 0; k < d.z[i]; ++k) seq.push_back(static_cast<int>(i));
    return seq;
}

inline WeightDistribution distribution_of(int n, const std::vector<std::uint32_t>& masks) {
    WeightDistribution d;
    d.z.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t m : masks) ++d.z[static_cast<std::size_t>(std::popcount(m))];
    return d;
}

inline std::vector<Word> to_words(int n, const std::vector<std::uint32_t>& masks) {
    std::vector<Word> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.push_back(Word(n, 2, m));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool can_augment(int n, const std::vector<std::uint32_t>& masks) {
    ZSearchSpace space(n);
    for (std::uint32_t m : masks) space.add(m);
    for (std::uint32_t v = 0; v < (1u << n); ++v)
        if (!space.conflicts(v)) return true;
    return false;
}

}  // namespace detail

// Finds an M-word single-asymmetric-error code of length n with the maximum
// number of free points.  Candidate weight distributions are enumerated in
// decreasing free-point order and realized or refuted by depth-first search,
// so the first realized distribution is optimal when the budget suffices.
// budget = 0 means unlimited.
inline FOptimalEntry search_f_optimal(int n, long M, int t = 1, long budget = 0) {
    if (t != 1) throw std::invalid_argument("search_f_optimal: only t = 1 is implemented");
    if (n < 2 || n > 16) throw std::invalid_argument("search_f_optimal: need 2 <= n <= 16");
    FOptimalEntry entry;
    entry.n = n;
    entry.M = M;
    entry.t = t;
    if (M == 0) {
        entry.F = 1L << n;
        entry.weights.z.assign(static_cast<std::size_t>(n) + 1, 0);
        entry.optimal_flag = true;
        entry.augmentable = true;
        return entry;
    }
    BoundProblem p{n, M, t};
    long bound = upper_bound_value(p);
    if (bound < 0) throw std::runtime_error("search_f_optimal: infeasible cardinality");
    long left = budget == 0 ? -1 : budget;  // -1: unlimited
    bool exhausted = true;
    // Iterative deepening on the free-point target: distributions are tried
    // in decreasing objective order, so the first realization is optimal
    // among all distributions refuted so far.
    std::set<std::vector<long>> tried;
    for (long target = bound; target >= 0; --target) {
        for (auto& [F, dist] : feasible_distributions(p, target)) {
            if (!tried.insert(dist.z).second) continue;
            detail::SequenceRealizer realizer(n, detail::weight_sequence(dist), left);
            std::optional<std::vector<std::uint32_t>> got;
            try {
                got = realizer.run();
            } catch (const detail::BudgetExhausted&) {
                exhausted = false;
                left = 2048;  // small allowance so a fallback code can still be returned
                continue;
            }
            if (left >= 0) left = realizer.budget_left();
            if (got) {
                entry.F = F;
                entry.weights = dist;
                entry.centers = detail::to_words(n, *got);
                entry.exhausted = exhausted;
                entry.optimal_flag = entry.F == bound;
                entry.augmentable = detail::can_augment(n, *got);
                return entry;
            }
        }
    }
    throw std::runtime_error("search_f_optimal: no realizable distribution found");
}

// Nested family C_1 c C_2 c ... for lengths where every member attains the
// weight-distribution bound.  The weight of the M-th codeword is forced by
// consecutive bound values, which turns the search into a guided completion.
inline std::vector<FOptimalEntry> search_nested_family(int n, int t = 1, long budget = 0) {
    if (t != 1) throw std::invalid_argument("search_nested_family: only t = 1");
    if (n < 2 || n > 9) throw std::invalid_argument("search_nested_family: need 2 <= n <= 9");
    // Bound table up to the maximum feasible cardinality.
    std::vector<long> fbar{1L << n};  // F-bar(n, 0) = 2^n
    for (long M = 1;; ++M) {
        long v = upper_bound_value(BoundProblem{n, M, t});
        if (v < 0) break;
        fbar.push_back(v);
    }
    long mz = static_cast<long>(fbar.size()) - 1;
    std::vector<int> weights;
    for (long M = 1; M <= mz; ++M) {
        long w = fbar[static_cast<std::size_t>(M - 1)] - fbar[static_cast<std::size_t>(M)] - 1;
        if (w < 0 || w > n)
            throw std::runtime_error("search_nested_family: bound increments give no valid weight");
        weights.push_back(static_cast<int>(w));
    }
    if (!std::is_sorted(weights.begin(), weights.end()))
        throw std::runtime_error("search_nested_family: bound increments not monotone");
    detail::SequenceRealizer realizer(n, weights, budget == 0 ? -1 : budget);
    auto got = realizer.run();
    if (!got) throw std::runtime_error("search_nested_family: no nested family realizes the bounds");
    std::vector<FOptimalEntry> out;
    std::vector<std::uint32_t> prefix;
    for (long M = 1; M <= mz; ++M) {
        prefix.push_back((*got)[static_cast<std::size_t>(M - 1)]);
        FOptimalEntry e;
        e.n = n;
        e.M = M;
        e.t = t;
        e.F = fbar[static_cast<std::size_t>(M)];
        e.weights = detail::distribution_of(n, prefix);
        e.centers = detail::to_words(n, prefix);
        e.optimal_flag = true;
        e.augmentable = M < mz || detail::can_augment(n, prefix);
        out.push_back(std::move(e));
    }
    return out;
}

// Perfect single-error binary Hamming code of length 2^k - 1.
inline NonadaptiveCode hamming_code(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("hamming_code: need 1 <= k <= 4");
    int n = (1 << k) - 1;
    std::vector<Word> centers;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        std::uint32_t syn = 0;
        for (int b = 0; b < n; ++b)
            if ((v >> b) & 1) syn ^= static_cast<std::uint32_t>(b + 1);
        if (syn == 0) centers.push_back(Word(n, 2, v));
    }
    return NonadaptiveCode(n, 1, ErrorGraph::bsc(), std::move(centers));
}

// All Hamming codewords of length 2^k - 1 as packed masks, ascending.
inline std::vector<std::uint32_t> hamming_masks(int k) {
    std::vector<std::uint32_t> out;
    int n = (1 << k) - 1;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        std::uint32_t syn = 0;
        for (int b = 0; b < n; ++b)
            if ((v >> b) & 1) syn ^= static_cast<std::uint32_t>(b + 1);
        if (syn == 0) out.push_back(v);
    }
    return out;
}

// ---- F-optimal cache (TSV) ------------------------------------------------
// columns: n  M  t  F  weight_distribution  centers (semicolon-separated)

inline void write_fopt_cache(const std::filesystem::path& path,
                             const std::vector<FOptimalEntry>& entries) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << "n\tM\tt\tF\tweight_distribution\tcenters\n";
    for (const auto& e : entries) {
        os << e.n << '\t' << e.M << '\t' << e.t << '\t' << e.F << '\t' << e.weights.str() << '\t';
        for (std::size_t i = 0; i < e.centers.size(); ++i) {
            if (i) os << ';';
            os << e.centers[i].str();
        }
        os << '\n';
    }
}

inline std::vector<FOptimalEntry> read_fopt_cache(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    std::getline(is, line);  // header
    std::vector<FOptimalEntry> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        FOptimalEntry e;
        std::string dist, centers;
        ls >> e.n >> e.M >> e.t >> e.F >> dist;
        ls >> centers;
        e.weights = WeightDistribution::parse(dist);
        std::istringstream cs(centers);
        std::string tok;
        while (std::getline(cs, tok, ';'))
            if (!tok.empty()) e.centers.push_back(Word::from_string(tok, 2));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace fbc
