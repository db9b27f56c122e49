#include "rde/eta.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace rde {

namespace {

using State = std::vector<int>;  // sorted suffix-window partial sums, capped at k

State step(const State& state, int symbol, int k) {
    State next;
    for (int s : state)
        if (s + symbol <= k) next.push_back(s + symbol);
    if (symbol <= k) next.push_back(symbol);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

bool hits(const State& state, const IndexSet& target) {
    for (int s : state)
        if (target.contains(s)) return true;
    return false;
}

struct Automaton {
    std::vector<State> states;              // non-hit reachable states; 0 = start
    std::vector<std::vector<int>> next;     // next[id][symbol index]; -1 = hit state
    std::vector<int> symbols;               // source members, ascending
};

// Explores only non-hit states; transitions into hit states become -1.
Automaton build(const EtaQuery& q) {
    Automaton a;
    a.symbols = q.source.members();
    std::map<State, int> ids;
    State start;  // no symbols read yet, no window sums
    ids[start] = 0;
    a.states.push_back(start);
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        State from = a.states[i];
        std::vector<int> row;
        for (int c : a.symbols) {
            State to = step(from, c, q.k);
            if (hits(to, q.target)) {
                row.push_back(-1);
                continue;
            }
            auto [it, inserted] = ids.emplace(to, static_cast<int>(a.states.size()));
            if (inserted) a.states.push_back(to);
            row.push_back(it->second);
        }
        a.next.push_back(std::move(row));
    }
    return a;
}

}  // namespace

EtaDecision eta_decide(const EtaQuery& q) {
    EtaDecision d;
    if (q.source.empty()) {
        // No sequences to quantify over.
        d.holds = true;
        d.eta_min = 1;
        return d;
    }
    Automaton a = build(q);
    int n = static_cast<int>(a.states.size());

    // Longest path (in edges) from each non-hit state staying non-hit, or a
    // cycle if one exists. The state graph has at most 2^k + 1 nodes, so a
    // recursive three-color DFS is fine (k beyond ~20 is impractical anyway).
    std::vector<int> color(n, 0);    // 0 unseen, 1 on stack, 2 done
    std::vector<int> longest(n, 0);  // edges of the longest non-hit path onward
    std::vector<int> path;
    int cycle_node = -1;
    auto dfs = [&](auto&& self, int v) -> bool {  // true once a cycle is found
        color[v] = 1;
        path.push_back(v);
        for (int w : a.next[v]) {
            if (w < 0) continue;
            if (color[w] == 1) {
                cycle_node = w;
                return true;
            }
            if (color[w] == 0 && self(self, w)) return true;
            longest[v] = std::max(longest[v], 1 + longest[w]);
        }
        color[v] = 2;
        path.pop_back();
        return false;
    };

    if (dfs(dfs, 0)) {
        d.holds = false;
        // The cycle is the tail of the DFS path starting at cycle_node.
        auto it = std::find(path.begin(), path.end(), cycle_node);
        for (; it != path.end(); ++it) d.failure_cycle.push_back(a.states[*it]);
        return d;
    }

    d.holds = true;
    d.eta_min = 1 + longest[0];
    // Lexicographically smallest longest surviving sequence.
    int v = 0;
    while (longest[v] > 0) {
        for (std::size_t ci = 0; ci < a.symbols.size(); ++ci) {
            int w = a.next[v][ci];
            if (w >= 0 && 1 + longest[w] == longest[v]) {
                d.longest_survivor.push_back(a.symbols[ci]);
                v = w;
                break;
            }
        }
    }
    return d;
}

namespace {

struct OracleSearch {
    const std::vector<int>* symbols;
    const IndexSet* target;
    int max_len;
    unsigned long long budget;
    unsigned long long visited = 0;
    bool exceeded = false;
    bool survivor_at_max = false;
    int max_survive_depth = 0;
    std::vector<long long> prefix{0};  // prefix[m] = c_1 + ... + c_m

    void dfs(int depth) {
        if (exceeded || survivor_at_max) return;
        if (depth > max_survive_depth) max_survive_depth = depth;
        if (depth == max_len) {
            survivor_at_max = true;
            return;
        }
        for (int c : *symbols) {
            if (++visited > budget) {
                exceeded = true;
                return;
            }
            prefix.push_back(prefix.back() + c);
            // all windows ending at the new position, summed directly
            bool hit = false;
            int m = depth + 1;
            for (int n1 = 1; n1 <= m && !hit; ++n1) {
                long long sum = prefix[m] - prefix[n1 - 1];
                if (sum <= static_cast<long long>(1e9) &&
                    target->contains(static_cast<int>(sum)))
                    hit = true;
            }
            if (!hit) dfs(depth + 1);
            prefix.pop_back();
            if (exceeded || survivor_at_max) return;
        }
    }
};

}  // namespace

EtaOracleResult eta_oracle(const EtaQuery& q, int max_len, unsigned long long sequence_budget) {
    EtaOracleResult r;
    if (q.source.empty()) {
        r.status = EtaOracleResult::Status::determined;
        r.holds = true;
        r.eta_min = 1;
        return r;
    }
    OracleSearch s;
    s.symbols = &q.source.members();
    s.target = &q.target;
    s.max_len = max_len;
    s.budget = sequence_budget;
    s.dfs(0);
    if (s.exceeded) {
        r.status = EtaOracleResult::Status::budget_exceeded;
    } else if (s.survivor_at_max) {
        // Some sequence of length max_len never hit; cannot decide here.
        r.status = EtaOracleResult::Status::undetermined;
    } else {
        r.status = EtaOracleResult::Status::determined;
        r.holds = true;
        r.eta_min = s.max_survive_depth + 1;
    }
    return r;
}

}  // namespace rde
