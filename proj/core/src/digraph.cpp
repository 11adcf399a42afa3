#include "nsmp/digraph.hpp"

#include <algorithm>
#include <functional>

namespace nsmp {

SignedDigraph digraph_of(const SignPattern& p) {
    SignedDigraph d;
    d.n = p.size();
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j)
            if (p.at(i, j) != Sign::Zero) d.arcs.push_back({i, j, p.at(i, j)});
    return d;
}

SccDecomposition scc_decompose(const SignPattern& p) {
    std::size_t n = p.size();
    // Tarjan; components are emitted in reverse topological order.
    std::vector<std::size_t> index(n, SIZE_MAX), lowlink(n), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (p.at(v, w) == Sign::Zero) continue;
            if (index[w] == SIZE_MAX) {
                strongconnect(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == SIZE_MAX) strongconnect(v);

    std::reverse(components.begin(), components.end());

    SccDecomposition d;
    for (const auto& comp : components) {
        std::size_t begin = d.permutation.size();
        for (auto v : comp) d.permutation.push_back(v);
        d.blocks.emplace_back(begin, d.permutation.size());
    }
    return d;
}

std::size_t max_composite_cycle(const SignPattern& p) {
    std::size_t n = p.size();
    if (n == 0) return 0;
    if (n > 20) throw TooLarge("composite cycle DP limited to n <= 20");
    // Row i takes column j with weight 1 when P_ij != 0, or its own column
    // with weight 0 (vertex excluded). Max total weight over full assignments
    // is the largest composite cycle length.
    const int kUnreachable = -1;
    std::vector<int> dp(std::size_t{1} << n, kUnreachable);
    dp[0] = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (dp[mask] == kUnreachable) continue;
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            bool nonzero = p.at(row, j) != Sign::Zero;
            if (!nonzero && j != row) continue;
            int w = dp[mask] + (nonzero ? 1 : 0);
            dp[mask | (1u << j)] = std::max(dp[mask | (1u << j)], w);
        }
    }
    return static_cast<std::size_t>(dp[(std::size_t{1} << n) - 1]);
}

std::set<std::size_t> composite_cycle_lengths(const SignPattern& p) {
    std::size_t n = p.size();
    if (n > 20) throw TooLarge("composite cycle DP limited to n <= 20");
    // dp[mask] bit w set: some assignment of the first popcount(mask) rows to
    // the columns in mask has exactly w nonzero positions.
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!dp[mask]) continue;
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            if (p.at(row, j) != Sign::Zero) dp[mask | (1u << j)] |= dp[mask] << 1;
            // Taking the own column with weight 0 excludes the vertex, which
            // stays possible even when it has a loop.
            if (j == row) dp[mask | (1u << j)] |= dp[mask];
        }
    }
    std::set<std::size_t> lengths;
    std::uint32_t full = dp[(std::size_t{1} << n) - 1];
    for (std::size_t k = 1; k <= n; ++k)
        if (full & (1u << k)) lengths.insert(k);
    return lengths;
}

namespace {

// Walks determinant expansion terms; sets seen flags for the two term signs.
void det_terms(const SignPattern& p, std::size_t row, std::uint32_t used, int sign_so_far,
               bool& pos_seen, bool& neg_seen, std::vector<std::size_t>& choice) {
    std::size_t n = p.size();
    if (pos_seen && neg_seen) return;
    if (row == n) {
        (sign_so_far > 0 ? pos_seen : neg_seen) = true;
        return;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        if (p.at(row, j) == Sign::Zero) continue;
        // Parity contribution: count inversions introduced by placing j now.
        int inversions = 0;
        for (std::size_t r = 0; r < row; ++r)
            if (choice[r] > j) ++inversions;
        int s = sign_so_far;
        if (inversions % 2) s = -s;
        if (p.at(row, j) == Sign::Minus) s = -s;
        choice.push_back(j);
        det_terms(p, row + 1, used | (1u << j), s, pos_seen, neg_seen, choice);
        choice.pop_back();
    }
}

}  // namespace

bool is_sign_nonsingular(const SignPattern& p) {
    if (p.size() > 10) throw TooLarge("sign-nonsingularity limited to n <= 10");
    bool pos = false, neg = false;
    std::vector<std::size_t> choice;
    det_terms(p, 0, 0, 1, pos, neg, choice);
    return (pos || neg) && !(pos && neg);
}

bool recognize_hollow(const SignPattern& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && p.at(i, j) == Sign::Zero) return false;
    return true;
}

bool recognize_cycle(const SignPattern& p) {
    std::size_t n = p.size();
    if (n < 2) return false;
    std::vector<std::size_t> succ(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t out = 0, in = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (p.at(i, j) != Sign::Zero) {
                ++out;
                succ[i] = j;
            }
            if (p.at(j, i) != Sign::Zero) ++in;
        }
        if (out != 1 || in != 1) return false;
    }
    // One cycle through all vertices, not several disjoint ones.
    std::size_t v = 0, steps = 0;
    do {
        v = succ[v];
        ++steps;
    } while (v != 0 && steps <= n);
    return steps == n;
}

std::optional<StarStructure> recognize_star(const SignPattern& p) {
    std::size_t n = p.size();
    if (n < 2) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (v == c) continue;
            if (p.at(c, v) == Sign::Zero || p.at(v, c) == Sign::Zero) ok = false;
            for (std::size_t w = 0; w < n && ok; ++w)
                if (w != v && w != c && p.at(v, w) != Sign::Zero) ok = false;
        }
        if (!ok) continue;

        StarStructure ss;
        ss.centre = c;
        ss.centre_loop = p.at(c, c);
        for (std::size_t v = 0; v < n; ++v) {
            if (v == c) continue;
            Sign loop = p.at(v, v);
            ss.non_centre_loops.emplace_back(v, loop);
            if (loop == Sign::Zero) {
                Sign cyc = p.at(c, v) == p.at(v, c) ? Sign::Plus : Sign::Minus;
                ss.loopless_two_cycle_signs.emplace_back(v, cyc);
            }
        }
        return ss;
    }
    return std::nullopt;
}

std::optional<std::set<std::size_t>> recognize_proper_hessenberg(const SignPattern& p) {
    std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (p.at(i, i + 1) == Sign::Zero) return std::nullopt;
        for (std::size_t j = i + 2; j < n; ++j)
            if (p.at(i, j) != Sign::Zero) return std::nullopt;
    }
    std::set<std::size_t> lengths;
    for (std::size_t i = 0; i < n; ++i)
        if (p.at(i, i) != Sign::Zero) lengths.insert(1);
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t i = k - 1; i < n; ++i)
            if (p.at(i, i - (k - 1)) != Sign::Zero) lengths.insert(k);
    return lengths;
}

bool is_bipartite_underlying(const SignPattern& p) {
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        if (p.at(i, i) != Sign::Zero) return false;  // a loop is an odd cycle
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (p.at(v, w) == Sign::Zero && p.at(w, v) == Sign::Zero) continue;
                if (w == v) continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Enumerates simple cycles whose minimal vertex is the DFS root; callback
// returning true stops the search.
bool cycle_dfs(const SignPattern& p, std::size_t root, std::size_t v, std::uint32_t visited,
               std::vector<std::size_t>& path, Sign running,
               const std::function<bool(const SimpleCycle&)>& emit) {
    std::size_t n = p.size();
    for (std::size_t w = root; w < n; ++w) {
        if (p.at(v, w) == Sign::Zero) continue;
        Sign s = p.at(v, w) == Sign::Minus ? negate(running) : running;
        if (w == root) {
            if (emit({path, s})) return true;
        } else if (!(visited & (1u << w))) {
            path.push_back(w);
            bool stop = cycle_dfs(p, root, w, visited | (1u << w), path, s, emit);
            path.pop_back();
            if (stop) return true;
        }
    }
    return false;
}

void enumerate_cycles(const SignPattern& p, const std::function<bool(const SimpleCycle&)>& emit) {
    if (p.size() > 10) throw TooLarge("simple cycle enumeration limited to n <= 10");
    for (std::size_t root = 0; root < p.size(); ++root) {
        std::vector<std::size_t> path{root};
        if (cycle_dfs(p, root, root, 1u << root, path, Sign::Plus, emit)) return;
    }
}

}  // namespace

std::vector<SimpleCycle> simple_cycles(const SignPattern& p) {
    std::vector<SimpleCycle> cycles;
    enumerate_cycles(p, [&](const SimpleCycle& c) {
        cycles.push_back(c);
        return false;
    });
    return cycles;
}

bool has_positive_simple_cycle(const SignPattern& p) {
    bool found = false;
    enumerate_cycles(p, [&](const SimpleCycle& c) {
        if (c.sign == Sign::Plus) found = true;
        return found;
    });
    return found;
}

}  // namespace nsmp
