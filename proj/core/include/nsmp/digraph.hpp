#ifndef NSMP_DIGRAPH_HPP
#define NSMP_DIGRAPH_HPP

#include "nsmp/sign_pattern.hpp"

#include <optional>
#include <set>
#include <vector>

namespace nsmp {

struct SignedArc {
    std::size_t from;
    std::size_t to;
    Sign sign;  // Plus or Minus
    bool operator==(const SignedArc&) const = default;
};

/// Signed digraph of a pattern: arc i -> j iff P_ij != 0, carrying P_ij.
struct SignedDigraph {
    std::size_t n = 0;
    std::vector<SignedArc> arcs;
};

SignedDigraph digraph_of(const SignPattern& p);

/// Strongly connected components in topological order of the condensation,
/// as a vertex permutation plus block index ranges. Applying the permutation
/// to the pattern gives block upper-triangular structure with irreducible
/// diagonal blocks.
struct SccDecomposition {
    std::vector<std::size_t> permutation;            // new position -> old vertex
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in permuted order
    bool irreducible() const { return blocks.size() == 1; }
};

SccDecomposition scc_decompose(const SignPattern& p);

/// Largest k such that some composite k-cycle lives on the nonzero entries of
/// P, i.e. some partial permutation sigma on a k-subset has P_{i,sigma(i)} != 0
/// everywhere. 0 for an acyclic digraph. Bitmask DP over column subsets.
std::size_t max_composite_cycle(const SignPattern& p);

/// Every k >= 1 such that some composite k-cycle exists in D(P). Same DP as
/// max_composite_cycle but tracking all achievable lengths.
std::set<std::size_t> composite_cycle_lengths(const SignPattern& p);

/// Permutation-enumeration test: at least one nonzero determinant expansion
/// term and all nonzero terms of one sign. Throws TooLarge for n > 10.
bool is_sign_nonsingular(const SignPattern& p);

/// Every off-diagonal entry nonzero (vacuously true for n = 1).
bool recognize_hollow(const SignPattern& p);

/// Off-diagonal arcs form exactly one directed Hamiltonian cycle; loops are
/// unrestricted. False for n = 1.
bool recognize_cycle(const SignPattern& p);

/// Star shape summary: 2-cycles join the centre to every other vertex and
/// there are no other off-diagonal arcs.
struct StarStructure {
    std::size_t centre = 0;
    Sign centre_loop = Sign::Zero;
    /// Loop sign of each non-centre vertex, Zero when loopless, in vertex order.
    std::vector<std::pair<std::size_t, Sign>> non_centre_loops;
    /// For each loopless non-centre vertex, the sign of its incident 2-cycle
    /// (product of the two arc signs).
    std::vector<std::pair<std::size_t, Sign>> loopless_two_cycle_signs;
};

/// Recognizes star patterns for n >= 2; none otherwise.
std::optional<StarStructure> recognize_star(const SignPattern& p);

/// If P is a proper lower Hessenberg pattern, the set of simple cycle
/// lengths present in its digraph (k >= 2 from subdiagonal k-1 plus 1 for
/// any loop); none otherwise.
std::optional<std::set<std::size_t>> recognize_proper_hessenberg(const SignPattern& p);

/// Underlying undirected graph is 2-colourable; any loop counts as an odd
/// cycle and defeats this.
bool is_bipartite_underlying(const SignPattern& p);

/// A simple directed cycle in vertex-disjoint form, as the ordered vertex
/// list, with its sign.
struct SimpleCycle {
    std::vector<std::size_t> vertices;
    Sign sign = Sign::Plus;
};

/// All simple directed cycles, loops included. Throws TooLarge for n > 10.
std::vector<SimpleCycle> simple_cycles(const SignPattern& p);

/// Some simple directed cycle has positive sign product. Throws TooLarge for
/// n > 10.
bool has_positive_simple_cycle(const SignPattern& p);

}  // namespace nsmp

#endif
