//
// combinatorics.hpp -- enumeration primitives and the Hurwitz tree identities.
//
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwcp1/multiseries.hpp"

namespace gwcp1 {

// A partition of a labeled variable set into nonempty parts.  The empty ground
// set has exactly one partition, with zero parts.
struct SetPartition {
    std::vector<std::string> ground;
    std::vector<std::vector<std::string>> parts;
};

struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // (i, j), 1 <= i < j <= n
    std::vector<int> valences() const;      // 1-indexed result[0] unused
};

// All proper subsets I of {0, ..., n-1}, each exactly once, in colex
// (increasing bitmask) order.
std::vector<std::vector<int>> proper_subsets(int n);

// All set partitions in restricted-growth-string order.
std::vector<SetPartition> set_partitions(const std::vector<std::string>& ground);

// All tuples of `parts` nonnegative integers summing to `total`, in lex order.
// For parts == 0 the result is one empty tuple iff total == 0.
std::vector<std::vector<int>> compositions(int total, int parts);

// All n^{n-2} labeled trees on {1..n} via Pruefer decoding.  Throws
// BoundExceeded for n > bound.
std::vector<LabeledTree> labeled_trees(int n, int bound = 7);

std::vector<int> pruefer_encode(const LabeledTree& tree);
LabeledTree pruefer_decode(const std::vector<int>& seq, int n);

// sum over trees of prod_i z_i^{valence(i)-1}; equals (z_1+...+z_n)^{n-2}.
MultiSeries tree_valence_polynomial(int n, int bound = 7);

struct VerifyReport {
    bool passed = true;
    std::string detail;
};

// Verifies one of the two Hurwitz polynomial identities after clearing the x,y
// denominators (which == 1), or its dZ companion checked per dz_k (which == 2),
// together with the corresponding coefficient corollary for 1 <= i <= n-1.
// A failure reports the first differing monomial; it signals an implementation
// bug, never an expected outcome.
VerifyReport verify_hurwitz(int which, int n, int bound = 9);

} // namespace gwcp1
