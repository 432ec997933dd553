//
// verify.hpp -- the machine-checkable identity suites behind `gwcp1 verify`
// and the acceptance tests.
//
#pragma once

#include <string>
#include <vector>

#include "gwcp1/combinatorics.hpp"
#include "gwcp1/degree_zero.hpp"
#include "gwcp1/toda.hpp"

namespace gwcp1 {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

bool all_passed(const std::vector<SuiteResult>& results);

// Hurwitz polynomial identities, their coefficient corollaries, and the
// labeled-tree expansion of Z^{n-2}.
std::vector<SuiteResult> run_hurwitz_suite(int max_n, int max_tree_n = 6);

// Degree-0 checks: closed form vs recursion for f1, the string relation for
// the Hodge series, the n >= 3 ratio identity, the descendent-derivative
// partition identity, and structural invariants.
std::vector<SuiteResult> run_degree0_suite(int max_n, int eps_cap = 8, int z_cap = 6);

// Toda checks: the degree-1 base oracle, divisor/string bracket identities
// over all keys with the given bounds, literal-vs-production equivalence of
// the appended-zero realization, structural invariants of every cached
// series, and cache transparency.
std::vector<SuiteResult> run_toda_suite(TodaEngine& engine, int max_genus, int max_degree = 3,
                                        int max_insertions = 3);

// Hodge checks: the one-point lambda_g closed form against the series route,
// known values, and the multinomial structure of the lambda_g integrals.
std::vector<SuiteResult> run_hodge_suite(int max_genus);

// Structural invariants of one multipoint series: permutation symmetry within
// each variable group, even eps powers, and eps^{2g}-homogeneity of total
// point degree 2g - 2 + 2d + n.
VerifyReport check_series_structure(const MultiSeries& s, int d, int n_p,
                                    const std::vector<std::string>& y_group,
                                    const std::vector<std::string>& z_group);

} // namespace gwcp1
