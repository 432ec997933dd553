//
// toda.hpp -- higher-degree multipoint series via the Toda recursion, with a
// memo table and an on-disk cache, plus extraction of individual invariants.
//
// For d >= 1 the series F^d[y_1..y_m|z_1..z_n] is assembled from
//
//   (i)   -(2/d)   sum_i z_i F^d[y.., z_i | z.. \ z_i]
//   (ii)  -(2/d^2) sum_{i<j} z_i z_j F^d[y.., z_i, z_j | z.. \ {z_i,z_j}]
//   (iii) +(1/d^2) sum over set partitions P of all variables and over
//         compositions d_1+..+d_len(P) = d-1 of
//         prod_i sinh_ratio_inverse(eps (Y_i+Z_i))^2 F^{d_i}[y_i | z_i, 0, 0],
//
// where the empty partition of the empty variable set contributes 1 exactly
// when d = 1, and parts with d_i = 0 and two or more Q-variables vanish.
//
#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <condition_variable>
#include <string>
#include <vector>

#include "gwcp1/combinatorics.hpp"
#include "gwcp1/degree_zero.hpp"
#include "gwcp1/multiseries.hpp"

namespace gwcp1 {

// Cache identity of one canonical series: the series is symmetric separately
// in its Q- and P-variables, so counts plus the working eps cap suffice.
struct SeriesKey {
    int d = 0;
    int m = 0;
    int n = 0;
    int eps_cap = 0;
    auto operator<=>(const SeriesKey&) const = default;
};

struct InvariantKey {
    int g = 0;
    int d = 0;
    std::vector<int> q_desc; // descendent indices paired with the point class
    std::vector<int> p_desc; // descendent indices paired with the identity
};

struct Limits {
    int max_degree = 6;
    int max_genus = 6;
    int max_insertions = 6;
};

class TodaEngine {
public:
    TodaEngine() = default;
    explicit TodaEngine(Limits limits) : limits_(limits) {}

    const Limits& limits() const { return limits_; }

    // Canonical series over (eps, y1..ym, z1..zn) at the working caps derived
    // from eps_cap; memoized.  Concurrent callers are safe: at most one
    // computation per key is in flight and duplicates wait for the result.
    std::shared_ptr<const MultiSeries> multipoint_canonical(int d, int m, int n, int eps_cap);

    // General entry: named variables and an arbitrary truncation request.
    MultiSeries multipoint(int d, const std::vector<std::string>& y_vars,
                           const std::vector<std::string>& z_vars, const Truncation& trunc);

    // Reference implementation of the recursion in which the appended zero
    // insertions of term (iii) are realized literally: the part series is
    // computed with two extra P-variables (capped at exponent 0) and then
    // specialized to zero.  Unmemoized; intended for equivalence testing
    // against the production path at small sizes.
    MultiSeries multipoint_literal(int d, const std::vector<std::string>& y_vars,
                                   const std::vector<std::string>& z_vars,
                                   const Truncation& trunc, int depth = 0);

    // F^d[y..|z.., 0, 0] over the union of the part variables, production path.
    MultiSeries part_series(int d, const std::vector<std::string>& y_part,
                            const std::vector<std::string>& z_part,
                            const std::vector<std::string>& vars, const Truncation& trunc);

    Rational gw_invariant(const InvariantKey& key);

    // Divisor and string identities at the bracket level for one base key;
    // instances touching unstable degree-0 brackets are skipped.
    VerifyReport check_divisor_string(const InvariantKey& base);

    void cache_store(const std::string& path) const;
    void cache_load(const std::string& path);
    void clear();
    std::size_t cached_count() const;
    void for_each_cached(
        const std::function<void(const SeriesKey&, const MultiSeries&)>& fn) const;

    // Conservative caps for a series with the given degree and P-variable
    // count: each eps^{2g} slice is homogeneous of total point degree
    // 2g - 2 + 2d + n, so every point variable is capped (and the combined
    // degree pinned) at U = eps_cap - 2 + 2d + n.
    static Truncation working_truncation(int d, int n, int eps_cap,
                                         const std::vector<std::string>& point_vars);
    static std::vector<std::string> canonical_y(int m);
    static std::vector<std::string> canonical_z(int n);

private:
    MultiSeries compute_canonical(int d, int m, int n, int eps_cap);
    void enforce_entry_limits(int d, int m, int n, int eps_cap) const;

    Limits limits_;
    mutable std::mutex mutex_;
    std::condition_variable ready_;
    struct Entry {
        std::shared_ptr<const MultiSeries> value; // null while computing
    };
    std::map<SeriesKey, Entry> memo_;
};

} // namespace gwcp1
