//
// combinatorics.cpp
//
#include "gwcp1/combinatorics.hpp"

#include <algorithm>
#include <set>

#include "gwcp1/rational.hpp"

namespace gwcp1 {

std::vector<int> LabeledTree::valences() const {
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [i, j] : edges) {
        d[static_cast<std::size_t>(i)] += 1;
        d[static_cast<std::size_t>(j)] += 1;
    }
    return d;
}

std::vector<std::vector<int>> proper_subsets(int n) {
    if (n < 1) throw Error("proper_subsets: n must be positive");
    if (n > 30) throw BoundExceeded("proper_subsets: n too large");
    std::vector<std::vector<int>> out;
    const unsigned full = (1u << n) - 1u;
    out.reserve(full);
    for (unsigned mask = 0; mask < full; ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        out.push_back(std::move(subset));
    }
    return out;
}

std::vector<SetPartition> set_partitions(const std::vector<std::string>& ground) {
    std::vector<SetPartition> out;
    const int n = static_cast<int>(ground.size());
    if (n == 0) {
        out.push_back(SetPartition{ground, {}});
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        int blocks = 1 + *std::max_element(a.begin(), a.end());
        SetPartition p;
        p.ground = ground;
        p.parts.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 0; i < n; ++i)
            p.parts[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(
                ground[static_cast<std::size_t>(i)]);
        out.push_back(std::move(p));
    };
    auto walk = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    walk(walk, 1, 0);
    return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    if (total < 0 || parts < 0) throw Error("compositions: negative arguments");
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    auto walk = [&](auto&& self, int i, int remaining) -> void {
        if (i + 1 == parts) {
            c[static_cast<std::size_t>(i)] = remaining;
            out.push_back(c);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    walk(walk, 0, total);
    return out;
}

LabeledTree pruefer_decode(const std::vector<int>& seq, int n) {
    LabeledTree tree;
    tree.n = n;
    if (n == 1) return tree;
    if (static_cast<int>(seq.size()) != n - 2) throw Error("pruefer_decode: bad length");
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : seq) degree[static_cast<std::size_t>(v)] += 1;
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        tree.edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    int u = *leaves.begin(), w = *std::next(leaves.begin());
    tree.edges.emplace_back(std::min(u, w), std::max(u, w));
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

std::vector<int> pruefer_encode(const LabeledTree& tree) {
    const int n = tree.n;
    std::vector<int> seq;
    if (n <= 2) return seq;
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& [i, j] : tree.edges) {
        adj[static_cast<std::size_t>(i)].insert(j);
        adj[static_cast<std::size_t>(j)].insert(i);
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (adj[static_cast<std::size_t>(v)].size() == 1) leaves.insert(v);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int parent = *adj[static_cast<std::size_t>(leaf)].begin();
        seq.push_back(parent);
        adj[static_cast<std::size_t>(parent)].erase(leaf);
        adj[static_cast<std::size_t>(leaf)].clear();
        if (adj[static_cast<std::size_t>(parent)].size() == 1) leaves.insert(parent);
    }
    return seq;
}

std::vector<LabeledTree> labeled_trees(int n, int bound) {
    if (n < 1) throw Error("labeled_trees: n must be positive");
    if (n > bound) throw BoundExceeded("labeled_trees: n exceeds bound " + std::to_string(bound));
    std::vector<LabeledTree> out;
    if (n <= 2) {
        out.push_back(pruefer_decode({}, n));
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n) - 2, 1);
    while (true) {
        out.push_back(pruefer_decode(seq, n));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n) {
            seq[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        seq[static_cast<std::size_t>(i)] += 1;
    }
    return out;
}

namespace {

std::vector<std::string> z_names(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
    return vars;
}

std::map<std::string, Rational> unit_form(const std::vector<std::string>& names) {
    std::map<std::string, Rational> form;
    for (const auto& v : names) form[v] = Rational(1);
    return form;
}

VerifyReport compare(const MultiSeries& lhs, const MultiSeries& rhs, const std::string& what) {
    if (lhs == rhs) return {};
    MultiSeries diff = lhs - rhs;
    const auto& [e, c] = *diff.terms().begin();
    return {false, what + ": first differing monomial " +
                       monomial_to_string(diff.variables(), e) + " (difference " + c.str() + ")"};
}

} // namespace

MultiSeries tree_valence_polynomial(int n, int bound) {
    if (n < 2) throw Error("tree_valence_polynomial: n must be at least 2");
    auto vars = z_names(n);
    Truncation t = Truncation::uniform(0, vars, n - 2, n - 2);
    MultiSeries s(vars, t);
    for (const auto& tree : labeled_trees(n, bound)) {
        auto d = tree.valences();
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            e[static_cast<std::size_t>(i - 1)] = d[static_cast<std::size_t>(i)] - 1;
        s.add_term(e, Rational(1));
    }
    return s;
}

VerifyReport verify_hurwitz(int which, int n, int bound) {
    if (which != 1 && which != 2) throw Error("verify_hurwitz: which must be 1 or 2");
    if (n < 1) throw Error("verify_hurwitz: n must be positive");
    if (n > bound) throw BoundExceeded("verify_hurwitz: n exceeds bound");

    auto zs = z_names(n);
    std::vector<std::string> vars = {"x", "y"};
    vars.insert(vars.end(), zs.begin(), zs.end());
    Truncation t = Truncation::uniform(0, vars, n, n);

    auto power = [&](const std::map<std::string, Rational>& form, int p) {
        return linear_form_power(vars, t, form, p);
    };
    auto xy_plus = [&](std::initializer_list<std::string> extra,
                       const std::vector<int>& subset) {
        std::map<std::string, Rational> form;
        for (const auto& v : extra) form[v] = Rational(1);
        for (int i : subset) form[zs[static_cast<std::size_t>(i)]] = Rational(1);
        return form;
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    auto complement = [&](const std::vector<int>& subset) {
        std::vector<int> rest;
        for (int i : all)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) rest.push_back(i);
        return rest;
    };
    const MultiSeries x_var = MultiSeries::monomial(vars, t, {{"x", 1}}, Rational(1));
    const MultiSeries y_var = MultiSeries::monomial(vars, t, {{"y", 1}}, Rational(1));

    if (which == 1) {
        // (x+y)(x+y+Z)^{n-1} == y(y+Z)^{n-1} + x(x+Z)^{n-1}
        //                       + xy * sum_{0<|I|<n} (x+Z_I)^{|I|-1} (y+Z-Z_I)^{n-|I|-1}
        MultiSeries lhs = power(xy_plus({"x", "y"}, {}), 1) * power(xy_plus({"x", "y"}, all), n - 1);
        MultiSeries rhs = y_var * power(xy_plus({"y"}, all), n - 1) +
                          x_var * power(xy_plus({"x"}, all), n - 1);
        for (const auto& subset : proper_subsets(n)) {
            if (subset.empty()) continue;
            MultiSeries mid = power(xy_plus({"x"}, subset), static_cast<int>(subset.size()) - 1) *
                              power(xy_plus({"y"}, complement(subset)),
                                    n - static_cast<int>(subset.size()) - 1);
            rhs += x_var * y_var * mid;
        }
        auto rep = compare(lhs, rhs, "hurwitz identity 1, n=" + std::to_string(n));
        if (!rep.passed) return rep;

        // Corollary: (i+1) C(n-1,i) Z^{n-i-1}
        //            == sum_{0<|I|<n} C(|I|-1, i-1) Z_I^{|I|-i} (Z-Z_I)^{n-|I|-1}
        Truncation tz = Truncation::uniform(0, zs, n, n);
        for (int i = 1; i <= n - 1; ++i) {
            MultiSeries lhs_i =
                linear_form_power(zs, tz, unit_form(zs), n - i - 1) *
                (binomial(static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(i)) *
                 Rational(i + 1));
            MultiSeries rhs_i(zs, tz);
            for (const auto& subset : proper_subsets(n)) {
                int sz = static_cast<int>(subset.size());
                if (sz == 0 || sz < i) continue;
                std::vector<std::string> inames, cnames;
                for (int k : subset) inames.push_back(zs[static_cast<std::size_t>(k)]);
                for (int k : complement(subset)) cnames.push_back(zs[static_cast<std::size_t>(k)]);
                MultiSeries term =
                    linear_form_power(zs, tz, unit_form(inames), sz - i) *
                    linear_form_power(zs, tz, unit_form(cnames), n - sz - 1) *
                    binomial(static_cast<std::uint64_t>(sz) - 1, static_cast<std::uint64_t>(i) - 1);
                rhs_i += term;
            }
            auto rep_i = compare(lhs_i, rhs_i,
                                 "hurwitz corollary 1, n=" + std::to_string(n) +
                                     ", i=" + std::to_string(i));
            if (!rep_i.passed) return rep_i;
        }
        return {};
    }

    // which == 2: per dz_k,
    // (x+y+Z)^{n-1} == (x+Z)^{n-1} + y * sum_{k in I, |I|<n} (x+Z_I)^{|I|-1} (y+Z-Z_I)^{n-|I|-1}
    for (int k = 0; k < n; ++k) {
        MultiSeries lhs = power(xy_plus({"x", "y"}, all), n - 1);
        MultiSeries rhs = power(xy_plus({"x"}, all), n - 1);
        for (const auto& subset : proper_subsets(n)) {
            if (std::find(subset.begin(), subset.end(), k) == subset.end()) continue;
            MultiSeries mid = power(xy_plus({"x"}, subset), static_cast<int>(subset.size()) - 1) *
                              power(xy_plus({"y"}, complement(subset)),
                                    n - static_cast<int>(subset.size()) - 1);
            rhs += y_var * mid;
        }
        auto rep = compare(lhs, rhs,
                           "hurwitz identity 2, n=" + std::to_string(n) + ", dz_" +
                               std::to_string(k + 1));
        if (!rep.passed) return rep;
    }

    // Corollary: per dz_k, i C(n-1,i) Z^{n-i-1}
    //            == sum_{k in I, 0<|I|<n} C(|I|-1,i-1) Z_I^{|I|-i} (Z-Z_I)^{n-|I|-1}
    Truncation tz = Truncation::uniform(0, zs, n, n);
    for (int i = 1; i <= n - 1; ++i) {
        for (int k = 0; k < n; ++k) {
            MultiSeries lhs_i =
                linear_form_power(zs, tz, unit_form(zs), n - i - 1) *
                (binomial(static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(i)) *
                 Rational(i));
            MultiSeries rhs_i(zs, tz);
            for (const auto& subset : proper_subsets(n)) {
                int sz = static_cast<int>(subset.size());
                if (sz == 0 || sz < i) continue;
                if (std::find(subset.begin(), subset.end(), k) == subset.end()) continue;
                std::vector<std::string> inames, cnames;
                for (int q : subset) inames.push_back(zs[static_cast<std::size_t>(q)]);
                for (int q : complement(subset)) cnames.push_back(zs[static_cast<std::size_t>(q)]);
                MultiSeries term =
                    linear_form_power(zs, tz, unit_form(inames), sz - i) *
                    linear_form_power(zs, tz, unit_form(cnames), n - sz - 1) *
                    binomial(static_cast<std::uint64_t>(sz) - 1, static_cast<std::uint64_t>(i) - 1);
                rhs_i += term;
            }
            auto rep_i = compare(rhs_i, lhs_i,
                                 "hurwitz corollary 2, n=" + std::to_string(n) + ", i=" +
                                     std::to_string(i) + ", dz_" + std::to_string(k + 1));
            if (!rep_i.passed) return rep_i;
        }
    }
    return {};
}

} // namespace gwcp1
