//
// verify.cpp
//
#include "gwcp1/verify.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "gwcp1/kernels.hpp"

namespace gwcp1 {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
void run_check(std::vector<SuiteResult>& results, const std::string& name, Fn&& fn) {
    auto start = Clock::now();
    SuiteResult r;
    r.name = name;
    try {
        VerifyReport rep = fn();
        r.passed = rep.passed;
        r.detail = rep.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    r.seconds = seconds_since(start);
    results.push_back(std::move(r));
}

std::vector<std::string> z_names(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

std::map<std::string, Rational> unit_form(const std::vector<std::string>& names) {
    std::map<std::string, Rational> form;
    for (const auto& v : names) form[v] = Rational(1);
    return form;
}

VerifyReport series_equal(const MultiSeries& a, const MultiSeries& b, const std::string& what) {
    if (a.variables() != b.variables())
        return {false, what + ": variable lists differ"};
    for (const auto& [e, c] : a.terms())
        if (b.coefficient_raw(e) != c)
            return {false, what + ": first differing monomial " +
                               monomial_to_string(a.variables(), e) + " (" + c.str() + " vs " +
                               b.coefficient_raw(e).str() + ")"};
    for (const auto& [e, c] : b.terms())
        if (a.coefficient_raw(e) != c)
            return {false, what + ": first differing monomial " +
                               monomial_to_string(b.variables(), e) + " (" +
                               a.coefficient_raw(e).str() + " vs " + c.str() + ")"};
    return {};
}

// all ways to write `total` as a sum over exactly `parts` nonincreasing
// nonnegative integers is not needed; multisets here are plain tuples since
// the brackets are symmetric
void enumerate_multisets(int size, int max_index, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(size), 0);
    auto walk = [&](auto&& self, int pos, int low) -> void {
        if (pos == size) {
            out.push_back(cur);
            return;
        }
        for (int v = low; v <= max_index; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    if (size == 0) {
        out.push_back({});
        return;
    }
    walk(walk, 0, 0);
}

} // namespace

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

VerifyReport check_series_structure(const MultiSeries& s, int d, int n_p,
                                    const std::vector<std::string>& y_group,
                                    const std::vector<std::string>& z_group) {
    if (!s.even_eps_only()) return {false, "odd eps power present"};
    if (!s.eps_homogeneous(2 * d + n_p - 2))
        return {false, "eps^{2g} slice not homogeneous of degree 2g-2+2d+n"};
    for (std::size_t i = 0; i + 1 < y_group.size(); ++i)
        if (!s.symmetric_under_swap(y_group[i], y_group[i + 1]))
            return {false, "not symmetric under " + y_group[i] + " <-> " + y_group[i + 1]};
    for (std::size_t i = 0; i + 1 < z_group.size(); ++i)
        if (!s.symmetric_under_swap(z_group[i], z_group[i + 1]))
            return {false, "not symmetric under " + z_group[i] + " <-> " + z_group[i + 1]};
    return {};
}

std::vector<SuiteResult> run_hurwitz_suite(int max_n, int max_tree_n) {
    std::vector<SuiteResult> results;
    for (int n = 1; n <= max_n; ++n) {
        run_check(results, "hurwitz identity 1, n=" + std::to_string(n),
                  [&] { return verify_hurwitz(1, n); });
        run_check(results, "hurwitz identity 2 (dZ form), n=" + std::to_string(n),
                  [&] { return verify_hurwitz(2, n); });
    }
    for (int n = 2; n <= max_tree_n; ++n) {
        run_check(results, "tree expansion of Z^{n-2}, n=" + std::to_string(n), [&] {
            auto trees = labeled_trees(n);
            // Cayley count n^{n-2}
            long expected = 1;
            for (int i = 0; i < n - 2; ++i) expected *= n;
            if (static_cast<long>(trees.size()) != expected)
                return VerifyReport{false, "tree count " + std::to_string(trees.size()) +
                                               " != " + std::to_string(expected)};
            auto zs = z_names(n);
            Truncation t = Truncation::uniform(0, zs, n - 2, n - 2);
            MultiSeries direct = linear_form_power(zs, t, unit_form(zs), n - 2);
            return series_equal(tree_valence_polynomial(n), direct, "valence polynomial");
        });
    }
    return results;
}

std::vector<SuiteResult> run_degree0_suite(int max_n, int eps_cap, int z_cap) {
    std::vector<SuiteResult> results;

    for (int n = 1; n <= max_n; ++n) {
        run_check(results, "f1 closed form == f1 recursion, n=" + std::to_string(n), [&] {
            auto zs = z_names(n);
            Truncation t = Truncation::uniform(eps_cap, zs, z_cap);
            return series_equal(f1_recursive(zs, t), f1_closed(zs, t), "f1, n=" +
                                                                           std::to_string(n));
        });
    }

    for (int h = 0; h <= 1; ++h) {
        for (int n = 1; n <= max_n; ++n) {
            run_check(results,
                      "string relation, h=" + std::to_string(h) + ", n=" + std::to_string(n),
                      [&] {
                          auto zs = z_names(n + 1);
                          Truncation t = Truncation::uniform(eps_cap, zs, z_cap);
                          t.var_caps[zs.back()] = 0;
                          MultiSeries lhs = fbar(h, zs, t).specialized_zero(zs.back());
                          auto zr = z_names(n);
                          Truncation tr = Truncation::uniform(eps_cap, zr, z_cap);
                          auto vars = lhs.variables();
                          MultiSeries rhs =
                              fbar(h, zr, tr) * linear_form_power(vars, tr, unit_form(zr), 1);
                          if (h == 0 && n == 2) rhs += MultiSeries::one(vars, tr);
                          return series_equal(lhs, rhs, "string relation");
                      });
        }
    }

    for (int n = 3; n <= std::max(3, max_n); ++n) {
        run_check(results, "Hodge ratio identity, n=" + std::to_string(n), [&] {
            auto zs = z_names(n);
            Truncation req = Truncation::uniform(eps_cap, zs, z_cap);
            const int D = eps_cap + n - 1;
            Truncation ti = Truncation::uniform(eps_cap, zs, D, D);
            MultiSeries f1 = f1_closed(zs, ti);
            MultiSeries q = exact_divide(f1, zs);
            std::vector<std::string> vars = {kEps};
            vars.insert(vars.end(), zs.begin(), zs.end());
            MultiSeries rhs =
                (compose_kernel(KernelKind::SinhRatio, 1, unit_form(zs), vars, q.truncation()) * q)
                    .retagged(req);
            return series_equal(fbar(1, zs, req), rhs, "fbar(1) vs sinh_ratio * f1 / Z");
        });
    }

    // descendent-derivative identity: partial_k of the base series equals the
    // sum over set partitions into k+1 parts of prod Z_P^{|P|-1}
    for (int n = 2; n <= max_n; ++n) {
        run_check(results, "descendent derivative partition identity, n=" + std::to_string(n),
                  [&] {
                      auto zs = z_names(n);
                      Truncation t = Truncation::uniform(0, zs, n, n);
                      for (int k = 0; k <= n - 1; ++k) {
                          MultiSeries lhs = f0_descendent_derivative(k, zs, t);
                          MultiSeries rhs(zs, t);
                          for (const auto& p : set_partitions(zs)) {
                              if (static_cast<int>(p.parts.size()) != k + 1) continue;
                              MultiSeries term = MultiSeries::one(zs, t);
                              for (const auto& part : p.parts)
                                  term = term *
                                         linear_form_power(zs, t, unit_form(part),
                                                           static_cast<int>(part.size()) - 1);
                              rhs += term;
                          }
                          auto rep = series_equal(lhs, rhs, "k=" + std::to_string(k));
                          if (!rep.passed) return rep;
                      }
                      return VerifyReport{};
                  });
    }

    for (int n = 1; n <= max_n; ++n) {
        run_check(results, "degree-0 structure, n=" + std::to_string(n), [&] {
            auto zs = z_names(n);
            Truncation t = Truncation::uniform(eps_cap, zs, z_cap);
            auto rep = check_series_structure(mp_F0_P(zs, t), 0, n, {}, zs);
            if (!rep.passed) return rep;
            Truncation tq = t;
            tq.var_caps["y1"] = z_cap;
            auto qp = mp_F0_QP("y1", zs, tq);
            return check_series_structure(qp.regular, 0, n, {"y1"}, zs);
        });
    }
    return results;
}

std::vector<SuiteResult> run_toda_suite(TodaEngine& engine, int max_genus, int max_degree,
                                        int max_insertions) {
    std::vector<SuiteResult> results;
    const int eps = 2 * max_genus;

    run_check(results, "degree-1 one-point base series", [&] {
        Truncation t;
        t.eps_cap = eps;
        t.var_caps["y"] = eps;
        MultiSeries got = engine.multipoint(1, {"y"}, {}, t);
        MultiSeries expect =
            compose_kernel(KernelKind::SinhRatioInverse, 1, {{"y", Rational(1)}}, {kEps, "y"}, t);
        return series_equal(got, expect, "F^1[y|]");
    });

    run_check(results, "degree-1 constant series", [&] {
        Truncation t;
        t.eps_cap = eps;
        MultiSeries got = engine.multipoint(1, {}, {}, t);
        if (got.constant_term() != Rational(1) || got.term_count() != 1)
            return VerifyReport{false, "F^1[|] != 1"};
        return VerifyReport{};
    });

    run_check(results, "divisor and string bracket identities", [&] {
        for (int d = 0; d <= max_degree; ++d) {
            for (int g = 0; g <= max_genus; ++g) {
                const int dim_cap = 2 * g - 2 + 2 * d + max_insertions + 1;
                for (int m = 0; m + 0 <= max_insertions; ++m) {
                    for (int n = 0; m + n <= max_insertions; ++n) {
                        std::vector<std::vector<int>> qs, ps;
                        enumerate_multisets(m, std::max(0, dim_cap), qs);
                        enumerate_multisets(n, std::max(0, dim_cap), ps);
                        for (const auto& q : qs) {
                            for (const auto& p : ps) {
                                InvariantKey key{g, d, q, p};
                                auto rep = engine.check_divisor_string(key);
                                if (!rep.passed) return rep;
                            }
                        }
                    }
                }
            }
        }
        return VerifyReport{};
    });

    run_check(results, "literal appended-zero realization matches production", [&] {
        for (int d = 1; d <= std::min(2, max_degree); ++d) {
            for (int m = 0; m <= 1; ++m) {
                for (int n = 0; m + n <= 2; ++n) {
                    auto ys = TodaEngine::canonical_y(m);
                    auto zs = TodaEngine::canonical_z(n);
                    std::vector<std::string> points = ys;
                    points.insert(points.end(), zs.begin(), zs.end());
                    Truncation wt = TodaEngine::working_truncation(d, n, 4, points);
                    MultiSeries literal = engine.multipoint_literal(d, ys, zs, wt);
                    MultiSeries production = engine.multipoint(d, ys, zs, wt);
                    auto rep = series_equal(literal, production,
                                            "d=" + std::to_string(d) + ", m=" + std::to_string(m) +
                                                ", n=" + std::to_string(n));
                    if (!rep.passed) return rep;
                }
            }
        }
        return VerifyReport{};
    });

    run_check(results, "structural invariants of every cached series", [&] {
        VerifyReport rep;
        engine.for_each_cached([&](const SeriesKey& key, const MultiSeries& s) {
            if (!rep.passed) return;
            auto r = check_series_structure(s, key.d, key.n, TodaEngine::canonical_y(key.m),
                                            TodaEngine::canonical_z(key.n));
            if (!r.passed) {
                rep = r;
                rep.detail += " (d=" + std::to_string(key.d) + ", m=" + std::to_string(key.m) +
                              ", n=" + std::to_string(key.n) + ")";
            }
        });
        return rep;
    });

    run_check(results, "cache transparency", [&] {
        namespace fs = std::filesystem;
        InvariantKey probe{1, 1, {2}, {}};
        Rational cold = engine.gw_invariant(probe);
        fs::path path = fs::temp_directory_path() / "gwcp1-verify-cache.json";
        engine.cache_store(path.string());
        TodaEngine warm(engine.limits());
        warm.cache_load(path.string());
        Rational reloaded = warm.gw_invariant(probe);
        std::error_code ec;
        fs::remove(path, ec);
        if (cold != reloaded)
            return VerifyReport{false,
                                "warm value " + reloaded.str() + " != cold value " + cold.str()};
        return VerifyReport{};
    });

    return results;
}

std::vector<SuiteResult> run_hodge_suite(int max_genus) {
    std::vector<SuiteResult> results;

    run_check(results, "one-point lambda_g closed form vs series route", [&] {
        for (int g = 1; g <= max_genus; ++g) {
            Rational closed = lambda_g_onepoint(g);
            Rational series = hodge_integral({g, 0, {2 * g - 2}});
            if (closed != series)
                return VerifyReport{false, "g=" + std::to_string(g) + ": " + closed.str() +
                                               " != " + series.str()};
        }
        return VerifyReport{};
    });

    run_check(results, "known Hodge integrals", [&] {
        if (hodge_integral({1, 1, {1}}) != Rational(1, 24))
            return VerifyReport{false, "psi lambda_0 integral at g=1"};
        if (hodge_integral({2, 0, {2}}) != Rational(7, 5760))
            return VerifyReport{false, "psi^2 lambda_2 integral at g=2"};
        if (hodge_integral({1, 0, {1, 1, 0}}) != Rational(1, 12))
            return VerifyReport{false, "psi_1 psi_2 lambda_1 integral at g=1, n=3"};
        return VerifyReport{};
    });

    run_check(results, "multinomial structure of lambda_g integrals", [&] {
        for (int g = 1; g <= std::min(3, max_genus); ++g) {
            for (int n = 2; n <= 3; ++n) {
                const int dim = 2 * g - 3 + n;
                if (dim < 0) continue;
                std::vector<int> base(static_cast<std::size_t>(n), 0);
                base[0] = dim;
                Rational reference = hodge_integral({g, 0, base});
                std::vector<std::vector<int>> tuples;
                enumerate_multisets(n, dim, tuples);
                for (const auto& ks : tuples) {
                    long sum = 0;
                    for (int k : ks) sum += k;
                    if (sum != dim) continue;
                    Rational expect = reference;
                    // multinomial(dim; ks)
                    Rational mult = factorial(static_cast<std::uint64_t>(dim));
                    for (int k : ks) mult /= factorial(static_cast<std::uint64_t>(k));
                    expect *= mult;
                    Rational got = hodge_integral({g, 0, ks});
                    if (got != expect) {
                        std::ostringstream os;
                        os << "g=" << g << ", psi exponents";
                        for (int k : ks) os << " " << k;
                        return VerifyReport{false, os.str()};
                    }
                }
            }
        }
        return VerifyReport{};
    });

    return results;
}

} // namespace gwcp1
