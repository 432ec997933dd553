#include <doctest.h>

#include "gwcp1/degree_zero.hpp"
#include "gwcp1/kernels.hpp"

using namespace gwcp1;

namespace {

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

Rational coeff(const MultiSeries& s, std::initializer_list<std::pair<std::string, int>> exps) {
    std::map<std::string, int> m;
    for (const auto& [k, v] : exps) m[k] = v;
    return s.coefficient(m);
}

// Brute-force oracle for the two-point series: the displayed closed form
//   -sum_{k>=2} eps^k B_k/k! ( Z^{k+1}/(k+1) + (z1^{k+1}+z2^{k+1})/(k(k+1)) ),
// expanded directly from the Bernoulli numbers.
MultiSeries f1_two_point_oracle(const Truncation& t) {
    std::vector<std::string> vars = {kEps, "z1", "z2"};
    MultiSeries out(vars, t);
    const int budget = t.degree_budget();
    for (int k = 2; k <= t.eps_cap && k + 1 <= budget + 1; ++k) {
        Rational bk = bernoulli(k);
        if (bk.is_zero()) continue;
        Rational outer = -bk / factorial(static_cast<std::uint64_t>(k));
        MultiSeries epsk = MultiSeries::monomial(vars, t, {{kEps, k}}, Rational(1));
        MultiSeries zsum =
            linear_form_power(vars, t, unit_form({"z1", "z2"}), k + 1) * Rational(1, k + 1);
        MultiSeries powers(vars, t);
        powers.add_term({0, k + 1, 0}, Rational(1, k) * Rational(1, k + 1));
        powers.add_term({0, 0, k + 1}, Rational(1, k) * Rational(1, k + 1));
        out += epsk * (zsum + powers) * outer;
    }
    return out;
}

// Brute-force oracle for the P-only two-point series of degree 0:
//   -2 sinh_ratio(eps Z) Z^{-1} (L_{1,0}(Z) + L_{0,1}(z1) + L_{0,1}(z2)),
// with the L sums written out explicitly.
MultiSeries F0P_two_point_oracle(int eps_cap, int z_cap) {
    std::vector<std::string> vars = {kEps, "z1", "z2"};
    const int D = eps_cap + 1; // top z-degree of an eps^k slice is k + 1
    Truncation t = Truncation::uniform(eps_cap, {"z1", "z2"}, D, D);
    MultiSeries inner(vars, t);
    for (int k = 2; k <= eps_cap; ++k) {
        Rational bk = bernoulli(k);
        if (bk.is_zero()) continue;
        Rational base = -bk / factorial(static_cast<std::uint64_t>(k));
        MultiSeries epsk = MultiSeries::monomial(vars, t, {{kEps, k}}, Rational(1));
        MultiSeries l10 =
            linear_form_power(vars, t, unit_form({"z1", "z2"}), k + 1) * (base / Rational(k + 1));
        MultiSeries l01(vars, t);
        l01.add_term({0, k + 1, 0}, base / Rational(k) / Rational(k + 1));
        l01.add_term({0, 0, k + 1}, base / Rational(k) / Rational(k + 1));
        inner += epsk * (l10 + l01);
    }
    MultiSeries q = exact_divide(inner, {"z1", "z2"});
    MultiSeries ratio =
        compose_kernel(KernelKind::SinhRatio, 1, unit_form({"z1", "z2"}), vars, q.truncation());
    return (q * ratio * Rational(-2))
        .retagged(Truncation::uniform(eps_cap, {"z1", "z2"}, z_cap));
}

} // namespace

TEST_CASE("base multipoint series of the stationary-free sector") {
    Truncation t = Truncation::uniform(4, z_names(3), 4);
    CHECK(mp_f0(z_names(2), t).constant_term() == Rational(1));
    CHECK(mp_f0(z_names(2), t).term_count() == 1);

    MultiSeries f3 = mp_f0(z_names(3), t);
    CHECK(f3.term_count() == 3);
    CHECK(coeff(f3, {{"z1", 1}}) == Rational(1));

    CHECK_THROWS_AS(mp_f0(z_names(1), t), TooFewVariables);

    Truncation ts = Truncation::uniform(0, z_names(2), 4);
    ts.var_caps["x"] = 2;
    MultiSeries shifted = mp_f0_shifted(z_names(2), "x", ts);
    CHECK(shifted.coefficient({{"x", 0}}) == Rational(1));
    CHECK(shifted.coefficient({{"x", 1}, {"z1", 1}}) == Rational(1));
    CHECK(shifted.coefficient({{"x", 2}, {"z1", 1}, {"z2", 1}}) == Rational(1)); // 2/2!
    CHECK(shifted.coefficient({{"x", 2}, {"z1", 2}}) == Rational(1, 2));

    MultiSeries v = f0_v_series(z_names(2), t);
    CHECK(coeff(v, {{"z1", 1}}) == Rational(1));
    CHECK(coeff(v, {{"z2", 1}}) == Rational(1));
    CHECK(v.term_count() == 2);
}

TEST_CASE("one-Q series and its modified small cases") {
    SUBCASE("no P insertions") {
        Truncation t;
        t.eps_cap = 4;
        t.var_caps["y"] = 4;
        Degree0Series s = mp_F0_QP("y", {}, t);
        REQUIRE(s.principal.terms.size() == 1);
        CHECK(s.principal.terms.at(-2) == Rational(1));
        CHECK(coeff(s.regular, {{kEps, 2}, {"y", 0}}) == Rational(-1, 24));
        CHECK(coeff(s.regular, {{kEps, 4}, {"y", 2}}) == Rational(7, 5760));
    }
    SUBCASE("one P insertion") {
        Truncation t;
        t.eps_cap = 4;
        t.var_caps["y"] = 3;
        t.var_caps["z1"] = 3;
        Degree0Series s = mp_F0_QP("y", {"z1"}, t);
        REQUIRE(s.principal.terms.size() == 1);
        CHECK(s.principal.terms.at(-1) == Rational(1));
        CHECK(coeff(s.regular, {{kEps, 2}, {"y", 0}, {"z1", 1}}) == Rational(-1, 24));
        CHECK(coeff(s.regular, {{kEps, 2}, {"y", 1}, {"z1", 0}}) == Rational(-1, 24));
    }
    SUBCASE("two P insertions give the plain closed form") {
        Truncation t = Truncation::uniform(4, z_names(2), 3);
        t.var_caps["y"] = 3;
        Degree0Series s = mp_F0_QP("y", z_names(2), t);
        CHECK(s.principal.empty());
        CHECK(s.regular.constant_term() == Rational(1));
        // sinh_ratio(eps(y+z1+z2)): the eps^2 slice is -(y+z1+z2)^2/24
        CHECK(coeff(s.regular, {{kEps, 2}, {"y", 1}, {"z1", 1}}) == Rational(-1, 12));
        CHECK(coeff(s.regular, {{kEps, 2}, {"y", 2}}) == Rational(-1, 24));
    }
}

TEST_CASE("g series") {
    SUBCASE("one point reduces to L_{0,0}") {
        Truncation t = Truncation::uniform(6, z_names(1), 6);
        MultiSeries g = g_series(z_names(1), t);
        auto l00 = l_series(0, 0, 6);
        MultiSeries expect =
            substitute_linear(l00.body, "z", {{"z1", Rational(1)}}, {kEps, "z1"}, t);
        CHECK(g == expect);
        CHECK(coeff(g, {{kEps, 2}, {"z1", 2}}) == Rational(-1, 24));
    }
    SUBCASE("empty-subset terms are computed and vanish") {
        for (int i = 1; i <= 3; ++i) {
            auto l = l_series(-1, i, 8);
            Truncation t = Truncation::uniform(8, z_names(2), 8);
            MultiSeries at_zero =
                substitute_linear(l.body, "z", {}, {kEps, "z1", "z2"}, t);
            CHECK(at_zero.is_zero());
        }
    }
    SUBCASE("constant term vanishes for all n") {
        for (int n = 1; n <= 3; ++n) {
            Truncation t = Truncation::uniform(6, z_names(n), 5);
            CHECK(g_series(z_names(n), t).constant_term() == Rational(0));
        }
    }
}

TEST_CASE("two-point closed form against the brute-force oracle") {
    Truncation t = Truncation::uniform(8, z_names(2), 8);
    MultiSeries oracle = f1_two_point_oracle(t);
    MultiSeries got = f1_closed(z_names(2), t);
    CHECK(got == oracle);

    // frozen values confirmed by the oracle
    CHECK(coeff(got, {{kEps, 2}, {"z1", 2}, {"z2", 1}}) == Rational(-1, 12));
    CHECK(coeff(got, {{kEps, 2}, {"z1", 3}}) == Rational(-1, 24));
    CHECK(coeff(oracle, {{kEps, 2}, {"z1", 3}}) == Rational(-1, 24));
}

TEST_CASE("one-point closed form is the log kernel") {
    Truncation t = Truncation::uniform(10, z_names(1), 10);
    MultiSeries f1 = f1_closed(z_names(1), t);
    MultiSeries expect =
        compose_kernel(KernelKind::LogSinhRatio, 1, {{"z1", Rational(1)}}, {kEps, "z1"}, t);
    CHECK(f1 == expect);
}

TEST_CASE("recursion equals closed form at small size") {
    for (int n = 1; n <= 3; ++n) {
        Truncation t = Truncation::uniform(6, z_names(n), 5);
        CHECK(f1_recursive(z_names(n), t) == f1_closed(z_names(n), t));
    }
}

TEST_CASE("P-only degree-0 series") {
    SUBCASE("one point") {
        Truncation t = Truncation::uniform(6, z_names(1), 5);
        MultiSeries s = mp_F0_P(z_names(1), t);
        CHECK(coeff(s, {{kEps, 2}, {"z1", 1}}) == Rational(1, 12));
        for (const auto& [e, c] : s.terms()) CHECK(e[0] >= 2); // no eps^0 slice
    }
    SUBCASE("two points against the brute-force oracle") {
        MultiSeries got = mp_F0_P(z_names(2), Truncation::uniform(6, z_names(2), 6));
        MultiSeries oracle = F0P_two_point_oracle(6, 6);
        CHECK(got == oracle);
        CHECK(coeff(got, {{kEps, 2}, {"z1", 1}, {"z2", 1}}) == Rational(1, 12));
        CHECK(coeff(oracle, {{kEps, 2}, {"z1", 1}, {"z2", 1}}) == Rational(1, 12));
    }
}

TEST_CASE("Hodge series") {
    SUBCASE("three points is the plain kernel") {
        Truncation t = Truncation::uniform(4, z_names(3), 4);
        MultiSeries got = fbar(0, z_names(3), t);
        std::vector<std::string> vars = {kEps, "z1", "z2", "z3"};
        MultiSeries expect =
            compose_kernel(KernelKind::SinhRatio, 1, unit_form(z_names(3)), vars, t);
        CHECK(got == expect);
    }
    SUBCASE("one point, lambda_g side") {
        Truncation t = Truncation::uniform(4, z_names(1), 3);
        MultiSeries got = fbar(0, z_names(1), t);
        CHECK(coeff(got, {{kEps, 2}, {"z1", 0}}) == Rational(-1, 24));
        CHECK(coeff(got, {{kEps, 4}, {"z1", 2}}) == Rational(7, 5760));
        CHECK(coeff(got, {{kEps, 2}, {"z1", 1}}) == Rational(0));
    }
    SUBCASE("one point, lambda_{g-1} side") {
        Truncation t = Truncation::uniform(4, z_names(1), 3);
        MultiSeries got = fbar(1, z_names(1), t);
        CHECK(coeff(got, {{kEps, 2}, {"z1", 1}}) == Rational(-1, 24));
    }
}

TEST_CASE("Hodge integrals") {
    CHECK(hodge_integral({1, 1, {1}}) == Rational(1, 24));
    CHECK(hodge_integral({2, 0, {2}}) == Rational(7, 5760));
    CHECK(hodge_integral({1, 0, {1, 1, 0}}) == Rational(1, 12));
    CHECK(hodge_integral({1, 0, {0}}) == Rational(1, 24)); // integral of lambda_1 alone
    CHECK(hodge_integral({1, 0, {0, 0, 0}}) == Rational(0)); // dimension mismatch
    CHECK(hodge_integral({2, 1, {4}}) == Rational(0));        // dimension mismatch
    CHECK(hodge_integral({2, 1, {3}}) == Rational(1, 480));
    CHECK_THROWS_AS(hodge_integral({0, 0, {1}}), UnstableModuli);
    CHECK_THROWS_AS(hodge_integral({0, 0, {0, 0}}), UnstableModuli);
    CHECK_THROWS_AS(hodge_integral({1, 0, {}}), UnstableModuli);
}

TEST_CASE("one-point lambda_g closed form") {
    CHECK(lambda_g_onepoint(1) == Rational(1, 24));
    CHECK(lambda_g_onepoint(2) == Rational(7, 5760));
    CHECK(lambda_g_onepoint(3) == Rational(31, 967680));
    CHECK_THROWS_AS(lambda_g_onepoint(0), Error);
    for (int g = 1; g <= 6; ++g)
        CHECK(lambda_g_onepoint(g) == hodge_integral({g, 0, {2 * g - 2}}));
}

TEST_CASE("degree-0 structure invariants") {
    for (int n = 1; n <= 3; ++n) {
        Truncation t = Truncation::uniform(6, z_names(n), 6);
        MultiSeries s = mp_F0_P(z_names(n), t);
        CHECK(s.even_eps_only());
        CHECK(s.eps_homogeneous(n - 2));
        for (int i = 1; i < n; ++i)
            CHECK(s.symmetric_under_swap("z" + std::to_string(i), "z" + std::to_string(i + 1)));
    }
}
