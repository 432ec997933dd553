#include <doctest.h>

#include "gwcp1/kernels.hpp"

using namespace gwcp1;

namespace {

Rational coeff(const MultiSeries& s, std::initializer_list<std::pair<std::string, int>> exps) {
    std::map<std::string, int> m;
    for (const auto& [k, v] : exps) m[k] = v;
    return s.coefficient(m);
}

} // namespace

TEST_CASE("bernoulli numbers from the recurrence") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(5) == Rational(0));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(10) == Rational(5, 66));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(16) == Rational(-3617, 510));
    CHECK_THROWS_AS(bernoulli(-1), Error);
}

TEST_CASE("kernel expansions at low order") {
    auto sr = kernel(KernelKind::SinhRatio, 4).body;
    CHECK(coeff(sr, {{"x", 0}}) == Rational(1));
    CHECK(coeff(sr, {{"x", 2}}) == Rational(-1, 24));
    CHECK(coeff(sr, {{"x", 4}}) == Rational(7, 5760));
    CHECK(coeff(sr, {{"x", 3}}) == Rational(0));

    auto td = kernel(KernelKind::TanhDefect, 4).body;
    CHECK(coeff(td, {{"x", 2}}) == Rational(-1, 12));
    CHECK(coeff(td, {{"x", 4}}) == Rational(1, 720));
    CHECK(coeff(td, {{"x", 0}}) == Rational(0));
    CHECK(coeff(td, {{"x", 1}}) == Rational(0));

    auto ls = kernel(KernelKind::LogSinhRatio, 4).body;
    CHECK(coeff(ls, {{"x", 2}}) == Rational(-1, 24));
    CHECK(coeff(ls, {{"x", 4}}) == Rational(1, 2880));

    auto si = kernel(KernelKind::SinhRatioInverse, 4).body;
    CHECK(coeff(si, {{"x", 2}}) == Rational(1, 24));
    CHECK(coeff(si, {{"x", 4}}) == Rational(1, 1920));
}

TEST_CASE("kernel consistency identities") {
    const int order = 12;
    auto sr = kernel(KernelKind::SinhRatio, order).body;
    auto si = kernel(KernelKind::SinhRatioInverse, order).body;
    auto ls = kernel(KernelKind::LogSinhRatio, order).body;
    auto td = kernel(KernelKind::TanhDefect, order).body;

    CHECK(log(sr) == ls);
    CHECK(sr * si == MultiSeries::one(sr.variables(), sr.truncation()));

    // x * d/dx log_sinh_ratio = tanh_defect, termwise -B_k x^k / k!
    MultiSeries x = MultiSeries::monomial(ls.variables(), ls.truncation(), {{"x", 1}},
                                          Rational(1));
    Truncation common = td.truncation().meet((x * ls.derivative("x")).truncation());
    CHECK((x * ls.derivative("x")).restricted(common) == td.restricted(common));

    // only even powers
    for (const auto& [e, c] : sr.terms()) CHECK(e[0] % 2 == 0);
    for (const auto& [e, c] : td.terms()) CHECK(e[0] % 2 == 0);
}

TEST_CASE("L series leading terms and base values") {
    auto l00 = l_series(0, 0, 6);
    CHECK(coeff(l00.body, {{kEps, 2}, {"z", 2}}) == Rational(-1, 24));
    auto l10 = l_series(1, 0, 6);
    CHECK(coeff(l10.body, {{kEps, 2}, {"z", 3}}) == Rational(-1, 36));

    // every exponent of z is at least 2 + a + i, so L(0) = 0
    for (int a = -1; a <= 3; ++a) {
        for (int i = 0; i <= 3; ++i) {
            auto l = l_series(a, i, 9);
            CHECK(l.body.constant_term() == Rational(0));
            for (const auto& [e, c] : l.body.terms()) {
                CHECK(e[1] >= 2 + a + i);
                CHECK(e[1] == e[0] + a + i); // z-exponent tied to the eps power
                CHECK(e[0] % 2 == 0);
            }
        }
    }

    CHECK_THROWS_AS(l_series(-2, 0, 4), InvalidIndex);
    CHECK_THROWS_AS(l_series(0, -1, 4), InvalidIndex);
}

TEST_CASE("L series differential recursion") {
    for (int a = 0; a <= 4; ++a) {
        for (int i = 1; i <= 4; ++i) {
            auto upper = l_series(a, i, 12);
            auto lower = l_series(a, i - 1, 12);
            MultiSeries lhs = upper.body.derivative("z");
            MultiSeries rhs = lower.body * Rational(i);
            Truncation common = lhs.truncation().meet(rhs.truncation());
            CHECK(lhs.restricted(common) == rhs.restricted(common));
        }
    }
}

TEST_CASE("L_{a,0} derivative matches the defining integrand") {
    // d/dz L_{a,0}(z) = z^{a-1} tanh_defect(eps z); for a = 0 the z^{-1} factor
    // is an exact division since tanh_defect vanishes to second order
    const int order = 10;
    for (int a = 0; a <= 3; ++a) {
        auto l = l_series(a, 0, order);
        MultiSeries lhs = l.body.derivative("z");
        Truncation t = lhs.truncation();
        MultiSeries defect =
            compose_kernel(KernelKind::TanhDefect, 1, {{"z", Rational(1)}}, {kEps, "z"}, t);
        MultiSeries rhs = a >= 1 ? defect * MultiSeries::monomial(defect.variables(), t,
                                                                  {{"z", a - 1}}, Rational(1))
                                 : divide_by_var_power(defect, "z", 1);
        Truncation common = lhs.truncation().meet(rhs.truncation());
        CHECK(lhs.restricted(common) == rhs.restricted(common));
    }
}
