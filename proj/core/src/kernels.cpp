//
// kernels.cpp
//
#include "gwcp1/kernels.hpp"

#include <mutex>
#include <vector>

namespace gwcp1 {

namespace {

const std::string kX = "x";

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli; // B_0, B_1, ...

MultiSeries univariate_zero(int order) {
    Truncation t;
    t.var_caps[kX] = order;
    return MultiSeries({kX}, t);
}

} // namespace

Rational bernoulli(int k) {
    if (k < 0) throw Error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) {
        g_bernoulli.push_back(Rational(1));
        g_bernoulli.push_back(Rational(-1, 2));
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    while (static_cast<int>(g_bernoulli.size()) <= k) {
        int n = static_cast<int>(g_bernoulli.size());
        Rational sum(0);
        for (int j = 0; j < n; ++j)
            sum += binomial(static_cast<std::uint64_t>(n) + 1, static_cast<std::uint64_t>(j)) *
                   g_bernoulli[static_cast<std::size_t>(j)];
        g_bernoulli.push_back(-sum / Rational(n + 1));
    }
    return g_bernoulli[static_cast<std::size_t>(k)];
}

KernelSeries kernel(KernelKind kind, int order) {
    if (order < 0) throw Error("kernel: negative order");
    MultiSeries body = univariate_zero(order);
    auto log_sinh_ratio = [&]() {
        MultiSeries s = univariate_zero(order);
        for (int k = 2; k <= order; ++k) {
            Rational bk = bernoulli(k);
            if (bk.is_zero()) continue;
            s.add_term({k}, -bk / (Rational(k) * factorial(static_cast<std::uint64_t>(k))));
        }
        return s;
    };
    switch (kind) {
    case KernelKind::LogSinhRatio:
        body = log_sinh_ratio();
        break;
    case KernelKind::TanhDefect:
        for (int k = 2; k <= order; ++k) {
            Rational bk = bernoulli(k);
            if (bk.is_zero()) continue;
            body.add_term({k}, -bk / factorial(static_cast<std::uint64_t>(k)));
        }
        break;
    case KernelKind::SinhRatio:
        body = exp(log_sinh_ratio());
        break;
    case KernelKind::SinhRatioInverse:
        body = exp(-log_sinh_ratio());
        break;
    }
    return KernelSeries{kind, order, std::move(body)};
}

MultiSeries compose_kernel(KernelKind kind, int power, const std::map<std::string, Rational>& form,
                           const std::vector<std::string>& vars, const Truncation& trunc) {
    int order = std::min(trunc.eps_cap, trunc.degree_budget());
    MultiSeries body = kernel(kind, order).body;
    MultiSeries powered = MultiSeries::one(body.variables(), body.truncation());
    for (int p = 0; p < power; ++p) powered = powered * body;
    return compose_linear(powered, form, /*with_eps=*/true, vars, trunc);
}

LSeries l_series(int a, int i, int order) {
    if (a < -1 || i < 0) throw InvalidIndex("l_series: require a >= -1 and i >= 0");
    if (order < 0) throw Error("l_series: negative order");
    Truncation t;
    t.eps_cap = std::max(0, order - a - i);
    t.var_caps["z"] = order;
    MultiSeries body({kEps, "z"}, t);
    for (int k = 2; k + a + i <= order; ++k) {
        if (k > t.eps_cap) break;
        Rational bk = bernoulli(k);
        if (bk.is_zero()) continue;
        Rational denom = factorial(static_cast<std::uint64_t>(k));
        for (int j = 0; j <= i; ++j) denom *= Rational(k + a + j);
        body.add_term({k, k + a + i},
                      -factorial(static_cast<std::uint64_t>(i)) * bk / denom);
    }
    return LSeries{a, i, order, std::move(body)};
}

} // namespace gwcp1
