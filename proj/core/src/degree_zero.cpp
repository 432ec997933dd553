//
// degree_zero.cpp
//
#include "gwcp1/degree_zero.hpp"

#include <algorithm>

namespace gwcp1 {

namespace {

std::vector<std::string> with_eps(const std::vector<std::string>& zvars) {
    std::vector<std::string> vars = {kEps};
    vars.insert(vars.end(), zvars.begin(), zvars.end());
    return vars;
}

std::map<std::string, Rational> unit_form(const std::vector<std::string>& names) {
    std::map<std::string, Rational> form;
    for (const auto& v : names) form[v] = Rational(1);
    return form;
}

// Caps sufficient for exact division by Z: every slice of total z-degree <= D
// must be complete, so active variables are raised to D and total_cap pinned.
Truncation inflate_for_division(const Truncation& req, const std::vector<std::string>& zvars,
                                int D) {
    Truncation t;
    t.eps_cap = req.eps_cap;
    for (const auto& v : zvars) {
        int c = req.var_caps.at(v);
        t.var_caps[v] = c == 0 ? 0 : D;
    }
    t.total_cap = D;
    return t;
}

Truncation project(const Truncation& t, const std::vector<std::string>& zvars) {
    Truncation r;
    r.eps_cap = t.eps_cap;
    r.total_cap = t.total_cap;
    for (const auto& v : zvars) r.var_caps[v] = t.var_caps.at(v);
    return r;
}

} // namespace

MultiSeries mp_f0(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n <= 1) throw TooFewVariables("mp_f0: needs more than one insertion");
    return linear_form_power(z_vars, project(trunc, z_vars), unit_form(z_vars), n - 2);
}

MultiSeries mp_f0_shifted(const std::vector<std::string>& z_vars, const std::string& x_var,
                          const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n <= 1) throw TooFewVariables("mp_f0_shifted: needs more than one insertion");
    std::vector<std::string> vars = z_vars;
    vars.push_back(x_var);
    Truncation t = project(trunc, vars);
    MultiSeries out(vars, t);
    const int xcap = t.var_caps.at(x_var);
    for (int k = 0; k <= xcap; ++k) {
        MultiSeries zpow = linear_form_power(vars, t, unit_form(z_vars), n - 2 + k);
        if (zpow.is_zero()) break;
        MultiSeries xpow = MultiSeries::monomial(vars, t, {{x_var, k}},
                                                 Rational(1) / factorial(static_cast<std::uint64_t>(k)));
        out += zpow * xpow;
    }
    return out;
}

MultiSeries f0_v_series(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n < 1) throw TooFewVariables("f0_v_series: needs at least one insertion");
    return linear_form_power(z_vars, project(trunc, z_vars), unit_form(z_vars), n - 1);
}

MultiSeries f0_descendent_derivative(int k, const std::vector<std::string>& z_vars,
                                     const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n < 1) throw TooFewVariables("f0_descendent_derivative: needs at least one insertion");
    if (k < 0) throw Error("f0_descendent_derivative: negative index");
    Truncation t = project(trunc, z_vars);
    if (k > n - 1) return MultiSeries(z_vars, t);
    return linear_form_power(z_vars, t, unit_form(z_vars), n - 1 - k) *
           binomial(static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(k));
}

Degree0Series mp_F0_QP(const std::string& y_var, const std::vector<std::string>& z_vars,
                       const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    std::vector<std::string> vars = {kEps, y_var};
    vars.insert(vars.end(), z_vars.begin(), z_vars.end());
    std::vector<std::string> point_vars = {y_var};
    point_vars.insert(point_vars.end(), z_vars.begin(), z_vars.end());
    Truncation t = project(trunc, point_vars);

    if (n >= 2) {
        MultiSeries reg = compose_kernel(KernelKind::SinhRatio, 1, unit_form(point_vars), vars, t) *
                          linear_form_power(vars, t, unit_form(point_vars), n - 2);
        Degree0Series out(std::move(reg));
        out.q_insertions = 1;
        out.y_var = y_var;
        out.z_vars = z_vars;
        return out;
    }

    // n in {0,1}: w = y (+ z); the regular part is (sinh_ratio(eps*w) - 1) / w^{2-n}
    // and the principal part is the single term w^{n-2}.
    int wcap = t.var_caps.at(y_var) + (2 - n);
    for (const auto& z : z_vars) wcap += t.var_caps.at(z);
    Truncation wt;
    wt.eps_cap = t.eps_cap;
    wt.var_caps["w"] = wcap;
    int order = std::min(t.eps_cap, wcap);
    MultiSeries shifted = kernel(KernelKind::SinhRatio, order).body;
    shifted.add_term({0}, Rational(-1)); // sinh_ratio - 1, lowest term x^2
    MultiSeries on_w = compose_linear(shifted, {{"w", Rational(1)}}, /*with_eps=*/true,
                                      {kEps, "w"}, wt);
    on_w = divide_by_var_power(on_w, "w", 2 - n);
    auto form = unit_form(point_vars);
    MultiSeries reg = substitute_linear(on_w, "w", form, vars, t);
    Degree0Series out(std::move(reg));
    out.q_insertions = 1;
    out.y_var = y_var;
    out.z_vars = z_vars;
    out.principal.terms[n - 2] = Rational(1);
    return out;
}

MultiSeries g_series(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n < 1) throw TooFewVariables("g_series: needs at least one insertion");
    auto vars = with_eps(z_vars);
    Truncation t = project(trunc, z_vars);
    MultiSeries out(vars, t);
    const int budget = t.degree_budget();

    // Variables capped at zero contribute nothing to any linear form, so group
    // the subset sum by (active part of J, number of inert elements in J).
    std::vector<std::string> active, inert;
    for (const auto& v : z_vars)
        (t.var_caps.at(v) >= 1 ? active : inert).push_back(v);
    const int n_inert = static_cast<int>(inert.size());
    const int n_active = static_cast<int>(active.size());

    auto l_on = [&](int a, int i, const std::vector<std::string>& names) {
        int order = std::min(budget, t.eps_cap + a + i);
        if (order < 0) return MultiSeries(vars, t);
        LSeries L = l_series(a, i, order);
        return substitute_linear(L.body, "z", unit_form(names), vars, t);
    };

    for (unsigned mask = 0; mask < (1u << n_active); ++mask) {
        std::vector<std::string> jact, comp;
        for (int b = 0; b < n_active; ++b)
            (mask & (1u << b) ? jact : comp).push_back(active[static_cast<std::size_t>(b)]);
        for (int j = 0; j <= n_inert; ++j) {
            const int jsize = static_cast<int>(jact.size()) + j;
            if (jsize >= n) continue; // J must be a proper subset
            Rational mult = binomial(static_cast<std::uint64_t>(n_inert),
                                     static_cast<std::uint64_t>(j));
            for (int i = 1; i <= n - jsize; ++i) {
                Rational coeff = mult * binomial(static_cast<std::uint64_t>(n - jsize) - 1,
                                                 static_cast<std::uint64_t>(i) - 1);
                if (coeff.is_zero()) continue;
                MultiSeries lpart = l_on(jsize - 1, i, jact);
                if (lpart.is_zero()) continue;
                MultiSeries zpow = linear_form_power(vars, t, unit_form(comp), n - jsize - i);
                out += lpart * zpow * coeff;
            }
        }
    }
    out += l_on(n - 1, 0, active);
    return out;
}

MultiSeries f1_closed(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    return g_series(z_vars, trunc);
}

MultiSeries f1_recursive(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n < 1) throw TooFewVariables("f1_recursive: needs at least one insertion");

    // memo over subset masks, filled in order of popcount
    std::map<unsigned, MultiSeries> memo;
    auto names_of = [&](unsigned mask) {
        std::vector<std::string> names;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) names.push_back(z_vars[static_cast<std::size_t>(b)]);
        return names;
    };

    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (unsigned mask : masks) {
        auto names = names_of(mask);
        const int k = static_cast<int>(names.size());
        auto vars = with_eps(names);
        Truncation t = project(trunc, names);

        // correction term Z^{k-2} * tanh_defect(eps*Z), with the k = 1 case
        // handled by one exact variable division (built one order higher so
        // the quotient still covers the requested caps)
        MultiSeries correction(vars, t);
        if (k >= 2) {
            MultiSeries defect =
                compose_kernel(KernelKind::TanhDefect, 1, unit_form(names), vars, t);
            correction = defect * linear_form_power(vars, t, unit_form(names), k - 2);
        } else {
            Truncation t1 = t;
            t1.var_caps[names[0]] += 1;
            if (t1.total_cap) t1.total_cap = *t1.total_cap + 1;
            MultiSeries defect =
                compose_kernel(KernelKind::TanhDefect, 1, unit_form(names), vars, t1);
            correction = divide_by_var_power(defect, names[0], 1);
        }

        std::vector<MultiSeries> h;
        for (int b = 0; b < k; ++b) {
            MultiSeries hi = correction;
            // sum over proper subsets I of `mask` containing this variable
            for (unsigned sub = mask; sub != 0; sub = (sub - 1) & mask) {
                if (sub == mask) continue;
                auto sub_names = names_of(sub);
                if (std::find(sub_names.begin(), sub_names.end(), names[static_cast<std::size_t>(b)]) ==
                    sub_names.end())
                    continue;
                std::vector<std::string> rest;
                for (const auto& v : names)
                    if (std::find(sub_names.begin(), sub_names.end(), v) == sub_names.end())
                        rest.push_back(v);
                MultiSeries sub_f1 = memo.at(sub).aligned_to(vars, t);
                MultiSeries zpow = linear_form_power(
                    vars, t, unit_form(rest), k - static_cast<int>(sub_names.size()) - 1);
                hi += zpow * sub_f1;
            }
            h.push_back(std::move(hi));
        }
        memo.emplace(mask, euler_antiderivative(h, names));
    }
    return memo.at((1u << n) - 1);
}

MultiSeries mp_F0_P(const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (n < 1) throw TooFewVariables("mp_F0_P: needs at least one insertion");
    Truncation req = project(trunc, z_vars);
    const int D = req.eps_cap + n - 1; // top z-degree of any g slice
    Truncation ti = inflate_for_division(req, z_vars, D);
    auto vars = with_eps(z_vars);

    MultiSeries g = g_series(z_vars, ti);
    MultiSeries q = exact_divide(g, z_vars);
    MultiSeries ratio =
        compose_kernel(KernelKind::SinhRatio, 1, unit_form(z_vars), vars, q.truncation());
    return (q * ratio * Rational(-2)).retagged(req);
}

MultiSeries fbar(int h, const std::vector<std::string>& z_vars, const Truncation& trunc) {
    const int n = static_cast<int>(z_vars.size());
    if (h != 0 && h != 1) throw Error("fbar: h must be 0 or 1");
    if (n < 1) throw TooFewVariables("fbar: needs at least one insertion");
    Truncation req = project(trunc, z_vars);
    auto vars = with_eps(z_vars);

    if (h == 1) return mp_F0_P(z_vars, trunc) * Rational(-1, 2);

    if (n >= 3)
        return compose_kernel(KernelKind::SinhRatio, 1, unit_form(z_vars), vars, req) *
               linear_form_power(vars, req, unit_form(z_vars), n - 3);

    if (n == 1) {
        // z^{-2} (sinh_ratio(eps z) - 1)
        const std::string& z = z_vars[0];
        Truncation t = req;
        t.var_caps[z] += 2;
        if (t.total_cap) t.total_cap = *t.total_cap + 2;
        int order = std::min(t.eps_cap, t.var_caps[z]);
        MultiSeries shifted = kernel(KernelKind::SinhRatio, order).body;
        shifted.add_term({0}, Rational(-1));
        MultiSeries s = compose_linear(shifted, {{z, Rational(1)}}, true, vars, t);
        return divide_by_var_power(s, z, 2).retagged(req);
    }

    // n == 2: Z^{-1} (sinh_ratio(eps Z) - 1)
    const int D = req.eps_cap;
    Truncation ti = inflate_for_division(req, z_vars, D);
    MultiSeries s = compose_kernel(KernelKind::SinhRatio, 1, unit_form(z_vars), vars, ti);
    s -= MultiSeries::one(vars, ti);
    return exact_divide(s, z_vars).retagged(req);
}

Rational hodge_integral(const HodgeKey& key) {
    const int g = key.g, h = key.lambda_codim;
    const int n = static_cast<int>(key.psi.size());
    if (h != 0 && h != 1) throw Error("hodge_integral: lambda_codim must be 0 or 1");
    if (g < 0) throw Error("hodge_integral: negative genus");
    if (2 * g - 2 + n <= 0)
        throw UnstableModuli("hodge_integral: unstable moduli (g=" + std::to_string(g) +
                             ", n=" + std::to_string(n) + ")");
    if (g < h) return Rational(0);
    long dim = 0;
    for (int k : key.psi) {
        if (k < 0) throw Error("hodge_integral: negative psi exponent");
        dim += k;
    }
    if (dim != 2L * g - 3 + n + h) return Rational(0);
    if (n == 0) return Rational(0); // dimension constraint already failed unless unstable

    std::vector<std::string> zs;
    Truncation t;
    t.eps_cap = 2 * g;
    std::map<std::string, int> exps = {{kEps, 2 * g}};
    for (int i = 0; i < n; ++i) {
        std::string name = "z" + std::to_string(i + 1);
        zs.push_back(name);
        t.var_caps[name] = key.psi[static_cast<std::size_t>(i)];
        exps[name] = key.psi[static_cast<std::size_t>(i)];
    }
    t.total_cap = static_cast<int>(dim);
    MultiSeries series = fbar(h, zs, t);
    Rational c = series.coefficient(exps);
    return g % 2 == 0 ? c : -c;
}

Rational lambda_g_onepoint(int g) {
    if (g < 1) throw Error("lambda_g_onepoint: genus must be positive");
    Rational half(1, 2);
    Rational two_pow(1); // 2^{1-2g}
    for (int i = 0; i < 2 * g - 1; ++i) two_pow *= half;
    Rational value = (two_pow - Rational(1)) * bernoulli(2 * g) /
                     factorial(static_cast<std::uint64_t>(2 * g));
    return g % 2 == 0 ? value : -value;
}

} // namespace gwcp1
