//
// multiseries.cpp
//
#include "gwcp1/multiseries.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gwcp1 {

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ",";
        out += n;
    }
    return out;
}

} // namespace

std::string monomial_to_string(const std::vector<std::string>& vars, const std::vector<int>& exps) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        if (any) os << "*";
        os << vars[i];
        if (exps[i] != 1) os << "^" << exps[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

// --- Truncation --------------------------------------------------------------

Truncation Truncation::uniform(int eps_cap, const std::vector<std::string>& vars, int cap,
                               std::optional<int> total) {
    Truncation t;
    t.eps_cap = eps_cap;
    t.total_cap = total;
    for (const auto& v : vars)
        if (v != kEps) t.var_caps[v] = cap;
    return t;
}

Truncation Truncation::meet(const Truncation& o) const {
    if (var_caps.size() != o.var_caps.size())
        throw VariableMismatch("truncation meet: different variable sets");
    Truncation t;
    t.eps_cap = std::min(eps_cap, o.eps_cap);
    for (const auto& [name, cap] : var_caps) {
        auto it = o.var_caps.find(name);
        if (it == o.var_caps.end())
            throw VariableMismatch("truncation meet: variable '" + name + "' missing");
        t.var_caps[name] = std::min(cap, it->second);
    }
    if (total_cap && o.total_cap)
        t.total_cap = std::min(*total_cap, *o.total_cap);
    else if (total_cap)
        t.total_cap = total_cap;
    else
        t.total_cap = o.total_cap;
    return t;
}

int Truncation::cap_of(const std::string& var) const {
    auto it = var_caps.find(var);
    if (it == var_caps.end()) throw UnknownVariable("no cap for variable '" + var + "'");
    return it->second;
}

int Truncation::degree_budget() const {
    long sum = 0;
    for (const auto& [name, cap] : var_caps) sum += cap;
    long budget = total_cap ? std::min<long>(*total_cap, sum) : sum;
    return static_cast<int>(budget);
}

// --- MultiSeries basics -------------------------------------------------------

MultiSeries::MultiSeries(std::vector<std::string> vars, Truncation trunc)
    : vars_(std::move(vars)), trunc_(std::move(trunc)) {
    validate();
}

void MultiSeries::validate() const {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
        if (v == kEps && i != 0) throw Error("'eps' must be the first variable");
        if (v != kEps && trunc_.var_caps.find(v) == trunc_.var_caps.end())
            throw UnknownVariable("variable '" + v + "' has no truncation cap");
    }
    if (trunc_.eps_cap < 0) throw Error("negative eps cap");
    for (const auto& [name, cap] : trunc_.var_caps)
        if (cap < 0) throw Error("negative cap for '" + name + "'");
    if (trunc_.total_cap && *trunc_.total_cap < 0) throw Error("negative total cap");
}

MultiSeries MultiSeries::constant(const std::vector<std::string>& vars, const Truncation& trunc,
                                  const Rational& c) {
    MultiSeries s(vars, trunc);
    if (!c.is_zero()) s.coef_.emplace(std::vector<int>(vars.size(), 0), c);
    return s;
}

MultiSeries MultiSeries::monomial(const std::vector<std::string>& vars, const Truncation& trunc,
                                  const std::map<std::string, int>& exps, const Rational& c) {
    MultiSeries s(vars, trunc);
    std::vector<int> e(vars.size(), 0);
    for (const auto& [name, exp] : exps) {
        int idx = s.var_index(name);
        if (idx < 0) throw UnknownVariable("monomial: unknown variable '" + name + "'");
        if (exp < 0) throw Error("monomial: negative exponent");
        e[idx] = exp;
    }
    s.add_term(e, c);
    return s;
}

bool MultiSeries::has_variable(const std::string& name) const {
    return var_index(name) >= 0;
}

int MultiSeries::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool MultiSeries::admits(const std::vector<int>& exps) const {
    long total = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == kEps) {
            if (exps[i] > trunc_.eps_cap) return false;
        } else {
            if (exps[i] > trunc_.var_caps.at(vars_[i])) return false;
            total += exps[i];
        }
    }
    if (trunc_.total_cap && total > *trunc_.total_cap) return false;
    return true;
}

Rational MultiSeries::constant_term() const {
    return coefficient_raw(std::vector<int>(vars_.size(), 0));
}

Rational MultiSeries::coefficient(const std::map<std::string, int>& exps) const {
    std::vector<int> e(vars_.size(), 0);
    for (const auto& [name, exp] : exps) {
        int idx = var_index(name);
        if (idx < 0) throw UnknownVariable("coefficient: unknown variable '" + name + "'");
        e[idx] = exp;
    }
    if (!admits(e))
        throw ExponentBeyondTruncation("coefficient of " + monomial_to_string(vars_, e) +
                                       " is beyond the truncation caps");
    return coefficient_raw(e);
}

Rational MultiSeries::coefficient_raw(const std::vector<int>& exps) const {
    auto it = coef_.find(exps);
    return it == coef_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Rational& c) {
    if (c.is_zero() || !admits(exps)) return;
    auto [it, inserted] = coef_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coef_.erase(it);
    }
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries r(vars_, trunc_);
    for (const auto& [e, c] : coef_) r.coef_.emplace(e, -c);
    return r;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    if (vars_ != o.vars_)
        throw VariableMismatch("add: variable lists differ ([" + join_names(vars_) + "] vs [" +
                               join_names(o.vars_) + "])");
    if (this == &o) {
        for (auto& [e, c] : coef_) c *= Rational(2);
        return *this;
    }
    trunc_ = trunc_.meet(o.trunc_);
    // Re-truncate our own terms to the meet before merging.
    for (auto it = coef_.begin(); it != coef_.end();)
        it = admits(it->first) ? std::next(it) : coef_.erase(it);
    for (const auto& [e, c] : o.coef_) add_term(e, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    return *this += -o;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
    if (vars_ != o.vars_)
        throw VariableMismatch("mul: variable lists differ ([" + join_names(vars_) + "] vs [" +
                               join_names(o.vars_) + "])");
    MultiSeries r(vars_, trunc_.meet(o.trunc_));
    if (is_zero() || o.is_zero()) return r;
    const auto& small = coef_.size() <= o.coef_.size() ? coef_ : o.coef_;
    const auto& large = coef_.size() <= o.coef_.size() ? o.coef_ : coef_;
    std::vector<int> e(vars_.size());
    for (const auto& [ea, ca] : small) {
        for (const auto& [eb, cb] : large) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (!r.admits(e)) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiSeries MultiSeries::operator*(const Rational& c) const {
    MultiSeries r(vars_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coef_) r.coef_.emplace(e, v * c);
    return r;
}

MultiSeries MultiSeries::restricted(const Truncation& t) const {
    return retagged(trunc_.meet(t));
}

MultiSeries MultiSeries::retagged(const Truncation& t) const {
    MultiSeries r(vars_, t);
    for (const auto& [e, c] : coef_)
        if (r.admits(e)) r.coef_.emplace(e, c);
    return r;
}

MultiSeries MultiSeries::aligned_to(const std::vector<std::string>& vars,
                                    const Truncation& t) const {
    MultiSeries r(vars, t);
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        int idx = r.var_index(vars_[i]);
        if (idx < 0)
            throw UnknownVariable("align: variable '" + vars_[i] + "' missing from target");
        pos[i] = idx;
    }
    std::vector<int> e(vars.size());
    for (const auto& [src, c] : coef_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) e[pos[i]] = src[i];
        r.add_term(e, c);
    }
    return r;
}

MultiSeries MultiSeries::renamed(const std::map<std::string, std::string>& mapping) const {
    for (const auto& [from, to] : mapping) {
        if (from == kEps || to == kEps) throw Error("rename: 'eps' cannot be renamed");
        if (var_index(from) < 0)
            throw UnknownVariable("rename: unknown variable '" + from + "'");
    }
    std::vector<std::string> vars;
    Truncation t = trunc_;
    t.var_caps.clear();
    for (const auto& v : vars_) {
        auto it = mapping.find(v);
        const std::string& nv = it == mapping.end() ? v : it->second;
        vars.push_back(nv);
        if (v != kEps) t.var_caps[nv] = trunc_.var_caps.at(v);
    }
    MultiSeries r(vars, t); // ctor rejects name collisions
    r.coef_ = coef_;
    return r;
}

MultiSeries MultiSeries::specialized_zero(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) throw UnknownVariable("specialize: unknown variable '" + var + "'");
    if (var == kEps) throw Error("specialize: 'eps' cannot be specialized");
    std::vector<std::string> vars;
    for (const auto& v : vars_)
        if (v != var) vars.push_back(v);
    Truncation t = trunc_;
    t.var_caps.erase(var);
    MultiSeries r(vars, t);
    std::vector<int> e(vars.size());
    for (const auto& [src, c] : coef_) {
        if (src[static_cast<std::size_t>(idx)] != 0) continue;
        e.clear();
        for (std::size_t i = 0; i < src.size(); ++i)
            if (static_cast<int>(i) != idx) e.push_back(src[i]);
        r.add_term(e, c);
    }
    return r;
}

MultiSeries MultiSeries::derivative(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) throw UnknownVariable("derivative: unknown variable '" + var + "'");
    Truncation t = trunc_;
    if (var == kEps)
        t.eps_cap = std::max(0, t.eps_cap - 1);
    else
        t.var_caps[var] = std::max(0, t.var_caps[var] - 1);
    if (var != kEps && t.total_cap) t.total_cap = std::max(0, *t.total_cap - 1);
    MultiSeries r(vars_, t);
    for (const auto& [e, c] : coef_) {
        int k = e[static_cast<std::size_t>(idx)];
        if (k == 0) continue;
        std::vector<int> d = e;
        d[static_cast<std::size_t>(idx)] = k - 1;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

bool MultiSeries::even_eps_only() const {
    int idx = var_index(kEps);
    if (idx < 0) return true;
    for (const auto& [e, c] : coef_)
        if (e[static_cast<std::size_t>(idx)] % 2 != 0) return false;
    return true;
}

bool MultiSeries::eps_homogeneous(int shift) const {
    int idx = var_index(kEps);
    for (const auto& [e, c] : coef_) {
        long deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != idx) deg += e[i];
        int eps = idx < 0 ? 0 : e[static_cast<std::size_t>(idx)];
        if (deg != eps + shift) return false;
    }
    return true;
}

bool MultiSeries::symmetric_under_swap(const std::string& a, const std::string& b) const {
    int ia = var_index(a), ib = var_index(b);
    if (ia < 0 || ib < 0) throw UnknownVariable("swap: unknown variable");
    for (const auto& [e, c] : coef_) {
        std::vector<int> s = e;
        std::swap(s[static_cast<std::size_t>(ia)], s[static_cast<std::size_t>(ib)]);
        if (coefficient_raw(s) != c) return false;
    }
    return true;
}

int MultiSeries::max_eps_exponent() const {
    int idx = var_index(kEps);
    if (idx < 0) return 0;
    int best = 0;
    for (const auto& [e, c] : coef_) best = std::max(best, e[static_cast<std::size_t>(idx)]);
    return best;
}

// --- analytic operations ------------------------------------------------------

MultiSeries exp(const MultiSeries& a) {
    if (!a.constant_term().is_zero())
        throw NonzeroConstantTerm("exp: constant term must vanish");
    MultiSeries acc = MultiSeries::one(a.variables(), a.truncation());
    MultiSeries term = acc;
    int bound = a.truncation().eps_cap + a.truncation().degree_budget();
    for (int k = 1; k <= bound; ++k) {
        term = term * a * Rational(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

MultiSeries log(const MultiSeries& u) {
    if (!u.constant_term().is_one())
        throw ConstantTermNotOne("log: constant term must be 1");
    MultiSeries w = u - MultiSeries::one(u.variables(), u.truncation());
    MultiSeries acc(u.variables(), u.truncation());
    MultiSeries power = MultiSeries::one(u.variables(), u.truncation());
    int bound = u.truncation().eps_cap + u.truncation().degree_budget();
    for (int k = 1; k <= bound; ++k) {
        power = power * w;
        if (power.is_zero()) break;
        acc += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return acc;
}

MultiSeries linear_form_power(const std::vector<std::string>& vars, const Truncation& trunc,
                              const std::map<std::string, Rational>& coeffs, int power) {
    if (power < 0) throw Error("linear_form_power: negative power");
    MultiSeries r(vars, trunc);
    // Enumerate exponent splittings of `power` across the form's variables with
    // multinomial weights, pruning against the caps as we go.
    std::vector<std::pair<int, Rational>> form; // (var position, coefficient)
    for (const auto& [name, c] : coeffs) {
        if (c.is_zero()) continue;
        int idx = r.var_index(name);
        if (idx < 0) throw UnknownVariable("linear form: unknown variable '" + name + "'");
        form.emplace_back(idx, c);
    }
    if (form.empty()) {
        if (power == 0) return MultiSeries::one(vars, trunc);
        return r; // (empty sum)^power = 0
    }
    std::vector<int> e(vars.size(), 0);
    // walk(i, remaining, weight): distribute `remaining` among form[i..] with
    // multinomial weights, i.e. binomial(remaining, take) at each step.
    auto walk = [&](auto&& self, std::size_t i, int remaining, const Rational& weight) -> void {
        const auto vpos = static_cast<std::size_t>(form[i].first);
        const int cap = vars[vpos] == kEps ? trunc.eps_cap : trunc.var_caps.at(vars[vpos]);
        if (i + 1 == form.size()) {
            if (remaining <= cap) {
                Rational c = weight;
                for (int t = 0; t < remaining; ++t) c *= form[i].second;
                e[vpos] = remaining;
                r.add_term(e, c);
            }
            e[vpos] = 0;
            return;
        }
        Rational cpow(1);
        for (int take = 0; take <= std::min(remaining, cap); ++take) {
            e[vpos] = take;
            self(self, i + 1, remaining - take, weight * binomial(remaining, take) * cpow);
            cpow *= form[i].second;
        }
        e[vpos] = 0;
    };
    walk(walk, 0, power, Rational(1));
    return r;
}

MultiSeries compose_linear(const MultiSeries& u, const std::map<std::string, Rational>& form,
                           bool with_eps, const std::vector<std::string>& vars,
                           const Truncation& trunc) {
    if (u.variables().size() != 1 || u.variables()[0] == kEps)
        throw Error("compose_linear: input must be univariate in an ordinary variable");
    bool nonzero = false;
    for (const auto& [name, c] : form) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw EmptyForm("compose_linear: empty substitution form");
    MultiSeries r(vars, trunc);
    if (with_eps && r.var_index(kEps) != 0)
        throw UnknownVariable("compose_linear: target lacks 'eps'");
    std::map<int, MultiSeries> powers;
    for (const auto& [e, c] : u.terms()) {
        int k = e[0];
        if (with_eps && k > trunc.eps_cap) continue;
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, linear_form_power(vars, trunc, form, k)).first;
        MultiSeries term = it->second * c;
        if (with_eps && k > 0) {
            MultiSeries epsk =
                MultiSeries::monomial(vars, trunc, {{kEps, k}}, Rational(1));
            term = term * epsk;
        }
        r += term;
    }
    return r;
}

MultiSeries substitute_linear(const MultiSeries& s, const std::string& var,
                              const std::map<std::string, Rational>& form,
                              const std::vector<std::string>& vars, const Truncation& trunc) {
    int idx = s.var_index(var);
    if (idx < 0) throw UnknownVariable("substitute: unknown variable '" + var + "'");
    MultiSeries r(vars, trunc);
    std::map<int, MultiSeries> powers;
    std::vector<int> pos(s.variables().size(), -1);
    for (std::size_t i = 0; i < s.variables().size(); ++i) {
        if (static_cast<int>(i) == idx) continue;
        pos[i] = r.var_index(s.variables()[i]);
        if (pos[i] < 0)
            throw UnknownVariable("substitute: variable '" + s.variables()[i] +
                                  "' missing from target");
    }
    std::vector<int> base(vars.size());
    for (const auto& [e, c] : s.terms()) {
        int k = e[static_cast<std::size_t>(idx)];
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, linear_form_power(vars, trunc, form, k)).first;
        if (it->second.is_zero()) continue;
        std::fill(base.begin(), base.end(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (pos[i] >= 0) base[static_cast<std::size_t>(pos[i])] = e[i];
        std::vector<int> full(vars.size());
        for (const auto& [pe, pc] : it->second.terms()) {
            for (std::size_t i = 0; i < full.size(); ++i) full[i] = base[i] + pe[i];
            r.add_term(full, c * pc);
        }
    }
    return r;
}

MultiSeries exact_divide(const MultiSeries& s, const std::vector<std::string>& z_vars) {
    if (z_vars.empty()) throw Error("exact_divide: empty divisor");
    std::vector<int> zpos;
    // Variables capped at 0 cannot appear in the dividend, so they drop out of
    // the effective divisor.
    std::vector<int> active;
    for (const auto& v : z_vars) {
        int idx = s.var_index(v);
        if (idx < 0) throw UnknownVariable("exact_divide: unknown variable '" + v + "'");
        if (v == kEps) throw Error("exact_divide: cannot divide by eps");
        zpos.push_back(idx);
        if (s.truncation().var_caps.at(v) >= 1) active.push_back(idx);
    }
    if (active.empty()) {
        if (!s.is_zero()) throw NotDivisible("exact_divide: divisor truncates to zero");
        Truncation t = s.truncation();
        return MultiSeries(s.variables(), t);
    }

    // Reliable slice bound: slices of total z-degree <= T are complete.
    int T = s.truncation().total_cap.value_or(INT32_MAX);
    for (int idx : active)
        T = std::min(T, s.truncation().var_caps.at(s.variables()[static_cast<std::size_t>(idx)]));

    // Group terms into cells indexed by the non-z part of the exponent vector;
    // division acts independently per cell on the z-part.
    auto is_z = [&](std::size_t i) {
        return std::find(zpos.begin(), zpos.end(), static_cast<int>(i)) != zpos.end();
    };
    std::map<std::vector<int>, std::map<std::vector<int>, Rational>> cells;
    for (const auto& [e, c] : s.terms()) {
        std::vector<int> cell(e.size(), 0), z(e.size(), 0);
        long zdeg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (is_z(i)) {
                z[i] = e[i];
                zdeg += e[i];
            } else {
                cell[i] = e[i];
            }
        }
        if (zdeg > T) continue; // unreliable slice, not part of the contract
        cells[cell][z] = c;
    }

    Truncation qt = s.truncation();
    for (int idx : zpos) {
        const auto& name = s.variables()[static_cast<std::size_t>(idx)];
        qt.var_caps[name] = std::max(0, std::min(qt.var_caps[name], T - 1));
    }
    qt.total_cap = qt.total_cap ? std::min(*qt.total_cap, T - 1) : std::optional<int>(T - 1);
    MultiSeries q(s.variables(), qt);

    const std::size_t lead = static_cast<std::size_t>(active.front());
    for (auto& [cell, poly] : cells) {
        while (!poly.empty()) {
            auto lt = std::prev(poly.end()); // lexicographic leading term
            if (lt->first[lead] == 0)
                throw NotDivisible("exact_divide: remainder at " +
                                   monomial_to_string(s.variables(), lt->first));
            std::vector<int> qe = lt->first;
            qe[lead] -= 1;
            Rational qc = lt->second;
            // Subtract qc * qe * (sum of active z variables).
            for (int idx : active) {
                std::vector<int> pe = qe;
                pe[static_cast<std::size_t>(idx)] += 1;
                auto it = poly.find(pe);
                if (it == poly.end()) {
                    poly.emplace(pe, -qc);
                } else {
                    it->second -= qc;
                    if (it->second.is_zero()) poly.erase(it);
                }
            }
            std::vector<int> full = qe;
            for (std::size_t i = 0; i < full.size(); ++i)
                if (!is_z(i)) full[i] = cell[i];
            q.add_term(full, qc);
        }
    }
    return q;
}

MultiSeries divide_by_var_power(const MultiSeries& s, const std::string& var, int power) {
    if (power < 0) throw Error("divide_by_var_power: negative power");
    int idx = s.var_index(var);
    if (idx < 0) throw UnknownVariable("divide_by_var_power: unknown variable '" + var + "'");
    Truncation t = s.truncation();
    t.var_caps[var] = std::max(0, t.var_caps[var] - power);
    if (t.total_cap) t.total_cap = std::max(0, *t.total_cap - power);
    MultiSeries r(s.variables(), t);
    for (const auto& [e, c] : s.terms()) {
        if (e[static_cast<std::size_t>(idx)] < power)
            throw NotDivisible("divide_by_var_power: exponent of '" + var + "' below " +
                               std::to_string(power));
        std::vector<int> d = e;
        d[static_cast<std::size_t>(idx)] -= power;
        r.add_term(d, c);
    }
    return r;
}

MultiSeries euler_antiderivative(const std::vector<MultiSeries>& h,
                                 const std::vector<std::string>& z_vars) {
    if (h.empty() || h.size() != z_vars.size())
        throw Error("euler_antiderivative: components and variables must match");
    const auto& vars = h[0].variables();
    Truncation t = h[0].truncation();
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (h[i].variables() != vars)
            throw VariableMismatch("euler_antiderivative: inconsistent variable lists");
        t = t.meet(h[i].truncation());
    }
    std::vector<int> zpos;
    for (const auto& v : z_vars) {
        int idx = h[0].var_index(v);
        if (idx < 0) throw UnknownVariable("euler_antiderivative: unknown variable '" + v + "'");
        zpos.push_back(idx);
    }

    // Closedness: d(h_i)/dz_j == d(h_j)/dz_i within the caps both sides see.
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            MultiSeries dij = h[i].derivative(z_vars[j]);
            MultiSeries dji = h[j].derivative(z_vars[i]);
            Truncation common = dij.truncation().meet(dji.truncation());
            MultiSeries a = dij.restricted(common), b = dji.restricted(common);
            if (!(a == b)) {
                MultiSeries diff = a - b;
                const auto& [e, c] = *diff.terms().begin();
                throw NotClosed("euler_antiderivative: form not closed at " +
                                monomial_to_string(vars, e) + " (dz_" + z_vars[i] + "/dz_" +
                                z_vars[j] + ")");
            }
        }
    }

    MultiSeries f(vars, t);
    std::vector<int> e(vars.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (const auto& [he, hc] : h[i].terms()) {
            e = he;
            e[static_cast<std::size_t>(zpos[i])] += 1;
            long deg = 0;
            for (int idx : zpos) deg += e[static_cast<std::size_t>(idx)];
            f.add_term(e, hc / Rational(static_cast<long>(deg)));
        }
    }
    return f;
}

} // namespace gwcp1
