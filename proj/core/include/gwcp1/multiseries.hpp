//
// multiseries.hpp -- truncated multivariate power series over Rational.
//
// A MultiSeries is the universal carrier for all generating functions in the
// library: a sparse map from exponent vectors to exact rational coefficients,
// over an ordered variable list in which the genus variable "eps" comes first
// when present.  Truncation caps are enforced eagerly by every operation; a
// series never stores a monomial beyond its caps and never stores a zero
// coefficient.
//
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwcp1/errors.hpp"
#include "gwcp1/rational.hpp"

namespace gwcp1 {

inline const std::string kEps = "eps";

// Truncation caps.  eps_cap bounds the exponent of "eps", var_caps bounds the
// exponent of each ordinary variable, total_cap (when set) bounds the combined
// degree of all non-eps variables in a monomial.
struct Truncation {
    int eps_cap = 0;
    std::map<std::string, int> var_caps;
    std::optional<int> total_cap;

    static Truncation uniform(int eps_cap, const std::vector<std::string>& vars, int cap,
                              std::optional<int> total = std::nullopt);

    // Componentwise minimum; both sides must cap the same variables.
    Truncation meet(const Truncation& o) const;

    int cap_of(const std::string& var) const; // UnknownVariable if uncapped
    // Upper bound on the combined non-eps degree of any admissible monomial.
    int degree_budget() const;

    bool operator==(const Truncation& o) const = default;
};

class MultiSeries {
public:
    // The zero series.  Variables must be distinct, nonempty names; "eps", if
    // present, must be first; every other variable needs a cap in trunc.
    MultiSeries(std::vector<std::string> vars, Truncation trunc);

    static MultiSeries constant(const std::vector<std::string>& vars, const Truncation& trunc,
                                const Rational& c);
    static MultiSeries one(const std::vector<std::string>& vars, const Truncation& trunc) {
        return constant(vars, trunc, Rational(1));
    }
    // c * prod_v v^exps[v]; variables absent from exps get exponent 0.
    static MultiSeries monomial(const std::vector<std::string>& vars, const Truncation& trunc,
                                const std::map<std::string, int>& exps, const Rational& c);

    const std::vector<std::string>& variables() const { return vars_; }
    const Truncation& truncation() const { return trunc_; }
    const std::map<std::vector<int>, Rational>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    std::size_t term_count() const { return coef_.size(); }

    bool has_variable(const std::string& name) const;
    int var_index(const std::string& name) const; // -1 when absent

    Rational constant_term() const;
    // Coefficient of the requested monomial.  Exponents for omitted variables
    // default to 0.  Throws ExponentBeyondTruncation when the request is not
    // covered by the caps, UnknownVariable for a name not in the series.
    Rational coefficient(const std::map<std::string, int>& exps) const;
    // Raw positional lookup, 0 when absent; no cap checking.
    Rational coefficient_raw(const std::vector<int>& exps) const;

    // Accumulate c * x^e, silently dropping monomials beyond the caps.
    void add_term(const std::vector<int>& exps, const Rational& c);

    MultiSeries operator-() const;
    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    MultiSeries operator*(const MultiSeries& o) const;
    MultiSeries operator*(const Rational& c) const;

    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    // Equality of variable lists and coefficient maps (truncations may differ).
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.vars_ == b.vars_ && a.coef_ == b.coef_;
    }

    // Re-truncate to meet(current, t): drops monomials, never claims new ones.
    MultiSeries restricted(const Truncation& t) const;
    // Adopt truncation t outright, dropping monomials t does not admit.  Only
    // for callers that can prove the series is complete within t (e.g. via a
    // homogeneity bound); restricted() is the safe general form.
    MultiSeries retagged(const Truncation& t) const;

    // Embed into a target variable list (a superset by name, any order with
    // eps first) under the target truncation.
    MultiSeries aligned_to(const std::vector<std::string>& vars, const Truncation& t) const;
    // Positional rename; "eps" cannot be renamed and names stay distinct.
    MultiSeries renamed(const std::map<std::string, std::string>& mapping) const;

    // Set var = 0 and remove it from the variable list.
    MultiSeries specialized_zero(const std::string& var) const;
    // Partial derivative; the cap of var drops by one.
    MultiSeries derivative(const std::string& var) const;

    // Structural predicates used by the identity property checks.
    bool even_eps_only() const;
    // Every ε^e slice homogeneous in the other variables of degree e + shift.
    bool eps_homogeneous(int shift) const;
    bool symmetric_under_swap(const std::string& a, const std::string& b) const;

    int max_eps_exponent() const;

private:
    void validate() const;
    bool admits(const std::vector<int>& exps) const;

    std::vector<std::string> vars_;
    Truncation trunc_;
    std::map<std::vector<int>, Rational> coef_;
};

// Human-readable monomial, e.g. "eps^2*z1*z2^3"; "1" for the constant.
std::string monomial_to_string(const std::vector<std::string>& vars, const std::vector<int>& exps);

// --- analytic operations ----------------------------------------------------

// exp(a) for a with zero constant term.
MultiSeries exp(const MultiSeries& a);
// log(u) for u with constant term 1.
MultiSeries log(const MultiSeries& u);

// (sum_v coeffs[v] * v)^power over the given variables, truncated.
MultiSeries linear_form_power(const std::vector<std::string>& vars, const Truncation& trunc,
                              const std::map<std::string, Rational>& coeffs, int power);

// Substitute x := sum_v form[v]*v into a univariate series u(x); when with_eps
// is set, x^k additionally contributes eps^k.  form must be nonempty.
MultiSeries compose_linear(const MultiSeries& u, const std::map<std::string, Rational>& form,
                           bool with_eps, const std::vector<std::string>& vars,
                           const Truncation& trunc);

// General form of the above: replace one variable of s by a linear form (which
// may be empty, i.e. evaluate the variable at 0).  Remaining variables map by
// name into the target list.
MultiSeries substitute_linear(const MultiSeries& s, const std::string& var,
                              const std::map<std::string, Rational>& form,
                              const std::vector<std::string>& vars, const Truncation& trunc);

// Exact division by Z = sum of z_vars.  The dividend must be complete on every
// slice of total z-degree <= T, where T is the least cap among the z_vars that
// admit positive exponents (intersected with total_cap); the quotient is exact
// on slices of z-degree < T and carries caps reduced accordingly.  Formula-level
// callers build dividends at inflated caps so that T covers every slice the
// homogeneity bound allows.  Throws NotDivisible otherwise.
MultiSeries exact_divide(const MultiSeries& s, const std::vector<std::string>& z_vars);

// Monomialwise division by var^power; every monomial must carry exponent >= power.
MultiSeries divide_by_var_power(const MultiSeries& s, const std::string& var, int power);

// Primitive F of the closed 1-form sum_i h[i] dz_vars[i] with F(0) = 0,
// computed monomialwise by the Euler relation.  Throws NotClosed when the
// mixed-partial symmetry check fails within the common caps.
MultiSeries euler_antiderivative(const std::vector<MultiSeries>& h,
                                 const std::vector<std::string>& z_vars);

} // namespace gwcp1
