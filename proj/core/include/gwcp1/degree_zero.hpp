//
// degree_zero.hpp -- all degree-0 generating functions of the theory.
//
// The two closed forms are
//
//   F0_QP[y|z_1..z_n] = sinh_ratio(eps*(y+Z)) * (y+Z)^{n-2}
//   F0_P[z_1..z_n]    = -2 * sinh_ratio(eps*Z) * Z^{-1} * g[z_1..z_n]
//
// with g built from the L_{a,i} kernels; for n <= 1 the first formula carries
// the finitely many negative powers of w = y+Z in a separate PrincipalPart.
// The Hodge series Fbar_0 / Fbar_1 package psi-lambda integrals and drive the
// Hodge-integral extraction.
//
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwcp1/kernels.hpp"
#include "gwcp1/multiseries.hpp"

namespace gwcp1 {

// The negative-exponent terms in the aggregate variable w = y + Z; nonempty
// only for the one-Q series with at most one P-insertion.
struct PrincipalPart {
    std::map<int, Rational> terms; // exponent in {-1, -2} -> coefficient
    bool empty() const { return terms.empty(); }
};

struct Degree0Series {
    int q_insertions = 0;
    std::string y_var;
    std::vector<std::string> z_vars;
    MultiSeries regular;
    PrincipalPart principal;

    Degree0Series(MultiSeries reg) : regular(std::move(reg)) {}
};

// Z^{n-2} for n > 1; throws TooFewVariables otherwise.
MultiSeries mp_f0(const std::vector<std::string>& z_vars, const Truncation& trunc);
// Z^{n-2} * exp(x*Z): the series with the base point translated along x.
MultiSeries mp_f0_shifted(const std::vector<std::string>& z_vars, const std::string& x_var,
                          const Truncation& trunc);
// Z^{n-1}, the velocity series, n >= 1.
MultiSeries f0_v_series(const std::vector<std::string>& z_vars, const Truncation& trunc);
// Coefficient of w^k in the (n+1)-point extension: the k-th descendent
// derivative as a series in the remaining variables.
MultiSeries f0_descendent_derivative(int k, const std::vector<std::string>& z_vars,
                                     const Truncation& trunc);

// The one-Q degree-0 series; n >= 2 is a plain power series, n in {0,1} also
// carries the principal part {w^{n-2}: 1}.
Degree0Series mp_F0_QP(const std::string& y_var, const std::vector<std::string>& z_vars,
                       const Truncation& trunc);

// g[z_1..z_n] = sum over proper subsets J and 1 <= i <= n-|J| of
//   C(n-|J|-1, i-1) (Z-Z_J)^{n-|J|-i} L_{|J|-1,i}(Z_J), plus L_{n-1,0}(Z).
// The J = empty terms are evaluated (at argument 0) and vanish.
MultiSeries g_series(const std::vector<std::string>& z_vars, const Truncation& trunc);

// The closed form and the exact-1-form recursion for the same series; their
// coefficientwise agreement is one of the strongest self-checks in the suite.
MultiSeries f1_closed(const std::vector<std::string>& z_vars, const Truncation& trunc);
MultiSeries f1_recursive(const std::vector<std::string>& z_vars, const Truncation& trunc);

// The P-only degree-0 multipoint series, n >= 1.
MultiSeries mp_F0_P(const std::vector<std::string>& z_vars, const Truncation& trunc);

// Hodge series against lambda_{g-h}, h in {0,1}, n >= 1.
MultiSeries fbar(int h, const std::vector<std::string>& z_vars, const Truncation& trunc);

struct HodgeKey {
    int g = 0;            // genus
    int lambda_codim = 0; // 0 selects lambda_g, 1 selects lambda_{g-1}
    std::vector<int> psi; // psi exponents k_1..k_n
};

// integral of psi_1^{k_1}..psi_n^{k_n} lambda_{g-h} over the (g,n) moduli of
// curves: 0 when the dimension constraint sum k_i = 2g-3+n+h fails, otherwise
// (-1)^g times the matching coefficient of fbar.  Throws UnstableModuli when
// 2g-2+n <= 0.
Rational hodge_integral(const HodgeKey& key);

// (-1)^g (2^{1-2g} - 1) B_{2g} / (2g)! = integral of psi^{2g-2} lambda_g over
// the one-pointed genus-g moduli, g >= 1.
Rational lambda_g_onepoint(int g);

} // namespace gwcp1
