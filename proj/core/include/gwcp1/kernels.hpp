//
// kernels.hpp -- Bernoulli numbers and the closed-form kernel expansions.
//
// The four kernels are the building blocks of every degree-0 formula:
//
//   sinh_ratio(x)         = (x/2)/sinh(x/2) = exp(log_sinh_ratio(x))
//   sinh_ratio_inverse(x) = sinh(x/2)/(x/2)
//   tanh_defect(x)        = 1 - (x/2)/tanh(x/2) = -sum_{k>=2} B_k x^k / k!
//   log_sinh_ratio(x)     = -sum_{k>=2} B_k x^k / (k * k!)
//
// and the auxiliary Bernoulli-weighted series
//
//   L_{a,i}(z) = -sum_{k>=2} i! B_k eps^k z^{k+a+i} / ((k+a)...(k+a+i) k!).
//
#pragma once

#include "gwcp1/multiseries.hpp"
#include "gwcp1/rational.hpp"

namespace gwcp1 {

// B_k in the convention generated by x/(e^x - 1): B_1 = -1/2, B_{2k+1} = 0 for
// k >= 1.  Memoized; safe for concurrent callers.
Rational bernoulli(int k);

enum class KernelKind { SinhRatio, SinhRatioInverse, TanhDefect, LogSinhRatio };

struct KernelSeries {
    KernelKind kind;
    int order;        // max retained x-exponent
    MultiSeries body; // univariate in "x"
};

KernelSeries kernel(KernelKind kind, int order);

// kernel(kind)^power composed on x := sum(form), with eps^k attached to each
// x^k.  The kernel order is chosen from the caps.
MultiSeries compose_kernel(KernelKind kind, int power, const std::map<std::string, Rational>& form,
                           const std::vector<std::string>& vars, const Truncation& trunc);

struct LSeries {
    int a = 0;
    int i = 0;
    int order = 0;    // max retained z-exponent
    MultiSeries body; // in (eps, z), terms eps^k z^{k+a+i}
};

// a >= -1 (the a = -1 extension is required when the closed forms instantiate
// L with an empty index set), i >= 0.  Throws InvalidIndex otherwise.
LSeries l_series(int a, int i, int order);

} // namespace gwcp1
