#pragma once

namespace qmeas {

enum class FreqMode { ClosedForm, Tensor };

struct FreqStats {
    double mean;
    double variance;
};

/// Statistics of the frequency operator F_N = (1/N) sum_k P_+^{(k)} in the
/// product state psi^{(x)N}, psi = sqrt(p)|+> + sqrt(1-p)|->.
/// ClosedForm returns the binomial values (p, p(1-p)/N); Tensor builds F_N
/// and psi^{(x)N} explicitly on the 2^N-dimensional space (N <= 12).
FreqStats frequency_operator_stats(double p_plus, int n, FreqMode mode);

} // namespace qmeas
