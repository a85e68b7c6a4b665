#pragma once

#include <vector>

#include "agtrace/rrspace.hpp"

namespace agtrace {

/// Tallies and bound for one additive character sum
/// sum over P of zeta_p^{Tr_{q^m/p}(f(P))}, P ranging over the rational
/// points that are not poles of f.
struct CharSumResult {
    std::vector<long long> counts;  // N_a indexed by a in F_p
    long long t_poles = 0;          // distinct poles of f over the closure
    long long d_inf = 0;            // deg (f)_infinity
    long long n_points = 0;         // #X(F_{q^m})
    long long skipped = 0;          // rational pole points excluded
    long long bound_sq = 0;         // (2g-2+t+d_inf)^2 q^m
    long long sum_sq_exact = 0;     // (N_0 - N_1)^2, meaningful for p = 2
    double sum_abs = 0.0;           // |sum N_a zeta_p^a|
    bool pass = false;
};

/// Is f of the form h^p - h over the algebraic closure? Equivalently
/// f = h^p - h + c with h in F_{q^m}(X) and c in F_{q^m}, decided by
/// F_p-linear algebra on coefficient vectors. Supported for polynomial f on
/// P^1 only (Unsupported otherwise).
bool is_artin_schreier_degenerate(const CurveModel& c, const RationalFunction& f);

/// Checks Bombieri's estimate on f by full point enumeration. For p = 2 the
/// comparison is exact in integers; for odd p the character sum modulus is
/// computed in floating point with 1e-6 relative tolerance. Refuses
/// degenerate f whenever the degeneracy test is available for it.
CharSumResult char_sum_check(const CurveModel& c, const RationalFunction& f);

}  // namespace agtrace
