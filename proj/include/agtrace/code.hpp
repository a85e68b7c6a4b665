#pragma once

#include <optional>
#include <vector>

#include "agtrace/linalg.hpp"
#include "agtrace/rrspace.hpp"

namespace agtrace {

/// Evaluation AG code C(D, G) over F_{q^m}: generator matrix entry (i, l) is
/// f_i(P_l) for the Riemann-Roch basis f_i and evaluation points P_l.
struct AGCode {
    CurveModel curve;
    Divisor divisor;
    std::vector<RationalPoint> points;  // D, canonical order
    RRBasis basis;                      // k functions
    Mat gen_matrix;                     // k x n over F_{q^m}

    int k() const { return basis.dim(); }
    int n() const { return static_cast<int>(points.size()); }
};

/// Builds C(D, G). D defaults to D_max = X(F_{q^m}) \ Supp(G+); an explicit
/// D must consist of distinct points on the curve away from Supp(G+).
/// `drop_negative_support` additionally removes the points of Supp(G-)
/// (whose columns are identically zero) from the default D.
AGCode build_code(const CurveModel& c, const Divisor& g,
                  const std::optional<std::vector<RationalPoint>>& d = std::nullopt,
                  bool drop_negative_support = false);

/// Trace code Tr C over F_q: the (m k) x n matrix with rows Tr(beta_j f_i)
/// evaluated on D, row index i*m + j, and its exact rank over F_q.
struct TraceCode {
    Mat trace_matrix;
    long long dim = 0;
};

TraceCode trace_code(const AGCode& code);

/// Kernel K of the trace map on C and the Artin-Schreier space
/// E = {h^q - h : h in L([G/q])}, both as canonical subspaces of F_q^{mk}
/// in the coordinates of the F_q-generators beta_j f_i of C.
struct KernelSpaces {
    SubspaceFq kernel;         // K
    SubspaceFq artin_schreier; // E
    bool eq3_holds = false;    // m k = dim Tr C + dim K
    bool e_subset_k = false;
};

KernelSpaces kernel_and_spaces(const AGCode& code, const TraceCode& tc);
KernelSpaces kernel_and_spaces(const AGCode& code);

/// dim E = m dim L([G/q]) - delta, valid when #Supp(G-) <= 1; throws
/// ConditionOneViolated otherwise.
long long prop1_dim_e(const Divisor& g);

/// Delsarte duality: (Tr C)^perp = (C^perp)|_{F_q} as canonical subspaces of
/// F_q^n, both sides computed by independent eliminations.
bool delsarte_check(const AGCode& code, const TraceCode& tc);
bool delsarte_check(const AGCode& code);

}  // namespace agtrace
