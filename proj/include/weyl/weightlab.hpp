#pragma once

#include "weyl/modules.hpp"
#include "weyl/report.hpp"
#include "weyl/scalar.hpp"

#include <map>

namespace weyl {

/// Symbols of the scalar computations: kbar = k + α, the constants p1, p2 and their primed
/// copies p1p, p2p, and the identity index i.
const ParameterSet& weight_params();

/// Swaps p1 → p1p and p2 → p2p.
Scalar primed(const Scalar& s);
/// s with kbar replaced by kbar + shift (shift may involve i).
Scalar shift_kbar(const Scalar& s, const Scalar& shift);

struct PSeries {
    /// p_{j,k} for −1 <= j <= 5 as printed: the anchor values up to j = 2, then the closed forms
    /// for j = 3, 4, 5 with the constants p3, p4, p5 below.
    std::map<long, Scalar> transcribed;
    /// p_{j,k} re-derived from (j−2)P_{j,k} = P_{1,k+j−1}P_{j−1,k} − P_{j−1,k+1}P_{1,k} for j >= 3.
    std::map<long, Scalar> derived;
    /// Transcribed constants p3, p4, p5 and the constants of the derived series (value at kbar = 0).
    std::map<long, Scalar> constants;
    std::map<long, Scalar> derived_constants;
};

PSeries build_p_series();
/// Compares transcription with derivation for j = 3, 4, 5 and checks p_{j,k} = [kbar]^{j+1} at p1 = p2 = 0.
VerificationReport p_series_report(const PSeries& s);

/// R = P_{2,k+3}P_{3,k} − P_{3,k+2}P_{2,k} − P_{5,k}, from [t^2D, t^3D] = t^5D on the rank-one data.
/// Passes when R is kbar-free, a nonzero rational multiple of 8p1^2 + 4p1^3 − 6p1p2 + p2^2,
/// and vanishes at (p1, p2) = (0, 0) and (−2, 0).
VerificationReport virasoro_consistency(const PSeries& s);

struct FPolys {
    Scalar f1, f2, f3, g;
};

/// The coefficients f1, f2, f3 of q_i in the three scalar relations obtained from L23-1, L23-2, L23-3,
/// and g(i) = [i+1]_4[i−1]_4 f3(i) − [i+1]_6 f1(i−2) f1(i),
/// built from the transcribed series.
FPolys build_f_polynomials(const PSeries& s);
/// The i^4 coefficient of f2 must be p1 − p1p; the i^12 coefficient of g must become 6 p1 at p1p = p1.
/// Also records f1 at zero constants and f2 at primed = unprimed.
VerificationReport f_polynomial_report(const FPolys& f);

/// Plugs rank-one normalized data into the relations obtained by applying L23-1, L23-2, L23-3 to Y_k,
/// for i ∈ {1, 3, 5} with symbolic k.
/// Needs formal data with consistent kbar forms for P_{j,·}, j <= 4, and k-independent Q_i, i <= 5.
VerificationReport verify_yk_relations(const PQData& data);

} // namespace weyl
