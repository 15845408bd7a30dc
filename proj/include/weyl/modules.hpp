#pragma once

#include "weyl/report.hpp"
#include "weyl/weyl_element.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace weyl {

enum class ModuleKind { A, B };

const char* to_string(ModuleKind kind);

/// Finite set of degrees γ ∈ Γ on which a module is truncated.
using Window = std::set<LatticePoint>;

/// All points whose generator coordinates lie in [−radius, radius].
Window box_window(const Lattice& lattice, long radius);
/// lo <= γ <= hi for Γ of rank 1.
Window interval_window(long lo, long hi);

/// A_α: (t^β D^μ) y_γ = (α+γ)^μ y_{β+γ}.
/// B_α: (t^β D^μ) y_γ = (−1)^{|μ|+1} (α+β+γ)^μ y_{β+γ}.
/// α may be formal (polynomials over `params`); the central element acts as zero.
class IntermediateModule {
public:
    IntermediateModule(ModuleKind kind, LatticeRef lattice, std::vector<Scalar> alpha, Window window,
                       std::shared_ptr<const ParameterSet> params = nullptr);

    ModuleKind kind() const noexcept { return kind_; }
    const LatticeRef& lattice() const noexcept { return lattice_; }
    const std::vector<Scalar>& alpha() const noexcept { return alpha_; }
    const Window& window() const noexcept { return window_; }
    const std::shared_ptr<const ParameterSet>& params() const noexcept { return params_; }
    bool contains(const LatticePoint& gamma) const { return window_.count(gamma) > 0; }
    /// Every component of α is a rational constant.
    bool numeric() const;

private:
    ModuleKind kind_;
    LatticeRef lattice_;
    std::vector<Scalar> alpha_;
    Window window_;
    std::shared_ptr<const ParameterSet> params_;
};

/// Finite combination of the basis vectors y_γ; never stores zeros.
using ModuleVector = std::map<LatticePoint, Scalar>;

std::string to_string(const ModuleVector& v, const IntermediateModule& m);

/// Coefficient c with (t^β D^μ) y_γ = c y_{β+γ}; no window check. Throws SubalgebraViolation for |μ| = 0.
Scalar action_coefficient(const IntermediateModule& m, const WeylMonomial& x, const LatticePoint& gamma);
/// The defining action on one basis vector; throws WindowEscape if γ or β+γ is outside the window.
ModuleVector act(const IntermediateModule& m, const WeylMonomial& x, const LatticePoint& gamma);
/// Linear extension to elements (any basis; central part dropped) and vectors.
ModuleVector act(const IntermediateModule& m, const WeylElement& x, const ModuleVector& v);

/// [x,y]v = x(yv) − y(xv) on random homogeneous x, y of W^(1) with |μ| <= max_mu and basis vectors v.
VerificationReport lie_module_check(const IntermediateModule& m, std::size_t samples, std::uint64_t seed,
                                    unsigned max_mu = 3);

/// (x·y)v versus x(yv). Passes when the outcome matches the dichotomy: every residual vanishes for
/// kind A, and some residual is nonzero for kind B. The probe x = y = t^{e_1} D_1, v = y_0 always
/// comes first.
VerificationReport assoc_module_check(const IntermediateModule& m, std::size_t samples, std::uint64_t seed,
                                      unsigned max_mu = 3);

/// Proper graded subspaces of the truncated module invariant under all monomial actions
/// t^β D^μ (1 <= |μ| <= max_mu) that stay within the window. Each result is the invariant
/// subspace generated by one y_γ, listed by its basis degrees; duplicates are removed.
/// Throws DomainError for formal α.
std::vector<Window> submodule_scan(const IntermediateModule& m, unsigned max_mu = 2);

struct HighestWeightWitness {
    LatticePoint gamma;
    /// Also annihilated by every negative-degree action inside the window.
    bool also_lowest = false;
    std::string caveat;
};

/// First y_γ (in canonical order) annihilated by every positive-degree action t^β D^μ
/// (1 <= |μ| <= max_mu) landing in the window; γ must admit at least one such action.
/// Throws DomainError for formal α.
std::optional<HighestWeightWitness> highest_weight_scan(const IntermediateModule& m, unsigned max_mu = 2);

/// Data of the rescaled basis Y_k = c_k y_k with (t^{−1}D) Y_k = Y_{k−1}:
/// (t^iD) Y_k = P_{i,k} Y_{k+i} and (d/dt)^i Y_k = Q_{i,k} Y_{k−i}.
struct PQData {
    ModuleKind kind = ModuleKind::A;
    long k_lo = 0, k_hi = 0;
    std::shared_ptr<const ParameterSet> params;  // parameters of the module's α
    std::map<long, std::map<long, Scalar>> P;    // P[i][k], −1 <= i <= 5
    std::map<long, std::map<long, Scalar>> Q;    // Q[i][k], 1 <= i <= 5
    std::map<long, Scalar> Q_value;              // Q_i when independent of k
    bool q_independent_of_k = false;

    /// Formal α only: P_{i,k} rewritten through kbar = k + α, when the result does not depend on k.
    bool formal = false;
    std::shared_ptr<const ParameterSet> kbar_params;  // {"kbar"}
    std::map<long, Scalar> P_kbar;
    bool p_kbar_consistent = false;
    /// P_1 = P_{1,k} − [kbar]^2 and P_2 = P_{2,k} − [kbar]^3 − 3 kbar P_1 (in kbar_params when formal).
    std::optional<Scalar> P1, P2;
};

/// Rescales y_k for k_lo − 5 <= k <= k_hi + 5; the window must contain that range.
/// Throws DomainError when a rescale factor (the coefficient of t^{−1}D) vanishes.
PQData normalize_ddt_basis(const IntermediateModule& m, long k_lo, long k_hi);

/// σ = (d/dt)^2 · (t^3 d/dt) on V_0, evaluated as the composite of the two module operators.
Scalar sigma_eval(const IntermediateModule& m);
/// σ both as the composite and as the action of the product element (they differ for kind B),
/// compared with [0̄]^3 Q_2 = α(α+1)(α+2) Q_2; the transcribed [2̄]^3 Q_2 is recorded too.
VerificationReport sigma_report(const IntermediateModule& m);

} // namespace weyl
