#pragma once

#include "weyl/report.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] must vanish.
VerificationReport verify_jacobi(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                 const ParameterSet* params = nullptr);
/// ψ([x,y],z) + ψ([y,z],x) + ψ([z,x],y) must vanish (n = 1).
VerificationReport verify_cocycle_condition(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                            const ParameterSet* params = nullptr);
/// Jacobi identity of ext_bracket including the central coordinate.
VerificationReport verify_ext_jacobi(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                     const ParameterSet* params = nullptr);

} // namespace weyl
