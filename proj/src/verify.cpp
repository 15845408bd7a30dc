#include "weyl/verify.hpp"

namespace weyl {

namespace {

VerificationReport element_report(std::string name, const WeylElement& residual,
                                  std::initializer_list<const WeylElement*> inputs, const ParameterSet* params)
{
    VerificationReport r;
    r.name = std::move(name);
    r.passed = residual.is_zero();
    r.residual = to_string(residual, params);
    for (const auto* x : inputs)
        r.witnesses.push_back(to_string(*x, params));
    return r;
}

} // namespace

VerificationReport verify_jacobi(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                 const ParameterSet* params)
{
    WeylElement residual = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    return element_report("jacobi", residual, {&x, &y, &z}, params);
}

VerificationReport verify_cocycle_condition(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                            const ParameterSet* params)
{
    WeylElement px = to_power(x.without_central());
    WeylElement py = to_power(y.without_central());
    WeylElement pz = to_power(z.without_central());
    Scalar residual = cocycle(to_falling(bracket(px, py)), pz) + cocycle(to_falling(bracket(py, pz)), px) +
                      cocycle(to_falling(bracket(pz, px)), py);
    VerificationReport r;
    r.name = "cocycle-condition";
    r.passed = residual.is_zero();
    r.residual = residual.to_string(params);
    for (const auto* e : {&x, &y, &z})
        r.witnesses.push_back(to_string(*e, params));
    return r;
}

VerificationReport verify_ext_jacobi(const WeylElement& x, const WeylElement& y, const WeylElement& z,
                                     const ParameterSet* params)
{
    WeylElement residual =
        ext_bracket(x, ext_bracket(y, z)) + ext_bracket(y, ext_bracket(z, x)) + ext_bracket(z, ext_bracket(x, y));
    return element_report("ext-jacobi", residual, {&x, &y, &z}, params);
}

} // namespace weyl
