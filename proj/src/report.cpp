#include "weyl/report.hpp"

namespace weyl {

Json VerificationReport::to_json() const
{
    return Json{{"name", name},
                {"passed", passed},
                {"parameters", parameters},
                {"residual", residual},
                {"witnesses", witnesses},
                {"details", details}};
}

VerificationReport aggregate(std::string name, const std::vector<VerificationReport>& samples)
{
    VerificationReport r;
    r.name = std::move(name);
    r.passed = true;
    std::size_t zero = 0;
    for (const auto& s : samples) {
        if (s.passed) {
            ++zero;
            continue;
        }
        if (r.passed) {
            r.residual = s.residual;
            r.witnesses = s.witnesses;
            r.details["first_failure"] = s.to_json();
        }
        r.passed = false;
    }
    r.details["samples"] = samples.size();
    r.details["zero_residuals"] = zero;
    return r;
}

} // namespace weyl
