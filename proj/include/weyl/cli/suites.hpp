#pragma once

#include "weyl/cli/expr.hpp"
#include "weyl/modules.hpp"
#include "weyl/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyl::cli {

/// Options shared by all suites. Unset fields fall back to per-suite defaults.
struct SuiteOptions {
    std::optional<std::size_t> n;
    std::optional<std::string> gamma;  // "g1;g2;..." rational vectors, entries separated by ','
    std::optional<std::string> alpha;  // rational vector or "formal"
    std::optional<long> window;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 7;
    std::optional<unsigned> max_mu;
    std::optional<ModuleKind> kind;
    std::optional<Mode> subalgebra;
    unsigned jobs = 0;    // 0 = hardware concurrency; never affects results
    bool timing = false;  // record wall time (breaks byte-identical reports)

    Json to_json() const;
};

struct ReportDocument {
    std::string suite;
    std::string grammar = grammar_version;
    std::uint64_t seed = 0;
    Json options = Json::object();
    std::vector<VerificationReport> checks;  // sorted by name
    std::optional<double> wall_time;         // seconds; set only with SuiteOptions::timing

    bool passed() const;
    Json to_json() const;
    /// One "PASS name" / "FAIL name: residual" line per check plus a summary line.
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();

/// Throws Error for an unknown suite or invalid options.
ReportDocument run_suite(const std::string& name, const SuiteOptions& options);

/// Γ from "g1;g2;..."; n is inferred when not given.
LatticeRef parse_gamma(const std::string& text, std::optional<std::size_t> n);
/// α as n scalars; "formal" gives the variables alpha (n = 1) or alpha1..alphan, which are
/// stored in `params`.
std::vector<Scalar> parse_alpha(const std::string& text, std::size_t n,
                                std::shared_ptr<const ParameterSet>& params);
ModuleKind parse_kind(const std::string& text);
/// "Z", "Z^2" or the generator list.
std::string lattice_label(const Lattice& lattice);

} // namespace weyl::cli
