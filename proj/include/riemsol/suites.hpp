#pragma once

#include <optional>
#include <string>

#include "riemsol/manifest.hpp"
#include "riemsol/report.hpp"

namespace riemsol {

enum class Suite {
    Validate,
    Connection,
    Curvature,
    Acm,
    Classify,
    Identities,
    Soliton,
    Gradient,
    Theorems,
    All,
};

std::optional<Suite> suite_from_name(std::string_view name);
std::string suite_name(Suite suite);

struct SuiteOptions {
    std::optional<std::string> name_filter;  ///< soliton/gradient instance selector
    std::string source = "manifest";         ///< label echoed into the report
};

struct ReportDocument {
    std::string suite;
    std::string source;
    std::vector<CheckEntry> entries;

    bool passed() const;
};

/// Runs the selected checks in dependency order (build, connection,
/// curvature, structure, identities, solitons, theorems) with deterministic
/// entry ordering. Construction failures (bad index, duplicate bracket,
/// Jacobi violation, non-SPD metric) become a failed entry rather than an
/// exception; input errors from parsing stay exceptions.
ReportDocument run_suite(const Manifest& manifest, Suite suite, const SuiteOptions& opts = {});

std::string report_to_text(const ReportDocument& doc);
/// Byte-stable machine-readable form (stable key order, 2-space indent,
/// trailing newline).
std::string report_to_json(const ReportDocument& doc);

/// Frame vector as a readable combination, e.g. "-e1 + 1/2 e3", "0".
std::string format_vector(const Vec3& v);

} // namespace riemsol
