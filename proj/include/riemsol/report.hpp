#pragma once

#include <string>
#include <vector>

#include "riemsol/linalg.hpp"
#include "riemsol/tensor.hpp"

namespace riemsol {

enum class CheckStatus { Pass, Fail, Skipped, Info };

std::string to_string(CheckStatus status);

/// One verified identity or reported fact.
struct CheckEntry {
    std::string id;        ///< stable dotted identifier, e.g. "acm.a5.compatibility"
    std::string equation;  ///< equation tag ("a5", "b2", "cc2", ...), "-" when none
    CheckStatus status = CheckStatus::Info;
    std::string residual;  ///< max-abs of the residual, "0" when it vanishes, "-" for info
    std::string details;
};

/// Ordered list of check entries produced by one operation or suite.
struct CheckReport {
    std::vector<CheckEntry> entries;

    bool all_passed() const;

    void add(CheckEntry entry) { entries.push_back(std::move(entry)); }
    void append(const CheckReport& other);

    /// Pass iff the residual is identically zero.
    void add_residual(std::string id, std::string equation, const Tensor& residual,
                      std::string details);
    void add_residual(std::string id, std::string equation, const Vec3& residual,
                      std::string details);
    void add_residual(std::string id, std::string equation, const Mat3& residual,
                      std::string details);
    void add_residual(std::string id, std::string equation, const Rational& residual,
                      std::string details);
    void add_verdict(std::string id, std::string equation, bool ok, std::string details);
    void add_info(std::string id, std::string equation, std::string details);
    void add_skipped(std::string id, std::string equation, std::string details);
};

std::string residual_summary(const Tensor& t);
std::string residual_summary(const Vec3& v);
std::string residual_summary(const Mat3& a);
std::string residual_summary(const Rational& x);

} // namespace riemsol
