#include "riemsol/report.hpp"

#include <algorithm>

namespace riemsol {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Info: return "info";
    }
    return "info";
}

bool CheckReport::all_passed() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CheckEntry& e) { return e.status == CheckStatus::Fail; });
}

void CheckReport::append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

namespace {

CheckEntry residual_entry(std::string id, std::string equation, bool zero, std::string summary,
                          std::string details) {
    return CheckEntry{std::move(id), std::move(equation),
                      zero ? CheckStatus::Pass : CheckStatus::Fail, std::move(summary),
                      std::move(details)};
}

} // namespace

void CheckReport::add_residual(std::string id, std::string equation, const Tensor& residual,
                               std::string details) {
    add(residual_entry(std::move(id), std::move(equation), residual.is_zero(),
                       residual_summary(residual), std::move(details)));
}

void CheckReport::add_residual(std::string id, std::string equation, const Vec3& residual,
                               std::string details) {
    add(residual_entry(std::move(id), std::move(equation), residual.is_zero(),
                       residual_summary(residual), std::move(details)));
}

void CheckReport::add_residual(std::string id, std::string equation, const Mat3& residual,
                               std::string details) {
    add(residual_entry(std::move(id), std::move(equation), residual.is_zero(),
                       residual_summary(residual), std::move(details)));
}

void CheckReport::add_residual(std::string id, std::string equation, const Rational& residual,
                               std::string details) {
    add(residual_entry(std::move(id), std::move(equation), residual == 0,
                       residual_summary(residual), std::move(details)));
}

void CheckReport::add_verdict(std::string id, std::string equation, bool ok,
                              std::string details) {
    add(CheckEntry{std::move(id), std::move(equation),
                   ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "0" : "-",
                   std::move(details)});
}

void CheckReport::add_info(std::string id, std::string equation, std::string details) {
    add(CheckEntry{std::move(id), std::move(equation), CheckStatus::Info, "-",
                   std::move(details)});
}

void CheckReport::add_skipped(std::string id, std::string equation, std::string details) {
    add(CheckEntry{std::move(id), std::move(equation), CheckStatus::Skipped, "-",
                   std::move(details)});
}

std::string residual_summary(const Tensor& t) {
    return to_string(t.max_abs());
}

std::string residual_summary(const Vec3& v) {
    Rational best = 0;
    for (int i = 0; i < kDim; ++i) {
        Rational a = rational_abs(v[i]);
        if (a > best) best = a;
    }
    return to_string(best);
}

std::string residual_summary(const Mat3& a) {
    Rational best = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Rational x = rational_abs(a.at(i, j));
            if (x > best) best = x;
        }
    return to_string(best);
}

std::string residual_summary(const Rational& x) {
    return to_string(rational_abs(x));
}

} // namespace riemsol
