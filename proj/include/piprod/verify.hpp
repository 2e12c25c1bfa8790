#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace piprod::verify {

/// Which error the nominal tolerance is stated against. Pass/fail itself
/// accepts either (see IdentityCheck::pass).
enum class TolerancePolicy { absolute, relative };

std::string_view to_string(TolerancePolicy p);

/// One verified identity: two independently computed sides and the verdict.
struct IdentityCheck {
    std::string id;
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    TolerancePolicy policy = TolerancePolicy::absolute;
    bool pass = false;
    long long terms = 0;
    std::string method;
    double elapsed_ms = 0.0;

    /// True when a component threw and no value was produced.
    [[nodiscard]] bool numerical_failure() const { return method.rfind("failed:", 0) == 0; }
};

class UnknownCheck : public std::invalid_argument {
public:
    explicit UnknownCheck(const std::string& id)
        : std::invalid_argument("unknown check id: " + id) {}
};

/// Registry ids in run order.
const std::vector<std::string>& registry_ids();

bool is_registered(std::string_view id);

/// Run one check with its tolerance multiplied by tolerance_scale.
/// Throws UnknownCheck for an unregistered id; numerical failures inside the
/// check are recorded on the result instead of thrown.
IdentityCheck run_check(std::string_view id, double tolerance_scale = 1.0);

/// Run the given ids concurrently; results come back in the order given.
std::vector<IdentityCheck> run_checks(std::span<const std::string> ids,
                                      double tolerance_scale = 1.0);

/// Every registered check, in registry order.
std::vector<IdentityCheck> run_all(double tolerance_scale = 1.0);

/// Fill abs_err, rel_err and pass from lhs, rhs and tolerance.
void score(IdentityCheck& check);

}  // namespace piprod::verify
