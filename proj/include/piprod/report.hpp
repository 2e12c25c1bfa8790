#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "piprod/table.hpp"
#include "piprod/verify.hpp"

namespace piprod::report {

inline constexpr std::string_view kVersion = "1";
inline constexpr std::string_view kVerifyCsvHeader =
    "id,lhs,rhs,abs_err,rel_err,tolerance,pass,terms,method,elapsed_ms";
inline constexpr std::string_view kTableCsvHeader = "n,estimate,abs_err,observed_order";

/// 17 significant digits, '.' decimal point, lowercase exponent; independent
/// of the global locale. Non-finite values print as nan, inf, -inf.
std::string format_number(double v);

/// Same, with `digits` significant digits (1..17).
std::string format_number(double v, int digits);

bool all_pass(const std::vector<verify::IdentityCheck>& results);

/// {"version":"1","results":[...],"all_pass":bool}. A NaN side (a check that
/// failed numerically) is written as null.
std::string to_json(const std::vector<verify::IdentityCheck>& results, int indent = 2);

/// Inverse of to_json. The tolerance policy is not serialized and comes back
/// as absolute. Throws std::invalid_argument on malformed input.
std::vector<verify::IdentityCheck> from_json(std::string_view text);

std::string to_csv(const std::vector<verify::IdentityCheck>& results);

std::string to_text(const std::vector<verify::IdentityCheck>& results);

std::string table_csv(const std::vector<table::Row>& rows);

std::string table_text(const std::vector<table::Row>& rows);

}  // namespace piprod::report
