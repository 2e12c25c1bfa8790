#include "piprod/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace piprod::report {

namespace {

using nlohmann::json;

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("field ") + key + " is not a number");
    }
    return v.get<double>();
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

}  // namespace

std::string format_number(double v, int digits) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

std::string format_number(double v) { return format_number(v, 17); }

bool all_pass(const std::vector<verify::IdentityCheck>& results) {
    for (const auto& r : results) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

std::string to_json(const std::vector<verify::IdentityCheck>& results, int indent) {
    json arr = json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"description", r.description},
                       {"lhs", number_or_null(r.lhs)},
                       {"rhs", number_or_null(r.rhs)},
                       {"abs_err", number_or_null(r.abs_err)},
                       {"rel_err", number_or_null(r.rel_err)},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass},
                       {"terms", r.terms},
                       {"method", r.method},
                       {"elapsed_ms", r.elapsed_ms}});
    }
    json doc = {{"version", std::string(kVersion)}, {"results", arr}, {"all_pass", all_pass(results)}};
    return doc.dump(indent);
}

std::vector<verify::IdentityCheck> from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("version").get<std::string>() != kVersion) {
            throw std::invalid_argument("unsupported report version");
        }
        std::vector<verify::IdentityCheck> out;
        for (const json& j : doc.at("results")) {
            verify::IdentityCheck c;
            c.id = j.at("id").get<std::string>();
            c.description = j.at("description").get<std::string>();
            c.lhs = number_from(j, "lhs");
            c.rhs = number_from(j, "rhs");
            c.abs_err = number_from(j, "abs_err");
            c.rel_err = number_from(j, "rel_err");
            c.tolerance = number_from(j, "tolerance");
            c.pass = j.at("pass").get<bool>();
            c.terms = j.at("terms").get<long long>();
            c.method = j.at("method").get<std::string>();
            c.elapsed_ms = number_from(j, "elapsed_ms");
            out.push_back(std::move(c));
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string to_csv(const std::vector<verify::IdentityCheck>& results) {
    std::string out(kVerifyCsvHeader);
    out += '\n';
    for (const auto& r : results) {
        out += csv_field(r.id) + ',' + format_number(r.lhs) + ',' + format_number(r.rhs) + ',' +
               format_number(r.abs_err) + ',' + format_number(r.rel_err) + ',' +
               format_number(r.tolerance) + ',' + (r.pass ? "true" : "false") + ',' +
               std::to_string(r.terms) + ',' + csv_field(r.method) + ',' +
               format_number(r.elapsed_ms) + '\n';
    }
    return out;
}

std::string to_text(const std::vector<verify::IdentityCheck>& results) {
    std::string out;
    std::size_t width = 2;
    for (const auto& r : results) {
        width = std::max(width, r.id.size());
    }
    int passed = 0;
    for (const auto& r : results) {
        passed += r.pass ? 1 : 0;
        out += pad(r.pass ? "PASS" : "FAIL", 6) + pad(r.id, width + 2) +
               "abs_err " + pad(format_number(r.abs_err, 3), 11) +
               "rel_err " + pad(format_number(r.rel_err, 3), 11) +
               "tol " + pad(format_number(r.tolerance, 3), 9) +
               pad(format_number(r.elapsed_ms, 3) + " ms", 12) + r.method + '\n';
    }
    out += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    return out;
}

std::string table_csv(const std::vector<table::Row>& rows) {
    std::string out(kTableCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + format_number(r.estimate) + ',' + format_number(r.abs_err) +
               ',' + (r.observed_order ? format_number(*r.observed_order) : std::string()) + '\n';
    }
    return out;
}

std::string table_text(const std::vector<table::Row>& rows) {
    std::string out = pad("n", 12) + pad("estimate", 24) + pad("abs_err", 12) + "observed_order\n";
    for (const auto& r : rows) {
        out += pad(std::to_string(r.n), 12) + pad(format_number(r.estimate), 24) +
               pad(format_number(r.abs_err, 4), 12) +
               (r.observed_order ? format_number(*r.observed_order, 4) : std::string("-")) + '\n';
    }
    return out;
}

}  // namespace piprod::report
