#include "piprod/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "piprod/afunc.hpp"
#include "piprod/bench.hpp"
#include "piprod/errors.hpp"
#include "piprod/prodcore.hpp"
#include "piprod/report.hpp"
#include "piprod/table.hpp"
#include "piprod/verify.hpp"

namespace piprod::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct VerifyArgs {
    std::vector<std::string> only;
    double tol_scale = 1.0;
    std::string format = "text";
    std::string out_path;
};

struct PiArgs {
    std::string method = "series";
    long long terms = 40;
    int digits = 15;
};

struct TableArgs {
    std::string target;
    long long n_start = 0;
    long long n_stop = 0;
    double n_factor = 2.0;
    std::string format = "csv";
};

struct BenchArgs {
    std::string target = "pi_product";
    long long budget = 200;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    for (const std::string& id : a.only) {
        if (!verify::is_registered(id)) {
            err << "verify: unknown check id '" << id << "'\n";
            return usage_error;
        }
    }
    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) {
            err << "verify: cannot open '" << a.out_path << "' for writing\n";
            return usage_error;
        }
    }
    const std::vector<verify::IdentityCheck> results =
        a.only.empty() ? verify::run_all(a.tol_scale) : verify::run_checks(a.only, a.tol_scale);

    std::string text;
    if (a.format == "json") {
        text = report::to_json(results) + "\n";
    } else if (a.format == "csv") {
        text = report::to_csv(results);
    } else {
        text = report::to_text(results);
    }
    (a.out_path.empty() ? out : file) << text;

    if (std::any_of(results.begin(), results.end(),
                    [](const verify::IdentityCheck& c) { return c.numerical_failure(); })) {
        return numerical_failure;
    }
    return report::all_pass(results) ? ok : check_failed;
}

prodcore::Method method_from(const std::string& name) {
    using prodcore::Method;
    if (name == "naive") return Method::naive;
    if (name == "tail") return Method::tail_corrected;
    if (name == "extrapolate") return Method::extrapolated;
    return Method::series;
}

int cmd_pi(const PiArgs& a, std::ostream& out, std::ostream& err) {
    const prodcore::Method method = method_from(a.method);
    const long long min_terms = method == prodcore::Method::series ? 1 : 2;
    if (a.terms < min_terms) {
        err << "pi: --terms must be >= " << min_terms << " for method " << a.method << "\n";
        return usage_error;
    }
    const double estimate = afunc::pi_from_product(method, a.terms);
    out << report::format_number(estimate, a.digits) << "\n";
    out << "abs_error " << report::format_number(std::fabs(estimate - kPi), 3) << "  terms "
        << a.terms << "  method " << prodcore::to_string(method) << "\n";
    return ok;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    const std::vector<table::Row> rows =
        table::convergence_table(table::parse_target(a.target), a.n_start, a.n_stop, a.n_factor);
    out << (a.format == "csv" ? report::table_csv(rows) : report::table_text(rows));
    return ok;
}

std::string line(std::string_view name, const bench::Estimate& e) {
    std::string s(name);
    s.resize(std::max<std::size_t>(s.size(), 16), ' ');
    return s + "value " + report::format_number(e.value) + "  abs_err " +
           report::format_number(e.abs_err, 3);
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    if (a.budget < bench::kMinBudget) {
        err << "bench: --budget-terms must be >= " << bench::kMinBudget << "\n";
        return usage_error;
    }
    const bench::BenchResult r = bench::run(bench::parse_target(a.target), a.budget);
    out << "target " << bench::to_string(r.target) << "  budget " << r.budget << "  reference "
        << report::format_number(r.reference) << "\n";
    out << line("naive", r.naive) << "\n";
    out << line("wynn_epsilon", r.wynn) << "  digits_gained " << report::format_number(r.digits_wynn, 4)
        << "\n";
    out << line("tail_corrected", r.tail) << "  digits_gained " << report::format_number(r.digits_tail, 4)
        << "  (K=" << bench::kTailOrder << ")\n";
    out << line("richardson", r.richardson) << "  digits_gained "
        << report::format_number(r.digits_richardson, 4) << "  (comparison only)\n";
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compute and verify pi product and zeta(3) identities", "piprod"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity checks");
    verify_cmd->add_option("--only", va.only, "comma-separated check ids")->delimiter(',');
    verify_cmd->add_option("--tol-scale", va.tol_scale, "multiply every tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv", "text"}));
    verify_cmd->add_option("--out", va.out_path, "write the report here instead of stdout");

    PiArgs pa;
    auto* pi_cmd = app.add_subcommand("pi", "estimate pi from the e-corrected product");
    pi_cmd->add_option("--method", pa.method)
        ->check(CLI::IsMember({"naive", "tail", "extrapolate", "series"}));
    pi_cmd->add_option("--terms", pa.terms, "product terms, or series terms for series");
    pi_cmd->add_option("--digits", pa.digits)->check(CLI::Range(1, 17));

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "convergence table on a geometric schedule");
    table_cmd->add_option("--target", ta.target)
        ->required()
        ->check(CLI::IsMember({"pi_product", "euler_product", "s_series", "a_series"}));
    table_cmd->add_option("--n-start", ta.n_start)->required();
    table_cmd->add_option("--n-stop", ta.n_stop)->required();
    table_cmd->add_option("--n-factor", ta.n_factor);
    table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "text"}));

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "compare acceleration at a fixed term budget");
    bench_cmd->add_option("--target", ba.target)->check(CLI::IsMember({"pi_product", "euler_product"}));
    bench_cmd->add_option("--budget-terms", ba.budget);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage_error;
    }

    try {
        if (*verify_cmd) return cmd_verify(va, out, err);
        if (*pi_cmd) return cmd_pi(pa, out, err);
        if (*table_cmd) return cmd_table(ta, out);
        return cmd_bench(ba, out, err);
    } catch (const NumericalFailure& e) {
        err << e.what() << "\n";
        return numerical_failure;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << e.what() << "\n";
        return usage_error;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace piprod::cli
