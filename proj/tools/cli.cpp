#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "degen/errors.hpp"
#include "degen/identities.hpp"
#include "evaluate.hpp"

namespace degen::cli
{

namespace
{

using ordered_json = nlohmann::ordered_json;

constexpr const char* kParams[] = {"lambda", "x", "delta", "s", "n", "k"};

// --name options stored as text so "1/3" survives; --p is an alias of --s.
struct ParamOptions
{
    std::map<std::string, std::string> text;
    std::map<std::string, CLI::Option*> opts;

    void attach(CLI::App* app, const std::string& what)
    {
        for (const char* name : kParams) {
            std::string flags = "--" + std::string(name);
            if (std::string_view(name) == "s") {
                flags += ",--p";
            }
            opts[name] = app->add_option(flags, text[name], std::string(name) + " " + what);
        }
    }

    ArgMap given() const
    {
        ArgMap a;
        for (const auto& [name, opt] : opts) {
            if (opt->count() > 0) {
                a.emplace(name, text.at(name));
            }
        }
        return a;
    }
};

struct NumericOptions
{
    double tol = 1e-12;
    long max_terms = 200000;

    void attach(CLI::App* app)
    {
        app->add_option("--tol", tol, "absolute tolerance for series and quadrature")->check(CLI::PositiveNumber);
        app->add_option("--max-terms", max_terms, "series term limit")->check(CLI::PositiveNumber);
    }

    EvalOptions options() const
    {
        EvalOptions o;
        o.series.tol = tol;
        o.series.max_terms = max_terms;
        o.quadrature.abs_tol = tol;
        o.quadrature.rel_tol = tol;
        return o;
    }
};

bool write_output(const std::string& path, const std::string& data, std::ostream& out, std::ostream& err)
{
    if (path.empty()) {
        out << data;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << data;
    f.close();
    if (!f) {
        err << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

// ---- eval ----

int cmd_eval(const std::string& fn, const ArgMap& args, const NumericOptions& num, int digits, std::ostream& out,
             std::ostream& err)
{
    try {
        const Cell c = evaluate(fn, args, num.options());
        if (c.exact) {
            out << c.text << "\n";
        } else {
            out << format_numeric(c.numeric.value, digits) << " +/- " << format_numeric(c.numeric.error_bound, 3)
                << "\n";
        }
        return kOk;
    } catch (const UnknownFunction& e) {
        err << e.what() << "\n";
        return kFailure;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kFailure;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ZeroDenominator& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const MaxTermsExceeded& e) {
        err << "not converged: " << e.what() << "\n";
        return kNotConverged;
    } catch (const MaxDepthExceeded& e) {
        err << "not converged: " << e.what() << "\n";
        return kNotConverged;
    }
}

// ---- verify ----

ordered_json report_json(const IdentityReport& r)
{
    ordered_json points = ordered_json::array();
    for (const auto& p : r.sample_points) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : p.params) {
            params[k] = v;
        }
        ordered_json j;
        j["params"] = std::move(params);
        if (p.domain_error) {
            j["residual"] = nullptr;
            j["ok"] = p.ok;
            j["domainError"] = *p.domain_error;
        } else {
            j["residual"] = p.residual;
            j["ok"] = p.ok;
        }
        points.push_back(std::move(j));
    }
    ordered_json j;
    j["identityId"] = r.identity_id;
    j["mode"] = std::string(to_string(r.mode));
    j["samplePoints"] = std::move(points);
    j["maxResidual"] = r.max_residual;
    j["passed"] = r.passed;
    return j;
}

struct VerifyArgs
{
    std::vector<std::string> only;
    std::uint64_t seed = 7;
    std::string lambda;
    std::string out_path;
    double perturb = 0.0;
    bool list = false;
};

int cmd_verify(const VerifyArgs& v, bool lambda_given, std::ostream& out, std::ostream& err)
{
    if (v.list) {
        std::ostringstream s;
        for (const auto& c : identity_registry()) {
            s << c.id << "\t" << c.summary << "\n";
        }
        return write_output(v.out_path, s.str(), out, err) ? kOk : kFailure;
    }
    CheckContext ctx;
    ctx.seed = v.seed;
    ctx.perturb = v.perturb;
    if (lambda_given) {
        try {
            ctx.lambda = Rational::parse(v.lambda);
        } catch (const ParseError&) {
            err << "usage: --lambda: not a rational number: " << v.lambda << "\n";
            return kFailure;
        }
    }
    std::vector<IdentityReport> reports;
    try {
        reports = run_checks(v.only, ctx);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kFailure;
    }
    ordered_json arr = ordered_json::array();
    std::size_t passed = 0;
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        passed += r.passed ? 1 : 0;
    }
    if (!write_output(v.out_path, arr.dump(2) + "\n", out, err)) {
        return kFailure;
    }
    err << "verify: " << passed << "/" << reports.size() << " identities passed\n";
    return passed == reports.size() ? kOk : kFailure;
}

// ---- table ----

// Grid syntax: comma-separated items; an item is a value, an inclusive
// integer range "a..b", or an inclusive rational progression "start:stop:step".
std::vector<std::string> expand_grid(const std::string& name, const std::string& spec)
{
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    auto parse = [&](const std::string& t) {
        try {
            return Rational::parse(t);
        } catch (const ParseError&) {
            throw UsageError("--" + name + ": bad grid value '" + t + "'");
        }
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const auto lo = parse(item.substr(0, dots)).to_long();
            const auto hi = parse(item.substr(dots + 2)).to_long();
            if (!lo || !hi) {
                throw UsageError("--" + name + ": range ends must be integers");
            }
            for (long i = *lo; i <= *hi; ++i) {
                out.push_back(std::to_string(i));
            }
        } else if (item.find(':') != std::string::npos) {
            std::stringstream parts(item);
            std::string a, b, c;
            std::getline(parts, a, ':');
            std::getline(parts, b, ':');
            std::getline(parts, c, ':');
            const Rational start = parse(a);
            const Rational stop = parse(b);
            const Rational step = parse(c);
            if (step.sign() <= 0) {
                throw UsageError("--" + name + ": step must be positive");
            }
            for (Rational r = start; r <= stop; r += step) {
                out.push_back(r.str());
                if (out.size() > 100000) {
                    throw UsageError("--" + name + ": grid too large");
                }
            }
        } else {
            out.push_back(item);
        }
    }
    if (out.empty()) {
        throw UsageError("empty grid for --" + name);
    }
    return out;
}

struct Row
{
    std::vector<std::string> params;
    std::string value;
    std::string error_bound;
    std::string status;
    std::string note;
};

int cmd_table(const std::string& fn, const ArgMap& grids, const NumericOptions& num, const std::string& format,
              int precision, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> axes;
    try {
        const FunctionInfo& info = function_info(fn);
        for (const auto& name : info.required) {
            const auto it = grids.find(name);
            if (it == grids.end()) {
                throw UsageError("missing --" + std::string(name));
            }
            columns.emplace_back(name);
            axes.push_back(expand_grid(std::string(name), it->second));
        }
        for (const auto& name : info.optional) {
            if (const auto it = grids.find(name); it != grids.end()) {
                columns.emplace_back(name);
                axes.push_back(expand_grid(std::string(name), it->second));
            }
        }
    } catch (const UnknownFunction& e) {
        err << e.what() << "\n";
        return kFailure;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kFailure;
    }

    std::vector<Row> rows;
    std::vector<std::size_t> idx(axes.size(), 0);
    const EvalOptions opt = num.options();
    for (bool more = true; more;) {
        Row row;
        ArgMap args;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            row.params.push_back(axes[i][idx[i]]);
            args.emplace(columns[i], axes[i][idx[i]]);
        }
        try {
            const Cell c = evaluate(fn, args, opt);
            if (c.exact) {
                row.value = c.text;
                row.error_bound = "0";
                row.status = "exact";
            } else {
                row.value = format_numeric(c.numeric.value, precision);
                row.error_bound = format_numeric(c.numeric.error_bound, 3);
                row.status = std::string(to_string(c.numeric.status));
            }
        } catch (const UsageError& e) {
            err << "usage: " << e.what() << "\n";
            return kFailure;
        } catch (const DomainError& e) {
            row.status = "domain-error";
            row.note = e.what();
        } catch (const ZeroDenominator& e) {
            row.status = "domain-error";
            row.note = e.what();
        } catch (const MaxTermsExceeded& e) {
            row.status = "not-converged";
            row.note = e.what();
        } catch (const MaxDepthExceeded& e) {
            row.status = "not-converged";
            row.note = e.what();
        }
        rows.push_back(std::move(row));

        // odometer over the grid, last column fastest
        more = false;
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }

    std::string data;
    if (format == "csv") {
        std::ostringstream s;
        for (const auto& c : columns) {
            s << csv_field(c) << ",";
        }
        s << "value,error_bound,status,note\r\n";
        for (const auto& r : rows) {
            for (const auto& p : r.params) {
                s << csv_field(p) << ",";
            }
            s << csv_field(r.value) << "," << csv_field(r.error_bound) << "," << csv_field(r.status) << ","
              << csv_field(r.note) << "\r\n";
        }
        data = s.str();
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                j[columns[i]] = r.params[i];
            }
            j["value"] = r.value.empty() ? ordered_json(nullptr) : ordered_json(r.value);
            j["errorBound"] = r.error_bound.empty() ? ordered_json(nullptr) : ordered_json(r.error_bound);
            j["status"] = r.status;
            if (!r.note.empty()) {
                j["note"] = r.note;
            }
            arr.push_back(std::move(j));
        }
        ordered_json doc;
        doc["function"] = fn;
        doc["columns"] = columns;
        doc["rows"] = std::move(arr);
        data = doc.dump(2) + "\n";
    }
    return write_output(out_path, data, out, err) ? kOk : kFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degenerate polyexponential, Bell, gamma and zeta functions", "degen"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate one function");
    std::string eval_fn;
    eval->add_option("function", eval_fn, "function name")->required();
    ParamOptions eval_params;
    eval_params.attach(eval, "value");
    NumericOptions eval_num;
    eval_num.attach(eval);
    int digits = 17;
    eval->add_option("--digits", digits, "significant digits for decimal output")->check(CLI::Range(1, 40));

    auto* verify = app.add_subcommand("verify", "run the identity checks and print a JSON report");
    VerifyArgs v;
    verify->add_option("--only", v.only, "identity ids (repeatable or comma-separated)")->delimiter(',');
    verify->add_option("--seed", v.seed, "seed for random sample points");
    auto* lambda_opt = verify->add_option("--lambda", v.lambda, "replace every check's lambda samples");
    verify->add_option("--out", v.out_path, "write the report to a file");
    verify->add_option("--perturb", v.perturb, "add this to one constant in every check (negative control)");
    verify->add_flag("--list", v.list, "list identity ids");

    auto* table = app.add_subcommand("table", "tabulate a function over a parameter grid");
    std::string table_fn;
    table->add_option("function", table_fn, "function name")->required();
    ParamOptions table_params;
    table_params.attach(table, "grid");
    NumericOptions table_num;
    table_num.attach(table);
    std::string format = "csv";
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    int precision = 12;
    table->add_option("--precision", precision, "significant digits of decimal cells")->check(CLI::Range(1, 40));
    std::string table_out;
    table->add_option("--out", table_out, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    if (eval->parsed()) {
        return cmd_eval(eval_fn, eval_params.given(), eval_num, digits, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify(v, lambda_opt->count() > 0, out, err);
    }
    return cmd_table(table_fn, table_params.given(), table_num, format, precision, table_out, out, err);
}

} // namespace degen::cli
