#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "atanforge/registry.hpp"
#include "atanforge/report.hpp"
#include "atanforge/suite.hpp"

namespace {

using namespace atanforge;

int status_exit(Status s) {
    switch (s) {
        case Status::Pass: return 0;
        case Status::Fail: return 1;
        case Status::Unconverged: return 3;
        default: return 1;
    }
}

// start:stop[:step] ranges and comma lists expand to explicit value strings;
// a plain token is a single value
std::vector<std::string> expand_values(const std::string& text) {
    std::vector<std::string> out;
    if (text.find(',') != std::string::npos) {
        std::string cur;
        for (char c : text) {
            if (c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    }
    auto c1 = text.find(':');
    if (c1 == std::string::npos) return {text};
    auto c2 = text.find(':', c1 + 1);
    std::string a = text.substr(0, c1);
    std::string b = c2 == std::string::npos ? text.substr(c1 + 1)
                                            : text.substr(c1 + 1, c2 - c1 - 1);
    std::string c = c2 == std::string::npos ? "" : text.substr(c2 + 1);
    bool integral = true;
    long ia = 0, ib = 0, ic = 1;
    try {
        ia = parse_int(a);
        ib = parse_int(b);
        if (!c.empty()) ic = parse_int(c);
    } catch (const std::exception&) {
        integral = false;
    }
    if (integral) {
        if (ic == 0) throw std::invalid_argument("range step must be nonzero: " + text);
        for (long v = ia; ic > 0 ? v <= ib : v >= ib; v += ic)
            out.push_back(std::to_string(v));
    } else {
        Scalar sa = parse_scalar(a), sb = parse_scalar(b);
        Scalar sc = c.empty() ? Scalar(1) : parse_scalar(c);
        if (sc == 0) throw std::invalid_argument("range step must be nonzero: " + text);
        Scalar slack = sc / 2;
        for (Scalar v = sa; sc > 0 ? v <= sb + slack : v >= sb - slack; v += sc)
            out.push_back(v.str());
    }
    if (out.empty()) throw std::invalid_argument("empty range: " + text);
    return out;
}

std::ostream& pick_stream(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// every parameter any registered identity accepts; unset ones stay empty
const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names = {"n",     "m",    "j", "k",
                                                   "x",     "y",    "z", "s",
                                                   "a",     "alpha", "theta", "phi",
                                                   "mode"};
    return names;
}

struct Config {
    int digits = 60;
    std::string tolerance, tail_target;
    long max_terms = 2'000'000;
    std::string format = "text";
    std::string out;
    unsigned long long seed = 20260823ULL;
};

PrecisionContext make_context(const Config& cfg) {
    return PrecisionContext::make(cfg.digits, cfg.tolerance, cfg.max_terms,
                                  cfg.tail_target);
}

void write_report(std::ostream& os, const IdentityReport& rep, const Config& cfg) {
    if (cfg.format == "json")
        os << rep.to_json(cfg.digits) << "\n";
    else if (cfg.format == "csv")
        os << IdentityReport::csv_header() << "\n" << rep.to_csv_row(cfg.digits) << "\n";
    else
        os << rep.to_text(cfg.digits);
}

int cmd_list(bool as_json) {
    if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& info : identity_registry()) {
            nlohmann::ordered_json item;
            item["id"] = info.id;
            item["paper_anchor"] = info.paper_anchor;
            auto params = nlohmann::ordered_json::array();
            for (const auto& p : info.params) {
                const char* kind = p.kind == ParamSpec::Int
                                       ? "int"
                                       : (p.kind == ParamSpec::Real ? "real" : "choice");
                params.push_back({{"name", p.name}, {"kind", kind}, {"desc", p.desc}});
            }
            item["params"] = params;
            arr.push_back(item);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& info : identity_registry()) {
        std::cout << info.id << "  [" << info.paper_anchor << "]";
        if (!info.params.empty()) {
            std::cout << "  params:";
            for (const auto& p : info.params) std::cout << " --" << p.name;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& id, const ParamMap& params, const Config& cfg) {
    const IdentityInfo* info = find_identity(id);
    if (!info) {
        std::cerr << "unknown identity: " << id << "\n";
        return 2;
    }
    PrecisionContext ctx = make_context(cfg);
    ctx.apply();
    IdentityReport rep;
    try {
        rep = info->eval(params, ctx);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ofstream file;
    std::ostream& os = pick_stream(file, cfg.out);
    write_report(os, rep, cfg);
    return status_exit(rep.status);
}

int cmd_sweep(const std::string& id, const std::map<std::string, std::string>& raw,
              const Config& cfg) {
    const IdentityInfo* info = find_identity(id);
    if (!info) {
        std::cerr << "unknown identity: " << id << "\n";
        return 2;
    }
    // expand ranges in the identity's declared parameter order
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> values;
    for (const auto& p : info->params) {
        auto it = raw.find(p.name);
        if (it == raw.end()) continue;
        names.push_back(p.name);
        values.push_back(expand_values(it->second));
    }
    long total = 1;
    for (const auto& v : values) total *= static_cast<long>(v.size());
    if (names.empty() || total == 0) {
        std::cerr << "sweep needs at least one parameter range\n";
        return 2;
    }

    PrecisionContext ctx = make_context(cfg);
    ctx.apply();
    std::ofstream file;
    std::ostream& os = pick_stream(file, cfg.out);
    if (cfg.format == "csv") os << IdentityReport::csv_header() << "\n";
    if (cfg.format == "json") os << "[\n";

    long passes = 0, fails = 0, errors = 0, unconverged = 0;
    Scalar max_residual = 0;
    std::vector<size_t> idx(names.size(), 0);
    for (long point = 0; point < total; ++point) {
        ParamMap p;
        long rem = point;
        for (size_t i = names.size(); i-- > 0;) {
            size_t k = rem % values[i].size();
            rem /= static_cast<long>(values[i].size());
            p[names[i]] = values[i][k];
        }
        IdentityReport rep;
        try {
            rep = info->eval(p, ctx);
        } catch (const std::exception& e) {
            rep.identity = id;
            rep.digits = cfg.digits;
            for (const auto& [k, v] : p) rep.add_param(k, v);
            rep.lhs = rep.rhs = rep.residual = rep.tail_bound = 0;
            rep.status = Status::Error;
            rep.notes.push_back(e.what());
        }
        switch (rep.status) {
            case Status::Pass: ++passes; break;
            case Status::Fail: ++fails; break;
            case Status::Unconverged: ++unconverged; break;
            default: ++errors; break;
        }
        if (rep.status != Status::Error && abs(rep.residual) > max_residual)
            max_residual = abs(rep.residual);
        if (cfg.format == "json")
            os << rep.to_json(cfg.digits) << (point + 1 < total ? ",\n" : "\n");
        else if (cfg.format == "csv")
            os << rep.to_csv_row(cfg.digits) << "\n";
        else
            os << rep.to_text(cfg.digits);
    }
    if (cfg.format == "json") os << "]\n";

    std::cerr << "sweep: " << total << " points, " << passes << " pass, " << fails
              << " fail, " << errors << " error, " << unconverged
              << " unconverged, max |residual| = " << to_decimal(max_residual, 5) << "\n";
    if (errors == total) return 2;
    if (fails || errors) return 1;
    if (unconverged) return 3;
    return 0;
}

int cmd_suite(const Config& cfg) {
    PrecisionContext ctx = make_context(cfg);
    ctx.apply();
    bool to_stdout_text = cfg.format == "text" && cfg.out.empty();
    SuiteResult res = run_suite(ctx, cfg.seed, to_stdout_text ? &std::cout : &std::cerr);

    std::ofstream file;
    std::ostream& os = pick_stream(file, cfg.out);
    if (cfg.format == "json") {
        nlohmann::ordered_json doc;
        doc["digits"] = res.digits;
        doc["seed"] = res.seed;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : res.criteria) {
            nlohmann::ordered_json item;
            item["index"] = c.index;
            item["title"] = c.title;
            item["status"] = c.pass ? "pass" : "fail";
            item["checks"] = c.checks;
            item["failures"] = c.failures;
            item["max_residual"] = to_decimal(c.max_residual, res.digits);
            item["elapsed_ms"] = c.elapsed_ms;
            item["notes"] = c.failure_notes;
            arr.push_back(item);
        }
        doc["criteria"] = arr;
        auto farr = nlohmann::ordered_json::array();
        for (const auto& f : res.findings)
            farr.push_back(
                {{"id", f.id}, {"statement", f.statement}, {"evidence", f.evidence}});
        doc["findings"] = farr;
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "index,title,status,checks,failures,max_residual,elapsed_ms\n";
        for (const auto& c : res.criteria) {
            os << c.index << ",\"" << c.title << "\"," << (c.pass ? "pass" : "fail")
               << "," << c.checks << "," << c.failures << ","
               << to_decimal(c.max_residual, 10) << "," << c.elapsed_ms << "\n";
        }
    } else if (!to_stdout_text) {
        for (const auto& c : res.criteria)
            os << "criterion " << c.index << ": " << (c.pass ? "PASS" : "FAIL") << " - "
               << c.title << "\n";
        for (const auto& f : res.findings)
            os << "finding [" << f.id << "]: " << f.evidence << "\n";
    }
    return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluate and verify finite and infinite inverse-tangent identities"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("ATANFORGE_DIGITS")) {
        try {
            cfg.digits = static_cast<int>(parse_int(env));
        } catch (const std::exception&) {
            std::cerr << "invalid ATANFORGE_DIGITS: " << env << "\n";
            return 2;
        }
    }
    app.add_option("--digits", cfg.digits, "reporting precision in decimal digits");
    app.add_option("--tolerance", cfg.tolerance, "absolute residual tolerance");
    app.add_option("--tail-target", cfg.tail_target, "series truncation tail target");
    app.add_option("--max-terms", cfg.max_terms, "infinite series term cap");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    auto* list = app.add_subcommand("list", "list registered identities");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable schema");

    std::string verify_id, sweep_id;
    std::map<std::string, std::string> verify_params, sweep_params;
    auto* verify = app.add_subcommand("verify", "verify one identity at one point");
    verify->add_option("identity", verify_id, "identity id")->required();
    auto* sweep = app.add_subcommand("sweep", "verify an identity over a parameter grid");
    sweep->add_option("identity", sweep_id, "identity id")->required();
    for (const auto& name : param_names()) {
        verify->add_option("--" + name, verify_params[name]);
        sweep->add_option("--" + name, sweep_params[name],
                          "value, comma list, or start:stop[:step]");
    }

    auto* suite = app.add_subcommand("suite", "run the full acceptance matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(list_json);
        if (verify->parsed()) {
            ParamMap p;
            for (const auto& [k, v] : verify_params)
                if (!v.empty()) p[k] = v;
            return cmd_verify(verify_id, p, cfg);
        }
        if (sweep->parsed()) {
            std::map<std::string, std::string> raw;
            for (const auto& [k, v] : sweep_params)
                if (!v.empty()) raw[k] = v;
            return cmd_sweep(sweep_id, raw, cfg);
        }
        if (suite->parsed()) return cmd_suite(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
