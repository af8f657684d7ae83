#include "atanforge/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace atanforge {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
        case Status::Unconverged: return "unconverged";
    }
    return "error";
}

void IdentityReport::finish(const PrecisionContext& ctx, bool converged) {
    residual = lhs - rhs;
    digits = ctx.digits;
    if (!converged)
        status = Status::Unconverged;
    else
        status = abs(residual) <= ctx.verify_tolerance ? Status::Pass : Status::Fail;
}

std::string IdentityReport::to_json(int d) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["paper_anchor"] = paper_anchor;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["lhs"] = to_decimal(lhs, d);
    j["rhs"] = to_decimal(rhs, d);
    j["residual"] = to_decimal(residual, d);
    j["digits"] = d;
    j["terms_used"] = terms_used;
    j["tail_bound"] = to_decimal(tail_bound, d);
    j["elapsed_ms"] = elapsed_ms;
    j["status"] = to_string(status);
    j["notes"] = notes;
    return j.dump();
}

namespace {
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}
}  // namespace

std::string IdentityReport::csv_header() {
    return "identity,paper_anchor,params,lhs,rhs,residual,digits,terms_used,"
           "tail_bound,elapsed_ms,status,notes";
}

std::string IdentityReport::to_csv_row(int d) const {
    std::ostringstream p;
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) p << ";";
        p << params[i].first << "=" << params[i].second;
    }
    std::ostringstream n;
    for (size_t i = 0; i < notes.size(); ++i) {
        if (i) n << ";";
        n << notes[i];
    }
    std::ostringstream row;
    row << csv_quote(identity) << ',' << csv_quote(paper_anchor) << ','
        << csv_quote(p.str()) << ',' << to_decimal(lhs, d) << ',' << to_decimal(rhs, d)
        << ',' << to_decimal(residual, d) << ',' << d << ',' << terms_used << ','
        << to_decimal(tail_bound, d) << ',' << elapsed_ms << ',' << to_string(status)
        << ',' << csv_quote(n.str());
    return row.str();
}

std::string IdentityReport::to_text(int d) const {
    std::ostringstream out;
    out << identity << " [" << paper_anchor << "]";
    for (const auto& [k, v] : params) out << " " << k << "=" << v;
    out << "\n  lhs      = " << to_decimal(lhs, d) << "\n  rhs      = " << to_decimal(rhs, d)
        << "\n  residual = " << to_decimal(residual, d) << "\n  status   = " << to_string(status);
    if (terms_used) out << "  (terms_used=" << terms_used
                        << ", tail_bound=" << to_decimal(tail_bound, d) << ")";
    for (const auto& n : notes) out << "\n  note: " << n;
    out << "\n";
    return out.str();
}

Stopwatch::Stopwatch() {
    start_ = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
}

double Stopwatch::elapsed_ms() const {
    double now = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now().time_since_epoch())
                     .count();
    return now - start_;
}

}  // namespace atanforge
