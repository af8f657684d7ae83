#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atanforge/scalar.hpp"

namespace atanforge {

enum class Status { Pass, Fail, Error, Unconverged };

std::string to_string(Status s);

/// One verification outcome: what was evaluated, both sides, the residual,
/// and how much work it took.
struct IdentityReport {
    std::string identity;
    std::string paper_anchor;
    std::vector<std::pair<std::string, std::string>> params;
    Scalar lhs, rhs, residual;
    int digits = 0;
    long terms_used = 0;  // 0 for finite sums
    Scalar tail_bound;
    double elapsed_ms = 0;
    Status status = Status::Error;
    std::vector<std::string> notes;

    void finish(const PrecisionContext& ctx, bool converged = true);
    void add_param(const std::string& name, const std::string& value) {
        params.emplace_back(name, value);
    }
    void add_param(const std::string& name, long long value) {
        params.emplace_back(name, std::to_string(value));
    }
    void add_param(const std::string& name, const Scalar& value) {
        params.emplace_back(name, to_decimal(value, digits ? digits : 60));
    }

    std::string to_json(int digits) const;
    std::string to_csv_row(int digits) const;
    std::string to_text(int digits) const;
    static std::string csv_header();
};

/// Wall-clock helper for filling elapsed_ms.
class Stopwatch {
  public:
    Stopwatch();
    double elapsed_ms() const;

  private:
    double start_;
};

}  // namespace atanforge
