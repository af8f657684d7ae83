#include "atanforge/registry.hpp"

#include "atanforge/dirichlet_grid.hpp"
#include "atanforge/elliptic.hpp"
#include "atanforge/finite_identities.hpp"
#include "atanforge/infinite_series.hpp"
#include "atanforge/lemma_kernels.hpp"
#include "atanforge/number_theory.hpp"

namespace atanforge {

namespace {

long get_int(const ParamMap& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing parameter --" + name);
    return parse_int(it->second);
}

Scalar get_scalar(const ParamMap& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing parameter --" + name);
    return parse_scalar(it->second);
}

Scalar get_scalar_or(const ParamMap& p, const std::string& name, const Scalar& dflt) {
    auto it = p.find(name);
    return it == p.end() ? dflt : parse_scalar(it->second);
}

std::string get_str_or(const ParamMap& p, const std::string& name, const std::string& dflt) {
    auto it = p.find(name);
    return it == p.end() ? dflt : it->second;
}

IdentityReport series_report(const std::string& id, const std::string& anchor,
                             const SeriesOutcome& s, const Scalar& rhs,
                             const PrecisionContext& ctx, Stopwatch& sw) {
    IdentityReport r;
    r.identity = id;
    r.paper_anchor = anchor;
    r.digits = ctx.digits;
    r.lhs = s.value;
    r.rhs = rhs;
    r.terms_used = s.terms_used;
    r.tail_bound = s.tail_bound;
    r.finish(ctx, s.converged);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

IdentityReport pair_eval(const std::string& kind, const ParamMap& p,
                         const PrecisionContext& ctx) {
    ReciprocalParams rp;
    rp.n = get_int(p, "n");
    rp.m = get_int(p, "m");
    rp.alpha = get_scalar(p, "alpha");
    if (rp.alpha <= 0) throw std::invalid_argument("alpha must be > 0");
    if (kind == "th1") return th1_residual(rp, ctx);
    if (kind == "th1-chi4") return th1_chi4_form_residual(rp, ctx);
    if (kind == "th2") return th2_residual(rp, ctx);
    AngleParams ang{get_scalar(p, "theta"), get_scalar(p, "phi")};
    return th3_residual(rp, ang, ctx);
}

IdentityReport exact_report(const std::string& id, const std::string& anchor,
                            long long got, long long want, const ParamMap& p,
                            const PrecisionContext& ctx, Stopwatch& sw) {
    IdentityReport r;
    r.identity = id;
    r.paper_anchor = anchor;
    r.digits = ctx.digits;
    for (const auto& [k, v] : p) r.add_param(k, v);
    r.lhs = got;
    r.rhs = want;
    r.residual = r.lhs - r.rhs;
    r.status = got == want ? Status::Pass : Status::Fail;
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

IdentityReport lemma_pair_report(const std::string& id, const std::string& anchor,
                                 const std::pair<Scalar, Scalar>& sides, const ParamMap& p,
                                 const PrecisionContext& ctx, Stopwatch& sw) {
    IdentityReport r;
    r.identity = id;
    r.paper_anchor = anchor;
    r.digits = ctx.digits;
    for (const auto& [k, v] : p) r.add_param(k, v);
    r.lhs = sides.first;
    r.rhs = sides.second;
    r.finish(ctx);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

std::vector<IdentityInfo> build_registry() {
    using P = ParamSpec;
    std::vector<IdentityInfo> reg;

    auto add = [&reg](std::string id, std::string anchor, std::vector<ParamSpec> params,
                      std::function<IdentityReport(const ParamMap&, const PrecisionContext&)> f) {
        reg.push_back({std::move(id), std::move(anchor), std::move(params), std::move(f)});
    };

    P n_int{"n", P::Int, "order"};
    P m_int{"m", P::Int, "order"};
    P alpha{"alpha", P::Real, "scale parameter (> 0)"};
    P theta{"theta", P::Real, "angle in (0, pi/2)"};
    P phi{"phi", P::Real, "angle in (0, pi/2)"};

    add("th1", "Theorem 1", {n_int, m_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) { return pair_eval("th1", p, c); });
    add("th1-chi4", "Theorem 1, rearranged form", {n_int, m_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) { return pair_eval("th1-chi4", p, c); });
    add("th2", "Theorem 2", {n_int, m_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) { return pair_eval("th2", p, c); });
    add("th3", "Theorem 3", {n_int, m_int, alpha, theta, phi},
        [](const ParamMap& p, const PrecisionContext& c) { return pair_eval("th3", p, c); });

    add("cor1", "Corollary after Theorem 1", {n_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            long n = get_int(p, "n");
            IdentityReport r;
            r.identity = "cor1";
            r.paper_anchor = "Corollary after Theorem 1";
            r.digits = c.digits;
            r.add_param("n", (long long)n);
            r.lhs = th1_half_sum(n, n, Scalar(1));
            r.rhs = const_pi() / 8;
            r.finish(c);
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("cor2", "Corollary after Theorem 2", {n_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            long n = get_int(p, "n");
            IdentityReport r;
            r.identity = "cor2";
            r.paper_anchor = "Corollary after Theorem 2";
            r.digits = c.digits;
            r.add_param("n", (long long)n);
            r.lhs = th2_half_sum(n, n, Scalar(1));
            r.rhs = -const_pi() / 12;
            r.finish(c);
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("cor3", "Corollary after Theorem 3", {n_int, theta},
        [](const ParamMap& p, const PrecisionContext& c) {
            return cor3_sum(get_int(p, "n"), get_scalar(p, "theta"), c);
        });
    add("complex-gen", "final display (unproved)", {n_int, m_int, alpha, theta, phi},
        [](const ParamMap& p, const PrecisionContext& c) {
            return complex_generalization_residual(get_int(p, "n"), get_int(p, "m"),
                                                   get_scalar(p, "alpha"), get_scalar(p, "theta"),
                                                   get_scalar(p, "phi"), c);
        });

    add("glaisher", "Eq (1)", {{"mode", P::Choice, "direct|telescoped"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            std::string mode = get_str_or(p, "mode", "telescoped");
            if (mode != "direct" && mode != "telescoped")
                throw std::invalid_argument("mode must be direct or telescoped");
            auto s = glaisher_sum(mode == "direct" ? SumMode::Direct : SumMode::Telescoped, c);
            auto r = series_report("glaisher", "Eq (1)", s, const_pi() / 2, c, sw);
            r.add_param("mode", mode);
            return r;
        });
    add("fibonacci", "Eq (2)", {},
        [](const ParamMap&, const PrecisionContext& c) {
            Stopwatch sw;
            auto s = fibonacci_arctan_sum(c);
            auto r = series_report("fibonacci", "Eq (2)", s, atan((sqrt(Scalar(5)) - 1) / 2), c, sw);
            r.notes.push_back("sum starts at n=1: the printed n=0 lower index is an erratum (F_0 = 0)");
            return r;
        });
    add("bragg", "Eq (3)", {{"x", P::Real, "x > 0"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            Scalar x = get_scalar(p, "x");
            auto s = bragg_sum(x, c);
            auto r = series_report("bragg", "Eq (3)", s, 3 * const_pi() / 4 - atan(exp(x)), c, sw);
            r.add_param("x", x);
            r.notes.push_back("sum starts at n=1; the printed n=0 start is off by arctan(sinh x)");
            return r;
        });
    add("modular-chi4", "Eq (5)", {alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            return modular_chi4_pair(get_scalar(p, "alpha"), c);
        });
    add("cais", "Eq (6)", {alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            return cais_pair(get_scalar(p, "alpha"), c);
        });
    add("modular3", "Eq (modular3)", {alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            return modular3_pair(get_scalar(p, "alpha"), c);
        });
    add("theta-pair", "display before Theorem 3", {alpha, theta, phi},
        [](const ParamMap& p, const PrecisionContext& c) {
            return theta_transform_pair(get_scalar(p, "alpha"), get_scalar(p, "theta"),
                                        get_scalar(p, "phi"), c);
        });
    add("eq4", "Eq (4)", {{"k", P::Real, "elliptic modulus in (0,1)"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            Scalar k = get_scalar(p, "k");
            auto bundle = elliptic_bundle(k, c);
            auto s = modular_angle_series(bundle, c);
            auto r = series_report("eq4", "Eq (4)", s, asin(k) / 4, c, sw);
            r.add_param("k", k);
            r.add_param("q", bundle.q);
            return r;
        });

    P j_int{"j", P::Int, "summation index"};
    add("lemma1", "Lemma 1", {n_int, m_int, j_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return lemma_pair_report("lemma1", "Lemma 1",
                                     lemma1_pair(get_int(p, "n"), get_int(p, "m"),
                                                 get_int(p, "j"), get_scalar(p, "alpha")),
                                     p, c, sw);
        });
    add("lemma2", "Lemma 2", {n_int, m_int, j_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return lemma_pair_report("lemma2", "Lemma 2",
                                     lemma2_pair(get_int(p, "n"), get_int(p, "m"),
                                                 get_int(p, "j"), get_scalar(p, "alpha")),
                                     p, c, sw);
        });
    add("lemma3", "Lemma 3", {n_int, m_int, j_int, alpha},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return lemma_pair_report("lemma3", "Lemma 3",
                                     lemma3_pair(get_int(p, "n"), get_int(p, "m"),
                                                 get_int(p, "j"), get_scalar(p, "alpha")),
                                     p, c, sw);
        });
    add("lemma4", "Lemma 4", {n_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            long n = get_int(p, "n");
            return exact_report("lemma4", "Lemma 4", alternating_sum_check(n),
                                n % 2 == 0 ? 1 : -1, p, c, sw);
        });
    add("lemma5", "Lemma 5", {{"z", P::Real, "real evaluation point"}, m_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return lemma_pair_report("lemma5", "Lemma 5",
                                     lemma5_pair(get_scalar(p, "z"), get_int(p, "m")), p, c, sw);
        });
    add("lemma6", "Lemma 6", {{"z", P::Real, "z > 0"}, n_int, m_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            IdentityReport r;
            r.identity = "lemma6";
            r.paper_anchor = "Lemma 6";
            r.digits = c.digits;
            for (const auto& [k, v] : p) r.add_param(k, v);
            r.lhs = lemma6_residual(get_scalar(p, "z"), get_int(p, "n"), get_int(p, "m"));
            r.rhs = 0;
            r.finish(c);
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("lemma7", "Lemma 7", {{"z", P::Real, "real, z != +-1"}, m_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return lemma_pair_report("lemma7", "Lemma 7",
                                     lemma7_pair(get_scalar(p, "z"), get_int(p, "m")), p, c, sw);
        });
    add("lemma8", "Lemma 8", {{"z", P::Real, "z > 0 away from poles"}, n_int, m_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            IdentityReport r;
            r.identity = "lemma8";
            r.paper_anchor = "Lemma 8";
            r.digits = c.digits;
            for (const auto& [k, v] : p) r.add_param(k, v);
            r.lhs = lemma8_residual(get_scalar(p, "z"), get_int(p, "n"), get_int(p, "m"), c);
            r.rhs = 0;
            r.finish(c);
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("lemma9", "Lemma 9", {{"s", P::Real, "lower integration limit"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            Scalar s = get_scalar(p, "s");
            Scalar quad_tol = pow(Scalar(10), -25);
            auto t = lemma9_triple(s, quad_tol);
            IdentityReport r;
            r.identity = "lemma9";
            r.paper_anchor = "Lemma 9";
            r.digits = c.digits;
            r.add_param("s", s);
            r.lhs = t.closed_form_atan;
            r.rhs = t.closed_form_exp;
            r.finish(c, t.quadrature_converged);
            Scalar quad_gap = abs(t.integral - t.closed_form_exp);
            r.notes.push_back("quadrature leg = " + to_decimal(t.integral, c.digits) +
                              ", |quad - closed| = " + to_decimal(quad_gap, 5));
            if (r.status == Status::Pass && quad_gap > pow(Scalar(10), -24))
                r.status = Status::Fail;
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("lemma10", "Lemma 10", {n_int},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return exact_report("lemma10", "Lemma 10",
                                legendre3_partial_sum(get_int(p, "n")), 1, p, c, sw);
        });

    add("symmetric-form", "symmetric reduction of Theorem 3", {n_int, m_int, alpha, theta, phi},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            IdentityReport r;
            r.identity = "symmetric-form";
            r.paper_anchor = "symmetric reduction of Theorem 3";
            r.digits = c.digits;
            for (const auto& [k, v] : p) r.add_param(k, v);
            r.lhs = th3_symmetric_form_residual(get_int(p, "n"), get_int(p, "m"),
                                                get_scalar(p, "alpha"), get_scalar(p, "theta"),
                                                get_scalar(p, "phi"));
            r.rhs = 0;
            r.finish(c);
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });
    add("sign-count", "tan sign tally", {n_int, phi},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            return exact_report("sign-count", "tan sign tally",
                                sign_count_check(get_int(p, "n"), get_scalar(p, "phi")), 1, p, c,
                                sw);
        });

    add("dirichlet", "grid identity",
        {n_int, m_int, {"x", P::Int, "1 <= x <= n"}, {"y", P::Int, "1 <= y <= m"},
         {"a", P::Real, "anisotropy parameter (default 1)"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            GridSpec spec;
            spec.n = get_int(p, "n");
            spec.m = get_int(p, "m");
            spec.aniso_alpha = get_scalar_or(p, "a", Scalar(1));
            return dirichlet_identity_residual(spec, get_int(p, "x"), get_int(p, "y"), c);
        });
    add("dirichlet-closed", "grid closed form",
        {n_int, {"x", P::Int, "1 <= x <= n"}},
        [](const ParamMap& p, const PrecisionContext& c) {
            Stopwatch sw;
            long n = get_int(p, "n"), x = get_int(p, "x");
            auto res = closed_form_sum(n, x, c);
            IdentityReport r;
            r.identity = "dirichlet-closed";
            r.paper_anchor = "grid closed form";
            r.digits = c.digits;
            r.add_param("n", (long long)n);
            r.add_param("x", (long long)x);
            r.lhs = res.sum;
            r.rhs = res.expected;
            r.finish(c);
            r.notes.push_back("printed right side -x^2/n = " + to_decimal(res.printed_value, c.digits) +
                              (res.matches_printed ? " (matched)" : " (not matched; -x^2/(2n) is the verified constant)"));
            r.elapsed_ms = sw.elapsed_ms();
            return r;
        });

    return reg;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> reg = build_registry();
    return reg;
}

const IdentityInfo* find_identity(const std::string& id) {
    for (const auto& info : identity_registry())
        if (info.id == id) return &info;
    return nullptr;
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric value");
    // small convenience grammar: [coef] (pi|e) [/den], num/den, sqrt(x)
    auto parse_simple = [](const std::string& s) -> Scalar {
        if (s == "pi") return const_pi();
        if (s == "e") return const_e();
        if (s.rfind("sqrt(", 0) == 0 && s.back() == ')')
            return sqrt(Scalar(s.substr(5, s.size() - 6)));
        return Scalar(s);
    };
    auto slash = text.find('/');
    try {
        std::string head = slash == std::string::npos ? text : text.substr(0, slash);
        Scalar value;
        auto pi_pos = head.find("pi");
        if (pi_pos != std::string::npos) {
            std::string coef = head.substr(0, pi_pos);
            value = (coef.empty() ? Scalar(1) : Scalar(coef)) * const_pi();
        } else {
            value = parse_simple(head);
        }
        if (slash != std::string::npos) {
            Scalar den = parse_simple(text.substr(slash + 1));
            if (den == 0) throw std::runtime_error("zero denominator");
            value /= den;
        }
        if (!boost::multiprecision::isfinite(value))
            throw std::runtime_error("non-finite value");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid numeric value: " + text);
    }
}

long parse_int(const std::string& text) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer: " + text);
    }
    if (pos != text.size()) throw std::invalid_argument("invalid integer: " + text);
    return v;
}

}  // namespace atanforge
