// lamcalc: exact lambda-calculus (D_lambda / I_lambda) computer algebra CLI.
//
// Subcommands: expand, dlam, ilam, taylor, connect, eval, verify.
// Exit codes: 0 ok, 1 usage/domain error, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "lamcalc/lambda_binomial.hpp"
#include "lamcalc/lambda_ops.hpp"
#include "lamcalc/laurent_poly.hpp"
#include "lamcalc/qsymbols.hpp"
#include "lamcalc/taylor.hpp"
#include "lamcalc/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace lamcalc;

struct GlobalOpts {
    bool as_json = false;
    unsigned prec = 50;
    double tol = 1e-30;
    std::uint64_t seed = 42;
};

json poly_to_json(const LaurentPoly& p) {
    json obj = json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
    if (p.is_zero()) obj["0"] = "0";
    return obj;
}

json coeffs_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

void emit_ok(const GlobalOpts& g, const json& payload, const std::string& text) {
    if (g.as_json) {
        const json out = {{"status", "ok"}, {"payload", payload}, {"message", ""}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int emit_error(const GlobalOpts& g, const std::string& message) {
    if (g.as_json) {
        const json out = {{"status", "error"}, {"payload", nullptr}, {"message", message}};
        std::cout << out.dump() << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
    return 1;
}

TruncationConfig make_cfg(const GlobalOpts& g) {
    TruncationConfig cfg;
    cfg.precision_digits = g.prec;
    cfg.tol = g.tol;
    cfg.validate();
    return cfg;
}

// ---------------------------------------------------------------------------

int run_expand(const GlobalOpts& g, const std::string& a, const std::string& lambda,
               std::int64_t n) {
    const BasisSpec spec(Rational::parse(a), Rational::parse(lambda));
    const LaurentPoly p = lb_expand(spec, n);
    emit_ok(g, {{"poly", poly_to_json(p)}}, p.str());
    return 0;
}

int run_operator(const GlobalOpts& g, const std::string& poly, const std::string& lambda,
                 std::int64_t order, bool integral) {
    const LaurentPoly f = LaurentPoly::parse(poly);
    const OperatorContext ctx(Rational::parse(lambda));
    const LaurentPoly r =
        integral ? i_lambda_n(f, ctx, order) : d_lambda_n(f, ctx, order);
    emit_ok(g, {{"poly", poly_to_json(r)}}, r.str());
    return 0;
}

int run_taylor(const GlobalOpts& g, const std::string& poly, const std::string& a_text,
               const std::string& lambda_text, const std::string& method) {
    const LaurentPoly f = LaurentPoly::parse(poly);
    const Rational a = Rational::parse(a_text);
    const Rational lambda = Rational::parse(lambda_text);

    std::vector<Rational> coeffs;
    bool agree = true;
    bool ran_both = false;
    if (method == "system") {
        coeffs = taylor_via_system(f, a, lambda).coeffs;
    } else if (method == "connection") {
        coeffs = taylor_via_connection(f, a, lambda).coeffs;
    } else if (method == "both") {
        ran_both = true;
        coeffs = taylor_via_system(f, a, lambda).coeffs;
        agree = coeffs == taylor_via_connection(f, a, lambda).coeffs;
        if (!agree)
            throw std::logic_error("taylor: the two coefficient routes disagree");
    } else {
        throw std::invalid_argument("taylor: method must be system|connection|both");
    }

    json payload = {{"coeffs", coeffs_to_json(coeffs)}};
    std::string text = "coeffs: " + str(coeffs);
    if (ran_both) {
        payload["methods_agree"] = agree;
        text += "\nmethods_agree: ";
        text += agree ? "true" : "false";
    }
    emit_ok(g, payload, text);
    return 0;
}

int run_connect(const GlobalOpts& g, const std::string& family, std::int64_t n,
                const std::string& a_text, const std::string& b_text,
                const std::string& lambda_text) {
    const Rational a = Rational::parse(a_text);
    const Rational lambda = Rational::parse(lambda_text);

    ConnectionFamily fam;
    std::vector<Rational> printed;
    Rational b(0);
    if (family == "monomial") {
        fam = ConnectionFamily::monomial;
        printed = printed_monomial(n, a, lambda);
    } else if (family == "twopoint") {
        fam = ConnectionFamily::twopoint;
        if (b_text.empty())
            throw std::invalid_argument("connect: --b is required for twopoint");
        b = Rational::parse(b_text);
        printed = printed_two_point(n, a, b, lambda);
    } else if (family == "pochhammer") {
        fam = ConnectionFamily::pochhammer;
        printed = printed_pochhammer(n, a, lambda);
    } else if (family == "rs") {
        fam = ConnectionFamily::rogers_szego;
        printed = printed_rogers_szego(n, a, lambda);
    } else if (family == "sw") {
        fam = ConnectionFamily::stieltjes_wigert;
        printed = printed_stieltjes_wigert(n, a, lambda);
    } else {
        throw std::invalid_argument(
            "connect: family must be monomial|twopoint|pochhammer|rs|sw");
    }

    const LaurentPoly target = connection_target(fam, n, b, lambda);
    const std::vector<Rational> truth = taylor_via_connection(target, a, lambda).coeffs;

    json agree = json::array();
    std::string agree_text = "[";
    for (std::size_t k = 0; k < truth.size(); ++k) {
        const bool ok = k < printed.size() && truth[k] == printed[k];
        agree.push_back(ok);
        if (k) agree_text += ", ";
        agree_text += ok ? "true" : "false";
    }
    agree_text += "]";

    const json payload = {{"truth", coeffs_to_json(truth)},
                          {"paper", coeffs_to_json(printed)},
                          {"agree", agree}};
    const std::string text = "truth: " + str(truth) + "\npaper: " + str(printed) +
                             "\nagree: " + agree_text;
    emit_ok(g, payload, text);
    return 0;
}

int run_eval(const GlobalOpts& g, bool tol_explicit, const std::string& expr,
             const std::string& a_text, const std::string& lambda_text,
             const std::string& alpha_text, const std::string& x_text,
             const std::string& z_text, const std::string& q_text) {
    TruncationConfig cfg = make_cfg(g);
    // keep truncation error below the displayed digits unless the user
    // pinned a tolerance explicitly
    if (!tol_explicit)
        cfg.tol = std::max(std::min(cfg.tol, std::pow(10.0, -(double(g.prec) + 5.0))),
                           1e-300);
    const unsigned d = cfg.precision_digits;
    const auto need = [](const std::string& v, const char* flag) {
        if (v.empty())
            throw std::invalid_argument(std::string("eval: missing ") + flag);
        return v;
    };

    ComplexApprox value(Rational(0), d);
    if (expr == "binomial") {
        const BasisSpec spec(Rational::parse(need(a_text, "--a")),
                             Rational::parse(need(lambda_text, "--lambda")));
        value = lb_general(spec, ComplexApprox::parse_decimal(need(alpha_text, "--alpha"), d),
                           ComplexApprox::parse_decimal(need(x_text, "--x"), d), cfg);
    } else if (expr == "solE" || expr == "sole") {
        const Rational a = Rational::parse(need(a_text, "--a"));
        const Rational lambda = Rational::parse(need(lambda_text, "--lambda"));
        const ComplexApprox x = ComplexApprox::parse_decimal(need(x_text, "--x"), d);
        value = expr == "solE" ? solution_E(a, lambda, x, cfg)
                               : solution_e(a, lambda, x, cfg);
    } else if (expr == "eq" || expr == "Eq") {
        const ComplexApprox z = ComplexApprox::parse_decimal(need(z_text, "--z"), d);
        const ComplexApprox q = ComplexApprox::parse_decimal(need(q_text, "--q"), d);
        value = expr == "eq" ? e_q(z, q, cfg) : big_e_q(z, q, cfg);
    } else {
        throw std::invalid_argument("eval: expr must be binomial|solE|sole|eq|Eq");
    }

    emit_ok(g, {{"value", value.str()}, {"precision_digits", d}}, value.str());
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite, int trials, bool serial) {
    const TruncationConfig cfg = make_cfg(g);
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};

    const VerificationReport report = run_verification(
        names, trials, g.seed, cfg, serial ? RunMode::serial : RunMode::parallel);

    if (g.as_json) {
        json suites = json::array();
        for (const auto& s : report.suites) {
            json ces = json::array();
            for (const auto& c : s.counterexamples)
                ces.push_back({{"check", c.check},
                               {"trial", c.trial},
                               {"sub_seed", c.sub_seed},
                               {"inputs", c.inputs},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs}});
            suites.push_back({{"name", s.name},
                              {"trials", s.trials},
                              {"passes", s.passes},
                              {"failures", s.failures},
                              {"counterexamples", ces},
                              {"discrepancy_notes", s.discrepancy_notes}});
        }
        const json out = {{"status", report.all_passed() ? "ok" : "error"},
                          {"payload", {{"suites", suites}, {"all_passed", report.all_passed()}}},
                          {"message", report.all_passed() ? "" : "verification failed"}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << report.str();
    }
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of the operator pair f(x) -> f(lambda x)/x and its inverse"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("LAMCALC_PREC")) g.prec = std::strtoul(env, nullptr, 10);
    app.add_flag("--json", g.as_json, "emit a single JSON object");
    app.add_option("--prec", g.prec, "working precision in decimal digits (>= 15)");
    app.add_option("--tol", g.tol, "truncation tolerance for infinite products/series");
    app.add_option("--seed", g.seed, "seed for randomized verification");

    // expand
    auto* expand = app.add_subcommand("expand", "expand (x-a)_lambda^n");
    std::string ex_a, ex_lambda;
    std::int64_t ex_n = 0;
    expand->add_option("--a", ex_a, "basis point a (rational)")->required();
    expand->add_option("--lambda", ex_lambda, "lambda (rational, nonzero)")->required();
    expand->add_option("--n", ex_n, "power n >= 0")->required()
        ->check(CLI::NonNegativeNumber);

    // dlam / ilam
    auto* dlam = app.add_subcommand("dlam", "apply the derivative D_lambda");
    auto* ilam = app.add_subcommand("ilam", "apply the integral I_lambda");
    std::string op_poly, op_lambda;
    std::int64_t op_order = 1;
    for (auto* cmd : {dlam, ilam}) {
        cmd->add_option("--poly", op_poly, "Laurent polynomial, exp:coeff list")->required();
        cmd->add_option("--lambda", op_lambda, "lambda (rational, nonzero)")->required();
        cmd->add_option("--order", op_order, "how many times to apply (default 1)")
            ->check(CLI::NonNegativeNumber);
    }

    // taylor
    auto* taylor = app.add_subcommand("taylor", "expand f(x^-1) in the (x-a)_lambda basis");
    std::string ty_poly, ty_a, ty_lambda, ty_method = "both";
    taylor->add_option("--poly", ty_poly, "Laurent polynomial with exponents <= 0")->required();
    taylor->add_option("--a", ty_a, "expansion point a != 0 (rational)")->required();
    taylor->add_option("--lambda", ty_lambda, "lambda not in {0,1,-1}")->required();
    taylor->add_option("--method", ty_method, "system|connection|both (default both)");

    // connect
    auto* connect = app.add_subcommand("connect", "connection formulas into the basis");
    std::string cn_family, cn_a, cn_b, cn_lambda;
    std::int64_t cn_n = 0;
    connect->add_option("--family", cn_family, "monomial|twopoint|pochhammer|rs|sw")->required();
    connect->add_option("--n", cn_n, "degree n >= 0")->required()->check(CLI::NonNegativeNumber);
    connect->add_option("--a", cn_a, "expansion point a != 0 (rational)")->required();
    connect->add_option("--b", cn_b, "second point b (twopoint only)");
    connect->add_option("--lambda", cn_lambda, "lambda not in {0,1,-1}")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "high-precision numeric evaluation");
    std::string ev_expr, ev_a, ev_lambda, ev_alpha, ev_x, ev_z, ev_q;
    eval->add_option("--expr", ev_expr, "binomial|solE|sole|eq|Eq")->required();
    eval->add_option("--a", ev_a, "a (rational)");
    eval->add_option("--lambda", ev_lambda, "lambda (rational)");
    eval->add_option("--alpha", ev_alpha, "exponent alpha (decimal)");
    eval->add_option("--x", ev_x, "evaluation point (decimal)");
    eval->add_option("--z", ev_z, "series argument (decimal)");
    eval->add_option("--q", ev_q, "series base (decimal)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the property-verification suites");
    std::string vf_suite = "all";
    int vf_trials = 100;
    bool vf_serial = false;
    verify->add_option("--suite", vf_suite, "all|ops|qsym|binom|taylor|numeric");
    verify->add_option("--trials", vf_trials, "trials per suite (default 100)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--serial", vf_serial, "use the serial reference runner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints the message or help text
        return rc == 0 ? 0 : 1;     // flag errors map onto the error exit code
    }

    try {
        if (*expand) return run_expand(g, ex_a, ex_lambda, ex_n);
        if (*dlam) return run_operator(g, op_poly, op_lambda, op_order, false);
        if (*ilam) return run_operator(g, op_poly, op_lambda, op_order, true);
        if (*taylor) return run_taylor(g, ty_poly, ty_a, ty_lambda, ty_method);
        if (*connect) return run_connect(g, cn_family, cn_n, cn_a, cn_b, cn_lambda);
        if (*eval)
            return run_eval(g, app.count("--tol") > 0, ev_expr, ev_a, ev_lambda,
                            ev_alpha, ev_x, ev_z, ev_q);
        if (*verify) return run_verify(g, vf_suite, vf_trials, vf_serial);
    } catch (const std::exception& ex) {
        return emit_error(g, ex.what());
    }
    return emit_error(g, "no subcommand given");
}
