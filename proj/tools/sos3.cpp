#include "sos3/certificate.hpp"
#include "sos3/error.hpp"
#include "sos3/identity.hpp"
#include "sos3/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sos3;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("sos3");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* env = std::getenv("SOS3_LOG");
    std::string level = env ? env : "warn";
    auto lv = spdlog::level::from_str(level);
    if (lv == spdlog::level::off && level != "off") lv = spdlog::level::warn;
    spdlog::set_level(lv);
}

Rational rational_arg(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw InputError("--" + name + ": expected an exact rational literal, got '" + text + "'");
    }
}

FamilyParams family_args(const std::string& eta, const std::string& omega, const std::string& rho) {
    return FamilyParams{rational_arg("eta", eta), rational_arg("omega", omega), rational_arg("rho", rho)};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json check_json(const Check& c) {
    return json{{"id", c.id}, {"statement", c.statement}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}};
}

std::string check_line(const Check& c) {
    return std::string(c.pass ? "pass  " : "FAIL  ") + c.id + "  " + c.statement + "  [" + c.witness + "]\n";
}

// Curve and parsing context for the jac command.
struct CurveSetup {
    Curve curve;
    ParseContext ctx;
    std::string var;
    std::vector<std::pair<std::string, PolyY>> named_factors;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CurveSetup instance_curve(const FamilyParams& p) {
    FamilyInstance inst = build_family(p);
    const TildeData& td = instance_tilde(inst);
    CurveSetup cs{td.model.tilde_curve, {}, "s", {}};
    cs.ctx.yvar = "s";
    cs.ctx.symbols.emplace("d", PolyY(td.d));
    cs.ctx.symbols.emplace("B", PolyY(RatFunc(inst.B.inflate(2))));
    cs.ctx.symbols.emplace("C", PolyY(RatFunc(inst.C.inflate(2))));
    cs.ctx.symbols.emplace("g1", td.g1);
    cs.ctx.symbols.emplace("g2", td.g2);
    cs.ctx.symbols.emplace("g3", td.g3);
    cs.named_factors = {{"g1", td.g1}, {"g2", td.g2}, {"g3", td.g3}};
    return cs;
}

CurveSetup text_curve(const std::string& text, const std::string& var) {
    ParseContext ctx;
    ctx.yvar = var;
    PolyY f = parse_polyy(text, ctx);
    return CurveSetup{new_curve(f), ctx, var, {}};
}

std::string show_divisor(const MumfordDivisor& D, const CurveSetup& cs) {
    if (!cs.named_factors.empty() && !D.is_identity() && D.v().is_zero()) {
        std::size_t k = cs.named_factors.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            PolyY u(1);
            std::string name;
            for (std::size_t i = 0; i < k; ++i) {
                if (!(mask >> i & 1)) continue;
                u = u * cs.named_factors[i].second;
                name += (name.empty() ? "" : "*") + cs.named_factors[i].first;
            }
            if (u == D.u()) return "<" + name + " ; 0>";
        }
    }
    return D.str(cs.var);
}

int cmd_prove(const FamilyParams& p, const std::string& out, bool as_json) {
    spdlog::info("prove eta={} omega={} rho={}", to_string(p.eta), to_string(p.omega), to_string(p.rho));
    Certificate cert = prove_not_sos3(p);
    std::string doc = cert.to_json();
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        f << doc;
        spdlog::info("certificate written to {}", out);
    }
    if (as_json) {
        std::cout << doc;
    } else {
        for (const auto* c : cert.failures()) std::cout << check_line(*c);
        std::cout << cert.summary() << "\n";
    }
    return cert.verdict == Verdict::proved ? kOk : kNegative;
}

int cmd_check(const std::string& group, const FamilyParams& p, bool as_json) {
    FamilyInstance inst = build_family(p);
    std::vector<Check> checks;
    if (group == "positivity") {
        checks = check_positivity(inst);
    } else if (group == "nonvanishing") {
        checks = check_nonvanishing(inst);
    } else if (group == "nonsquares") {
        checks = check_nonsquares(inst);
    } else if (group == "torsion") {
        checks = torsion_certificate(inst);
    } else if (group == "descent") {
        std::vector<Check> prior = check_positivity(inst);
        for (auto& c : check_nonvanishing(inst)) prior.push_back(c);
        for (auto& c : check_nonsquares(inst)) prior.push_back(c);
        checks = descent_certificate(inst, prior);
    } else {
        throw InputError("unknown group '" + group + "'");
    }
    bool all = true;
    json arr = json::array();
    std::string text;
    for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back(check_json(c));
        text += check_line(c);
    }
    text += std::string(all ? "ALL PASS" : "SOME FAIL") + "\n";
    emit(as_json, json{{"group", group}, {"all_pass", all}, {"checks", arr}}, text);
    return all ? kOk : kNegative;
}

int cmd_jac(const CurveSetup& cs, const std::string& op, const std::vector<std::string>& args, bool as_json) {
    auto divisor = [&](std::size_t i) {
        if (i >= args.size()) throw InputError("missing divisor operand");
        return parse_divisor(args[i], cs.curve, cs.ctx);
    };
    MumfordDivisor r = identity(cs.curve);
    if (op == "add") {
        r = cantor_add(divisor(0), divisor(1));
    } else if (op == "neg") {
        r = negate(divisor(0));
    } else if (op == "reduce") {
        r = reduce(divisor(0));
    } else if (op == "mul") {
        if (args.empty()) throw InputError("mul needs an integer and a divisor");
        long n;
        try {
            std::size_t used = 0;
            n = std::stol(args[0], &used);
            if (used != args[0].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("mul: expected an integer, got '" + args[0] + "'");
        }
        r = scalar_mul(n, divisor(1));
    } else {
        throw InputError("unknown jac operation '" + op + "'");
    }
    std::string shown = show_divisor(r, cs);
    emit(as_json, json{{"result", shown}, {"u", r.u().str(cs.var)}, {"v", r.v().str(cs.var)}}, shown + "\n");
    return kOk;
}

int cmd_xi(const std::vector<std::string>& factor_text, const std::vector<std::size_t>& certify,
           const std::string& var, const std::string& divisor_text, bool as_json) {
    ParseContext ctx;
    ctx.yvar = var;
    std::vector<PolyY> factors;
    PolyY f(1);
    for (const auto& t : factor_text) {
        factors.push_back(parse_polyy(t, ctx));
        f = f * factors.back();
    }
    std::vector<bool> cert(factors.size(), false);
    for (auto i : certify) {
        if (i < 1 || i > factors.size()) throw InputError("--certify index out of range");
        cert[i - 1] = true;
    }
    Curve c = new_curve(f);
    auto sc = SchaeferContext::make(c, factors, cert);
    MumfordDivisor D = parse_divisor(divisor_text, c, ctx);
    ClassTuple t = xi(D, sc);
    json comps = json::array();
    for (const auto& k : t.components) comps.push_back(k.str());
    bool tors = xi_is_2torsion_image(t, sc);
    emit(as_json, json{{"xi", comps}, {"norm_trivial", t.norm_trivial()}, {"two_torsion_image", tors}},
         t.str() + "\nnorm trivial: " + (t.norm_trivial() ? "yes" : "no") +
             "\nimage of 2-torsion: " + (tors ? "yes" : "no") + "\n");
    return kOk;
}

int cmd_richelot(const std::vector<std::string>& g, const std::string& var, bool as_json) {
    if (g.size() != 3) throw InputError("richelot needs three quadratics");
    ParseContext ctx;
    ctx.yvar = var;
    RichelotDual r = richelot_dual(parse_polyy(g[0], ctx), parse_polyy(g[1], ctx), parse_polyy(g[2], ctx));
    json j{{"delta", r.delta.str()}, {"L1", r.L1.str(var)}, {"L2", r.L2.str(var)}, {"L3", r.L3.str(var)}};
    emit(as_json, j,
         "delta = " + r.delta.str() + "\nL1 = " + r.L1.str(var) + "\nL2 = " + r.L2.str(var) + "\nL3 = " +
             r.L3.str(var) + "\n");
    return kOk;
}

int cmd_identity(bool symbolic, const std::vector<std::string>& abc, bool as_json) {
    IdentityResult res;
    if (symbolic) {
        res = verify_sos3_identity_symbolic();
    } else {
        if (abc.size() != 3) throw InputError("identity needs alpha beta gamma, or --symbolic");
        res = verify_sos3_identity(rational_arg("alpha", abc[0]), rational_arg("beta", abc[1]),
                                   rational_arg("gamma", abc[2]));
    }
    emit(as_json, json{{"holds", res.holds}, {"mismatch", res.mismatch}},
         res.holds ? "IDENTITY HOLDS\n" : "IDENTITY FAILS at " + res.mismatch + "\n");
    return res.holds ? kOk : kNegative;
}

int cmd_psd(const std::string& text, bool as_json) {
    RatFunc f = parse_ratfunc(text);
    bool psd = is_psd(f);
    std::string cls = f.is_zero() ? "0" : square_class(f).str();
    emit(as_json, json{{"psd", psd}, {"square_class", cls}}, std::string(psd ? "PSD" : "NOT PSD") + "  [" + cls + "]\n");
    return psd ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Exact certificates for sums of three squares over R(x)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output")->trigger_on_parse();

    std::string eta, omega, rho, out;
    auto* prove = app.add_subcommand("prove", "Run the full pipeline and emit a certificate");
    prove->add_option("--eta", eta)->required();
    prove->add_option("--omega", omega)->required();
    prove->add_option("--rho", rho)->required();
    prove->add_option("--out", out, "Write the JSON certificate here");
    prove->add_flag("--json", as_json);

    std::string group;
    auto* check = app.add_subcommand("check", "Run one group of checks");
    check->add_option("group", group, "positivity | nonvanishing | nonsquares | torsion | descent")->required();
    check->add_option("--eta", eta)->required();
    check->add_option("--omega", omega)->required();
    check->add_option("--rho", rho)->required();
    check->add_flag("--json", as_json);

    std::string curve_text, curve_file, var = "y", op;
    std::vector<std::string> operands;
    auto* jac = app.add_subcommand("jac", "Jacobian arithmetic: add, neg, mul, reduce");
    jac->add_option("--curve", curve_text, "f in the curve variable");
    jac->add_option("--curve-file", curve_file, "File holding f");
    jac->add_option("--var", var, "Curve variable (default y)");
    jac->add_option("--eta", eta, "Use the genus-3 model of this instance (variable s)");
    jac->add_option("--omega", omega);
    jac->add_option("--rho", rho);
    jac->add_option("op", op)->required();
    jac->add_option("operands", operands)->required();
    jac->add_flag("--json", as_json);

    std::vector<std::string> factors;
    std::vector<std::size_t> certify;
    std::string divisor;
    auto* xic = app.add_subcommand("xi", "Schaefer map image of a divisor");
    xic->add_option("--factor", factors, "Monic irreducible factor of f (repeat)")->required();
    xic->add_option("--certify", certify, "1-based index of a factor vouched irreducible");
    xic->add_option("--var", var);
    xic->add_option("divisor", divisor)->required();
    xic->add_flag("--json", as_json);

    std::vector<std::string> quads;
    auto* rich = app.add_subcommand("richelot", "Richelot dual of G1 G2 G3");
    rich->add_option("G", quads)->required()->expected(3);
    rich->add_option("--var", var);
    rich->add_flag("--json", as_json);

    bool symbolic = false;
    std::vector<std::string> abc;
    auto* ident = app.add_subcommand("identity", "Check the three-square identity");
    ident->add_flag("--symbolic", symbolic);
    ident->add_option("values", abc, "alpha beta gamma");
    ident->add_flag("--json", as_json);

    std::string psd_text;
    auto* psd = app.add_subcommand("psd", "Decide whether f in Q(x) is nonnegative on R");
    psd->add_option("f", psd_text)->required();
    psd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*prove) return cmd_prove(family_args(eta, omega, rho), out, as_json);
        if (*check) return cmd_check(group, family_args(eta, omega, rho), as_json);
        if (*jac) {
            int sources = !curve_text.empty() + !curve_file.empty() + !eta.empty();
            if (sources != 1) throw InputError("jac needs exactly one of --curve, --curve-file, --eta/--omega/--rho");
            CurveSetup cs = !eta.empty()   ? instance_curve(family_args(eta, omega, rho))
                            : !curve_file.empty() ? text_curve(read_file(curve_file), var)
                                                  : text_curve(curve_text, var);
            return cmd_jac(cs, op, operands, as_json);
        }
        if (*xic) return cmd_xi(factors, certify, var, divisor, as_json);
        if (*rich) return cmd_richelot(quads, var, as_json);
        if (*ident) return cmd_identity(symbolic, abc, as_json);
        if (*psd) return cmd_psd(psd_text, as_json);
    } catch (const InputError& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    } catch (const Error& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    }
    return kInputError;
}
