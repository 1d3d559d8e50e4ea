// Command-line front end: exact mod-p Satake images, Table 1 rows,
// unipotent-subgroup cohomology with its Hecke matrices, the character
// delta, and the full verification suite with golden-file comparison.
//
// Exit codes: 0 success, 1 check failure, 2 invalid configuration.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modp/json_io.hpp"
#include "modp/verify.hpp"

namespace fs = std::filesystem;
using namespace modp;

namespace {

struct Options {
    long p = 3;
    long ext_degree = 1;
    long r = 0;
    long e = 0;
    std::string lambda = "1";
    std::string chi;
    std::string chi1, chi2;
    std::string op = "phi";
    int degree = 0;
    long depth = -1;
    std::string format = "text";
    unsigned seed = 12345;
    std::string type;
    bool all = false;
    std::string goldens_mode = "check";
};

FieldElement parse_coeff_list(const Field& F, const std::string& s) {
    std::vector<long> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stol(item));
    coeffs.resize(F->degree(), 0);
    return F->element(coeffs);
}

// "LAMBDA;E" with LAMBDA a comma-separated coefficient list.
PadicCharacter parse_character(const Field& F, const std::string& s) {
    auto semi = s.find(';');
    std::string lam = semi == std::string::npos ? s : s.substr(0, semi);
    long e = semi == std::string::npos ? 0 : std::stol(s.substr(semi + 1));
    return PadicCharacter(parse_coeff_list(F, lam), e);
}

// "phi", "phi^n", or "c0+c1*phi+c2*phi^2+..." with integer coefficients.
HeckePoly parse_op(const Field& F, const std::string& s) {
    auto parse_term = [&](const std::string& t, HeckePoly& q) {
        long coeff = 1, power = 0;
        std::string body = t;
        auto star = body.find('*');
        if (star != std::string::npos) {
            coeff = std::stol(body.substr(0, star));
            body = body.substr(star + 1);
        }
        if (body.rfind("phi", 0) == 0) {
            power = 1;
            if (body.size() > 3 && body[3] == '^') power = std::stol(body.substr(4));
        } else {
            coeff = std::stol(body);
        }
        if ((long)q.coeffs.size() <= power) q.coeffs.resize(power + 1, F->zero());
        q.coeffs[power] = q.coeffs[power] + F->from_int(coeff);
    };
    HeckePoly q;
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+'))
        if (!term.empty()) parse_term(term, q);
    detail::require(!q.coeffs.empty(), "empty operator");
    return q;
}

int cmd_satake(const Options& opt) {
    Field F = FieldSpec::make(opt.p, opt.ext_degree);
    Weight w(F, opt.r, opt.e);
    HeckePoly q = parse_op(F, opt.op);
    std::optional<long> depth;
    if (opt.depth >= 0) depth = opt.depth;
    HeckeLaurent out = opt.degree == 0 ? satake0(q, w, depth) : satake1(q, w, depth);
    if (opt.format == "json")
        std::cout << to_json(out).dump() << "\n";
    else
        std::cout << out.str() << "\n";
    return 0;
}

int cmd_table1(const Options& opt) {
    Field F = FieldSpec::make(opt.p, opt.ext_degree);
    std::vector<std::pair<std::string, JacquetResult>> rows;
    auto add = [&](const IrreducibleLabel& l) {
        rows.emplace_back(row_name(l.type), table1(l));
    };
    if (opt.all) {
        PadicCharacter one = PadicCharacter::trivial(F);
        add(IrreducibleLabel::character(one));
        add(IrreducibleLabel::special(one));
        if (opt.p > 2)
            add(IrreducibleLabel::principal(one, PadicCharacter::omega(F)));
        else {
            detail::require(F->degree() >= 2,
                            "p = 2 principal rows need --ext-degree >= 2 for distinct characters");
            add(IrreducibleLabel::principal(one, PadicCharacter::mu(F->gen())));
        }
        add(IrreducibleLabel::supersingular(std::min((long)1, opt.p - 1), one));
    } else {
        detail::require(!opt.type.empty(), "need --all or --type");
        PadicCharacter chi = parse_character(F, opt.chi.empty() ? "1" : opt.chi);
        if (opt.type == "character")
            add(IrreducibleLabel::character(chi));
        else if (opt.type == "special")
            add(IrreducibleLabel::special(chi));
        else if (opt.type == "principal")
            add(IrreducibleLabel::principal(parse_character(F, opt.chi1),
                                            parse_character(F, opt.chi2)));
        else if (opt.type == "supersingular")
            add(IrreducibleLabel::supersingular(opt.r, chi));
        else if (opt.type == "presentation")
            // L(U, V(r, lambda, chi)) for an arbitrary eigenvalue lambda
            rows.emplace_back("V(r,lambda,chi)",
                              jacquet_of_presentation(
                                  F, opt.r, parse_coeff_list(F, opt.lambda), chi));
        else
            throw std::invalid_argument("unknown row type: " + opt.type);
    }
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& [name, r] : rows)
            out.push_back(json{{"type", name},
                               {"L^-1", r.Lm1 ? to_json(*r.Lm1) : json(0)},
                               {"L^0", r.L0 ? to_json(*r.L0) : json(0)}});
        std::cout << out.dump() << "\n";
    } else {
        auto pad = [](const std::string& s, size_t width) {
            size_t glyphs = 0;
            for (unsigned char c : s)
                if ((c & 0xC0) != 0x80) ++glyphs;
            return s + std::string(glyphs < width ? width - glyphs : 1, ' ');
        };
        std::cout << "type              | L^-1(U,V)            | L^0(U,V)\n";
        std::cout << "------------------+----------------------+----------------------\n";
        for (const auto& [name, r] : rows)
            std::cout << pad(name, 18) << "| " << pad(render_torus_character(r.Lm1), 21)
                      << "| " << render_torus_character(r.L0) << "\n";
    }
    return 0;
}

int cmd_cohomology(const Options& opt) {
    Field F = FieldSpec::make(opt.p, opt.ext_degree);
    Weight w(F, opt.r, opt.e);
    SmoothModule M = weight_module(w);
    OracleDims od = cocycle_oracle(M);
    json out;
    out["weight"] = to_json(w);
    out["h0_dim"] = h0_dim(M);
    out["h1_dim"] = h1_dim(M);
    out["oracle"] = json{{"h0", od.h0}, {"h1", od.h1}, {"quotient_exponent", od.quotient_exponent}};
    json hk = json::object();
    long c = 1;
    for (long a = 2; a < opt.p; ++a) {
        bool prim = true;
        long pw = a % opt.p;
        for (long i = 1; i < opt.p - 2; ++i) {
            pw = (pw * a) % opt.p;
            if (pw == 1) { prim = false; break; }
        }
        if (prim) { c = a; break; }
    }
    // a weight only carries the K-action, so the Hecke generators here are
    // the unit-diagonal ones and the central p
    std::vector<std::pair<std::string, GMatrix>> gens = {
        {"diag(p,p)", GMatrix::central(PScalar::p_power(opt.p, 1))}};
    if (opt.p > 2) {
        gens.emplace_back("diag(c,1)", GMatrix::diag(PScalar(opt.p, c), PScalar::one(opt.p)));
        gens.emplace_back("diag(1,c)", GMatrix::diag(PScalar::one(opt.p), PScalar(opt.p, c)));
    }
    for (const auto& [name, g] : gens)
        hk[name] = json{{"H0", to_json(hecke(g, M, 0))}, {"H1", to_json(hecke(g, M, 1))}};
    out["hecke"] = hk;
    if (opt.p > 2) out["primitive_root"] = c;
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_delta(const Options& opt) {
    Field F = FieldSpec::make(opt.p, opt.ext_degree);
    json out = json::object();
    for (long u = 1; u < opt.p; ++u) {
        GMatrix l = GMatrix::diag(PScalar(opt.p, u), PScalar::one(opt.p));
        GMatrix r = GMatrix::diag(PScalar::one(opt.p), PScalar(opt.p, u));
        out["diag(" + std::to_string(u) + ",1)"] = to_json(delta_from_cohomology(l, F));
        out["diag(1," + std::to_string(u) + ")"] = to_json(delta_from_cohomology(r, F));
    }
    out["diag(p,1)"] = to_json(delta_from_cohomology(
        GMatrix::diag(PScalar::p_power(opt.p, 1), PScalar::one(opt.p)), F));
    out["diag(1,p)"] = to_json(delta_from_cohomology(
        GMatrix::diag(PScalar::one(opt.p), PScalar::p_power(opt.p, 1)), F));
    std::cout << out.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// Goldens
// ---------------------------------------------------------------------------

fs::path goldens_dir() {
    if (const char* env = std::getenv("MODP_SATAKE_GOLDENS")) return fs::path(env);
    return fs::path("goldens");
}

int goldens_write() {
    fs::path dir = goldens_dir();
    for (const auto& [rel, content] : golden_corpus()) {
        fs::path path = dir / rel;
        fs::create_directories(path.parent_path());
        std::ofstream os(path, std::ios::binary);
        os << content;
    }
    std::cout << "wrote goldens under " << dir.string() << "\n";
    return 0;
}

bool goldens_check(std::string* detail) {
    fs::path dir = goldens_dir();
    if (!fs::exists(dir)) {
        *detail = "golden directory " + dir.string() + " not found";
        return false;
    }
    for (const auto& [rel, content] : golden_corpus()) {
        fs::path path = dir / rel;
        std::ifstream is(path, std::ios::binary);
        if (!is) {
            *detail = "missing golden " + path.string();
            return false;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        if (buf.str() != content) {
            *detail = "golden mismatch at " + path.string();
            return false;
        }
    }
    return true;
}

int cmd_verify(const Options& opt) {
    bool all_ok = true;
    for (const auto& r : run_acceptance(opt.seed)) {
        std::printf("[%s] %2d. %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.index,
                    r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        all_ok = all_ok && r.passed;
    }
    if (opt.goldens_mode == "write") {
        goldens_write();
    } else if (opt.goldens_mode == "check") {
        std::string detail;
        bool ok = goldens_check(&detail);
        std::printf("[%s] 12. golden files byte-identical%s%s\n", ok ? "PASS" : "FAIL",
                    detail.empty() ? "" : " -- ", detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mod-p Satake, Hecke and Jacquet computations for GL_2(Q_p)"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", opt.p, "prime p");
        sub->add_option("--ext-degree", opt.ext_degree, "coefficient field extension degree");
        sub->add_option("--format", opt.format, "text|json");
        sub->add_option("--seed", opt.seed, "seed for randomized property checks");
    };

    CLI::App* satake_cmd = app.add_subcommand("satake", "Satake image of an operator in k[Phi]");
    add_common(satake_cmd);
    satake_cmd->add_option("--r", opt.r, "symmetric power r");
    satake_cmd->add_option("--e", opt.e, "determinant twist e");
    satake_cmd->add_option("--op", opt.op, "phi, phi^n, or c0+c1*phi+...");
    satake_cmd->add_option("--degree", opt.degree, "Satake degree: 0 or 1");
    satake_cmd->add_option("--depth", opt.depth, "truncation depth (default: certified)");

    CLI::App* table_cmd = app.add_subcommand("table1", "Jacquet cohomology of irreducibles");
    add_common(table_cmd);
    table_cmd->add_flag("--all", opt.all, "all four rows at standard parameters");
    table_cmd->add_option("--type", opt.type,
                          "character|special|principal|supersingular");
    table_cmd->add_option("--chi", opt.chi, "twist character LAMBDA;E");
    table_cmd->add_option("--chi1", opt.chi1, "first principal character");
    table_cmd->add_option("--chi2", opt.chi2, "second principal character");
    table_cmd->add_option("--r", opt.r, "supersingular weight r");

    CLI::App* coh_cmd = app.add_subcommand("cohomology", "dims and Hecke matrices of a weight");
    add_common(coh_cmd);
    coh_cmd->add_option("--weight", opt.chi, "r,e")->required();

    CLI::App* delta_cmd = app.add_subcommand("delta", "the character delta on torus generators");
    add_common(delta_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    add_common(verify_cmd);
    verify_cmd->add_option("--goldens", opt.goldens_mode, "check|write|skip");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (satake_cmd->parsed()) return cmd_satake(opt);
        if (table_cmd->parsed()) return cmd_table1(opt);
        if (coh_cmd->parsed()) {
            auto comma = opt.chi.find(',');
            detail::require(comma != std::string::npos, "--weight needs the form r,e");
            opt.r = std::stol(opt.chi.substr(0, comma));
            opt.e = std::stol(opt.chi.substr(comma + 1));
            return cmd_cohomology(opt);
        }
        if (delta_cmd->parsed()) return cmd_delta(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
