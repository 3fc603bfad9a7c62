// Command-line front end: decompose / realize / discriminant / sigma /
// verify / iso over the stable JSON formats. Reads one JSON document from
// stdin or --in, writes the result to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 negative verdict on a check command,
// 2 malformed input, 3 degenerate module, 4 odd lattice.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fqm/jordan.hpp"
#include "fqm/json_io.hpp"
#include "fqm/oracle.hpp"
#include "fqm/realize.hpp"

namespace {

using fqm::json;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty()) {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw fqm::invalid_input("cannot open input file " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw fqm::invalid_input(std::string("JSON parse error: ") + e.what());
    }
}

void require_nondegenerate(const fqm::Fqm& m) {
    if (!fqm::is_nondegenerate(m)) throw fqm::degenerate_module("input module is degenerate");
}

struct Options {
    std::string in_path;
    long oracle_budget = fqm::kDefaultOracleBudget;
    long enum_budget = fqm::kDefaultEnumBudget;
};

int cmd_decompose(const Options& opt) {
    fqm::Fqm m = fqm::fqm_from_json(parse(read_input(opt.in_path)));
    require_nondegenerate(m);
    std::cout << fqm::components_to_json(fqm::jordan_decomposition(m)).dump() << "\n";
    return 0;
}

int cmd_realize(const Options& opt, bool posdef) {
    json j = parse(read_input(opt.in_path));
    fqm::Lattice l;
    if (j.is_object() && j.contains("orders")) {
        fqm::Fqm m = fqm::fqm_from_json(j);
        require_nondegenerate(m);
        l = fqm::realize_module(m, posdef);
    } else {
        std::vector<fqm::JordanComponent> cs;
        if (j.is_array())
            cs = fqm::components_from_json(j);
        else
            cs = {fqm::component_from_json(j)};
        for (const auto& c : cs)
            l = fqm::lattice_direct_sum(l, posdef ? fqm::realize_posdef(c) : fqm::realize_even(c));
    }
    std::cout << fqm::lattice_to_json(l).dump() << "\n";
    return 0;
}

int cmd_discriminant(const Options& opt) {
    fqm::Lattice l = fqm::lattice_from_json(parse(read_input(opt.in_path)));
    fqm::Fqm d = fqm::discriminant_module(l);
    json out{{"fqm", fqm::fqm_to_json(d)},
             {"components", fqm::components_to_json(fqm::jordan_decomposition(d))}};
    std::cout << out.dump() << "\n";
    return 0;
}

double round12(double v) { return std::round(v * 1e12) / 1e12 + 0.0; }

int cmd_sigma(const Options& opt) {
    fqm::Fqm m = fqm::fqm_from_json(parse(read_input(opt.in_path)));
    require_nondegenerate(m);
    fqm::Mu8 s = fqm::sigma_exact(m);
    std::complex<double> num =
        m.order() <= opt.enum_budget ? fqm::sigma_numeric(m, opt.enum_budget) : s.value();
    json out{{"exp", s.exp}, {"numeric", {round12(num.real()), round12(num.imag())}}};
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    json j = parse(read_input(opt.in_path));
    if (!j.is_object() || !j.contains("lattice") || !j.contains("fqm"))
        throw fqm::invalid_input("verify expects {\"lattice\": ..., \"fqm\": ...}");
    fqm::Lattice l = fqm::lattice_from_json(j.at("lattice"));
    fqm::Fqm m = fqm::fqm_from_json(j.at("fqm"));
    require_nondegenerate(m);
    fqm::IsoResult r = fqm::iso_oracle(fqm::discriminant_module(l), m, opt.oracle_budget);
    const char* verdict = r.verdict == fqm::IsoVerdict::yes
                              ? "yes"
                              : r.verdict == fqm::IsoVerdict::no ? "no" : "unknown";
    std::cout << json{{"isomorphic", verdict}}.dump() << "\n";
    return r.verdict == fqm::IsoVerdict::no ? 1 : 0;
}

int cmd_iso(const Options& opt) {
    json j = parse(read_input(opt.in_path));
    fqm::Fqm m1, m2;
    if (j.is_array() && j.size() == 2) {
        m1 = fqm::fqm_from_json(j[0]);
        m2 = fqm::fqm_from_json(j[1]);
    } else if (j.is_object() && j.contains("first") && j.contains("second")) {
        m1 = fqm::fqm_from_json(j.at("first"));
        m2 = fqm::fqm_from_json(j.at("second"));
    } else {
        throw fqm::invalid_input("iso expects [fqm, fqm] or {\"first\": ..., \"second\": ...}");
    }
    fqm::IsoResult r = fqm::iso_oracle(m1, m2, opt.oracle_budget);
    json out;
    switch (r.verdict) {
        case fqm::IsoVerdict::yes: {
            json w = json::array();
            for (const auto& e : r.witness) w.push_back(fqm::element_to_json(e));
            out = json{{"verdict", "yes"}, {"witness", w}};
            break;
        }
        case fqm::IsoVerdict::no:
            out = json{{"verdict", "no"}};
            break;
        default:
            out = json{{"verdict", "unknown"}};
    }
    std::cout << out.dump() << "\n";
    return r.verdict == fqm::IsoVerdict::no ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quadratic modules: decomposition, discriminant modules, realizations"};
    app.require_subcommand(1);

    Options opt;
    long budget_flag = -1;
    app.add_option("--in", opt.in_path, "read input from a file instead of stdin");
    app.add_option("--budget", budget_flag,
                   "element budget for enumeration and isomorphism search")
        ->envname("FQM_BUDGET");

    bool posdef = false;
    auto* dec = app.add_subcommand("decompose", "Jordan decomposition of a module");
    auto* rea = app.add_subcommand("realize", "even lattice realizing a module or component list");
    rea->add_flag("--positive-definite,-p", posdef, "positive definite realization");
    auto* dis = app.add_subcommand("discriminant", "discriminant module of an even lattice");
    auto* sig = app.add_subcommand("sigma", "sigma invariant (exact exponent and numeric value)");
    auto* ver = app.add_subcommand("verify", "check a lattice realizes a module");
    auto* iso = app.add_subcommand("iso", "isometric isomorphism test between two modules");
    for (auto* sub : {dec, rea, dis, sig, ver, iso}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (budget_flag > 0) {
        opt.oracle_budget = budget_flag;
        opt.enum_budget = budget_flag;
    }

    try {
        if (dec->parsed()) return cmd_decompose(opt);
        if (rea->parsed()) return cmd_realize(opt, posdef);
        if (dis->parsed()) return cmd_discriminant(opt);
        if (sig->parsed()) return cmd_sigma(opt);
        if (ver->parsed()) return cmd_verify(opt);
        if (iso->parsed()) return cmd_iso(opt);
    } catch (const fqm::degenerate_module& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fqm::odd_lattice& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const fqm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
