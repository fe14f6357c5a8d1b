// Command-line surface: load an algebra from a file or the catalog, run the
// identity checkers, cohomology, differential forms, or the universal central
// extension, and emit a deterministic text or JSON report. Wall-time goes to
// stderr so stdout is byte-identical across runs.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lsa/acceptance.hpp"
#include "lsa/algebra_io.hpp"
#include "lsa/catalog.hpp"
#include "lsa/checks.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/constructions.hpp"
#include "lsa/differentials.hpp"
#include "lsa/uce.hpp"

namespace {

using namespace lsa;
using nlohmann::ordered_json;

constexpr int kOk = 0;          // every check passed
constexpr int kMathFail = 1;    // a mathematical check or precondition failed
constexpr int kInputError = 2;  // unparseable input, unknown name, bad flags

struct Options {
    std::string input;
    bool json = false;
    std::uint32_t n = 2;
    std::string coefficients = "trivial";
    bool compare_omega = false;
    std::uint32_t max_degree = 3;
};

/// An algebra resolved from a file path (if it exists) or the catalog.
struct Loaded {
    std::string name;
    std::optional<LeibnizSuperalgebra> leibniz;
    std::optional<BilinearForm> form;
    std::optional<SuperDialgebra> dialgebra;
    std::optional<CheckReport> truncation_report;
};

Loaded load_input(const std::string& name, std::uint32_t max_degree) {
    if (std::filesystem::exists(name)) {
        AlgebraFile af = load_algebra(name);
        Loaded out;
        out.name = name;
        if (af.is_dialgebra) {
            out.dialgebra = af.as_dialgebra();
        } else {
            out.leibniz = af.as_leibniz();
            out.form = af.form;
        }
        return out;
    }
    CatalogEntry e = resolve_catalog(name, max_degree);
    return Loaded{e.name, std::move(e.leibniz), std::move(e.form), std::move(e.dialgebra),
                  std::move(e.truncation_report)};
}

std::string format_vec(const SparseVec& v, const GradedBasis& basis) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        if (!out.empty()) out += ' ';
        out += format_rational(c);
        out += ' ';
        out += basis.names[i];
    }
    return out;
}

ordered_json report_json(const std::string& name, const CheckReport& rep,
                         const GradedBasis& basis) {
    ordered_json violations = ordered_json::array();
    for (const Violation& v : rep.violations)
        violations.push_back(ordered_json{{"rule", v.rule},
                                          {"indices", v.idx},
                                          {"residual", format_vec(v.residual, basis)}});
    return ordered_json{{"name", name},         {"pass", rep.ok()},
                        {"checked", rep.checked}, {"skipped", rep.skipped},
                        {"failed", rep.failed},   {"violations", std::move(violations)}};
}

void print_report(const std::string& name, const CheckReport& rep, const GradedBasis& basis) {
    std::cout << "check " << name << ": " << (rep.ok() ? "pass" : "FAIL") << " (checked "
              << rep.checked << ", skipped " << rep.skipped;
    if (!rep.ok()) std::cout << ", failed " << rep.failed;
    std::cout << ")\n";
    for (const Violation& v : rep.violations) {
        std::cout << "  " << v.rule << " at (";
        for (std::size_t i = 0; i < v.idx.size(); ++i)
            std::cout << (i ? "," : "") << v.idx[i];
        std::cout << "): residual " << format_vec(v.residual, basis) << "\n";
    }
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int cmd_check(const Options& o) {
    Loaded in;
    try {
        in = load_input(o.input, o.max_degree);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }

    const GradedBasis& basis = in.leibniz ? in.leibniz->basis : in.dialgebra->basis;
    std::vector<std::pair<std::string, CheckReport>> checks;
    std::optional<bool> lie, commutative;

    if (in.truncation_report) {
        checks.emplace_back("truncated-identities", *in.truncation_report);
    } else if (in.leibniz) {
        checks.emplace_back("grading", check_grading(*in.leibniz));
        checks.emplace_back("leibniz", check_leibniz(*in.leibniz));
        if (in.form)
            checks.emplace_back("invariant-form", check_invariant_form(*in.leibniz, *in.form));
        lie = check_lie_super(*in.leibniz).ok();
    } else {
        checks.emplace_back("grading", check_grading(*in.dialgebra));
        checks.emplace_back("dialgebra", check_dialgebra(*in.dialgebra));
        commutative = check_commutative(*in.dialgebra).ok();
    }

    bool pass = true;
    for (const auto& [name, rep] : checks) pass = pass && rep.ok();

    if (o.json) {
        ordered_json doc{{"command", "check"},
                         {"input", in.name},
                         {"kind", in.leibniz ? "leibniz" : "dialgebra"},
                         {"dim", basis.dim()}};
        ordered_json items = ordered_json::array();
        for (const auto& [name, rep] : checks) items.push_back(report_json(name, rep, basis));
        doc["checks"] = std::move(items);
        ordered_json props = ordered_json::object();
        if (lie) props["lie"] = *lie;
        if (commutative) props["commutative"] = *commutative;
        doc["properties"] = std::move(props);
        doc["pass"] = pass;
        emit_json(doc);
    } else {
        std::cout << "input: " << in.name << " (" << (in.leibniz ? "leibniz" : "dialgebra")
                  << ", dim " << basis.dim() << ")\n";
        for (const auto& [name, rep] : checks) print_report(name, rep, basis);
        if (lie) std::cout << "property lie: " << (*lie ? "yes" : "no") << "\n";
        if (commutative)
            std::cout << "property commutative: " << (*commutative ? "yes" : "no") << "\n";
        std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kMathFail;
}

// ---------------------------------------------------------------------------
// cohomology
// ---------------------------------------------------------------------------

int cmd_cohomology(const Options& o) {
    Loaded in;
    try {
        in = load_input(o.input, o.max_degree);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    if (!in.leibniz) {
        std::cerr << "input error: cohomology needs a Leibniz algebra, not a dialgebra\n";
        return kInputError;
    }
    if (o.n > 3) {
        std::cerr << "input error: arity " << o.n << " is not supported (use --n 0..3)\n";
        return kInputError;
    }

    LeibnizModule m = o.coefficients == "adjoint" ? LeibnizModule::adjoint(*in.leibniz)
                                                  : LeibnizModule::trivial(*in.leibniz, 1);
    CohomologyDims dims;
    try {
        dims = hl_dims(m, o.n);
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kMathFail;
    }

    if (o.json) {
        emit_json(ordered_json{{"command", "cohomology"},
                               {"input", in.name},
                               {"n", o.n},
                               {"coefficients", o.coefficients},
                               {"dims",
                                {{"cochains", dims.c_dim},
                                 {"cocycles", dims.z_dim},
                                 {"coboundaries", dims.b_dim},
                                 {"hl", dims.hl()}}},
                               {"pass", true}});
    } else {
        std::cout << "input: " << in.name << " (dim " << in.leibniz->dim() << ")\n"
                  << "coefficients: " << o.coefficients << "\n"
                  << "dim C^" << o.n << " = " << dims.c_dim << "\n"
                  << "dim Z^" << o.n << " = " << dims.z_dim << "\n"
                  << "dim B^" << o.n << " = " << dims.b_dim << "\n"
                  << "dim HL^" << o.n << " = " << dims.hl() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// uce
// ---------------------------------------------------------------------------

/// The truncation order for current-algebra catalog names, for --compare-omega.
std::optional<std::uint32_t> coefficient_truncation(const std::string& name) {
    for (const char* prefix : {"sl2xPoly:", "ospxPoly:"}) {
        if (name.rfind(prefix, 0) == 0) {
            try {
                return static_cast<std::uint32_t>(std::stoul(name.substr(std::string(prefix).size())));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

int cmd_uce(const Options& o) {
    Loaded in;
    try {
        in = load_input(o.input, o.max_degree);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    if (!in.leibniz) {
        std::cerr << "input error: uce needs a Leibniz algebra, not a dialgebra\n";
        return kInputError;
    }

    std::optional<std::uint32_t> omega_dim;
    if (o.compare_omega) {
        auto n_trunc = coefficient_truncation(in.name);
        if (!n_trunc) {
            std::cerr << "input error: --compare-omega needs a sl2xPoly:N or ospxPoly:N "
                         "catalog entry\n";
            return kInputError;
        }
        omega_dim = omega(trunc_poly(*n_trunc)).dim();
    }

    UceResult u;
    try {
        u = uce(*in.leibniz);
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kMathFail;
    }
    CheckReport central = verify_central_extension(
        CentralExtension{u.total, u.base, u.projection, u.kernel_space});
    bool perfect = is_perfect(u.total);
    bool match = !omega_dim || *omega_dim == u.kernel_space.dim();
    bool pass = central.ok() && perfect && match;

    if (o.json) {
        ordered_json doc{{"command", "uce"},
                         {"input", in.name},
                         {"base_dim", u.base.dim()},
                         {"total_dim", u.total.dim()},
                         {"kernel_dim", u.kernel_space.dim()},
                         {"perfect", perfect},
                         {"central", central.ok()}};
        if (omega_dim) {
            doc["omega_dim"] = *omega_dim;
            doc["omega_match"] = match;
        }
        doc["pass"] = pass;
        emit_json(doc);
    } else {
        std::cout << "input: " << in.name << " (dim " << u.base.dim() << ")\n"
                  << "total dim = " << u.total.dim() << "\n"
                  << "kernel dim = " << u.kernel_space.dim() << "\n"
                  << "perfect: " << (perfect ? "yes" : "no") << "\n"
                  << "central: " << (central.ok() ? "yes" : "no") << "\n";
        if (omega_dim)
            std::cout << "form-space dim = " << *omega_dim << ": "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
        std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kMathFail;
}

// ---------------------------------------------------------------------------
// omega
// ---------------------------------------------------------------------------

int cmd_omega(const Options& o) {
    Loaded in;
    try {
        in = load_input(o.input, o.max_degree);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    if (!in.dialgebra) {
        std::cerr << "input error: omega needs a dialgebra, not a Leibniz algebra\n";
        return kInputError;
    }

    DifferentialModule om;
    try {
        om = omega(*in.dialgebra);
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kMathFail;
    }
    UniversalPropertyReport up = check_universal_property(om, DiBimodule::regular(*in.dialgebra));

    if (o.json) {
        emit_json(ordered_json{{"command", "omega"},
                               {"input", in.name},
                               {"dim", om.dim()},
                               {"dim_mod_exact", omega_mod_d_dim(om)},
                               {"basis", om.basis.names},
                               {"universal_property",
                                {{"derivations", up.der_dim},
                                 {"module_maps", up.hom_dim},
                                 {"match", up.match}}},
                               {"pass", up.match}});
    } else {
        std::cout << "input: " << in.name << " (dim " << in.dialgebra->dim() << ")\n"
                  << "dim forms = " << om.dim() << "\n"
                  << "dim forms mod exact = " << omega_mod_d_dim(om) << "\n";
        std::cout << "basis:";
        for (const std::string& n : om.basis.names) std::cout << " " << n;
        std::cout << "\n"
                  << "universal property: derivations " << up.der_dim << ", module maps "
                  << up.hom_dim << ", " << (up.match ? "MATCH" : "MISMATCH") << "\n"
                  << "result: " << (up.match ? "PASS" : "FAIL") << "\n";
    }
    return up.match ? kOk : kMathFail;
}

// ---------------------------------------------------------------------------
// catalog, verify-paper
// ---------------------------------------------------------------------------

int cmd_catalog(const Options& o) {
    if (o.json) {
        emit_json(ordered_json{{"command", "catalog"}, {"names", catalog_names()}});
    } else {
        for (const std::string& n : catalog_names()) std::cout << n << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    std::ostringstream buf;
    int failures = run_acceptance(buf);
    if (o.json) {
        ordered_json lines = ordered_json::array();
        std::istringstream in(buf.str());
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        emit_json(ordered_json{{"command", "verify-paper"},
                               {"failed", failures},
                               {"lines", std::move(lines)},
                               {"pass", failures == 0}});
    } else {
        std::cout << buf.str();
    }
    return failures == 0 ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"exact-arithmetic toolkit for graded dialgebras and Leibniz superalgebras"};
    app.require_subcommand(1);
    Options o;
    int rc = kOk;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_flag("--json", o.json, "emit a JSON report on stdout");
        if (with_input)
            sub->add_option("input", o.input, "algebra file or catalog name (see `catalog`)")
                ->required();
    };

    CLI::App* c_check = app.add_subcommand(
        "check", "verify the defining identities of an algebra file or catalog entry");
    add_common(c_check, true);
    c_check->add_option("--max-degree", o.max_degree, "truncation degree for free objects");
    c_check->callback([&] { rc = cmd_check(o); });

    CLI::App* c_coh = app.add_subcommand(
        "cohomology", "cochain, cocycle, coboundary, and cohomology dimensions");
    add_common(c_coh, true);
    c_coh->add_option("--n", o.n, "cochain arity (0..3)");
    c_coh->add_option("--coefficients", o.coefficients, "trivial or adjoint coefficients")
        ->check(CLI::IsMember({"trivial", "adjoint"}));
    c_coh->callback([&] { rc = cmd_cohomology(o); });

    CLI::App* c_uce = app.add_subcommand(
        "uce", "universal central extension of a perfect Leibniz superalgebra");
    add_common(c_uce, true);
    c_uce->add_flag("--compare-omega", o.compare_omega,
                    "compare the kernel with the coefficient form space (sl2xPoly/ospxPoly)");
    c_uce->callback([&] { rc = cmd_uce(o); });

    CLI::App* c_omega = app.add_subcommand(
        "omega", "differential forms of a commutative unital dialgebra");
    add_common(c_omega, true);
    c_omega->callback([&] { rc = cmd_omega(o); });

    CLI::App* c_catalog = app.add_subcommand("catalog", "list the built-in algebra names");
    add_common(c_catalog, false);
    c_catalog->callback([&] { rc = cmd_catalog(o); });

    CLI::App* c_verify = app.add_subcommand(
        "verify-paper", "run the built-in end-to-end verification suite");
    add_common(c_verify, false);
    c_verify->callback([&] { rc = cmd_verify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFail;
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "wall-time: %.3f s\n", elapsed.count());
    return rc;
}
