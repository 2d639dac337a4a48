#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "milnor/error.hpp"
#include "milnor/poly_io.hpp"
#include "milnor/serialize.hpp"
#include "milnor/suite.hpp"

namespace milnor::cli {

namespace {

constexpr int exit_suite_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_precondition = 3;

struct Options {
    std::optional<int> n;
    std::optional<int> d;
    std::optional<int> k;
    std::string poly;
    std::string gens_file;
    std::string subspace_file;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out_file;
    bool non_st = false;
    bool ci = false;
    int coeff_bound = 3;
    double budget = 0;
    int count = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw InputError(std::string("missing required flag ") + flag);
    return *v;
}

void check_n(int n) {
    if (n < 1) throw InputError("--n must be at least 1");
}
void check_d(int d) {
    if (d < 2) throw InputError("--d must be at least 2");
}

// --poly takes the form inline, or @path to read it from a file.
HomogeneousPolynomial read_poly(const Options& o) {
    if (o.poly.empty()) throw InputError("missing required flag --poly");
    const std::string text = o.poly.front() == '@' ? read_file(o.poly.substr(1)) : o.poly;
    if (o.n) check_n(*o.n);
    auto f = parse_polynomial(text, o.n);
    if (o.d && f.degree() != *o.d) throw InputError("--poly does not have degree --d");
    if (f.n() < 1) throw InputError("polynomial must involve at least two variables; pass --n");
    return f;
}

GeneratorTuple read_gens(const Options& o) {
    if (o.gens_file.empty()) throw InputError("missing required flag --gens");
    auto w = generators_from_json(read_json(o.gens_file));
    if (o.n && *o.n != w.n()) throw InputError("--n does not match the generator file");
    if (o.d && *o.d != w.d()) throw InputError("--d does not match the generator file");
    return w;
}

// Reads the subspace file and checks it against --n and --k.
Subspace read_subspace(const Options& o) {
    if (o.subspace_file.empty()) throw InputError("missing required flag --subspace");
    auto e = subspace_from_json(read_json(o.subspace_file));
    if (o.n && *o.n != e.ambient().n) throw InputError("--n does not match the subspace file");
    if (o.k && *o.k != e.ambient().degree) throw InputError("--k does not match the subspace degree");
    return e;
}

void check_k_range(int k, int lo, int hi) {
    if (k < lo || k > hi) {
        throw InputError("--k must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

class Printer {
public:
    explicit Printer(const Options& o) : json_(o.format == "json") {}
    bool json_mode() const { return json_; }
    std::ostringstream& text() { return text_; }
    void set(json doc) { doc_ = std::move(doc); }
    std::string str() const { return json_ ? doc_.dump(2) + "\n" : text_.str(); }

private:
    bool json_;
    json doc_;
    std::ostringstream text_;
};

void print_polys(std::ostream& out, const std::vector<HomogeneousPolynomial>& polys) {
    for (const auto& p : polys) out << "  " << format_polynomial(p) << "\n";
}

void print_subspace(Printer& p, const Subspace& e) {
    if (p.json_mode()) {
        p.set(subspace_to_json(e));
        return;
    }
    p.text() << "dim " << e.dim() << " in S_" << e.ambient().degree << " (n=" << e.ambient().n << ", ambient dim "
             << e.ambient().dim() << ")\n";
    print_polys(p.text(), e.basis_polynomials());
}

void print_fiber(Printer& p, const FiberResult& fiber) {
    if (p.json_mode()) {
        p.set(fiber_to_json(fiber));
        return;
    }
    p.text() << "s: " << fiber.s() << "\nfiber:\n";
    print_polys(p.text(), fiber.basis);
}

void cmd_hilbert(const Options& o, Printer& p) {
    const int n = require(o.n, "--n");
    const int d = require(o.d, "--d");
    check_n(n);
    check_d(d);
    const auto& profile = hilbert_profile(n, d);
    if (p.json_mode()) {
        p.set(hilbert_to_json(profile));
        return;
    }
    p.text() << "k\ta(k)\tb(k)\n";
    for (int k = 0; k <= profile.socle + 1; ++k) {
        p.text() << k << "\t" << profile.a(k) << "\t" << profile.b(k) << (k == profile.socle ? "\tT" : "") << "\n";
    }
}

void cmd_piece(const Options& o, Printer& p) {
    const auto f = read_poly(o);
    const int k = require(o.k, "--k");
    if (k < 0) throw InputError("--k must be nonnegative");
    print_subspace(p, jacobian_piece(f, k));
}

void cmd_ideal_piece(const Options& o, Printer& p) {
    const auto w = read_gens(o);
    const int k = require(o.k, "--k");
    if (k < 0) throw InputError("--k must be nonnegative");
    print_subspace(p, ideal_piece(w, k));
}

void cmd_reconstruct(const Options& o, Printer& p) {
    const int d = require(o.d, "--d");
    check_d(d);
    const auto e = read_subspace(o);
    const int n = e.ambient().n;
    check_n(n);
    const int k = e.ambient().degree;
    check_k_range(k, d - 1, socle_degree(n, d));
    print_fiber(p, reconstruct_poly(e, k, n, d));
}

void cmd_recover_gens(const Options& o, Printer& p) {
    const int d = require(o.d, "--d");
    check_d(d);
    const auto e = read_subspace(o);
    const int n = e.ambient().n;
    check_n(n);
    const int k = e.ambient().degree;
    check_k_range(k, d - 1, socle_degree(n, d));
    const auto w = recover_generators(e, k, n, d);
    if (p.json_mode()) {
        p.set(generators_to_json(w));
        return;
    }
    p.text() << "generators (n=" << n << ", d=" << d << "):\n";
    print_polys(p.text(), w.gens());
}

void cmd_st(const Options& o, Printer& p) {
    const auto report = st_report(read_poly(o));
    if (p.json_mode()) {
        p.set(st_report_to_json(report));
        return;
    }
    p.text() << "is_st: " << (report.is_st ? "true" : "false") << "\n";
    print_fiber(p, report.fiber);
}

void cmd_smooth(const Options& o, Printer& p) {
    const bool smooth = is_smooth(read_poly(o));
    if (p.json_mode()) {
        p.set(json{{"smooth", smooth}});
        return;
    }
    p.text() << (smooth ? "true" : "false") << "\n";
}

void cmd_fiber(const Options& o, Printer& p) {
    const auto f = read_poly(o);
    if (!is_smooth(f)) throw PreconditionError("polynomial is not smooth");
    print_fiber(p, fiber(jacobian_gens(f)));
}

void cmd_inverse_system(const Options& o, Printer& p) {
    const auto b = associated_form(read_gens(o));
    if (p.json_mode()) {
        p.set(associated_form_to_json(b));
        return;
    }
    p.text() << format_polynomial(b.form) << "\n";
}

void cmd_tangent_kernel(const Options& o, Printer& p) {
    if (o.poly.empty() == o.gens_file.empty()) throw InputError("pass exactly one of --poly and --gens");
    const int k = require(o.k, "--k");
    const bool per_generator = !o.gens_file.empty();
    TangentKernel kernel;
    if (per_generator) {
        const auto w = read_gens(o);
        check_k_range(k, w.d() - 1, w.socle());
        kernel = dpsi_W_kernel(w, k);
    } else {
        const auto f = read_poly(o);
        check_d(f.degree());
        check_k_range(k, f.degree() - 1, socle_degree(f.n(), f.degree()));
        kernel = dpsi_f_kernel(f, k);
    }
    if (p.json_mode()) {
        p.set(tangent_kernel_to_json(kernel, per_generator));
        return;
    }
    p.text() << "k: " << kernel.k << "\ntangent_dim: " << kernel.tangent_dim << "\nkernel_dim: " << kernel.kernel_dim
             << "\n";
    for (const auto& v : kernel.basis) {
        p.text() << " ";
        for (const auto& h : v) p.text() << " [" << format_polynomial(h) << "]";
        p.text() << "\n";
    }
}

void cmd_random(const Options& o, Printer& p) {
    const int n = require(o.n, "--n");
    const int d = require(o.d, "--d");
    check_n(n);
    check_d(d);
    if (o.coeff_bound < 0) throw InputError("--coeff-bound must be nonnegative");
    if (o.ci) {
        if (o.non_st) throw InputError("--non-st applies to polynomials, not --ci tuples");
        const auto w = random_ci_tuple(n, d, o.seed, o.coeff_bound);
        if (p.json_mode()) {
            p.set(generators_to_json(w));
            return;
        }
        for (const auto& g : w.gens()) p.text() << format_polynomial(g) << "\n";
        return;
    }
    const auto f = random_smooth(n, d, o.seed, o.non_st, o.coeff_bound);
    if (p.json_mode()) {
        p.set(json{{"n", n}, {"d", d}, {"seed", o.seed}, {"poly", format_polynomial(f)}});
        return;
    }
    p.text() << format_polynomial(f) << "\n";
}

bool cmd_suite(const Options& o, Printer& p, std::ostream& progress) {
    SuiteConfig config;
    if (o.n || o.d) {
        const int n = require(o.n, "--n");
        const int d = require(o.d, "--d");
        check_n(n);
        check_d(d);
        config.sizes = {{n, d}};
    }
    if (o.budget < 0) throw InputError("--budget must be nonnegative");
    if (o.count < 0) throw InputError("--count must be nonnegative");
    config.seed = o.seed;
    config.budget = o.budget;
    if (o.count > 0) {
        config.jacobian_forms = config.ci_tuples = config.distinct_pairs = o.count;
        config.non_st_forms = config.containment_forms = config.well_defined_pairs = o.count;
    }
    // Timings vary run to run; they go to the progress stream only.
    json rows = json::array();
    bool all_ok = true;
    run_suite(config, [&](const CriterionResult& r) {
        all_ok = all_ok && r.status != CaseStatus::fail;
        progress << status_name(r.status) << " criterion " << r.id << " (" << r.seconds << " s)\n";
        rows.push_back(json{{"id", r.id}, {"title", r.title}, {"status", status_name(r.status)}, {"detail", r.detail}});
        if (!p.json_mode()) p.text() << status_name(r.status) << " " << r.id << " " << r.title << ": " << r.detail << "\n";
    });
    if (p.json_mode()) p.set(json{{"criteria", rows}, {"passed", all_ok}});
    return all_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graded pieces of Jacobian and complete-intersection ideals", "milnor"};
    app.require_subcommand(1);
    Options o;

    const auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of variables minus one"); };
    const auto add_d = [&](CLI::App* c) { c->add_option("--d", o.d, "degree of f (generators have degree d-1)"); };
    const auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "degree of the graded piece"); };
    const auto add_poly = [&](CLI::App* c) { c->add_option("--poly", o.poly, "polynomial text, or @file"); };
    const auto add_gens = [&](CLI::App* c) { c->add_option("--gens", o.gens_file, "generator tuple JSON file"); };
    const auto add_subspace = [&](CLI::App* c) { c->add_option("--subspace", o.subspace_file, "subspace JSON file"); };
    const auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed"); };

    struct Entry {
        CLI::App* app;
        void (*handler)(const Options&, Printer&);
    };
    std::vector<Entry> entries;
    const auto sub = [&](const char* name, const char* help, void (*handler)(const Options&, Printer&)) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out", o.out_file, "write output to this file");
        entries.push_back({c, handler});
        return c;
    };

    auto* c = sub("hilbert", "Hilbert function of the Milnor algebra of a smooth form", cmd_hilbert);
    add_n(c), add_d(c);
    c = sub("piece", "graded piece E_k of the Jacobian ideal of --poly", cmd_piece);
    add_poly(c), add_n(c), add_d(c), add_k(c);
    c = sub("ideal-piece", "graded piece of the ideal generated by --gens", cmd_ideal_piece);
    add_gens(c), add_n(c), add_d(c), add_k(c);
    c = sub("reconstruct", "recover f (or its fiber) from a Jacobian piece", cmd_reconstruct);
    add_subspace(c), add_n(c), add_d(c), add_k(c);
    c = sub("recover-gens", "recover the generator span from an ideal piece", cmd_recover_gens);
    add_subspace(c), add_n(c), add_d(c), add_k(c);
    c = sub("st", "direct-sum (Sebastiani-Thom) analysis of --poly", cmd_st);
    add_poly(c), add_n(c), add_d(c);
    c = sub("smooth", "whether --poly defines a smooth hypersurface", cmd_smooth);
    add_poly(c), add_n(c), add_d(c);
    c = sub("fiber", "all polynomials sharing the Jacobian pieces of --poly", cmd_fiber);
    add_poly(c), add_n(c), add_d(c);
    c = sub("inverse-system", "associated form of a complete-intersection tuple", cmd_inverse_system);
    add_gens(c), add_n(c), add_d(c);
    c = sub("tangent-kernel", "kernel of the differential at --poly or --gens", cmd_tangent_kernel);
    add_poly(c), add_gens(c), add_n(c), add_d(c), add_k(c);
    c = sub("random", "seeded random smooth form, or complete-intersection tuple with --ci", cmd_random);
    add_n(c), add_d(c), add_seed(c);
    c->add_flag("--non-st", o.non_st, "reject direct sums");
    c->add_flag("--ci", o.ci, "emit a generator tuple instead of a form");
    c->add_option("--coeff-bound", o.coeff_bound, "perturbation coefficients lie in [-b, b]");

    CLI::App* suite = sub("suite", "run the acceptance battery", nullptr);
    add_n(suite), add_d(suite), add_seed(suite);
    suite->add_option("--budget", o.budget, "wall-clock budget in seconds (0 = none)");
    suite->add_option("--count", o.count, "override every per-size case count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    Printer printer(o);
    int code = 0;
    try {
        for (const auto& entry : entries) {
            if (!entry.app->parsed()) continue;
            if (entry.handler) {
                entry.handler(o, printer);
            } else if (!cmd_suite(o, printer, err)) {
                code = exit_suite_failed;
            }
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    }

    if (o.out_file.empty()) {
        out << printer.str();
    } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file || !(file << printer.str())) {
            err << "input error: cannot write '" << o.out_file << "'\n";
            return exit_input;
        }
    }
    return code;
}

}  // namespace milnor::cli
