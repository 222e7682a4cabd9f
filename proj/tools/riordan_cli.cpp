#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "riordan/centralizer.hpp"
#include "riordan/oeis.hpp"
#include "riordan/presets.hpp"
#include "riordan/verify.hpp"

using nlohmann::json;
using namespace riordan;

namespace {

int default_trunc() {
    if (const char* env = std::getenv("RIORDAN_TRUNC")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 24;
}

json series_json(const Series<Rational>& s, int terms) {
    json arr = json::array();
    for (int n = 0; n < terms; ++n) arr.push_back(s[n].str());
    return arr;
}

std::string series_csv(const Series<Rational>& s, int terms) {
    std::string out;
    for (int n = 0; n < terms; ++n) {
        if (n) out += ",";
        out += s[n].str();
    }
    return out;
}

struct ArraySpec {
    std::string d, h;
    RiordanArray<Rational> build(int trunc) const {
        return RiordanArray<Rational>(parse_series_spec(d, trunc), parse_series_spec(h, trunc));
    }
};

int cmd_triangle(const ArraySpec& spec, int rows, const std::string& format) {
    int n = std::max(default_trunc(), rows - 1);
    Triangle<Rational> tri = spec.build(n).triangle(rows);
    if (format == "json") {
        json out;
        out["rows"] = json::array();
        for (const auto& row : tri.rows) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str());
            out["rows"].push_back(r);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& row : tri.rows) {
            std::string line;
            for (size_t k = 0; k < row.size(); ++k) {
                if (k) line += ",";
                line += row[k].str();
            }
            std::cout << line << "\n";
        }
    }
    return 0;
}

int cmd_sequence(const ArraySpec& spec, int terms, bool want_z) {
    int n = std::max(default_trunc(), terms);
    RiordanArray<Rational> a = spec.build(n);
    Series<Rational> s = want_z ? z_sequence(a) : a_sequence(a);
    std::cout << series_csv(s, terms) << "\n";
    return 0;
}

void print_pair(const RiordanArray<Rational>& a, const std::string& format, int terms) {
    if (format == "json") {
        json out;
        out["d"] = series_json(a.d(), terms);
        out["h"] = series_json(a.h(), terms);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "d: " << series_csv(a.d(), terms) << "\n";
        std::cout << "h: " << series_csv(a.h(), terms) << "\n";
    }
}

int cmd_mul(const ArraySpec& s1, const ArraySpec& s2, const std::string& format, int terms) {
    int n = std::max(default_trunc(), terms - 1);
    print_pair(multiply(s1.build(n), s2.build(n)), format, terms);
    return 0;
}

int cmd_inv(const ArraySpec& spec, const std::string& format, int terms) {
    int n = std::max(default_trunc(), terms - 1);
    print_pair(inverse(spec.build(n)), format, terms);
    return 0;
}

int cmd_centralizer(const std::string& hspec, int order, bool param_ring, const std::string& f1) {
    // probe the spec to learn where h departs from z, then rebuild deep
    // enough to pin every requested coefficient
    Series<Rational> probe = parse_series_spec(hspec, std::max(default_trunc(), order + 1));
    int ell = 0;
    for (int j = 2; j <= probe.trunc(); ++j)
        if (!probe[j].is_zero()) {
            ell = j;
            break;
        }
    int need = ell == 0 ? order : order + ell - 1;
    Series<Rational> h = parse_series_spec(hspec, std::max(probe.trunc(), need));
    CommutantFamily fam = solve_commutant_f1(h, order, Rational::from_string(f1));

    json out;
    out["order"] = order;
    out["consistent"] = fam.consistent;
    out["free_positions"] = fam.free_positions;
    out["param_cap_hit"] = fam.param_cap_hit;
    json fixed = json::object();
    for (size_t i = 0; i < fam.coeffs.size(); ++i)
        if (fam.coeffs[i].is_constant()) fixed[std::to_string(i)] = fam.coeffs[i].constant_value().str();
    out["fixed_coefficients"] = fixed;
    if (param_ring) {
        json sym = json::array();
        for (const auto& c : fam.coeffs) sym.push_back(c.str());
        out["symbolic_coefficients"] = sym;
    }
    if (!fam.consistent) {
        out["failing_degree"] = fam.failing_degree;
        out["residual"] = fam.residual.str();
    }
    std::cout << out.dump() << "\n";
    return fam.consistent ? 0 : 2;
}

int cmd_verify(const std::string& suite, int order, unsigned long long seed,
               const std::string& fixtures) {
    verify::Options opts;
    opts.order = order;
    opts.seed = seed;
    opts.fixture_dir = fixtures;
    verify::SuiteReport rep = verify::run_suite(suite, opts);
    json out;
    out["suite"] = rep.suite;
    out["order"] = order;
    out["seed"] = seed;
    out["checks"] = rep.checks;
    out["failures"] = rep.failures;
    std::cout << out.dump() << "\n";
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riordan-group computer algebra"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    auto sub = [&](const char* name, const char* desc) {
        auto* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };

    ArraySpec spec1, spec2;
    int rows = 8, terms = 8, cz_order = 10, verify_order = 12;
    std::string format = "csv", f1 = "1", suite, fixtures = "data/oeis";
    unsigned long long seed = 8675309ULL;
    bool param_ring = false;

    auto* tri = sub("triangle", "Print the triangle of a Riordan array");
    tri->add_option("--d", spec1.d, "d(z) spec")->required();
    tri->add_option("--h", spec1.h, "h(z) spec")->required();
    tri->add_option("--rows", rows, "number of rows");
    tri->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* aseq = sub("aseq", "A-sequence of a Riordan array");
    aseq->add_option("--d", spec1.d)->required();
    aseq->add_option("--h", spec1.h)->required();
    aseq->add_option("--terms", terms, "number of terms");

    auto* zseq = sub("zseq", "Z-sequence of a Riordan array");
    zseq->add_option("--d", spec1.d)->required();
    zseq->add_option("--h", spec1.h)->required();
    zseq->add_option("--terms", terms, "number of terms");

    auto* mul = sub("mul", "Product of two Riordan arrays");
    mul->add_option("--d1", spec1.d)->required();
    mul->add_option("--h1", spec1.h)->required();
    mul->add_option("--d2", spec2.d)->required();
    mul->add_option("--h2", spec2.h)->required();
    mul->add_option("--terms", terms, "coefficients to print");
    mul->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* inv = sub("inv", "Inverse of a Riordan array");
    inv->add_option("--d", spec1.d)->required();
    inv->add_option("--h", spec1.h)->required();
    inv->add_option("--terms", terms, "coefficients to print");
    inv->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* cz = sub("centralizer", "Solve for all f commuting with h in F1");
    cz->add_option("--h", spec1.h, "h(z) spec, h'(0) = 1")->required();
    cz->add_option("--order", cz_order, "solve coefficients up to this degree");
    cz->add_flag("--param-ring", param_ring, "print symbolic coefficients");
    cz->add_option("--f1", f1, "value fixed for f'(0)");

    auto* ver = sub("verify", "Run a named verification suite");
    ver->add_option("--suite", suite, "suite name")->required();
    ver->add_option("--order", verify_order, "truncation order for the suite");
    ver->add_option("--seed", seed, "seed for randomized checks");
    ver->add_option("--fixtures", fixtures, "offline OEIS fixture directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tri->parsed()) return cmd_triangle(spec1, rows, format);
        if (aseq->parsed()) return cmd_sequence(spec1, terms, false);
        if (zseq->parsed()) return cmd_sequence(spec1, terms, true);
        if (mul->parsed()) return cmd_mul(spec1, spec2, format, terms);
        if (inv->parsed()) return cmd_inv(spec1, format, terms);
        if (cz->parsed()) return cmd_centralizer(spec1.h, cz_order, param_ring, f1);
        if (ver->parsed()) return cmd_verify(suite, verify_order, seed, fixtures);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
