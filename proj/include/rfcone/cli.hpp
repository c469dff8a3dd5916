#pragma once

// Command-line front end: one subcommand per pipeline, each producing an
// AnalysisReport printed as a table or as JSON, with optional CSV dumps.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfcone/clw.hpp"
#include "rfcone/conformal.hpp"
#include "rfcone/cp2proof.hpp"
#include "rfcone/numerics/errors.hpp"
#include "rfcone/page.hpp"
#include "rfcone/polytope.hpp"
#include "rfcone/radial.hpp"
#include "rfcone/report.hpp"
#include "rfcone/toric.hpp"

namespace rfcone::cli {

using report::AnalysisReport;
using report::Status;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedVerdict = 1;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes CSV rows through `fill` when a path was requested.
inline void write_csv_file(const std::string& path, const std::function<void(std::ostream&)>& fill) {
    if (path.empty()) return;
    std::ofstream os(path);
    if (!os) throw UsageError("cannot open CSV output " + path);
    os.precision(12);
    fill(os);
}

// ---------------------------------------------------------------- page

inline void run_page(AnalysisReport& r, const std::string& csv) {
    const page::PageOptions opt;
    r.input("samples", static_cast<int>(opt.samples));
    r.input("root_tol", opt.root_tol);
    const auto a = page::page_full_analysis(opt);

    r.check("critical class a* reproduced", r.output("a_star", a.a_star, 0.31408, 5e-6));
    r.check("area ratio 1/a* reproduced", r.output("inverse_a_star", 1.0 / a.a_star, 3.1839, 5e-4));
    r.output("c1", a.c1);
    r.output("c2", a.c2);
    r.output("solver_c1", a.solver_scal.a1, "Donaldson linear system");
    r.output("solver_c2", a.solver_scal.b, "Donaldson linear system");
    r.output("ibp_residual", a.solver_scal.residual, "Donaldson linear system");
    r.check("kappa (closed form) reproduced", r.output("kappa", a.kappa, 182.219, 1e-2, "closed form vs published"));
    r.check("kappa (pointwise identity) reproduced",
            r.output("kappa_identity", a.kappa_identity_mean, 182.219, 1e-2, "finite-difference identity"));
    r.check("kappa (volume) reproduced",
            r.output("kappa_from_volume", a.kappa_from_volume, 182.219, 1e-2, "4 Lambda from the volume"));
    const double spread = std::max({std::abs(a.kappa - a.kappa_identity_mean), std::abs(a.kappa - a.kappa_from_volume),
                                    std::abs(a.kappa_identity_mean - a.kappa_from_volume)});
    r.output("kappa_pairwise_spread", spread);
    r.verdict("kappa three ways agree pairwise within 1e-2", spread <= 1e-2 ? Status::verified : Status::failed,
              1e-2 - spread);
    r.check("volume reproduced", r.output("volume", a.volume, 0.072699, 1e-5));
    r.check("Einstein constant reproduced", r.output("lambda_einstein", a.lambda_einstein, 45.554, 5e-3));
    r.output("K", a.K, "maximum of Delta s^2 over the slab");
    r.output("K_argmax_t", a.K_argmax);
    r.output("ratio", a.ratio, "12 K / kappa");
    r.verdict("normalized sup Delta s^2 below 2.65", a.ratio < 2.65 ? Status::verified : Status::failed,
              2.65 - a.ratio);
    r.verdict("cone over the Page metric unstable (ratio < 15/4)",
              a.cone_unstable ? Status::verified : Status::undecided, kConeInstabilityThreshold - a.ratio);
    r.verdict("Page shrinker variation positive (ratio < 6)",
              a.shrinker_unstable ? Status::verified : Status::undecided, kShrinkerInstabilityThreshold - a.ratio);
    const auto gap = radial::gap_lemma_test(kConeInstabilityThreshold - a.ratio);
    r.output("gap_lemma_lambda", gap.lambda, "n = 5 witness eigenvalue");
    if (gap.witness) r.output("gap_lemma_witness_form", gap.witness->form, "radial quadratic form");
    r.verdict("gap lemma witness at n = 5", gap.verdict == radial::Verdict::unstable ? Status::verified : Status::undecided,
              gap.lambda - kFourManifoldGap);

    write_csv_file(csv, [&](std::ostream& os) {
        os << "t,delta_s2\n";
        const int n = 201;
        for (int k = 0; k < n; ++k) {
            const double t = a.a_star + (1.0 - a.a_star) * k / (n - 1);
            os << t << ',' << page::page_delta_s2(a.a_star, t).value << '\n';
        }
    });
}

// ---------------------------------------------------------------- clw

inline void run_clw(AnalysisReport& r, double a, double K, const std::string& csv) {
    r.input("a", a);
    r.input("clw_k_bound", K);
    r.input("K_provenance", "external balanced-metric bound at a = 2");
    if (!(a > 1.0)) throw UsageError("--a must exceed 1 for the CLW pentagon");
    const auto c = clw::clw_full_analysis(a, K);
    const bool default_class = std::abs(a - clw::kDefaultClass) < 1e-12;
    const auto& ci = c.integrals.closed_form;
    r.output("A", ci.A, "closed form");
    r.output("B", ci.B, "closed form");
    r.output("C", ci.C, "closed form");
    r.output("D", ci.D, "closed form");
    r.output("E0", ci.E0, "closed form");
    r.output("E1", ci.E1, "closed form");
    r.output("integrals_max_relative_difference", c.integrals.max_relative_difference,
             "closed form vs triangulated");
    r.verdict("pentagon closed forms match exact triangulation (1e-12)",
              c.integrals.max_relative_difference <= 1e-12 ? Status::verified : Status::failed,
              1e-12 - c.integrals.max_relative_difference);
    r.output("ibp_residual", c.scal.residual, "Donaldson linear system");
    r.verdict("integration-by-parts residuals below 1e-9", c.scal.residual < 1e-9 ? Status::verified : Status::failed,
              1e-9 - c.scal.residual);
    if (default_class) {
        r.check("a1 reproduced", r.output("a1", c.scal.a1, -0.423, 1e-3));
        r.check("a2 reproduced", r.output("a2", c.scal.a2, -0.423, 1e-3));
        r.check("b reproduced", r.output("b", c.scal.b, 2.790, 1e-3));
        r.check("Lambda reproduced", r.output("lambda_einstein", c.lambda_einstein, 1.886, 1e-2));
        r.check("kappa reproduced", r.output("kappa", c.kappa, 7.54, 4e-2));
    } else {
        r.output("a1", c.scal.a1);
        r.output("a2", c.scal.a2);
        r.output("b", c.scal.b);
        r.output("lambda_einstein", c.lambda_einstein);
        r.output("kappa", c.kappa);
    }
    r.output("int_s2", c.einstein.int_s2);
    r.output("volume", c.einstein.volume);
    r.output("min_vertex_scal", c.einstein.min_vertex_scal);
    r.output("ratio", c.ratio, "12 K_input / kappa");
    if (default_class && std::abs(K - clw::kDefaultKBound) < 1e-12)
        r.verdict("normalized sup Delta s^2 below 2.17", c.ratio < 2.17 ? Status::verified : Status::failed,
                  2.17 - c.ratio, true);
    r.verdict("cone over the CLW metric unstable (ratio < 15/4); depends on external extremal-metric bound",
              c.cone_unstable ? Status::verified : Status::undecided, kConeInstabilityThreshold - c.ratio, true);
    r.verdict("CLW shrinker variation positive (ratio < 6); depends on external extremal-metric bound",
              c.shrinker_unstable ? Status::verified : Status::undecided, kShrinkerInstabilityThreshold - c.ratio,
              true);

    write_csv_file(csv, [&](std::ostream& os) {
        os << "a,lambda,kappa,ratio\n";
        for (int k = 0; k <= 10; ++k) {
            const double ak = 1.9 + 0.01 * k;
            const auto e = clw::clw_einstein_constant(ak);
            os << ak << ',' << e.lambda << ',' << e.kappa << ',' << 12.0 * K / e.kappa << '\n';
        }
    });
}

// ---------------------------------------------------------------- radial

inline void report_witness(AnalysisReport& r, const std::optional<radial::RadialWitness>& w, const std::string& csv) {
    if (!w) return;
    r.output("witness_form", w->form, "radial quadratic form");
    r.output("witness_plateau", w->plateau);
    r.output("witness_ramp", w->ramp);
    r.output("witness_nodes", static_cast<double>(w->profile.size()));
    write_csv_file(csv, [&](std::ostream& os) { radial::write_csv(os, w->profile); });
}

inline void run_cone_threshold(AnalysisReport& r, int n, std::optional<double> lambda, const std::string& csv) {
    r.input("n", n);
    const double threshold = radial::ConeSpec(n, 0.0).threshold();
    r.output("threshold", threshold, "(n-2)^2/4");
    r.output("hardy_constant", radial::hardy_constant(n));
    if (lambda) {
        r.input("lambda", *lambda);
        const radial::ConeSpec spec(n, *lambda);
        const auto w = radial::instability_witness(spec);
        report_witness(r, w, csv);
        if (w) {
            r.verdict("compactly supported radial witness with negative form", Status::verified, *lambda - threshold);
        } else {
            const double eig = radial::min_form_eigenvalue(spec, radial::log_grid());
            r.output("min_form_eigenvalue", eig, "default log grid");
            r.verdict("no witness: lambda at or below the Hardy threshold", Status::undecided, threshold - *lambda);
        }
        return;
    }
    const radial::ConeSpec above(n, threshold * (1.0 + 1e-3)), below(n, threshold * (1.0 - 1e-3));
    const auto w = radial::instability_witness(above);
    report_witness(r, w, csv);
    const double eig = radial::min_form_eigenvalue(below, radial::log_grid());
    r.output("min_form_eigenvalue_below", eig, "default log grid, lambda = threshold (1 - 1e-3)");
    r.verdict("witness exists just above the threshold", w ? Status::verified : Status::failed,
              w ? std::optional<double>(-w->form) : std::nullopt);
    r.verdict("discrete form non-negative just below the threshold", eig >= -1e-10 ? Status::verified : Status::failed,
              eig);
}

inline void run_product(AnalysisReport& r, int n1, int n2, const std::string& csv) {
    r.input("n1", n1);
    r.input("n2", n2);
    const auto v = radial::product_cone_test(n1, n2);
    r.output("n", v.n);
    r.output("prefactor", v.prefactor, "1/n1 + 1/n2");
    r.output("lambda", v.lambda, "2(n-2)");
    r.output("threshold", 0.25 * (v.n - 2) * (v.n - 2));
    r.output("reduction_residual", v.reduction_residual);
    r.verdict("zeroth-order reduction identity (exact rational)", v.reduction_exact ? Status::verified : Status::failed);
    report_witness(r, v.witness, csv);
    r.verdict("cone over the product unstable", v.verdict == radial::Verdict::unstable ? Status::verified
                                                                                         : Status::undecided,
              v.lambda - 0.25 * (v.n - 2) * (v.n - 2));
    const bool expected = v.n < 10;
    r.verdict("verdict matches the rule n < 10", (v.verdict == radial::Verdict::unstable) == expected
                                                     ? Status::verified
                                                     : Status::failed);
}

inline void run_ke(AnalysisReport& r, int n, int h11, const std::string& csv) {
    r.input("n", n);
    r.input("h11", h11);
    const auto v = radial::ke_cone_test(n, h11);
    r.output("lambda", v.lambda, "2(n-2)");
    r.output("threshold", 0.25 * (n - 2) * (n - 2));
    report_witness(r, v.witness, csv);
    r.verdict("cone over the Kahler-Einstein base unstable",
              v.verdict == radial::Verdict::unstable ? Status::verified : Status::undecided,
              v.lambda - 0.25 * (n - 2) * (n - 2));
}

// ---------------------------------------------------------------- cp2

struct RangeArg {
    std::string lo;
    std::string hi;
};

inline RangeArg parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {text, text};
    return {text.substr(0, dots), text.substr(dots + 2)};
}

inline Rational parse_rational(const std::string& text) {
    try {
        return rational_from_decimal(text);
    } catch (const std::exception&) {
        throw UsageError("not a decimal number: " + text);
    }
}

inline void run_cp2_point(AnalysisReport& r, const std::string& alpha, const std::string& beta, const std::string& eps) {
    r.input("alpha", alpha);
    r.input("beta", beta);
    r.input("eps", eps);
    const cp2::ProofParameters<Rational> p{parse_rational(alpha), parse_rational(beta), parse_rational(eps)};
    if (!(p.epsilon > 0)) throw UsageError("--eps must be positive");
    const auto c = cp2::cp2_coefficients(p);
    const bool witness = p.alpha == Rational(21, 5) && p.beta == 4 && p.epsilon == 1;
    const std::array<std::pair<const char*, Rational>, 4> named{
        {{"c_A", c.c_A}, {"c_B", c.c_B}, {"c_C", c.c_C}, {"c_trC", c.c_trC}}};
    const std::array<double, 4> targets{2.8, 0.36, 1.0, 1.2};
    for (std::size_t k = 0; k < 4; ++k) {
        if (witness)
            r.output(named[k].first, to_double(named[k].second), targets[k], 0.0, "exact rational vs published");
        else
            r.output(named[k].first, to_double(named[k].second), "exact rational");
    }
    if (witness) {
        const bool exact = c.c_A == Rational(14, 5) && c.c_B == Rational(9, 25) && c.c_C == 1 && c.c_trC == Rational(6, 5);
        r.verdict("coefficients equal (2.8, 0.36, 1, 1.2) exactly", exact ? Status::verified : Status::failed);
    }
    const bool feasible = cp2::cp2_feasible(p);
    r.verdict("all four coefficients non-negative (exact)", feasible ? Status::verified : Status::undecided,
              to_double(c.min()));
    const auto kh = cp2::kato_hardy_constants(5);
    r.output("kato_hardy_scalar", kh.scalar);
    r.output("kato_hardy_vector", kh.vector);
    r.output("kato_hardy_tensor", kh.tensor);
}

inline void run_cp2_search(AnalysisReport& r, const std::string& alpha_range, const std::string& beta_range,
                           const std::string& eps_range, const std::string& step, const std::string& csv) {
    r.input("alpha_range", alpha_range);
    r.input("beta_range", beta_range);
    r.input("eps_range", eps_range);
    r.input("step", step);
    const Rational q = parse_rational(step);
    if (!(q > 0)) throw UsageError("--step must be positive");
    auto axis = [&](const std::string& text) {
        const auto rg = parse_range(text);
        const cp2::GridAxis ax{parse_rational(rg.lo), parse_rational(rg.hi), q};
        if (ax.hi < ax.lo) throw UsageError("range with hi < lo: " + text);
        return ax;
    };
    const auto ea = axis(eps_range);
    if (!(ea.lo > 0)) throw UsageError("eps range must be positive");
    const auto region = cp2::cp2_feasible_region(axis(alpha_range), axis(beta_range), ea, !csv.empty());
    r.output("scanned", static_cast<double>(region.scanned));
    r.output("feasible", static_cast<double>(region.feasible));
    r.verdict("feasible region non-empty", region.feasible > 0 ? Status::verified : Status::undecided);
    r.verdict("every grid-feasible point passes the exact re-check",
              region.exact_recheck_passed ? Status::verified : Status::failed);
    if (region.feasible > 0) {
        const char* names[3] = {"alpha", "beta", "eps"};
        for (int d = 0; d < 3; ++d) {
            r.output(std::string(names[d]) + "_min", region.hull_lo[d], "feasible bounding box");
            r.output(std::string(names[d]) + "_max", region.hull_hi[d], "feasible bounding box");
        }
        const auto& best = *region.max_margin;
        r.output("best_alpha", to_double(best.exact.alpha), "largest minimum coefficient");
        r.output("best_beta", to_double(best.exact.beta), "largest minimum coefficient");
        r.output("best_eps", to_double(best.exact.epsilon), "largest minimum coefficient");
        r.output("best_min_coefficient", region.max_margin_value);
    }
    write_csv_file(csv, [&](std::ostream& os) {
        os << "alpha,beta,eps,c_A,c_B,c_C,c_trC\n";
        for (const auto& p : region.points)
            os << to_double(p.exact.alpha) << ',' << to_double(p.exact.beta) << ',' << to_double(p.exact.epsilon) << ','
               << p.coefficients.c_A << ',' << p.coefficients.c_B << ',' << p.coefficients.c_C << ','
               << p.coefficients.c_trC << '\n';
    });
}

// ---------------------------------------------------------------- polytope

inline void run_polytope(AnalysisReport& r, const std::string& shape, std::optional<double> a,
                         const std::string& facets_path, const std::string& csv) {
    std::optional<DelzantPolygon> poly;
    if (!facets_path.empty()) {
        r.input("facets", facets_path);
        std::ifstream in(facets_path);
        if (!in) throw UsageError("cannot open facet file " + facets_path);
        try {
            poly = polygon_from_facets(parse_facets(in));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        r.input("shape", shape);
        if (shape == "square") {
            poly = unit_square();
        } else if (shape == "page") {
            const double av = a.value_or(page::page_critical_a());
            r.input("a", av);
            if (!(av > 0.0 && av < 1.0)) throw UsageError("--a must lie in (0, 1) for the Page trapezium");
            poly = page::page_polygon(av);
        } else if (shape == "clw") {
            const double av = a.value_or(clw::kDefaultClass);
            r.input("a", av);
            if (!(av > 1.0)) throw UsageError("--a must exceed 1 for the CLW pentagon");
            poly = clw::clw_polygon(av);
        } else {
            throw UsageError("unknown shape " + shape);
        }
    }
    const auto& p = *poly;
    r.output("vertices", static_cast<double>(p.vertices().size()));
    r.output("area", p.area(), "exact triangulation");
    r.verdict("Delzant condition at every vertex", p.is_delzant() ? Status::verified : Status::undecided);

    struct Row {
        int i, j;
        double exact, quad;
    };
    std::vector<Row> rows;
    double worst = 0.0;
    for (int deg = 0; deg <= 4; ++deg)
        for (int i = deg; i >= 0; --i) {
            const int j = deg - i;
            const double e = integrate_monomial(p, i, j);
            const double qv =
                integrate_function(p, [&](Point2 x) { return std::pow(x.x1, i) * std::pow(x.x2, j); }, 1e-13).value;
            worst = std::max(worst, std::abs(e - qv) / std::max(std::abs(e), 1e-300));
            rows.push_back({i, j, e, qv});
            r.output("x1^" + std::to_string(i) + " x2^" + std::to_string(j), e, "exact triangulation");
        }
    r.output("monomial_max_relative_difference", worst, "exact vs adaptive quadrature");
    r.verdict("exact monomial integrals match quadrature (1e-8)", worst <= 1e-8 ? Status::verified : Status::failed,
              1e-8 - worst);

    const auto s = extremal_affine_coefficients(p);
    r.output("extremal_a1", s.a1, "Donaldson linear system");
    r.output("extremal_a2", s.a2, "Donaldson linear system");
    r.output("extremal_b", s.b, "Donaldson linear system");
    r.output("ibp_residual", s.residual);
    r.verdict("integration-by-parts residuals below 1e-9", s.residual < 1e-9 ? Status::verified : Status::failed,
              1e-9 - s.residual);

    write_csv_file(csv, [&](std::ostream& os) {
        os << "i,j,exact,quadrature\n";
        for (const auto& row : rows) os << row.i << ',' << row.j << ',' << row.exact << ',' << row.quad << '\n';
    });
}

// ---------------------------------------------------------------- driver

/// Runs one subcommand; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for instability of Ricci-flat cones and Ricci shrinkers", "rfcone"};
    app.require_subcommand(1);
    bool json = false;
    std::string csv;
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "print the report as JSON");
        sub->add_option("--csv", csv, "write profile or sweep data to this CSV file");
    };

    auto* page_cmd = app.add_subcommand("page", "full Page metric pipeline");
    common(page_cmd);

    double clw_a = clw::kDefaultClass, clw_k = clw::kDefaultKBound;
    auto* clw_cmd = app.add_subcommand("clw", "Chen-LeBrun-Weber pipeline");
    clw_cmd->add_option("--a", clw_a, "class parameter a > 1");
    clw_cmd->add_option("--clw-k-bound", clw_k, "external bound on sup Delta s^2");
    common(clw_cmd);

    int cone_n = 0;
    std::optional<double> cone_lambda;
    auto* cone_cmd = app.add_subcommand("cone-threshold", "radial Hardy threshold test");
    cone_cmd->add_option("--n", cone_n, "cone dimension")->required();
    cone_cmd->add_option("--lambda", cone_lambda, "link eigenvalue");
    common(cone_cmd);

    int n1 = 0, n2 = 0;
    auto* product_cmd = app.add_subcommand("product", "cone over a product of Einstein manifolds");
    product_cmd->add_option("--n1", n1)->required();
    product_cmd->add_option("--n2", n2)->required();
    common(product_cmd);

    int ke_n = 0, h11 = 0;
    auto* ke_cmd = app.add_subcommand("ke", "cone over a Kahler-Einstein base");
    ke_cmd->add_option("--n", ke_n, "cone dimension")->required();
    ke_cmd->add_option("--h11", h11)->required();
    common(ke_cmd);

    std::string alpha = "4.2", beta = "4", eps = "1";
    bool search = false;
    std::string alpha_range = "3.9..4.3", beta_range = "3.5..4.2", eps_range = "1", step = "0.01";
    auto* cp2_cmd = app.add_subcommand("cp2-check", "coefficient check of the CP2 stability estimate");
    auto* alpha_opt = cp2_cmd->add_option("--alpha", alpha);
    auto* beta_opt = cp2_cmd->add_option("--beta", beta);
    auto* eps_opt = cp2_cmd->add_option("--eps", eps);
    auto* search_opt = cp2_cmd->add_flag("--search", search, "scan a parameter grid");
    cp2_cmd->add_option("--alpha-range", alpha_range, "lo..hi")->needs(search_opt);
    cp2_cmd->add_option("--beta-range", beta_range, "lo..hi")->needs(search_opt);
    cp2_cmd->add_option("--eps-range", eps_range, "lo..hi")->needs(search_opt);
    cp2_cmd->add_option("--step", step, "grid step")->needs(search_opt);
    search_opt->excludes(alpha_opt)->excludes(beta_opt)->excludes(eps_opt);
    common(cp2_cmd);

    std::string shape = "square", facets;
    std::optional<double> poly_a;
    auto* poly_cmd = app.add_subcommand("polytope-integrals", "exact and quadrature integrals on a Delzant polygon");
    auto* shape_opt =
        poly_cmd->add_option("--shape", shape)->check(CLI::IsMember({"page", "clw", "square"}));
    poly_cmd->add_option("--a", poly_a, "class parameter");
    poly_cmd->add_option("--facets", facets, "facet file: one 'n1 n2 c' line per facet")->excludes(shape_opt);
    common(poly_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    AnalysisReport rep(chosen->get_name());
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (chosen == page_cmd) run_page(rep, csv);
        else if (chosen == clw_cmd) run_clw(rep, clw_a, clw_k, csv);
        else if (chosen == cone_cmd) run_cone_threshold(rep, cone_n, cone_lambda, csv);
        else if (chosen == product_cmd) run_product(rep, n1, n2, csv);
        else if (chosen == ke_cmd) run_ke(rep, ke_n, h11, csv);
        else if (chosen == cp2_cmd) {
            if (search) run_cp2_search(rep, alpha_range, beta_range, eps_range, step, csv);
            else run_cp2_point(rep, alpha, beta, eps);
        } else if (chosen == poly_cmd) run_polytope(rep, shape, poly_a, facets, csv);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        rep.verdict(std::string("numerical failure: ") + e.what(), Status::failed);
        code = kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    rep.set_runtime_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    if (json)
        out << rep.to_json().dump(2) << '\n';
    else
        rep.write_table(out);
    if (code == kExitOk && rep.any_failed()) code = kExitFailedVerdict;
    return code;
}

}  // namespace rfcone::cli
