// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rfcone/cli.hpp"
#include "rfcone/clw.hpp"
#include "rfcone/cp2proof.hpp"
#include "rfcone/page.hpp"
#include "rfcone/polytope.hpp"
#include "rfcone/radial.hpp"
#include "rfcone/toric.hpp"

using namespace rfcone;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> check;
};

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

bool critical_class(std::string& detail) {
    const double a = page::page_critical_a(1e-14);
    detail = fmt("a* = %.10f, 1/a* = %.6f", a, 1.0 / a);
    return near(a, 0.31408, 5e-6) && near(1.0 / a, 3.1839, 5e-4);
}

bool page_kappa(std::string& detail) {
    const auto r = page::page_full_analysis();
    const double k1 = r.kappa, k2 = r.kappa_identity_mean, k3 = r.kappa_from_volume;
    detail = fmt("closed %.6f, identity %.6f, volume %.6f", k1, k2, k3);
    return near(k1, 182.219, 1e-2) && near(k2, 182.219, 1e-2) && near(k3, 182.219, 1e-2) && near(k1, k2, 1e-2) &&
           near(k1, k3, 1e-2) && near(k2, k3, 1e-2);
}

bool page_volume(std::string& detail) {
    const double v = page::page_volume(page::page_critical_a());
    const double lambda = page::page_lambda_from_volume(v);
    detail = fmt("V = %.8f, Lambda = %.6f", v, lambda);
    return near(v, 0.072699, 1e-5) && near(lambda, 45.554, 5e-3);
}

bool page_ratio(std::string& detail) {
    const auto r = page::page_full_analysis();
    detail = fmt("K = %.6f, 12K/kappa = %.6f, margin to 15/4 = %.6f", r.K, r.ratio, 3.75 - r.ratio);
    return r.ratio < 2.65 && r.ratio < 3.75 && 3.75 - r.ratio > 1.0 && r.cone_unstable;
}

bool clw_coefficients(std::string& detail) {
    const auto s = clw::clw_scal(1.958);
    double worst = 0.0;
    for (double a : {1.5, 1.958, 2.0, 3.0}) worst = std::max(worst, clw::clw_integrals(a).max_relative_difference);
    detail = fmt("(%.6f, %.6f, %.6f)", s.a1, s.a2, s.b) + fmt(", integrals max rel diff %.3g", worst);
    return near(s.a1, -0.423, 1e-3) && near(s.a2, -0.423, 1e-3) && near(s.b, 2.790, 1e-3) && worst <= 1e-12;
}

bool clw_normalization(std::string& detail) {
    const auto r = clw::clw_full_analysis(1.958, 1.363);
    std::ostringstream out, err;
    const int code = cli::run({"clw", "--a", "1.958", "--clw-k-bound", "1.363", "--json"}, out, err);
    const auto report = nlohmann::json::parse(out.str());
    std::string status = "missing";
    for (const auto& v : report["verdicts"])
        if (v["claim"].get<std::string>().rfind("cone over the CLW metric unstable", 0) == 0) status = v["status"];
    detail = fmt("Lambda = %.6f, kappa = %.6f, ratio = %.6f", r.lambda_einstein, r.kappa, r.ratio) + ", verdict " + status;
    return code == 0 && near(r.lambda_einstein, 1.886, 1e-2) && near(r.kappa, 7.54, 4e-2) && r.ratio < 2.17 &&
           status == "conjectural";
}

bool radial_thresholds(std::string& detail) {
    bool ok = true;
    for (int n = 5; n <= 12; ++n) {
        const double t = radial::ConeSpec(n, 0.0).threshold();
        const auto above = radial::instability_witness(radial::ConeSpec(n, t * (1 + 1e-3)));
        const radial::ConeSpec below(n, t * (1 - 1e-3));
        const bool none_below = !radial::instability_witness(below);
        const double eig = radial::min_form_eigenvalue(below, radial::log_grid());
        ok = ok && above && above->form < 0.0 && none_below && eig >= -1e-10;
    }
    int products = 0;
    for (int n1 = 1; n1 <= 11; ++n1)
        for (int n2 = 1; n1 + n2 <= 12; ++n2) {
            ++products;
            const auto v = radial::product_cone_test(n1, n2);
            ok = ok && v.reduction_exact && ((v.verdict == radial::Verdict::unstable) == (n1 + n2 + 1 < 10));
        }
    ok = ok && radial::product_cone_test(2, 2).verdict == radial::Verdict::unstable;
    for (int n = 5; n < 10; ++n)
        for (int h11 = 2; h11 <= 4; ++h11) ok = ok && radial::ke_cone_test(n, h11).verdict == radial::Verdict::unstable;
    detail = fmt("n = 5..12 at +-1e-3, %g product pairs, KE n = 5..9", products);
    return ok;
}

bool cp2_step(std::string& detail) {
    const auto c = cp2::cp2_coefficients(cp2::reference_witness());
    const bool exact =
        c.c_A == Rational(14, 5) && c.c_B == Rational(9, 25) && c.c_C == 1 && c.c_trC == Rational(6, 5);
    const bool infeasible = !cp2::cp2_feasible(cp2::ProofParameters<Rational>{0, 0, 1}) &&
                            !cp2::cp2_feasible(cp2::ProofParameters<Rational>{4, 3, 1});
    const auto region = cp2::cp2_default_search(true);
    bool contains = false;
    for (const auto& p : region.points)
        contains = contains || (p.exact.alpha == Rational(21, 5) && p.exact.beta == 4 && p.exact.epsilon == 1);
    detail = fmt("coefficients (%.2f, %.2f, %.2f", to_double(c.c_A), to_double(c.c_B), to_double(c.c_C)) +
             fmt(", %.2f), feasible grid points %g", to_double(c.c_trC), static_cast<double>(region.feasible));
    return exact && infeasible && region.feasible > 0 && contains && region.exact_recheck_passed;
}

bool oracles(std::string& detail) {
    double mono = 0.0;
    for (const auto& p : {unit_square(), page::page_polygon(page::page_critical_a()), clw::clw_polygon(1.958)})
        for (int deg = 0; deg <= 4; ++deg)
            for (int i = 0; i <= deg; ++i) {
                const int j = deg - i;
                const double e = integrate_monomial(p, i, j);
                const double q =
                    integrate_function(p, [&](Point2 x) { return std::pow(x.x1, i) * std::pow(x.x2, j); }, 1e-13).value;
                mono = std::max(mono, std::abs(e - q) / std::abs(e));
            }

    const double a = page::page_critical_a();
    const auto u = page::page_potential(a);
    const auto s = page::page_scal_function(a);
    double abreu = 0.0, order = 0.0;
    for (Point2 x : {Point2{0.3, 0.35}, Point2{0.1, 0.6}, Point2{0.5, 0.2}}) {
        abreu = std::max(abreu, std::abs(abreu_scalar_curvature(u, x, 1e-3) - s(x)));
        const double e1 = abreu_scalar_curvature(u, x, 4e-3) - s(x), e2 = abreu_scalar_curvature(u, x, 2e-3) - s(x);
        order = std::max(order, std::abs(e1 / e2 - 4.0));
    }

    double ibp = 0.0;
    for (const auto& p : {unit_square(), page::page_polygon(a), clw::clw_polygon(1.5), clw::clw_polygon(1.958),
                          clw::clw_polygon(2.0), clw::clw_polygon(3.0)})
        ibp = std::max(ibp, extremal_affine_coefficients(p).residual);
    ibp = std::max(ibp, clw::clw_scal(1.958).residual);

    detail = fmt("monomial rel %.2g, Abreu dev %.2g, ", mono, abreu) + fmt("Richardson |ratio-4| %.2g, IBP %.2g", order, ibp);
    return mono <= 1e-8 && abreu <= 1e-4 && order < 0.1 && ibp < 1e-9;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "critical Page class", critical_class},
        {2, "Page scalar curvature three ways", page_kappa},
        {3, "Page volume and Einstein constant", page_volume},
        {4, "Page instability ratio", page_ratio},
        {5, "CLW extremal coefficients and pentagon integrals", clw_coefficients},
        {6, "CLW normalization and ratio (conjectural)", clw_normalization},
        {7, "radial thresholds and cone verdicts", radial_thresholds},
        {8, "CP2 quadratic-form coefficients", cp2_step},
        {9, "oracle equivalences", oracles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
