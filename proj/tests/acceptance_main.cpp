// Acceptance suite: one criterion per function, one pass/fail line per criterion.
// Run with no arguments for the full suite or with an index (1..9) for one criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "pvmcat/commands.hpp"

using namespace pvmcat;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

const MeasurementParams kFigureMeas{kPi / 2.0, 7.0 * kPi / 9.0, 2.0};

std::vector<double> range_inclusive(double lo, double hi, double step) {
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = lo + i * step;
        if (x > hi + 1e-12) break;
        v.push_back(x);
    }
    return v;
}

struct SeriesStats {
    double min_R = 1e300;
    int sign_changes = 0;
    int ok_points = 0;
};

SeriesStats series_stats(const std::vector<ScanPoint>& pts) {
    SeriesStats s;
    double prev = 0.0;
    bool have_prev = false;
    for (const auto& p : pts) {
        if (!p.ok) continue;
        ++s.ok_points;
        s.min_R = std::min(s.min_R, p.R);
        if (have_prev && prev * p.R < 0.0) ++s.sign_changes;
        prev = p.R;
        have_prev = true;
    }
    return s;
}

// ---- criterion 1: Gamma = 0 null result -------------------------------------
Outcome criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const MomentOperators ops = MomentOperators::build(64);
    for (double om : {0.0, kPi / 2.0, kPi})
        for (double a = 0.25; a <= 3.0 + 1e-12; a += 0.25) {
            const CatParams cat{a, 0.0, om};
            const MeasurementParams meas{kPi / 2.0, 7.0 * kPi / 9.0, 0.0};
            const auto fin = final_pointer_state(cat_vector(64, cat), meas);
            worst = std::max(worst, std::abs(ass_witness_R(moments_oracle(fin.state, ops))));
        }
    const double dt = seconds_since(t0);
    const bool pass = worst <= 1e-9 && dt < 5.0;
    return {pass, "max |R| = " + fmt(worst) + " (tol 1e-9), runtime " + fmt(dt) + " s (< 5 s)"};
}

// ---- criterion 2: witness sign structure along |alpha| ----------------------------------
Outcome criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> alphas = range_inclusive(0.0, 5.0, 0.025);
    bool pass = true;
    std::ostringstream detail;
    for (double om : {0.0, kPi / 2.0, kPi}) {
        const CatParams cat{1.0, 0.0, om};
        const auto pts = R_scan(cat, kFigureMeas, ScanAxis::AlphaAbs, alphas, 128);
        const SeriesStats s = series_stats(pts);
        const bool series_ok = s.min_R < -1e-6 && s.sign_changes >= 2;
        pass = pass && series_ok;
        detail << "omega=" << fmt(om) << ": min R = " << fmt(s.min_R) << ", sign changes = "
               << s.sign_changes << (series_ok ? "" : " (needs min < -1e-6 and >= 2)") << "; ";
    }
    const double dt = seconds_since(t0);
    if (dt >= 30.0) pass = false;
    detail << "runtime " << fmt(dt) << " s (< 30 s)";
    return {pass, detail.str()};
}

// ---- criterion 3: odd-cat crossover along Gamma ---------------------------------------
Outcome criterion_3() {
    const CatParams cat{1.0, 0.0, kPi};
    const MeasurementParams meas{kPi / 2.0, 7.0 * kPi / 9.0, 0.0};
    const auto small = R_scan(cat, meas, ScanAxis::Gamma, range_inclusive(0.1, 1.0, 0.1), 128);
    const auto large = R_scan(cat, meas, ScanAxis::Gamma, range_inclusive(3.0, 4.0, 0.1), 128);
    double min_small = 1e300, min_large = 1e300;
    for (const auto& p : small)
        if (p.ok) min_small = std::min(min_small, p.R);
    for (const auto& p : large)
        if (p.ok) min_large = std::min(min_large, p.R);
    const bool has_negative = min_small < 0.0;
    const bool dies_out = min_large >= -1e-9;
    return {has_negative && dies_out,
            "min R on (0,1] = " + fmt(min_small) + (has_negative ? "" : " (needs < 0)") +
                "; min R on [3,4] = " + fmt(min_large) + (dies_out ? "" : " (needs >= -1e-9)")};
}

// ---- criterion 4: R identity on randomized final states ---------------------
Outcome criterion_4() {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ua(0.0, 2.0), uang(0.0, 2.0 * kPi), uth(0.2, 2.9),
        ug(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const CatParams cat{ua(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug(rng)};
        const auto fin = final_pointer_state(cat_vector(64, cat), meas);
        const MomentSet m = moments_oracle(fin.state);
        const double lhs = y_variance(fin.state, 1) - (m.n + 0.5);
        worst = std::max(worst, std::abs(lhs - ass_witness_R(m)));
    }
    return {worst <= 1e-9, "max |identity residual| over 25 states = " + fmt(worst) +
                               " (tol 1e-9)"};
}

struct StandardConfig {
    double omega;
    double gamma;
};

const std::vector<StandardConfig> standard_configs() {
    std::vector<StandardConfig> v;
    for (double om : {0.0, kPi / 2.0, kPi})
        for (double g : {0.0, 0.5, 2.0}) v.push_back({om, g});
    return v;
}

PhaseSpaceGrid standard_grid(const StandardConfig& c, int dim) {
    const CatParams cat{1.0, 0.0, c.omega};
    MeasurementParams meas = kFigureMeas;
    meas.gamma = c.gamma;
    const auto fin = final_pointer_state(cat_vector(dim, cat), meas);
    return wigner_grid(fin.state, -4.0, 4.0, -4.0, 4.0, 201, 201);
}

// ---- criterion 5: Wigner bound and normalization ----------------------------
Outcome criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_peak = 0.0, worst_integral = 0.0;
    for (const auto& c : standard_configs()) {
        const PhaseSpaceGrid grid = standard_grid(c, 64);
        worst_peak = std::max(worst_peak, grid.values.cwiseAbs().maxCoeff());
        worst_integral = std::max(worst_integral, std::abs(integral_check(grid, 1e-3) - 1.0));
    }
    const double dt = seconds_since(t0);
    const bool pass = worst_peak <= 2.0 / kPi + 1e-6 && worst_integral <= 1e-3 && dt < 60.0;
    return {pass, "max |W| = " + fmt(worst_peak) + " (bound " + fmt(2.0 / kPi) +
                      " + 1e-6), max |integral - 1| = " + fmt(worst_integral) +
                      " (tol 1e-3), runtime " + fmt(dt) + " s (< 60 s)"};
}

// ---- criterion 6: negativity monotonicity for the even cat ------------------
Outcome criterion_6() {
    std::vector<double> nv;
    for (double g : {0.0, 0.5, 2.0}) {
        const PhaseSpaceGrid grid = standard_grid({0.0, g}, 64);
        nv.push_back(negativity_volume(grid, 1e-3));
    }
    const bool first = nv[0] <= nv[1] + 1e-6;
    const bool second = nv[1] <= nv[2] + 1e-6;
    return {first && second,
            "negativity volumes: Gamma=0: " + fmt(nv[0]) + ", Gamma=0.5: " + fmt(nv[1]) +
                ", Gamma=2: " + fmt(nv[2]) +
                (first ? "" : " (Gamma=0 <= Gamma=0.5 violated)") +
                (second ? "" : " (Gamma=0.5 <= Gamma=2 violated)")};
}

// ---- criterion 7: route agreement -------------------------------------------
Outcome criterion_7() {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ua(0.2, 1.2), uang(0.0, 2.0 * kPi), uth(0.3, 2.7),
        ug(-2.0, 2.0);
    std::vector<Complex> zs;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) zs.emplace_back(-2.0 + 0.2 * i, -2.0 + 0.2 * j);

    double worst_routes = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
        const CatParams cat{ua(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug(rng)};
        const auto fin = final_pointer_state(cat_vector(64, cat), meas);
        const CharFunQuadrature quad = recommended_charfun_quadrature(fin.state, 2.9);
        const std::vector<double> charf = wigner_charfun_batch(fin.state, zs, quad);
        for (std::size_t k = 0; k < zs.size(); ++k)
            worst_routes =
                std::max(worst_routes, std::abs(charf[k] - wigner_point_parity(fin.state, zs[k])));
    }

    // closed form at Gamma = 0 against the bare-cat oracle where the printed
    // expression is faithful (even and odd cats at delta = 0)
    double worst_reduction = 0.0;
    for (double om : {0.0, kPi}) {
        const CatParams cat{1.0, 0.0, om};
        MeasurementParams meas = kFigureMeas;
        meas.gamma = 0.0;
        const FockVector bare = cat_vector(96, cat);
        for (const Complex z : zs)
            worst_reduction = std::max(worst_reduction, std::abs(wigner_analytic(cat, meas, z) -
                                                                 wigner_point_parity(bare, z)));
    }
    const bool pass = worst_routes <= 1e-6 && worst_reduction <= 1e-6;
    return {pass, "parity vs charfun max dev = " + fmt(worst_routes) +
                      " over 10 draws x 441 points (tol 1e-6); Gamma=0 closed form vs oracle "
                      "max dev = " +
                      fmt(worst_reduction) + " (tol 1e-6; Yurke-Stoler phase goes to errata)"};
}

// ---- criterion 8: analytic cross-validation, match or errata ----------------
Outcome criterion_8() {
    ErrataRegistry errata;
    std::mt19937 rng(888);
    std::uniform_real_distribution<double> ua(0.0, 2.0), uang(0.0, 2.0 * kPi), uth(0.2, 2.9),
        ug(-3.0, 3.0);

    double worst_kappa = 0.0;
    int kappa_mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const CatParams cat{ua(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug(rng)};
        const auto fin = final_pointer_state(cat_vector(64, cat), meas);
        const double kappa = kappa_analytic(cat, meas);
        const double dev = std::abs(fin.norm_numeric - 1.0 / kappa);
        worst_kappa = std::max(worst_kappa, dev);
        if (dev > 1e-8) {
            ++kappa_mismatches;
            errata.add({cat, meas, "kappa", format_real(1.0 / kappa),
                        format_real(fin.norm_numeric),
                        relative_error(1.0 / kappa, fin.norm_numeric)});
        }
    }

    int moment_mismatches = 0;
    std::uniform_real_distribution<double> ua_m(0.1, 1.5), ug_m(-2.5, 2.5);
    for (int i = 0; i < 40; ++i) {
        const CatParams cat{ua_m(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug_m(rng)};
        const auto fin = final_pointer_state(cat_vector(64, cat), meas);
        const MomentSet oracle = moments_oracle(fin.state);
        const AnalyticMoments closed = moments_analytic(cat, meas);
        const struct {
            const char* name;
            Complex formula, truth;
        } rows[] = {{"a2", closed.a2, oracle.a2},
                    {"adag2a2", closed.adag2a2, Complex(oracle.adag2a2, 0.0)},
                    {"a4", closed.a4, oracle.a4}};
        for (const auto& r : rows)
            if (std::abs(r.formula - r.truth) > 1e-8) {
                ++moment_mismatches;
                errata.add({cat, meas, r.name, format_complex(r.formula),
                            format_complex(r.truth), relative_error(r.formula, r.truth)});
            }
    }

    int wigner_mismatches = 0;
    for (int i = 0; i < 10; ++i) {
        const CatParams cat{ua_m(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug_m(rng)};
        const auto fin = final_pointer_state(cat_vector(64, cat), meas);
        for (const Complex z : {Complex(0.0, 0.0), Complex(0.7, -0.4), Complex(-1.1, 0.8)}) {
            const double formula = wigner_analytic(cat, meas, z);
            const double truth = wigner_point_parity(fin.state, z);
            if (std::abs(formula - truth) > 1e-6) {
                ++wigner_mismatches;
                errata.add({cat, meas, "wigner(" + format_complex(z) + ")", format_real(formula),
                            format_real(truth), relative_error(formula, truth)});
            }
        }
    }

    std::ofstream out("acceptance_errata.txt");
    errata.write(out);

    // the standard is match-or-errata: every observed mismatch must be on file
    const bool logged_all = errata.size() ==
                            std::size_t(kappa_mismatches + moment_mismatches + wigner_mismatches);
    return {logged_all,
            "kappa: max dev " + fmt(worst_kappa) + ", mismatches " +
                std::to_string(kappa_mismatches) + "/100; moment mismatches " +
                std::to_string(moment_mismatches) + "/120; wigner mismatches " +
                std::to_string(wigner_mismatches) +
                "/30; all filed to acceptance_errata.txt"};
}

// ---- criterion 9: truncation convergence ------------------------------------
Outcome criterion_9() {
    std::ostringstream detail;
    bool pass = true;

    // moments and R across dims; covers |alpha| <= 2 up to |Gamma| = 4 and the
    // criterion-1 grid up to |alpha| = 3
    double worst_R = 0.0;
    for (double om : {0.0, kPi / 2.0, kPi})
        for (double a = 0.25; a <= 3.0 + 1e-12; a += 0.25)
            for (double g : {0.0, 1.0, 2.0, 4.0}) {
                if (g == 4.0 && a > 2.0) continue;
                const CatParams cat{a, 0.0, om};
                MeasurementParams meas = kFigureMeas;
                meas.gamma = g;
                const auto f64 = final_pointer_state(cat_vector(64, cat), meas);
                const auto f128 = final_pointer_state(cat_vector(128, cat), meas);
                const MomentSet m64 = moments_oracle(f64.state);
                const MomentSet m128 = moments_oracle(f128.state);
                const double dev = std::max({std::abs(m64.a2 - m128.a2),
                                             std::abs(m64.a4 - m128.a4),
                                             std::abs(m64.adag2a2 - m128.adag2a2),
                                             std::abs(m64.n - m128.n)});
                worst_R = std::max(worst_R,
                                   std::abs(ass_witness_R(m64) - ass_witness_R(m128)));
                worst_R = std::max(worst_R, dev);
            }
    pass = pass && worst_R <= 1e-8;
    detail << "moments/R dim-64 vs dim-128 max dev = " << fmt(worst_R) << " (tol 1e-8)";

    // the |alpha| scan reproduces the same certified outcome at both dims
    {
        const std::vector<double> alphas = range_inclusive(0.0, 5.0, 0.1);
        const CatParams cat{1.0, 0.0, 0.0};
        const auto s64 = R_scan(cat, kFigureMeas, ScanAxis::AlphaAbs, alphas, 64);
        const auto s128 = R_scan(cat, kFigureMeas, ScanAxis::AlphaAbs, alphas, 128);
        double worst = 0.0;
        int shared = 0;
        for (std::size_t i = 0; i < alphas.size(); ++i)
            if (s64[i].ok && s128[i].ok) {
                worst = std::max(worst, std::abs(s64[i].R - s128[i].R));
                ++shared;
            }
        pass = pass && worst <= 1e-8 && shared > 0;
        detail << "; |alpha| scan shared " << shared << "/" << alphas.size()
               << " certified points, max dev = " << fmt(worst);
    }

    // Wigner points across dims on the strong-measurement configurations
    double worst_w = 0.0;
    for (double om : {0.0, kPi / 2.0, kPi}) {
        const CatParams cat{1.0, 0.0, om};
        const auto f64 = final_pointer_state(cat_vector(64, cat), kFigureMeas);
        const auto f128 = final_pointer_state(cat_vector(128, cat), kFigureMeas);
        for (int i = 0; i < 11; ++i)
            for (int j = 0; j < 11; ++j) {
                const Complex z(-3.0 + 0.6 * i, -3.0 + 0.6 * j);
                worst_w = std::max(worst_w, std::abs(wigner_point_parity(f64.state, z) -
                                                     wigner_point_parity(f128.state, z)));
            }
    }
    pass = pass && worst_w <= 1e-6;
    detail << "; Wigner points dim-64 vs dim-128 max dev = " << fmt(worst_w) << " (tol 1e-6)";

    // kappa agreement across dims
    double worst_k = 0.0;
    std::mt19937 rng(999);
    std::uniform_real_distribution<double> ua(0.0, 2.0), uang(0.0, 2.0 * kPi), uth(0.2, 2.9),
        ug(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const CatParams cat{ua(rng), uang(rng), uang(rng)};
        const MeasurementParams meas{uth(rng), uang(rng), ug(rng)};
        const auto f64 = final_pointer_state(cat_vector(64, cat), meas);
        const auto f128 = final_pointer_state(cat_vector(128, cat), meas);
        worst_k = std::max(worst_k, std::abs(f64.norm_numeric - f128.norm_numeric));
    }
    pass = pass && worst_k <= 1e-8;
    detail << "; oracle norm dim-64 vs dim-128 max dev = " << fmt(worst_k) << " (tol 1e-8)";

    return {pass, detail.str()};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"Gamma=0 null result (no ASS without interaction)", criterion_1},
    {"witness sign structure along |alpha| (R < -1e-6 and >= 2 sign changes per omega series)", criterion_2},
    {"odd-cat crossover along Gamma (negative at small Gamma, gone on [3,4])", criterion_3},
    {"R identity on randomized final pointer states", criterion_4},
    {"Wigner bound and normalization on the standard configurations", criterion_5},
    {"negativity monotonicity for the even cat (Gamma 0 <= 0.5 <= 2)", criterion_6},
    {"Wigner route agreement (parity vs charfun; Gamma=0 closed form)", criterion_7},
    {"analytic cross-validation: match or errata (kappa, moments, Wigner)", criterion_8},
    {"truncation convergence (dim 64 vs 128)", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (int i = 0; i < 9; ++i) {
        if (only != 0 && only != i + 1) continue;
        Outcome out;
        try {
            out = kCriteria[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << kCriteria[i].name << " -- " << out.detail << std::endl;
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
