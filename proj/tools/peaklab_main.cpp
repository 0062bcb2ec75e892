// Command-line front end: Cantor measure coefficient tables, Rajchman/Pisot
// classification, peak-candidate construction and support-pair verification.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "peaklab/classify.hpp"
#include "peaklab/fourier.hpp"
#include "peaklab/io.hpp"
#include "peaklab/peaks.hpp"
#include "peaklab/support.hpp"

using namespace peaklab;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapAbort = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + out_path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<std::int64_t> parse_poly(const std::string& text) {
    std::vector<std::int64_t> coeffs;
    std::string cur;
    for (const char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("malformed polynomial coefficient list");
            std::size_t pos = 0;
            coeffs.push_back(std::stoll(cur, &pos));
            if (pos != cur.size()) throw std::invalid_argument("malformed polynomial coefficient");
            cur.clear();
        } else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
            cur += ch;
        } else {
            throw std::invalid_argument("malformed polynomial coefficient list");
        }
    }
    return coeffs;
}

// seedable uniform draw independent of std distribution internals
double uniform01(std::mt19937& gen) {
    const std::uint64_t hi = gen() >> 5;
    const std::uint64_t lo = gen() >> 6;
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) / 9007199254740992.0;
}

struct CoeffsOptions {
    std::string xi;
    std::int64_t min_n = 0;
    std::int64_t max_n = 0;
    std::string method = "product";
    double tol = 1e-12;
    int stage = -1;
    double oracle_bound = 2e-3;
    std::string format = "csv";
    std::string out;
};

int run_coeffs(const CoeffsOptions& opt) {
    const RatioParam xi = RatioParam::parse(opt.xi);
    if (opt.max_n < opt.min_n) throw std::invalid_argument("empty index range");
    if (opt.format != "csv" && opt.format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    if (opt.method == "product" || opt.method == "oracle") {
        const CoeffMethod m =
            opt.method == "product" ? CoeffMethod::product : CoeffMethod::oracle;
        int stage = opt.stage;
        if (m == CoeffMethod::oracle && stage < 0) {
            std::int64_t worst = std::max(std::llabs(opt.min_n), std::llabs(opt.max_n));
            stage = oracle_stage_for(xi, worst, opt.oracle_bound);
        }
        const auto table = coefficient_table(xi, opt.min_n, opt.max_n, m, opt.tol, stage);
        emit(opt.format == "csv" ? table_to_csv(table) : table_to_json(table), opt.out);
        return 0;
    }
    if (opt.method != "both") {
        throw std::invalid_argument("method must be product, oracle or both");
    }
    // product/oracle agreement table, per-row stage chosen for the target bound
    std::string csv;
    JsonWriter jw;
    if (opt.format == "csv") {
        csv = "n,re_product,im_product,re_oracle,im_oracle,abs_diff,bound,within_bound\n";
    } else {
        jw.begin_object();
        jw.field("schema_version", "1");
        jw.field("xi", xi.str());
        jw.field("method", "both");
        jw.field("tol", opt.tol);
        jw.field("oracle_bound", opt.oracle_bound);
        jw.begin_array("rows");
    }
    for (std::int64_t n = opt.min_n; n <= opt.max_n; ++n) {
        const FsCoeff p = fs_coeff_product(xi, n, opt.tol);
        const int stage =
            opt.stage >= 0 ? opt.stage : oracle_stage_for(xi, n, opt.oracle_bound);
        const Complex o = fs_coeff_oracle(xi, stage, n);
        const double diff = std::abs(p.value - o);
        const double bound = p.tail_bound + oracle_error_bound(xi, stage, n);
        if (opt.format == "csv") {
            csv += std::to_string(n) + "," + fmt_double(p.value.real()) + "," +
                   fmt_double(p.value.imag()) + "," + fmt_double(o.real()) + "," +
                   fmt_double(o.imag()) + "," + fmt_double(diff) + "," + fmt_double(bound) +
                   "," + (diff <= bound ? "1" : "0") + "\n";
        } else {
            jw.element_raw("{\"n\":" + std::to_string(n) +
                           ",\"product\":" + fmt_complex_pair(p.value) +
                           ",\"oracle\":" + fmt_complex_pair(o) +
                           ",\"stage\":" + std::to_string(stage) +
                           ",\"abs_diff\":" + fmt_double(diff) +
                           ",\"bound\":" + fmt_double(bound) +
                           ",\"within_bound\":" + (diff <= bound ? "true" : "false") + "}");
        }
    }
    if (opt.format == "csv") {
        emit(csv, opt.out);
    } else {
        jw.end_array();
        jw.end_object();
        emit(jw.str(), opt.out);
    }
    return 0;
}

struct ClassifyOptions {
    std::string xi;
    std::string poly;
    std::string inverse_poly;
    double tol = 1e-9;
    std::string out;
};

int run_classify(const ClassifyOptions& opt) {
    const int given = (!opt.xi.empty()) + (!opt.poly.empty()) + (!opt.inverse_poly.empty());
    if (given != 1) {
        throw std::invalid_argument("give exactly one of --xi, --poly, --inverse-poly");
    }
    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("command", "classify");
    if (!opt.poly.empty()) {
        const auto res = pisot_check(parse_poly(opt.poly), opt.tol);
        w.field("mode", "pisot");
        w.field("verdict", verdict_name(res.verdict));
        w.field("detail", res.detail);
        w.begin_array("roots");
        for (const auto& z : res.roots) w.element_raw(fmt_complex_pair(z));
        w.end_array();
    } else {
        ClassificationVerdict v;
        if (!opt.xi.empty()) {
            const RatioParam xi = RatioParam::parse(opt.xi);
            v = rajchman_classify(xi, opt.tol);
            w.field("mode", "rajchman");
            w.field("xi", xi.str());
        } else {
            const auto poly = parse_poly(opt.inverse_poly);
            const auto probe = pisot_check(poly, opt.tol);
            // the tag must describe a reciprocal > 2 so that xi < 1/2
            bool has_big_real = false;
            for (const auto& z : probe.roots) {
                if (std::abs(z.imag()) < 1e-9 && z.real() > 2.0) has_big_real = true;
            }
            if (!has_big_real) {
                throw std::invalid_argument(
                    "inverse polynomial has no real root > 2, so xi is not in (0, 1/2)");
            }
            switch (probe.verdict) {
                case PisotVerdict::Pisot:
                    v.verdict = RajchmanVerdict::NotRajchman_PisotReciprocal;
                    break;
                case PisotVerdict::NotPisot:
                    v.verdict = RajchmanVerdict::Rajchman_NotPisotReciprocal;
                    break;
                case PisotVerdict::Inconclusive:
                    v.verdict = RajchmanVerdict::Unknown;
                    break;
            }
            v.evidence = probe.detail;
            v.roots = probe.roots;
            w.field("mode", "rajchman");
            w.field("inverse_poly", opt.inverse_poly);
        }
        w.field("verdict", verdict_name(v.verdict));
        w.field("evidence", v.evidence);
        w.begin_array("roots");
        for (const auto& z : v.roots) w.element_raw(fmt_complex_pair(z));
        w.end_array();
    }
    w.end_object();
    emit(w.str(), opt.out);
    return 0;
}

struct PeakOptions {
    std::string xi = "2/13";
    double alpha = 0.6;
    int gen = 10;
    int degree = 1 << 12;
    std::string format = "json";
    std::string csv_emit = "series";
    bool with_coefficients = false;
    bool vanish = false;
    std::string out;
};

void peak_diag_json(JsonWriter& w, const PeakDiagnostics& d) {
    w.begin_object("diagnostics");
    w.field("sup_grid", d.sup_grid);
    w.field("sup_radius", d.sup_radius);
    w.field("sup_grid_size", d.sup_grid_size);
    w.field("min_re_herglotz", d.min_re_herglotz);
    w.field("deficiency", d.deficiency);
    w.field("endpoint_count", d.endpoint_count);
    w.field("series_l1", d.series_l1);
    w.field("division_residual", d.division_residual);
    w.field("caps_ok", d.caps_ok);
    w.end_object();
}

int run_peak(const PeakOptions& opt) {
    PeakParams params;
    params.xi = RatioParam::parse(opt.xi);
    params.alpha = opt.alpha;
    params.generations = opt.gen;
    params.degree = opt.degree;
    PeakCandidate cand = build_peak_candidate(params);
    if (opt.vanish) cand = vanish_at_origin(cand);

    if (opt.format == "csv") {
        if (opt.csv_emit == "weight") {
            emit(weight_moments_to_csv(cand.weight), opt.out);
        } else if (opt.csv_emit == "series") {
            emit(series_to_csv(cand.series), opt.out);
        } else {
            throw std::invalid_argument("--emit must be series or weight");
        }
        return cand.diagnostics.caps_ok ? 0 : kExitCapAbort;
    }
    if (opt.format != "json") throw std::invalid_argument("format must be csv or json");

    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("command", "peak");
    w.field("xi", params.xi.str());
    w.field("alpha", params.alpha);
    w.field("generations", params.generations);
    w.field("degree", params.degree);
    w.field("vanish_origin", opt.vanish);
    w.field_complex("beta", cand.beta);
    w.begin_object("weight");
    w.field("c0", cand.weight.moments.empty() ? 0.0 : cand.weight.moments[0].real());
    w.field("total_mass_closed", cand.weight.total_mass_closed);
    w.field("tail_ratio", cand.weight.tail_ratio);
    w.end_object();
    peak_diag_json(w, cand.diagnostics);
    if (opt.with_coefficients) {
        w.field_raw("series", series_to_json(cand.series));
    } else {
        w.begin_object("series");
        w.field("degree", cand.series.degree());
        w.field("l1_norm", cand.series.l1_norm());
        w.end_object();
    }
    w.field_complex("constant_coefficient", cand.series.coefficient(0));
    w.end_object();
    emit(w.str(), opt.out);
    return cand.diagnostics.caps_ok ? 0 : kExitCapAbort;
}

struct VerifyOptions {
    std::string xi = "2/13";
    double alpha = 0.6;
    int gen = 10;
    int degree = 1 << 12;
    bool vanish = false;
    int grid = 1 << 16;
    double tau = 0.2;
    int crosscheck_stage = 12;
    std::string out;
};

int run_verify(const VerifyOptions& opt) {
    PeakParams params;
    params.xi = RatioParam::parse(opt.xi);
    params.alpha = opt.alpha;
    params.generations = opt.gen;
    params.degree = opt.degree;

    PeakCandidate cand = build_peak_candidate(params);
    if (opt.vanish) cand = vanish_at_origin(cand);

    const MomentVector y = cantor_moment_vector(params.xi, params.degree);
    SupportConfig cfg;
    cfg.grid_size = opt.grid;
    cfg.tau = opt.tau;
    const SupportReport rep = verify_support_pair(cand.series, y, cfg);
    const CrosscheckResult cc =
        pairing_crosscheck(cand.series, params.xi, opt.crosscheck_stage, params.degree);

    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("command", "verify");
    w.field("xi", params.xi.str());
    w.field("alpha", params.alpha);
    w.field("generations", params.generations);
    w.field("degree", params.degree);
    w.field("vanish_origin", opt.vanish);
    peak_diag_json(w, cand.diagnostics);
    w.begin_object("report");
    w.field_complex("pairing", rep.pairing_value);
    w.field("sup_lower", rep.sup_lower);
    w.field("sup_upper", rep.sup_upper);
    w.field("ratio", rep.ratio);
    w.field("verdict", rep.supported ? "supported" : "not_supported");
    w.field("trivial_flag", rep.trivial);
    w.field("degree", rep.degree);
    w.field("truncation_residual", rep.truncation_residual);
    w.end_object();
    w.begin_object("crosscheck");
    w.field_complex("series_side", cc.series_side);
    w.field_complex("integral_side", cc.integral_side);
    w.field("abs_diff", std::abs(cc.series_side - cc.integral_side));
    w.field("bound", cc.bound);
    w.field("stage", opt.crosscheck_stage);
    w.end_object();
    w.field_complex("constant_coefficient", cand.series.coefficient(0));
    w.end_object();
    emit(w.str(), opt.out);
    return cand.diagnostics.caps_ok ? 0 : kExitCapAbort;
}

struct DualityOptions {
    int trials = 100;
    std::uint32_t seed = 7;
    int degree = 64;
    int angular = 4096;
    int radial_k = 20;
    int convex_trials = 5;
    std::string format = "json";
    std::string out;
};

int run_duality(const DualityOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("need at least one trial");
    if (opt.degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::mt19937 gen(opt.seed);
    int violations = 0;
    std::string csv = "trial,degree,best,sup_lower,sup_upper,eps,ok\n";
    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("command", "duality");
    w.field("seed", static_cast<std::int64_t>(opt.seed));
    w.field("trials", opt.trials);
    w.field("degree_max", opt.degree);
    w.begin_array("results");

    for (int t = 0; t < opt.trials; ++t) {
        // sparse functional: a few nonzero complex coefficients
        const int deg = 1 + static_cast<int>(uniform01(gen) * opt.degree) % opt.degree;
        std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex{0.0, 0.0});
        const int nnz = 1 + static_cast<int>(uniform01(gen) * 6) % 6;
        for (int i = 0; i < nnz; ++i) {
            const int j = static_cast<int>(uniform01(gen) * (deg + 1)) % (deg + 1);
            c[static_cast<std::size_t>(j)] =
                Complex{2.0 * uniform01(gen) - 1.0, 2.0 * uniform01(gen) - 1.0};
        }
        CoefficientSeries a(std::move(c));
        if (a.l1_norm() == 0.0) a = CoefficientSeries::unit(deg);

        SupSearchConfig scfg;
        scfg.angular = opt.angular;
        scfg.radial_max_k = opt.radial_k;
        const SupSearchResult sr = sup_over_s0(a, scfg);
        const SupBracket br = sup_norm_estimate(a, opt.angular);

        double deriv = 0.0;
        for (int j = 1; j <= a.degree(); ++j) deriv += j * std::abs(a.coefficient(j));
        const double eps = (2.0 * std::numbers::pi / opt.angular) * deriv +
                           std::ldexp(1.0, -opt.radial_k) * deriv;

        bool ok = sr.best >= br.lower - eps && sr.best <= br.upper + 1e-12;
        // random convex combinations stay below the upper bracket
        for (int ct = 0; ct < opt.convex_trials && ok; ++ct) {
            DiskAtomSet combo;
            const int m = 1 + static_cast<int>(uniform01(gen) * 6) % 6;
            double left = 1.0;
            for (int k = 0; k < m; ++k) {
                const double r = std::sqrt(uniform01(gen)) * 0.999;
                const double th = 2.0 * std::numbers::pi * uniform01(gen);
                combo.atoms.push_back(std::polar(r, th));
                const double wgt = (k == m - 1) ? left : left * uniform01(gen);
                combo.weights.push_back(wgt);
                left -= (k == m - 1) ? 0.0 : wgt;
            }
            const MomentVector mv = moment_vector(combo, a.degree());
            if (std::abs(pairing(a, mv.entries)) > br.upper + 1e-12) ok = false;
        }
        if (!ok) ++violations;
        if (opt.format == "csv") {
            csv += std::to_string(t) + "," + std::to_string(a.degree()) + "," +
                   fmt_double(sr.best) + "," + fmt_double(br.lower) + "," +
                   fmt_double(br.upper) + "," + fmt_double(eps) + "," + (ok ? "1" : "0") + "\n";
        } else {
            w.element_raw("{\"trial\":" + std::to_string(t) +
                          ",\"degree\":" + std::to_string(a.degree()) +
                          ",\"best\":" + fmt_double(sr.best) +
                          ",\"sup_lower\":" + fmt_double(br.lower) +
                          ",\"sup_upper\":" + fmt_double(br.upper) +
                          ",\"eps\":" + fmt_double(eps) + ",\"ok\":" + (ok ? "true" : "false") +
                          "}");
        }
    }
    if (opt.format == "csv") {
        csv += "violations," + std::to_string(violations) + ",,,,,\n";
        emit(csv, opt.out);
    } else if (opt.format == "json") {
        w.end_array();
        w.field("violations", violations);
        w.end_object();
        emit(w.str(), opt.out);
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return violations == 0 ? 0 : kExitCapAbort;
}

struct DiscretizeOptions {
    std::string measure = "lebesgue";
    std::string xi = "1/3";
    int stage = 10;
    int arcs = 16;
    std::string format = "csv";
    std::string out;
};

int run_discretize(const DiscretizeOptions& opt) {
    CircleMeasure nu;
    if (opt.measure == "lebesgue") {
        nu = LebesgueCircle{};
    } else if (opt.measure == "cantor") {
        nu = CantorStageCircle{RatioParam::parse(opt.xi), opt.stage};
    } else {
        throw std::invalid_argument("measure must be lebesgue or cantor");
    }
    const DiskAtomSet atoms = discretize_measure(nu, opt.arcs);
    if (opt.format == "csv") {
        std::string csv = "k,re,im,weight\n";
        for (std::size_t k = 0; k < atoms.atoms.size(); ++k) {
            csv += std::to_string(k + 1) + "," + fmt_double(atoms.atoms[k].real()) + "," +
                   fmt_double(atoms.atoms[k].imag()) + "," + fmt_double(atoms.weights[k]) + "\n";
        }
        emit(csv, opt.out);
        return 0;
    }
    if (opt.format != "json") throw std::invalid_argument("format must be csv or json");
    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("command", "discretize");
    w.field("measure", opt.measure);
    if (opt.measure == "cantor") {
        w.field("xi", RatioParam::parse(opt.xi).str());
        w.field("stage", opt.stage);
    }
    w.field("arcs", opt.arcs);
    w.field("radius", DiscretizationGrid::make(opt.arcs).radius);
    w.begin_array("atoms");
    for (std::size_t k = 0; k < atoms.atoms.size(); ++k) {
        w.element_raw("{\"k\":" + std::to_string(k + 1) +
                      ",\"atom\":" + fmt_complex_pair(atoms.atoms[k]) +
                      ",\"weight\":" + fmt_double(atoms.weights[k]) + "}");
    }
    w.end_array();
    w.end_object();
    emit(w.str(), opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cantor measures, Wiener-algebra peak functions and support pairings"};
    app.require_subcommand(1);

    CoeffsOptions co;
    auto* coeffs = app.add_subcommand("coeffs", "Fourier-Stieltjes coefficient tables");
    coeffs->add_option("--xi", co.xi, "Cantor ratio p/q")->required();
    coeffs->add_option("--min-n", co.min_n);
    coeffs->add_option("--max-n", co.max_n)->required();
    coeffs->add_option("--method", co.method, "product|oracle|both");
    coeffs->add_option("--tol", co.tol);
    coeffs->add_option("--stage", co.stage, "oracle stage (default: per target bound)");
    coeffs->add_option("--oracle-bound", co.oracle_bound);
    coeffs->add_option("--format", co.format, "csv|json");
    coeffs->add_option("--out", co.out);

    ClassifyOptions cl;
    auto* classify = app.add_subcommand("classify", "Rajchman / Pisot classification");
    classify->add_option("--xi", cl.xi);
    classify->add_option("--poly", cl.poly, "monic integer polynomial, highest degree first");
    classify->add_option("--inverse-poly", cl.inverse_poly, "minimal polynomial of 1/xi");
    classify->add_option("--tol", cl.tol);
    classify->add_option("--out", cl.out);

    PeakOptions pk;
    auto* peak = app.add_subcommand("peak", "build a peak-function candidate");
    peak->add_option("--xi", pk.xi);
    peak->add_option("--alpha", pk.alpha);
    peak->add_option("--gen", pk.gen);
    peak->add_option("--degree", pk.degree);
    peak->add_option("--format", pk.format, "csv|json");
    peak->add_option("--emit", pk.csv_emit, "csv payload: series|weight");
    peak->add_flag("--with-coefficients", pk.with_coefficients);
    peak->add_flag("--vanish-origin", pk.vanish);
    peak->add_option("--out", pk.out);

    VerifyOptions vf;
    auto* verify = app.add_subcommand("verify", "end-to-end support-pair verification");
    verify->add_option("--xi", vf.xi);
    verify->add_option("--alpha", vf.alpha);
    verify->add_option("--gen", vf.gen);
    verify->add_option("--degree", vf.degree);
    verify->add_flag("--vanish-origin", vf.vanish);
    verify->add_option("--grid", vf.grid);
    verify->add_option("--tau", vf.tau);
    verify->add_option("--crosscheck-stage", vf.crosscheck_stage);
    verify->add_option("--out", vf.out);

    DualityOptions du;
    auto* duality = app.add_subcommand("duality", "randomized duality trials");
    duality->add_option("--trials", du.trials);
    duality->add_option("--seed", du.seed);
    duality->add_option("--degree", du.degree);
    duality->add_option("--angular", du.angular);
    duality->add_option("--radial-k", du.radial_k);
    duality->add_option("--convex-trials", du.convex_trials);
    duality->add_option("--format", du.format, "csv|json");
    duality->add_option("--out", du.out);

    DiscretizeOptions di;
    auto* discretize = app.add_subcommand("discretize", "arc discretization of circle measures");
    discretize->add_option("--measure", di.measure, "lebesgue|cantor");
    discretize->add_option("--xi", di.xi);
    discretize->add_option("--stage", di.stage);
    discretize->add_option("--arcs", di.arcs);
    discretize->add_option("--format", di.format, "csv|json");
    discretize->add_option("--out", di.out);

    try {
        app.parse(argc, argv);
        if (coeffs->parsed()) return run_coeffs(co);
        if (classify->parsed()) return run_classify(cl);
        if (peak->parsed()) return run_peak(pk);
        if (verify->parsed()) return run_verify(vf);
        if (duality->parsed()) return run_duality(du);
        if (discretize->parsed()) return run_discretize(di);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
