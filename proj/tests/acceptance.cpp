// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances and runtime budgets are pinned here; the unit suite covers the
// module-level details.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "modspace/modspace.hpp"

using namespace modspace;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- criterion 1: discrete energy identity and the p=q=2 norm --------------

Outcome energy_identity() {
    Outcome o;
    const Grid g = default_grid();
    double worst = 0.0;
    for (const auto& m : test_family(42, 1.0, 10)) {
        const auto [lhs, rhs] = parseval_check(sample(m.expr, g));
        worst = std::max(worst, std::abs(rhs / lhs - 1.0));
    }
    o.pass = worst <= 1e-10;
    o.detail = "max energy drift " + num(worst);

    const FunctionExpr f = FunctionExpr::gaussian(1.0);
    const double l2 = l2_norm(sample(f, g));
    const double mod =
        modulation_norm(f, WindowSpec::gaussian(1.0), NormParams(2.0, 2.0), g);
    const double rel = std::abs(mod / (l2 * l2) - 1.0);
    o.pass = o.pass && rel <= 1e-6;
    o.detail += ", p=q=2 norm vs L2 " + num(rel);
    return o;
}

// ---- criteria 2 and 3: two-sided local equivalence -------------------------

struct MemberData {
    double r = 0.0;
    double ghat_l1 = 0.0;
    std::vector<double> mod;      // indexed over the (p,q) sweep
    std::vector<double> fl;
};

const std::vector<double> kPs = {1.0, 2.0, inf};
const std::vector<double> kQs = {1.0, 2.0};

std::vector<MemberData> equivalence_sweep(const Grid& grid, int oversample,
                                          WindowSpec::Kind window_kind) {
    const Grid lattice = default_time_lattice(grid, oversample);
    std::vector<MemberData> out;
    for (const auto& m : test_family(42, 1.0, 10)) {
        MemberData d;
        d.r = m.expr.support_radius();
        const WindowSpec win = window_kind == WindowSpec::Kind::Plateau
                                   ? WindowSpec::plateau(d.r)
                                   : WindowSpec::custom(FunctionExpr::bump(d.r));
        const SampledSignal u = sample(m.expr, grid);
        const TFMatrix tf = stft(u, win, lattice);
        const Spectrum uhat = forward_ft(u);
        d.ghat_l1 = win.ghat_l1(grid);
        for (double p : kPs) {
            for (double q : kQs) {
                d.mod.push_back(mixed_norm(tf, NormParams(p, q)));
                double fl;
                if (q == inf) {
                    fl = 0.0;
                    for (const cplx& v : uhat.values) fl = std::max(fl, std::abs(v));
                } else {
                    double acc = 0.0;
                    for (const cplx& v : uhat.values) acc += std::pow(std::abs(v), q);
                    fl = std::pow(acc * uhat.grid.cell(), 1.0 / q);
                }
                d.fl.push_back(fl);
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

// largest forward-bound violation, max(0, lhs/rhs - 1), over the whole sweep
double forward_margin(const std::vector<MemberData>& sweep) {
    double margin = 0.0;
    for (const MemberData& d : sweep) {
        std::size_t i = 0;
        for (double p : kPs) {
            for (double q : kQs) {
                (void)q;
                const double cf =
                    (p == inf ? 1.0 : std::pow(ball_volume(1, 2.0 * d.r), 1.0 / p)) *
                    d.ghat_l1;
                margin = std::max(margin, d.mod[i] / (cf * d.fl[i]) - 1.0);
                ++i;
            }
        }
    }
    return std::max(margin, 0.0);
}

Outcome forward_bound() {
    Outcome o;
    const Grid grid = default_grid();
    const auto coarse = equivalence_sweep(grid, 8, WindowSpec::Kind::Custom);
    const double margin = forward_margin(coarse);
    o.pass = margin <= kEquivalenceSlack;
    o.detail = "violation margin " + num(margin);

    // refining the quadrature must not open the bound back up
    const auto fine = equivalence_sweep(grid.refined(), 16, WindowSpec::Kind::Custom);
    const double margin_fine = forward_margin(fine);
    o.pass = o.pass && margin_fine <= 0.5 * margin + 1e-12;
    o.detail += ", refined " + num(margin_fine);
    return o;
}

Outcome reverse_bound() {
    Outcome o;
    const Grid grid = default_grid();
    const auto sweep = equivalence_sweep(grid, 8, WindowSpec::Kind::Plateau);
    double margin = 0.0;
    for (const MemberData& d : sweep) {
        std::size_t i = 0;
        for (double p : kPs) {
            for (double q : kQs) {
                (void)q;
                const double cr =
                    p == inf ? 1.0 : std::pow(ball_volume(1, d.r), -1.0 / p);
                margin = std::max(margin, d.fl[i] / (cr * d.mod[i]) - 1.0);
                ++i;
            }
        }
    }
    margin = std::max(margin, 0.0);
    o.pass = margin <= kEquivalenceSlack;
    o.detail = "violation margin " + num(margin);

    // with the flat-top window, V_g u(x, .) equals the transform of u for
    // every lattice point x inside the support ball
    const Grid lattice = default_time_lattice(grid, 8);
    double ident = 0.0;
    for (const auto& m : test_family(42, 1.0, 10)) {
        const double r = m.expr.support_radius();
        const SampledSignal u = sample(m.expr, grid);
        const TFMatrix tf = stft(u, WindowSpec::plateau(r), lattice);
        const Spectrum uhat = forward_ft(u);
        for (std::size_t j = 0; j < lattice.size(); ++j) {
            if (std::abs(lattice.point(j).c[0]) > r) continue;
            for (std::size_t k = 0; k < tf.freq_grid.size(); ++k)
                ident = std::max(ident, std::abs(tf.at(j, k) - uhat.values[k]));
        }
    }
    o.pass = o.pass && ident <= 1e-10;
    o.detail += ", flat-window identity dev " + num(ident);
    return o;
}

// ---- criterion 4: covariance under affine change of variables --------------

Outcome covariance() {
    Outcome o;
    const FunctionExpr u = FunctionExpr::gaussian(1.0);
    const WindowSpec g = WindowSpec::gaussian(1.0);

    std::vector<std::pair<Point, Point>> pts1;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            pts1.emplace_back(Point(static_cast<double>(a)),
                              Point(static_cast<double>(b)));
    const Grid g1(1, 128, 16.0 / 128.0);
    const double d1 = covariance_check(u, g, AffineMap(2.0, 1.0), pts1, g1);
    const double d1f = covariance_check(u, g, AffineMap(2.0, 1.0), pts1, g1.refined());
    o.pass = d1 <= 1e-8 && d1f <= 0.5 * d1;
    o.detail = "1-d dev " + num(d1) + " -> " + num(d1f);

    std::vector<std::pair<Point, Point>> pts2;
    for (double a : {-1.0, 0.0, 1.0})
        for (double b : {-1.0, 0.5, 1.5})
            pts2.emplace_back(Point(a, -a), Point(b, 0.5 * b));
    const Grid g2(2, 64, 12.0 / 64.0);
    const AffineMap rot = AffineMap::rotation2d(std::numbers::pi / 4.0);
    const double d2 = covariance_check(u, g, rot, pts2, g2);
    const double d2f = covariance_check(u, g, rot, pts2, g2.refined());
    o.pass = o.pass && d2 <= 1e-7 && d2f <= 0.5 * d2;
    o.detail += ", 2-d dev " + num(d2) + " -> " + num(d2f);
    return o;
}

// ---- criterion 5: norm ratios under simple affine maps ---------------------

Outcome affine_ratios() {
    Outcome o;
    const FunctionExpr u = FunctionExpr::gaussian(1.0);
    const Grid grid = default_grid();

    const double rid =
        affine_invariance_ratio(u, AffineMap::identity(1), NormParams(1.0, 1.0), grid);
    o.pass = std::abs(rid - 1.0) <= 1e-9;
    o.detail = "identity " + num(rid);

    double worst_shift = 0.0;
    for (const NormParams& pq : {NormParams(1.0, 1.0), NormParams(2.0, 2.0)}) {
        const double r = affine_invariance_ratio(
            u, AffineMap::translation(Point(0.5)), pq, grid);
        worst_shift = std::max(worst_shift, std::abs(r - 1.0));
    }
    o.pass = o.pass && worst_shift <= 1e-6;
    o.detail += ", translation dev " + num(worst_shift);

    const double rdil =
        affine_invariance_ratio(u, AffineMap::scaling(1, 2.0), NormParams(2.0, 2.0),
                                grid);
    const double expect = std::pow(2.0, -0.5);
    o.pass = o.pass && std::abs(rdil - expect) <= 1e-6;
    o.detail += ", dilation " + num(rdil) + " vs " + num(expect);
    return o;
}

// ---- criterion 6: composition with |x| stays norm-bounded ------------------

Outcome piecewise_bound() {
    Outcome o;
    const PiecewiseAffineMap phi = PiecewiseAffineMap::abs1d();
    const WindowSpec g = WindowSpec::normalized_gaussian(1);
    const auto family = test_family(42, 1.0, 10);

    const auto max_ratios = [&](const Grid& grid, int oversample) {
        const Grid lattice = default_time_lattice(grid, oversample);
        std::array<double, 2> mx{0.0, 0.0}; // p = 1, p = 2
        for (const auto& m : family) {
            const TFMatrix tf_u = stft(sample(m.expr, grid), g, lattice);
            const TFMatrix tf_c = stft(sample(compose(m.expr, phi), grid), g, lattice);
            const double p_list[2] = {1.0, 2.0};
            for (int i = 0; i < 2; ++i) {
                const NormParams pq(p_list[i], p_list[i]);
                mx[i] = std::max(mx[i],
                                 mixed_norm(tf_c, pq) / mixed_norm(tf_u, pq));
            }
        }
        return mx;
    };

    const Grid grid = default_grid();
    const auto coarse = max_ratios(grid, 8);
    const auto fine = max_ratios(grid.refined(), 16);
    o.detail = "max ratio p=1: " + num(coarse[0]) + " p=2: " + num(coarse[1]);
    for (int i = 0; i < 2; ++i) {
        o.pass = o.pass && std::isfinite(coarse[i]) &&
                 coarse[i] <= kPiecewiseRegressionBound &&
                 std::abs(fine[i] / coarse[i] - 1.0) <= 0.05;
    }
    o.detail += ", refined drift " +
                num(std::max(std::abs(fine[0] / coarse[0] - 1.0),
                             std::abs(fine[1] / coarse[1] - 1.0)));
    return o;
}

// ---- criterion 7: chirp-rate sweep grows without bound ---------------------

Outcome chirp_growth() {
    Outcome o;
    const std::vector<double> lambdas = {1, 2, 4, 8, 16, 32, 64};
    const auto sweep =
        chirp_blowup_sweep(lambdas, NormParams(1.0, 1.0), default_grid());
    bool monotone = true;
    for (std::size_t i = 1; i < sweep.size(); ++i)
        monotone = monotone && sweep[i].second >= sweep[i - 1].second;
    const double growth = sweep.back().second / sweep.front().second;
    // quadrupling lambda should roughly double the ratio (sqrt growth)
    const double quad_step = sweep[6].second / sweep[4].second;
    o.pass = monotone && growth >= 4.0 && quad_step >= 1.7 && quad_step <= 2.3;
    o.detail = std::string("monotone ") + (monotone ? "yes" : "no") + ", growth " +
               num(growth) + ", sqrt-trend step " + num(quad_step);
    return o;
}

// ---- criterion 8: multiplier operators -------------------------------------

Outcome multipliers() {
    Outcome o;
    const Grid grid = default_grid();
    const WindowSpec g = WindowSpec::normalized_gaussian(1);
    const NormParams pq(2.0, 2.0);
    const MultiplierSymbol proj =
        MultiplierSymbol::cube_indicator(Box::interval(0.0, 1.0));
    const MultiplierSymbol rot = MultiplierSymbol::chirp(AffineMap::identity(1));

    double idem = 0.0, l2_res = 0.0, ratio_max = 0.0;
    for (const auto& m : test_family(42, 1.0, 10)) {
        const SampledSignal f = sample(m.expr, grid);
        const SampledSignal pf = apply_multiplier(proj, f);
        const SampledSignal ppf = apply_multiplier(proj, pf);
        for (std::size_t i = 0; i < pf.values.size(); ++i)
            idem = std::max(idem, std::abs(ppf.values[i] - pf.values[i]));

        const SampledSignal rf = apply_multiplier(rot, f);
        l2_res = std::max(l2_res, std::abs(l2_norm(rf) / l2_norm(f) - 1.0));

        ratio_max = std::max(ratio_max, modulation_norm(pf, g, pq) /
                                            modulation_norm(f, g, pq));
    }
    o.pass = idem <= 1e-10 && l2_res <= 1e-10 && ratio_max <= 1.0 + 1e-6;
    o.detail = "idempotence " + num(idem) + ", L2 drift " + num(l2_res) +
               ", p=q=2 projection ratio " + num(ratio_max);
    return o;
}

// ---- criterion 9: deterministic command-line runs --------------------------

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + MODSPACE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path a = fs::temp_directory_path() / "modspace_acc_a.csv";
    const fs::path b = fs::temp_directory_path() / "modspace_acc_b.csv";
    const std::string common =
        "local-equivalence --n 1024 --spacing 0.03125 --p 2 --q 2 "
        "--family-size 4 --seed 77 --out ";
    const int c1 = run_cli(common + a.string());
    const int c2 = run_cli(common + b.string());
    const bool identical = slurp(a) == slurp(b) && !slurp(a).empty();
    const int fail_code =
        run_cli("blowup --n 1024 --spacing 0.03125 --p 1 --q 1 --lambdas 1,2");
    const int usage_code = run_cli("blowup --lambdas 2,1");
    o.pass = c1 == 0 && c2 == 0 && identical && fail_code == 1 && usage_code == 2;
    o.detail = std::string("byte-identical ") + (identical ? "yes" : "no") +
               ", exit codes " + std::to_string(c1) + "/" +
               std::to_string(fail_code) + "/" + std::to_string(usage_code);
    for (const fs::path& p :
         {a, b, fs::path(a).replace_extension(".dat"), fs::path(b).replace_extension(".dat")})
        fs::remove(p);
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"energy identity and p=q=2 norm", 5.0, energy_identity},
        {"forward local norm bound", 30.0, forward_bound},
        {"reverse local norm bound and flat-window identity", 30.0, reverse_bound},
        {"affine covariance of the windowed transform", 20.0, covariance},
        {"norm ratios under affine maps", 10.0, affine_ratios},
        {"piecewise-affine composition bound", 30.0, piecewise_bound},
        {"chirp-rate norm growth", 60.0, chirp_growth},
        {"multiplier operators", 10.0, multipliers},
        {"deterministic CLI runs and exit codes", 30.0, cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        const bool in_budget = secs < criteria[i].budget_s;
        const bool pass = o.pass && in_budget;
        if (!pass) ++failures;
        std::printf("%s  %zu. %s (%s; %.1f s%s)\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, o.detail.c_str(), secs,
                    in_budget ? "" : ", over budget");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
