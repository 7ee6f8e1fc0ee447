// Acceptance suite: one criterion per section, one printed verdict line per
// criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "svineq/svineq.hpp"

using namespace svineq;

namespace {

const Tolerances kTol;
int g_failures = 0;

void verdict(int n, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", n, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
// Worked 2x2 example: s_2(A) = 1.34 +/- 0.01, s_2(|Re|+|Im|) = 1.27 +/- 0.01,
// and s_2(A) > s_2(|Re|+|Im|).
void criterion_1() {
    ComplexMatrix a{{Complex{-1.0, 1.0}, Complex{1.0, 0.0}},
                    {Complex{0.0, 1.0}, Complex{1.0, 2.0}}};
    const double s2 = singular_values(a, kTol).at(2);
    auto [re, im] = cartesian(a);
    const double t2 =
        singular_values(abs_op(re, kTol) + abs_op(im, kTol), kTol).at(2);
    const bool pass = std::abs(s2 - 1.34) <= 0.01 &&
                      std::abs(t2 - 1.27) <= 0.01 && s2 > t2;
    verdict(1, pass,
            "worked 2x2 example: s_2(A)=" + fmt(s2) +
                " (want 1.34±0.01), s_2(|Re|+|Im|)=" + fmt(t2) +
                " (want 1.27±0.01), s_2(A)>s_2(|Re|+|Im|) is " +
                (s2 > t2 ? "true" : "false"));
}

// ---------------------------------------------------------------- criterion 2
// Full registry: 1000 trials per dim over dims 1-6, alpha grid
// {0, 1/4, 1/2, 3/4, 1}, worst margin >= -1e-8, under 2 minutes.
void criterion_2() {
    SuiteConfig cfg;  // defaults are exactly the required run
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport report = run_suite(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    double worst = 0.0;
    for (const auto& s : report.summaries) worst = std::min(worst, s.worst_margin);
    const bool pass = report.all_passed && worst >= -1e-8 && secs < 120.0;
    verdict(2, pass,
            "full registry, dims 1-6 x 1000 trials: worst margin " + fmt(worst) +
                " (>= -1e-8), all_passed=" +
                (report.all_passed ? "true" : "false") + ", " + fmt(secs) +
                " s (< 120)");
}

// ---------------------------------------------------------------- criterion 3
// 500 seeded 2x2 matrices: Jacobi SVD vs the quadratic oracle on A*A, and
// Jacobi eigenvalues vs the quadratic oracle, both within 1e-10.
void criterion_3() {
    double worst_svd = 0.0, worst_eig = 0.0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        Prng rng(derive_stream(9001, {s}));
        const ComplexMatrix g = gen::ginibre(rng, 2, 2);
        const auto sv = singular_values(g, kTol);
        const auto sv_oracle = oracles::svd_2x2(g);
        worst_svd = std::max({worst_svd, std::abs(sv.at(1) - sv_oracle[0]),
                              std::abs(sv.at(2) - sv_oracle[1])});
        const ComplexMatrix h = gen::hermitian(rng, 2);
        const auto ev = hermitian_eig(h, kTol).eigenvalues;
        const auto ev_oracle = oracles::hermitian_eig_2x2(h);
        worst_eig = std::max({worst_eig, std::abs(ev[0] - ev_oracle[0]),
                              std::abs(ev[1] - ev_oracle[1])});
    }
    const bool pass = worst_svd <= 1e-10 && worst_eig <= 1e-10;
    verdict(3, pass,
            "500 seeded 2x2 kernels vs quadratic oracles: max svd error " +
                fmt(worst_svd) + ", max eig error " + fmt(worst_eig) +
                " (both <= 1e-10)");
}

// ---------------------------------------------------------------- criterion 4
// Norm identities over 500 seeded pairs: operator norm of a direct sum is the
// max, Schatten p-th powers add, p in {1,2,3}, within 1e-9 relative.
void criterion_4() {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        Prng rng(derive_stream(9004, {s}));
        const std::size_t n = 1 + s % 4, m = 1 + (s / 4) % 4;
        const ComplexMatrix a = gen::ginibre(rng, n, n);
        const ComplexMatrix b = gen::ginibre(rng, m, m);
        const ComplexMatrix d = direct_sum(a, b);
        {
            const double lhs = operator_norm(d, kTol);
            const double rhs =
                std::max(operator_norm(a, kTol), operator_norm(b, kTol));
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
        }
        for (double p : {1.0, 2.0, 3.0}) {
            const NormFamily fam = NormFamily::schatten(p);
            const double lhs = std::pow(norm(d, fam, kTol), p);
            const double rhs =
                std::pow(norm(a, fam, kTol), p) + std::pow(norm(b, fam, kTol), p);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
        }
    }
    verdict(4, worst <= 1e-9,
            "direct-sum norm identities over 500 pairs: worst relative error " +
                fmt(worst) + " (<= 1e-9)");
}

// ---------------------------------------------------------------- criterion 5
// Falsifier: dropping normality from the Cartesian upper bound at dim 2,
// seed 7, finds a violation > 1e-3 within 10000 iterations, and the witness
// replays bit-exactly through the CLI's `check --force`.
void criterion_5() {
    FalsifyConfig cfg{.seed = 7, .dim = 2, .max_iters = 10000};
    const auto res = falsify("normal-cartesian-upper", "normal", cfg, kTol);
    bool pass = res.found && res.violation > 1e-3 &&
                res.iterations <= cfg.max_iters;
    std::string detail = "drop normality, dim 2, seed 7: found=" +
                         std::string(res.found ? "true" : "false") +
                         ", violation=" + fmt(res.violation) +
                         " (> 1e-3) in " + std::to_string(res.iterations) +
                         " iterations";
    if (pass) {
        const std::string wit = "/tmp/svineq_acc_witness.json";
        const std::string out = "/tmp/svineq_acc_replay.json";
        write_matrix_file(wit, res.witnesses);
        const std::string cmd = std::string(SVINEQ_CLI_PATH) +
                                " check --ineq normal-cartesian --force --input " +
                                wit + " --out " + out + " > /dev/null";
        const int status = std::system(cmd.c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        bool replay_ok = code == kExitViolation;
        if (replay_ok) {
            std::ifstream in(out);
            nlohmann::json j;
            in >> j;
            const auto direct =
                check_explicit("normal-cartesian", res.witnesses, 0.5, kTol, true);
            const std::vector<double> cli_margins =
                j["margins"].get<std::vector<double>>();
            replay_ok = cli_margins == direct.margins && !j["pass"].get<bool>();
        }
        pass = replay_ok;
        detail += replay_ok ? "; witness replays bit-exactly via check --force"
                            : "; witness FAILED to replay via check --force";
        std::remove(wit.c_str());
        std::remove(out.c_str());
    }
    verdict(5, pass, detail);
}

// ---------------------------------------------------------------- criterion 6
// Falsifier sanity: with no hypothesis dropped, 10000 iterations against the
// Tao and AB* checks find no violation beyond -1e-8.
void criterion_6() {
    bool pass = true;
    std::string detail = "no-drop falsification, 10000 iterations:";
    for (const char* id : {"tao", "ab-star"}) {
        FalsifyConfig cfg{.seed = 7, .dim = 2, .max_iters = 10000};
        const auto res = falsify(id, "", cfg, kTol);
        pass = pass && !res.found && res.best_margin >= -1e-8;
        detail += std::string(" ") + id + " best margin " + fmt(res.best_margin);
    }
    verdict(6, pass, detail + " (both >= -1e-8, no violation)");
}

// ---------------------------------------------------------------- criterion 7
// Scalar reductions at dim 1: every registered check's margins match a
// closed-form scalar recomputation, and the scalar Cartesian inequality
// (1/sqrt2)|a+b| <= |a+ib| <= |a|+|b| holds with non-negative closed-form
// margins.
namespace scalar {

std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

double at(const std::vector<double>& v, std::size_t j) {  // 1-based, padded
    return j <= v.size() ? v[j - 1] : 0.0;
}

// closed-form margins of one inequality at dim 1, mirroring run_trial's
// per-alpha concatenation; only scalar arithmetic and the 2x2 quadratic
// oracle appear here.
std::vector<double> margins(const std::string& id,
                            const std::vector<ComplexMatrix>& in,
                            std::size_t trial,
                            const std::vector<double>& alphas) {
    auto block22 = [](Complex a, Complex b, Complex c) {
        return ComplexMatrix{{a, b}, {std::conj(b), c}};
    };
    std::vector<double> out;
    auto psd_margin_22 = [&](const ComplexMatrix& m) {
        const auto ev = oracles::hermitian_eig_2x2(m);
        return ev[1] / std::max(1.0, std::max(std::abs(ev[0]), std::abs(ev[1])));
    };
    auto pw = [](double base, double e) {
        return e == 0.0 ? 1.0 : std::pow(base, e);  // 0^0 = 1 convention
    };

    if (id == "tao") {
        const double s1 = oracles::svd_2x2(block22(in[0](0, 0), in[1](0, 0),
                                                   in[2](0, 0)))[0];
        return {s1 - 2.0 * std::abs(in[1](0, 0))};
    }
    if (id == "block-dominance") {
        const auto sv =
            oracles::svd_2x2(block22(in[0](0, 0), in[1](0, 0), in[2](0, 0)));
        const double hi = std::max(std::abs(in[0](0, 0)), std::abs(in[2](0, 0)));
        const double lo = std::min(std::abs(in[0](0, 0)), std::abs(in[2](0, 0)));
        return {2.0 * hi - sv[0], 2.0 * lo - sv[1], hi - std::abs(in[1](0, 0))};
    }
    if (id == "pinching-norms") {
        const Complex a = in[0](0, 0), b = in[1](0, 0), c = in[2](0, 0);
        const auto sb = oracles::svd_2x2(block22(a, b, c));
        const std::vector<double> sp =
            sorted_desc({std::abs(a), std::abs(c)});
        const bool hermitian_psd =
            std::abs(a.imag()) < 1e-12 && std::abs(c.imag()) < 1e-12 &&
            oracles::hermitian_eig_2x2(block22(a, b, c))[1] >= -kTol.psd_tol;
        struct Fam { int kind; double p; std::size_t k; };
        const std::vector<Fam> fams = {{0, 0, 0}, {1, 1, 0}, {1, 2, 0},
                                       {1, 3, 0}, {2, 0, 1}, {2, 0, 2}};
        for (const auto& f : fams) {
            auto eval = [&](const std::vector<double>& s) {
                if (f.kind == 0) return s[0];
                if (f.kind == 1)
                    return std::pow(std::pow(s[0], f.p) + std::pow(at(s, 2), f.p),
                                    1.0 / f.p);
                double acc = 0.0;
                for (std::size_t j = 1; j <= f.k; ++j) acc += at(s, j);
                return acc;
            };
            const double bn = eval({sb[0], sb[1]}), pn = eval(sp);
            const double scale = std::max(1.0, std::max(bn, pn));
            out.push_back((bn - pn) / scale);
            if (hermitian_psd) out.push_back((2.0 * pn - bn) / scale);
        }
        return out;
    }
    if (id == "cartesian-block-psd") {
        const Complex z = in[0](0, 0);
        for (double al : alphas)
            out.push_back(psd_margin_22(block22(pw(std::abs(z), 2.0 * al),
                                                std::conj(z),
                                                pw(std::abs(z), 2.0 * (1.0 - al)))));
        return out;
    }
    if (id == "kittaneh-lemma") {
        const double p = in[0](0, 0).real(), q = in[1](0, 0).real();
        const Complex c = in[2](0, 0);
        for (double al : alphas)
            out.push_back(psd_margin_22(block22(pw(p, 2.0 * al), std::conj(c),
                                                pw(q, 2.0 * (1.0 - al)))));
        return out;
    }
    if (id == "sum-split") {
        const double a = std::abs(in[0](0, 0)), b = std::abs(in[1](0, 0));
        const double lhs = std::abs(in[0](0, 0) + in[1](0, 0));
        for (double al : alphas)
            out.push_back(std::max(pw(a, 2.0 * al) + pw(b, 2.0 * al),
                                   pw(a, 2.0 * (1.0 - al)) +
                                       pw(b, 2.0 * (1.0 - al))) -
                          lhs);
        return out;
    }
    if (id == "product-split") {
        const double a = std::abs(in[0](0, 0)), b = std::abs(in[1](0, 0)),
                     x = std::abs(in[2](0, 0));
        const double lhs = a * x * b;
        for (double al : alphas) {
            const double m = std::max(b * b * pw(x, 2.0 * al),
                                      a * a * pw(x, 2.0 * (1.0 - al))) -
                             lhs;
            out.push_back(m);
            out.push_back(m);  // every scalar is normal; variant track repeats
        }
        return out;
    }
    if (id == "product-norm-bound") {
        const double a = std::abs(in[0](0, 0)), b = std::abs(in[1](0, 0)),
                     x = std::abs(in[2](0, 0));
        out.push_back(x * std::max(a, b) * std::max(a, b) - a * x * b);
        if (trial % 2 == 0)  // PSD draws exercise the positive instance
            out.push_back(x * std::max(a, b) - std::sqrt(a) * x * std::sqrt(b));
        return out;
    }
    if (id == "ab-star") {
        const Complex a = in[0](0, 0), b = in[1](0, 0);
        const double p = std::norm(a) + std::norm(b);
        return {std::max(std::norm(a), std::norm(b)) - std::abs(a) * std::abs(b),
                p - std::abs(a * std::conj(b) - b * std::conj(a))};
    }
    if (id == "positive-sandwich") {
        const double a = std::abs(in[0](0, 0)), b = std::abs(in[1](0, 0)),
                     x = in[2](0, 0).real();
        const double lhs = a * x * b;
        for (double al : alphas) {
            const double xa = pw(x, 2.0 * al), xb = pw(x, 2.0 * (1.0 - al));
            out.push_back(std::max(a * a * xa, b * b * xb) - lhs);
            out.push_back(std::max(xa, xb) *
                              std::max(a, b) * std::max(a, b) -
                          lhs);
        }
        return out;
    }
    if (id == "normal-cartesian") {
        std::vector<double> s_a, s_sum, s_abs;
        for (const auto& m : in) {
            const double re = m(0, 0).real(), im = m(0, 0).imag();
            s_a.push_back(std::abs(m(0, 0)));
            s_sum.push_back(std::abs(re + im));
            s_abs.push_back(std::abs(re) + std::abs(im));
        }
        s_a = sorted_desc(s_a);
        s_sum = sorted_desc(s_sum);
        s_abs = sorted_desc(s_abs);
        for (std::size_t j = 1; j <= in.size(); ++j)
            out.push_back(at(s_a, j) - at(s_sum, j) / std::numbers::sqrt2);
        for (std::size_t j = 1; j <= in.size(); ++j)
            out.push_back(at(s_abs, j) - at(s_a, j));
        return out;
    }
    if (id == "a-plus-ia-star") {
        std::vector<double> s_shift, s_sum;
        for (const auto& m : in) {
            const Complex z = m(0, 0);
            s_shift.push_back(std::abs(z + Complex{0.0, 1.0} * std::conj(z)));
            s_sum.push_back(std::abs(z.real() + z.imag()));
        }
        s_shift = sorted_desc(s_shift);
        s_sum = sorted_desc(s_sum);
        for (std::size_t j = 1; j <= in.size(); ++j)
            out.push_back(at(s_shift, j) - std::numbers::sqrt2 * at(s_sum, j));
        for (std::size_t j = 1; j <= in.size(); ++j)
            out.push_back(2.0 * at(s_sum, j) - at(s_shift, j));
        return out;
    }
    throw ContractError("no scalar reduction for " + id);
}

}  // namespace scalar

void criterion_7() {
    const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    double worst_dev = 0.0;
    std::string offender;
    for (const auto& spec : inequality_registry()) {
        for (std::size_t trial = 0; trial < 10; ++trial) {
            const auto r = run_trial(spec, 42, 1, trial, grid, kTol);
            Prng rng(derive_stream(42, {hash_string(spec.id), 1, trial}));
            const auto inputs = spec.make_inputs(rng, 1, trial);
            const auto expect = scalar::margins(
                spec.id, inputs, trial,
                spec.uses_alpha ? grid : std::vector<double>{0.5});
            if (expect.size() != r.margins.size()) {
                worst_dev = 1e300;
                offender = spec.id + " (margin count)";
                continue;
            }
            for (std::size_t j = 0; j < expect.size(); ++j) {
                const double dev = std::abs(expect[j] - r.margins[j]) /
                                   (1.0 + std::abs(expect[j]));
                if (dev > worst_dev) {
                    worst_dev = dev;
                    offender = spec.id;
                }
            }
        }
    }
    // scalar Cartesian inequality, margins in closed form:
    // 2(a^2+b^2) - (a+b)^2 = (a-b)^2 >= 0 and (|a|+|b|)^2 - (a^2+b^2) = 2|ab|
    bool scalar_ok = true;
    for (std::uint64_t s = 0; s < 100; ++s) {
        Prng rng(derive_stream(9007, {s}));
        const double a = rng.gaussian(), b = rng.gaussian();
        const double lower_sq = (a - b) * (a - b);
        const double upper_sq = 2.0 * std::abs(a) * std::abs(b);
        scalar_ok = scalar_ok && lower_sq >= 0.0 && upper_sq >= 0.0;
    }
    const bool pass = worst_dev <= 1e-10 && scalar_ok;
    verdict(7, pass,
            "dim-1 scalar reductions across the registry: worst closed-form "
            "deviation " +
                fmt(worst_dev) + (offender.empty() ? "" : " (" + offender + ")") +
                " (<= 1e-10); scalar Cartesian margins " +
                (scalar_ok ? "non-negative" : "NEGATIVE"));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("acceptance: %d of 7 criteria passed\n", 7 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
