// Command-line front end for the dp1asym library: coefficient tables,
// late-order model fits, Stokes-geometry maps, asymptotic evaluation,
// direct lattice iteration, and the comparison between the two, plus the
// parameter maps from the string equation and the Freud weight.
//
// Exit codes: 0 success, 1 usage, 2 invalid parameters / domain violations,
// 3 failed numerical estimates, 4 a pole was flagged along an orbit,
// 5 file-system errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"
#include "dp1asym/evaluator.hpp"
#include "dp1asym/lateorder.hpp"
#include "dp1asym/lattice.hpp"
#include "dp1asym/params.hpp"
#include "dp1asym/series.hpp"
#include "dp1asym/stokes.hpp"
#include "dp1asym/variantmod.hpp"

namespace {

using namespace dp1;

constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_numerical = 3;
constexpr int exit_pole = 4;
constexpr int exit_io = 5;

// Decimal literal "re" or "re,im", parsed directly at target precision so
// parameters never round-trip through double.
Complex parse_complex(const Context& ctx, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(Real(ctx, text));
    return Complex(Real(ctx, text.substr(0, comma)), Real(ctx, text.substr(comma + 1)));
}

Family parse_family(const std::string& name) {
    if (name == "A") return Family::TypeA;
    if (name == "B") return Family::TypeB;
    throw std::invalid_argument("family must be A or B");
}

SignBranch parse_sign(const std::string& name) {
    return name == "minus" ? SignBranch::Minus : SignBranch::Plus;
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        csv::write_file_atomic(path, content);
    }
}

std::vector<long> make_range(const std::vector<long>& listed, long n_min, long n_max,
                             long n_step) {
    if (!listed.empty()) return listed;
    if (n_step <= 0) throw std::invalid_argument("--n-step must be positive");
    if (n_max < n_min) throw std::invalid_argument("--n-max must not be below --n-min");
    std::vector<long> ns;
    for (long n = n_min; n <= n_max; n += n_step) ns.push_back(n);
    return ns;
}

// Options shared by every subcommand that builds a coefficient table.
struct ParamOpts {
    std::string family = "A";
    std::string alpha;
    std::string beta;
    std::string gamma = "0";
    std::string sign = "plus";
};

void add_param_options(CLI::App* cmd, ParamOpts& p) {
    cmd->add_option("--family", p.family, "solution family")
        ->check(CLI::IsMember({"A", "B"}))
        ->required();
    cmd->add_option("--alpha", p.alpha, "alpha as a decimal literal re[,im]")->required();
    cmd->add_option("--beta", p.beta, "beta as a decimal literal re[,im]")->required();
    cmd->add_option("--gamma", p.gamma, "gamma as a decimal literal re[,im]");
    cmd->add_option("--sign", p.sign, "square-root branch of the leading order")
        ->check(CLI::IsMember({"plus", "minus"}));
}

Params make_params(const Context& ctx, const ParamOpts& p) {
    return Params(parse_complex(ctx, p.alpha), parse_complex(ctx, p.beta),
                  parse_complex(ctx, p.gamma));
}

// Late-order fit with the family-appropriate estimator.  fit_order 0 picks
// the largest admissible Type A window (the table order rounded down to
// even); window_start 0 keeps the Type B default.
LateOrderModel fit_model(const CoefficientTable& table, long fit_order, long window_start) {
    if (table.kind() == Family::TypeA) {
        const long m_max = fit_order > 0 ? fit_order : table.max_order() - (table.max_order() % 2);
        return estimate_lambda_type_a(table, m_max);
    }
    return estimate_lambda_type_b(table, window_start);
}

RemainderSpec make_spec(const Context& ctx, Family kind, const std::string& s1,
                        const std::string& s4) {
    if (kind == Family::TypeA) {
        if (s1 != "0" || s4 != "0") {
            throw std::invalid_argument("axis multipliers --s1/--s4 apply to family B only");
        }
        return RemainderSpec::type_a(ctx);
    }
    return RemainderSpec::type_b(ctx, parse_complex(ctx, s1), parse_complex(ctx, s4));
}

// Rows in the batch-evaluation format, but with a caller-fixed inclusive
// truncation order instead of the optimal cut.
std::string fixed_order_csv(const CoefficientTable& table, const LateOrderModel& model,
                            const RemainderSpec& spec, const std::vector<long>& ns, long M) {
    const Context ctx(table.precision());
    std::ostringstream out;
    out << "# batch-evaluation\n";
    out << "# family: " << (table.kind() == Family::TypeA ? 'A' : 'B') << "\n";
    out << "# alpha: " << table.params().alpha().re().str() << ' '
        << table.params().alpha().im().str() << "\n";
    out << "# beta: " << table.params().beta().re().str() << ' '
        << table.params().beta().im().str() << "\n";
    out << "# gamma: " << table.params().gamma().re().str() << ' '
        << table.params().gamma().im().str() << "\n";
    out << "# precision_bits: " << table.precision() << "\n";
    out << "# truncation: fixed inclusive order " << M << "\n";
    out << "# values printed to 30 significant digits\n";
    out << "n,series_re,series_im,remainder_re,remainder_im,total_re,total_im,N_opt\n";
    for (long n : ns) {
        if (n <= 0) throw BranchCutError("evaluation requires positive n");
        const Evaluation ev = evaluate_truncated(table.params(), table.kind(), table, model,
                                                 spec, Real(ctx, n), M);
        const TruncatedApproximation& branch = n % 2 == 0 ? ev.u : ev.v;
        out << n << ',' << branch.series_value.re().str(30) << ','
            << branch.series_value.im().str(30) << ',' << branch.remainder_value.re().str(30)
            << ',' << branch.remainder_value.im().str(30) << ',' << branch.total.re().str(30)
            << ',' << branch.total.im().str(30) << ',' << branch.N_opt << '\n';
    }
    return out.str();
}

std::string params_csv(const char* map_name, const Params& p) {
    std::ostringstream out;
    out << "# parameter-map: " << map_name << "\n";
    out << "name,re,im\n";
    out << "alpha," << p.alpha().re().str() << ',' << p.alpha().im().str() << "\n";
    out << "beta," << p.beta().re().str() << ',' << p.beta().im().str() << "\n";
    out << "gamma," << p.gamma().re().str() << ',' << p.gamma().im().str() << "\n";
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotically pole-free solutions of the first discrete Painleve equation"};
    app.require_subcommand(1);

    long bits = 512;
    app.add_option("--precision-bits", bits, "working precision in bits")
        ->envname("DP1ASYM_PRECISION_BITS");

    int exit_code = 0;

    // ---- coeffs / variant -------------------------------------------------
    ParamOpts co_p, va_p;
    long co_order = 50, va_order = 50;
    std::string co_out, va_out;
    {
        CLI::App* cmd = app.add_subcommand("coeffs", "compute a coefficient table as CSV");
        add_param_options(cmd, co_p);
        cmd->add_option("--max-order", co_order, "highest series order to compute");
        cmd->add_option("--output", co_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const CoefficientTable table = compute_coefficients(
                make_params(ctx, co_p), parse_family(co_p.family), parse_sign(co_p.sign),
                co_order);
            emit(table.to_csv(), co_out);
        });
    }
    {
        CLI::App* cmd = app.add_subcommand(
            "variant", "coefficient table of the variant equation (gamma multiplying w_n)");
        add_param_options(cmd, va_p);
        cmd->add_option("--max-order", va_order, "highest series order to compute");
        cmd->add_option("--output", va_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const CoefficientTable table = variant_coefficients(
                make_params(ctx, va_p), parse_family(va_p.family), parse_sign(va_p.sign),
                va_order);
            emit(table.to_csv(), va_out);
        });
    }

    // ---- lambda ------------------------------------------------------------
    ParamOpts la_p;
    long la_order = 250, la_fit = 0, la_window = 0;
    std::string la_out;
    {
        CLI::App* cmd =
            app.add_subcommand("lambda", "fit the late-order growth model, emit it as JSON");
        add_param_options(cmd, la_p);
        cmd->add_option("--max-order", la_order, "coefficient table order");
        cmd->add_option("--fit-order", la_fit,
                        "family A: highest order entering the fit (default: table order)");
        cmd->add_option("--window-start", la_window,
                        "family B: first order of the 4x4 window (default: trailing window)");
        cmd->add_option("--output", la_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const CoefficientTable table = compute_coefficients(
                make_params(ctx, la_p), parse_family(la_p.family), parse_sign(la_p.sign),
                la_order);
            const LateOrderModel model = fit_model(table, la_fit, la_window);
            if (la_out.empty()) {
                emit(model.to_json(), "");
            } else {
                write_model_json(model, la_out);
            }
        });
    }

    // ---- stokes-map ----------------------------------------------------------
    std::string sm_family = "A", sm_s1 = "0", sm_s4 = "0", sm_out;
    double sm_window = 2.0;
    long sm_res = 101;
    {
        CLI::App* cmd = app.add_subcommand(
            "stokes-map", "classify a grid of points against the family's Stokes geometry");
        cmd->add_option("--family", sm_family, "solution family")
            ->check(CLI::IsMember({"A", "B"}))
            ->required();
        cmd->add_option("--window", sm_window, "half-width of the square grid window");
        cmd->add_option("--resolution", sm_res, "points per axis");
        cmd->add_option("--s1", sm_s1, "family B: axis-side multiplier of label 1");
        cmd->add_option("--s4", sm_s4, "family B: axis-side multiplier of label 4");
        cmd->add_option("--output", sm_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const Family fam = parse_family(sm_family);
            const SingulantSet set = singulants(fam, ctx);
            const RemainderSpec spec = make_spec(ctx, fam, sm_s1, sm_s4);
            const GridWindow window{-sm_window, sm_window, -sm_window, sm_window};
            emit(grid_map_csv(set, spec, window, sm_res), sm_out);
        });
    }

    // ---- evaluate -------------------------------------------------------------
    ParamOpts ev_p;
    long ev_order = 250, ev_fit = 0, ev_window = 0, ev_M = -1;
    long ev_min = 40, ev_max = 120, ev_step = 8;
    std::vector<long> ev_ns;
    std::string ev_s1 = "0", ev_s4 = "0", ev_out;
    {
        CLI::App* cmd = app.add_subcommand(
            "evaluate", "assemble the asymptotic approximation at integer lattice points");
        add_param_options(cmd, ev_p);
        cmd->add_option("--max-order", ev_order, "coefficient table order");
        cmd->add_option("--fit-order", ev_fit, "family A: late-order fit window");
        cmd->add_option("--window-start", ev_window, "family B: late-order fit window");
        cmd->add_option("--series-order", ev_M,
                        "fixed inclusive truncation order (default: optimal truncation)");
        cmd->add_option("--n", ev_ns, "explicit lattice points (repeatable)");
        cmd->add_option("--n-min", ev_min, "range start when --n is absent");
        cmd->add_option("--n-max", ev_max, "range end");
        cmd->add_option("--n-step", ev_step, "range stride");
        cmd->add_option("--s1", ev_s1, "family B: axis-side multiplier of label 1");
        cmd->add_option("--s4", ev_s4, "family B: axis-side multiplier of label 4");
        cmd->add_option("--output", ev_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const Family fam = parse_family(ev_p.family);
            const CoefficientTable table = compute_coefficients(
                make_params(ctx, ev_p), fam, parse_sign(ev_p.sign), ev_order);
            const LateOrderModel model = fit_model(table, ev_fit, ev_window);
            const RemainderSpec spec = make_spec(ctx, fam, ev_s1, ev_s4);
            const std::vector<long> ns = make_range(ev_ns, ev_min, ev_max, ev_step);
            if (ev_M < 0) {
                emit(batch_csv(table, model, spec, ns), ev_out);
            } else {
                emit(fixed_order_csv(table, model, spec, ns, ev_M), ev_out);
            }
        });
    }

    // ---- iterate ---------------------------------------------------------------
    std::string it_alpha, it_beta, it_gamma = "0", it_w0, it_w1;
    std::string it_direction = "forward", it_base = "1e-8", it_offset = "0", it_out;
    long it_nmax = 120, it_top = 0, it_down = 0;
    {
        CLI::App* cmd =
            app.add_subcommand("iterate", "iterate the recurrence directly from two seeds");
        cmd->add_option("--alpha", it_alpha, "alpha as a decimal literal re[,im]")->required();
        cmd->add_option("--beta", it_beta, "beta as a decimal literal re[,im]")->required();
        cmd->add_option("--gamma", it_gamma, "gamma as a decimal literal re[,im]");
        cmd->add_option("--w0", it_w0, "seed value at the first index")->required();
        cmd->add_option("--w1", it_w1, "seed value at the next index")->required();
        cmd->add_option("--direction", it_direction, "forward from (0,1) or backward from --top")
            ->check(CLI::IsMember({"forward", "backward"}));
        cmd->add_option("--n-max", it_nmax, "forward: last index to fill");
        cmd->add_option("--top", it_top, "backward: index of the --w0 seed");
        cmd->add_option("--down-to", it_down, "backward: lowest index to fill");
        cmd->add_option("--pole-base", it_base, "pole detector base scale");
        cmd->add_option("--offset", it_offset, "complex lattice-line offset");
        cmd->add_option("--output", it_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const Params params(parse_complex(ctx, it_alpha), parse_complex(ctx, it_beta),
                                parse_complex(ctx, it_gamma));
            const Complex w0 = parse_complex(ctx, it_w0);
            const Complex w1 = parse_complex(ctx, it_w1);
            const Real base(ctx, it_base);
            const Complex offset = parse_complex(ctx, it_offset);
            const LatticeSolution orbit =
                it_direction == "backward"
                    ? iterate_backward(params, w0, w1, it_top, it_down, base, offset)
                    : iterate_forward(params, w0, w1, it_nmax, base, offset);
            emit(orbit.to_csv(), it_out);
            if (orbit.pole_flagged()) exit_code = exit_pole;
        });
    }

    // ---- compare ------------------------------------------------------------------
    ParamOpts cm_p;
    std::string cm_w0, cm_w1, cm_s1 = "0", cm_s4 = "0", cm_base = "1e-8", cm_out;
    long cm_order = 250, cm_fit = 0, cm_window = 0, cm_M = 8;
    long cm_min = 40, cm_max = 120, cm_step = 8;
    {
        CLI::App* cmd = app.add_subcommand(
            "compare", "fit the decay of |orbit - asymptotic| across a range of indices");
        add_param_options(cmd, cm_p);
        cmd->add_option("--w0", cm_w0, "orbit seed at index 0")->required();
        cmd->add_option("--w1", cm_w1, "orbit seed at index 1")->required();
        cmd->add_option("--max-order", cm_order, "coefficient table order");
        cmd->add_option("--fit-order", cm_fit, "family A: late-order fit window");
        cmd->add_option("--window-start", cm_window, "family B: late-order fit window");
        cmd->add_option("--series-order", cm_M, "inclusive truncation order of the prediction");
        cmd->add_option("--n-min", cm_min, "first compared index");
        cmd->add_option("--n-max", cm_max, "last compared index");
        cmd->add_option("--n-step", cm_step, "stride between compared indices");
        cmd->add_option("--s1", cm_s1, "family B: axis-side multiplier of label 1");
        cmd->add_option("--s4", cm_s4, "family B: axis-side multiplier of label 4");
        cmd->add_option("--pole-base", cm_base, "pole detector base scale");
        cmd->add_option("--output", cm_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            const Family fam = parse_family(cm_p.family);
            const Params params = make_params(ctx, cm_p);
            const CoefficientTable table =
                compute_coefficients(params, fam, parse_sign(cm_p.sign), cm_order);
            const LateOrderModel model = fit_model(table, cm_fit, cm_window);
            const RemainderSpec spec = make_spec(ctx, fam, cm_s1, cm_s4);
            const LatticeSolution orbit =
                iterate_forward(params, parse_complex(ctx, cm_w0), parse_complex(ctx, cm_w1),
                                cm_max, Real(ctx, cm_base), Complex(ctx));
            std::vector<std::pair<long, Complex>> predictions;
            for (long n : make_range({}, cm_min, cm_max, cm_step)) {
                if (n > orbit.last_index()) break;
                const Evaluation ev =
                    evaluate_truncated(params, fam, table, model, spec, Real(ctx, n), cm_M);
                predictions.emplace_back(
                    n, reconstruct_lattice(ev.u.total, ev.v.total,
                                           n % 2 == 0 ? Parity::Even : Parity::Odd));
            }
            const CompareReport report = compare(orbit, predictions, cm_M);
            emit(compare_csv(report), cm_out);
            if (orbit.pole_flagged()) exit_code = exit_pole;
        });
    }

    // ---- parameter maps ------------------------------------------------------------
    std::string p4_z, p4_mu, p4_out;
    {
        CLI::App* cmd = app.add_subcommand(
            "map-p4", "parameters of the discrete string equation x''-type reduction");
        cmd->add_option("--z", p4_z, "z as a decimal literal re[,im]")->required();
        cmd->add_option("--mu", p4_mu, "mu as a decimal literal re[,im]")->required();
        cmd->add_option("--output", p4_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            emit(params_csv("p4", map_p4(parse_complex(ctx, p4_z), parse_complex(ctx, p4_mu))),
                 p4_out);
        });
    }
    std::string fr_kappa, fr_mu, fr_out;
    {
        CLI::App* cmd = app.add_subcommand(
            "map-freud", "recurrence parameters for the quartic Freud weight");
        cmd->add_option("--kappa", fr_kappa, "kappa as a decimal literal re[,im]")->required();
        cmd->add_option("--mu", fr_mu, "mu as a decimal literal re[,im]")->required();
        cmd->add_option("--output", fr_out, "write to this path instead of stdout");
        cmd->callback([&] {
            const Context ctx(bits);
            emit(params_csv("freud",
                            map_freud(parse_complex(ctx, fr_kappa), parse_complex(ctx, fr_mu))),
                 fr_out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const IllConditionedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_code;
}
