#include "qwalk/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qwalk/absorb.hpp"
#include "qwalk/localize.hpp"
#include "qwalk/output.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
}

Complex parse_amplitude(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) return {parse_double(s), 0.0};
    return {parse_double(s.substr(0, colon)), parse_double(s.substr(colon + 1))};
}

// Thrown for tolerance failures after a partial result has been written.
struct ToleranceFailure {
    std::string message;
};

struct Common {
    std::string format = "csv";
    std::string out_path;

    OutputFormat fmt() const { return format == "json" ? OutputFormat::Json : OutputFormat::Csv; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", c.out_path, "Output file (default: stdout); relative paths resolve against $" +
                                             std::string(kOutputDirEnv) + " when set");
}

void emit(const OutputRecord& rec, const Common& c, std::ostream& out) {
    const std::string text = render(rec, c.fmt());
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::filesystem::path p(c.out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + p.string());
    f << text;
}

BoundarySpec make_bounds(const std::optional<int>& left, const std::optional<int>& right) {
    BoundarySpec b{left, right};
    b.validate();
    return b;
}

std::optional<double> opt(double v) { return v; }

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    Common common;
    std::string init;
    std::optional<int> left;
    std::optional<int> right;
    int steps = 100;
    std::vector<int> snapshots;
};

OutputRecord simulate(const SimulateArgs& a) {
    const CoinSpinor init = parse_spinor(a.init);
    require_normalized(init);
    const BoundarySpec bounds = make_bounds(a.left, a.right);
    if (a.steps < 0) throw std::invalid_argument("--steps must be >= 0");

    if (!bounds.empty()) {
        const AbsorptionReport rep = run_walk(init, bounds, a.steps);
        OutputRecord rec{"simulate", {"t", "absorbed_left", "absorbed_right", "remaining"}, {}};
        double cl = 0.0, cr = 0.0;
        for (int t = 0; t <= a.steps; ++t) {
            cl += rep.left_mass[static_cast<std::size_t>(t)];
            cr += rep.right_mass[static_cast<std::size_t>(t)];
            rec.add_row({opt(t), opt(cl), opt(cr), opt(rep.remaining[static_cast<std::size_t>(t)])});
        }
        return rec;
    }

    std::vector<int> snaps = a.snapshots.empty() ? std::vector<int>{a.steps} : a.snapshots;
    for (int s : snaps)
        if (s < 0 || s > a.steps) throw std::invalid_argument("--snapshots entries must lie in [0, --steps]");
    std::sort(snaps.begin(), snaps.end());
    snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());

    OutputRecord rec{"distribution", {"t", "m", "p"}, {}};
    Walker walker(WalkState::at_origin(init), bounds);
    std::size_t next = 0;
    for (int t = 0; t <= a.steps && next < snaps.size(); ++t) {
        if (t > 0) walker.step();
        if (snaps[next] != t) continue;
        for (const auto& [m, p] : position_distribution(walker.state()))
            rec.add_row({opt(t), opt(static_cast<double>(m)), opt(p)});
        ++next;
    }
    return rec;
}

// ---------------------------------------------------------------- absorb

struct AbsorbArgs {
    Common common;
    std::optional<int> left;
    std::optional<int> right;
    std::string spinor = "0,0,1";
    std::optional<double> tol;
};

OutputRecord absorb_cmd(const AbsorbArgs& a, std::optional<ToleranceFailure>& failure) {
    AbsorptionQuery q{parse_spinor(a.spinor), make_bounds(a.left, a.right)};
    q.validate();
    if (a.tol && !(*a.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
    const AbsorptionAnswer ans = absorb(q, a.tol);
    OutputRecord rec{"absorb", {"p_left", "p_right", "sum", "deficit", "error_estimate", "converged"}, {}};
    rec.add_row({opt(ans.p_left), opt(ans.p_right), opt(ans.sum), opt(ans.deficit), opt(ans.error_estimate),
                 opt(ans.converged ? 1.0 : 0.0)});
    if (!ans.converged) failure = ToleranceFailure{"quadrature did not reach the requested tolerance"};
    return rec;
}

// ---------------------------------------------------------------- table1

struct MaxNArgs {
    Common common;
    int max_n = 6;
    std::optional<double> tol;
};

QuadratureSpec two_spec(const std::optional<double>& tol) {
    if (tol && !(*tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
    return tol ? two_boundary_quadrature(*tol) : two_boundary_quadrature();
}

OutputRecord table1_cmd(const MaxNArgs& a, std::optional<ToleranceFailure>& failure) {
    if (a.max_n < 2) throw std::invalid_argument("--max-n must be >= 2");
    OutputRecord rec{"table1", {"n", "left", "right", "sum", "p_scaled", "log2_p_scaled", "precise"}, {}};
    bool all_precise = true;
    for (const Table1Row& row : table1(a.max_n, two_spec(a.tol))) {
        rec.add_row({opt(row.n), opt(row.left), opt(row.right), opt(row.sum), row.localization_scaled,
                     row.log2_scaled, opt(row.precise ? 1.0 : 0.0)});
        all_precise = all_precise && row.precise;
    }
    if (!all_precise) failure = ToleranceFailure{"quadrature error exceeds 1e-12 for at least one row"};
    return rec;
}

// ---------------------------------------------------------------- theorem4

OutputRecord theorem4_cmd(const MaxNArgs& a, std::optional<ToleranceFailure>& failure) {
    if (a.max_n < 0) throw std::invalid_argument("--max-n must be >= 0");
    const QuadratureSpec spec = two_spec(a.tol);
    const std::vector<double> p = theorem4_sequence(a.max_n);
    OutputRecord rec{"theorem4", {"n", "p_recurrence", "p_left_L", "p_left_S", "p_left_R"}, {}};
    bool ok = true;
    for (int n = 0; n <= a.max_n; ++n) {
        std::vector<std::optional<double>> row{opt(n), opt(p[static_cast<std::size_t>(n)])};
        for (Coin c : {Coin::Left, Coin::Stay, Coin::Right}) {
            if (n == 0) {
                row.push_back(0.0);
                continue;
            }
            const Estimate e = prob_two_boundary_left(1, n, CoinSpinor::basis(c), spec);
            ok = ok && e.converged;
            row.push_back(e.value);
        }
        rec.add_row(std::move(row));
    }
    if (!ok) failure = ToleranceFailure{"quadrature did not reach the requested tolerance"};
    return rec;
}

// ---------------------------------------------------------------- localize

struct LocalizeArgs {
    Common common;
    int steps = 500;
    bool profile = false;
};

OutputRecord localize_cmd(const LocalizeArgs& a) {
    if (a.steps < 1) throw std::invalid_argument("--steps must be >= 1");
    if (a.profile) {
        OutputRecord rec{"two_peak_profile", {"m", "p_average", "p_localized"}, {}};
        const auto loc = localized_profile(a.steps);
        for (const auto& [m, p] : two_peak_profile(a.steps)) {
            const auto it = loc.find(m);
            rec.add_row({opt(static_cast<double>(m)), opt(p), opt(it == loc.end() ? 0.0 : it->second)});
        }
        return rec;
    }
    const OscillationTrace tr = oscillation_trace(a.steps);
    OutputRecord rec{"oscillation", {"t", "p_minus1", "p_zero", "sum"}, {}};
    for (std::size_t i = 0; i < tr.t.size(); ++i)
        rec.add_row({opt(tr.t[i]), opt(tr.p_minus1[i]), opt(tr.p_zero[i]), opt(tr.sum[i])});
    return rec;
}

// ---------------------------------------------------------------- moving-boundary

struct MovingArgs {
    Common common;
    int max_m = 10;
    std::string spinor;
    std::optional<double> tol;
};

OutputRecord moving_boundary_cmd(const MovingArgs& a, std::optional<ToleranceFailure>& failure) {
    if (a.max_m < 1) throw std::invalid_argument("--max-m must be >= 1");
    if (a.tol && !(*a.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
    const QuadratureSpec spec = a.tol ? one_boundary_quadrature(*a.tol) : one_boundary_quadrature();

    std::vector<CoinSpinor> spinors;
    OutputRecord rec{"moving_boundary", {"M"}, {}};
    if (a.spinor.empty()) {
        spinors = {CoinSpinor::basis(Coin::Left), CoinSpinor::basis(Coin::Stay), CoinSpinor::basis(Coin::Right)};
        rec.columns.insert(rec.columns.end(), {"p_L", "p_S", "p_R"});
    } else {
        spinors = {parse_spinor(a.spinor)};
        require_normalized(spinors.front());
        rec.columns.push_back("p");
    }
    bool ok = true;
    for (int m = 1; m <= a.max_m; ++m) {
        std::vector<std::optional<double>> row{opt(m)};
        for (const CoinSpinor& s : spinors) {
            const Estimate e = prob_one_boundary(m, s, spec);
            ok = ok && e.converged;
            row.push_back(e.value);
        }
        rec.add_row(std::move(row));
    }
    if (!ok) failure = ToleranceFailure{"quadrature did not reach the requested tolerance"};
    return rec;
}

}  // namespace

CoinSpinor parse_spinor(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest(text);
    for (;;) {
        const auto comma = rest.find(',');
        parts.push_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (parts.size() != 3)
        throw std::invalid_argument("spinor must have three comma-separated amplitudes, got '" + text + "'");
    return {parse_amplitude(parts[0]), parse_amplitude(parts[1]), parse_amplitude(parts[2])};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-state Grover walks on a line with absorbing boundaries"};
    app.name(args.empty() ? "qwalk" : args.front());
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* c_sim = app.add_subcommand("simulate", "Evolve the walk and report absorbed mass per step");
    c_sim->add_option("--init", sim.init, "Initial coin spinor a,b,c (each re or re:im)")->required();
    c_sim->add_option("--left", sim.left, "Left boundary at -M (M >= 1)");
    c_sim->add_option("--right", sim.right, "Right boundary at N (N >= 1)");
    c_sim->add_option("--steps", sim.steps, "Number of steps T")->capture_default_str();
    c_sim->add_option("--snapshots", sim.snapshots, "Free walk only: steps at which to emit P(t,m) (default: T)")
        ->delimiter(',');
    add_common(c_sim, sim.common);

    AbsorbArgs ab;
    auto* c_ab = app.add_subcommand("absorb", "Absorption probabilities by contour quadrature");
    c_ab->add_option("--left", ab.left, "Left boundary at -M (M >= 1)");
    c_ab->add_option("--right", ab.right, "Right boundary at N (N >= 1)");
    c_ab->add_option("--spinor", ab.spinor, "Initial coin spinor a,b,c (each re or re:im)")->capture_default_str();
    c_ab->add_option("--tol", ab.tol, "Absolute quadrature tolerance (default 1e-12 one boundary, 1e-13 two)");
    add_common(c_ab, ab.common);

    MaxNArgs t1;
    auto* c_t1 = app.add_subcommand("table1", "Left boundary at -2, |0,R>: absorption and localization vs N");
    c_t1->add_option("--max-n", t1.max_n, "Largest right boundary N (>= 2)")->capture_default_str();
    c_t1->add_option("--tol", t1.tol, "Absolute quadrature tolerance (default 1e-13)");
    add_common(c_t1, t1.common);

    MaxNArgs t4;
    t4.max_n = 10;
    auto* c_t4 = app.add_subcommand("theorem4", "Left probability with boundaries (-1, N): recurrence and quadrature");
    c_t4->add_option("--max-n", t4.max_n, "Largest right boundary N (>= 0)")->capture_default_str();
    c_t4->add_option("--tol", t4.tol, "Absolute quadrature tolerance (default 1e-13)");
    add_common(c_t4, t4.common);

    LocalizeArgs loc;
    auto* c_loc = app.add_subcommand("localize", "Free |0,R> walk: P(t,-1), P(t,0) or the averaged profile");
    c_loc->add_option("--steps", loc.steps, "Number of steps T")->capture_default_str();
    c_loc->add_flag("--profile", loc.profile, "Emit the P(t,m) average over t in [T/2, T] and its trapped part instead of the trace");
    add_common(c_loc, loc.common);

    MovingArgs mv;
    auto* c_mv = app.add_subcommand("moving-boundary", "One boundary at -M: absorption probability vs M");
    c_mv->add_option("--max-m", mv.max_m, "Largest M (>= 1)")->capture_default_str();
    c_mv->add_option("--spinor", mv.spinor, "Initial coin spinor (default: the three basis spinors)");
    c_mv->add_option("--tol", mv.tol, "Absolute quadrature tolerance (default 1e-12)");
    add_common(c_mv, mv.common);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("qwalk");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    std::optional<ToleranceFailure> failure;
    try {
        OutputRecord rec;
        const Common* common = nullptr;
        if (*c_sim) {
            rec = simulate(sim);
            common = &sim.common;
        } else if (*c_ab) {
            rec = absorb_cmd(ab, failure);
            common = &ab.common;
        } else if (*c_t1) {
            rec = table1_cmd(t1, failure);
            common = &t1.common;
        } else if (*c_t4) {
            rec = theorem4_cmd(t4, failure);
            common = &t4.common;
        } else if (*c_loc) {
            rec = localize_cmd(loc);
            common = &loc.common;
        } else {
            rec = moving_boundary_cmd(mv, failure);
            common = &mv.common;
        }
        emit(rec, *common, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (failure) {
        err << "warning: " << failure->message << "\n";
        return kExitToleranceFailure;
    }
    return kExitOk;
}

}  // namespace qwalk::cli
