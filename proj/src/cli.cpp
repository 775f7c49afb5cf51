#include "dmqc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dmqc/correlations.hpp"
#include "dmqc/csv.hpp"
#include "dmqc/esd.hpp"
#include "dmqc/spectra.hpp"
#include "dmqc/trajectory.hpp"
#include "dmqc/verify.hpp"

namespace dmqc::cli {

namespace {

using json = nlohmann::json;

StateKind parse_state(const std::string& s) {
    if (s == "werner") {
        return StateKind::Werner;
    }
    if (s == "mems") {
        return StateKind::Mems;
    }
    throw DomainError("unknown state '" + s + "' (expected werner or mems)");
}

std::string state_name(StateKind k) { return k == StateKind::Werner ? "werner" : "mems"; }

InitialState make_state(StateKind kind, double gamma) {
    return kind == StateKind::Werner ? InitialState::werner(gamma) : InitialState::mems(gamma);
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
        throw DomainError("not a finite number: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

QubitAmplitudes parse_aux(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 4) {
        throw DomainError("--aux expects 're0,im0,re1,im1', got '" + s + "'");
    }
    QubitAmplitudes a{{parse_double(parts[0]), parse_double(parts[1])}, {parse_double(parts[2]), parse_double(parts[3])}};
    a.validate();
    return a;
}

Embedding parse_embedding(const std::string& s) {
    if (s == "leading") {
        return Embedding::LeadingPair;
    }
    if (s == "trailing") {
        return Embedding::TrailingPair;
    }
    throw DomainError("unknown embedding '" + s + "' (expected leading or trailing)");
}

TrajectoryOptions trajectory_options(const RunConfig& cfg) {
    TrajectoryOptions o;
    if (cfg.aux) {
        o.aux = *cfg.aux;
    }
    o.embedding = cfg.embedding;
    return o;
}

// Writes `text` to cfg.output or `out`.
int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return out ? kOk : kIoError;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        err << "error: cannot open '" << path << "' for writing\n";
        return kIoError;
    }
    f << text;
    f.flush();
    if (!f) {
        err << "error: write to '" << path << "' failed\n";
        return kIoError;
    }
    return kOk;
}

std::optional<Scenario> scenario_for(const RunConfig& cfg) {
    if (cfg.state == StateKind::Werner) {
        return Scenario::WernerAnyAxis;
    }
    if (cfg.gamma >= 2.0 / 3.0) {
        switch (cfg.axis) {
        case Axis::X: return Scenario::Mems1X;
        case Axis::Y: return Scenario::Mems1Y;
        case Axis::Z: return Scenario::Mems1Z;
        }
    }
    if (std::abs(cfg.gamma - 1.0 / 3.0) <= 1e-12) {
        switch (cfg.axis) {
        case Axis::X: return Scenario::Mems2X;
        case Axis::Y: return Scenario::Mems2Y;
        case Axis::Z: return Scenario::Mems2Z;
        }
    }
    return std::nullopt;
}

// Options shared by evolve, esd and spectra.
struct RunOptions {
    std::string state = "mems";
    std::string axis = "z";
    std::string aux;
    std::string embedding = "leading";
    RunConfig cfg;

    void attach(CLI::App* sub) {
        sub->add_option("--state", state, "Initial pair state: werner | mems")->required();
        sub->add_option("--gamma", cfg.gamma, "Mixing / entanglement parameter in [0, 1]")->required();
        sub->add_option("--axis", axis, "DM vector direction: x | y | z")->required();
        sub->add_option("--d", cfg.strength, "DM strength D >= 0 (hbar = 1)")->required();
        sub->add_option("--tmax", cfg.t_max, "End of the time window")->capture_default_str();
        sub->add_option("--n", cfg.samples, "Number of samples on [0, tmax]")->capture_default_str();
        sub->add_option("--out", cfg.output, "Output file (default: stdout)");
        sub->add_option("--aux", aux, "Auxiliary amplitudes 're0,im0,re1,im1' (default 1,0,0,0)");
        sub->add_option("--embedding", embedding, "Where the DM unitary acts: leading | trailing")
            ->capture_default_str();
    }

    RunConfig resolve() {
        cfg.state = parse_state(state);
        cfg.axis = parse_axis(axis);
        cfg.embedding = parse_embedding(embedding);
        if (!aux.empty()) {
            cfg.aux = parse_aux(aux);
        }
        cfg.validate();
        return cfg;
    }
};

int cmd_evolve(RunOptions& ro, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = ro.resolve();
    const auto samples = trajectory(make_state(cfg.state, cfg.gamma), DMCoupling{cfg.axis, cfg.strength}, cfg.t_max,
                                    cfg.samples, trajectory_options(cfg));
    std::ostringstream os;
    csv::write_trajectory(os, samples);
    return emit(cfg.output, os.str(), out, err);
}

int cmd_esd(RunOptions& ro, bool as_json, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = ro.resolve();
    const auto windows = detect_esd(make_state(cfg.state, cfg.gamma), DMCoupling{cfg.axis, cfg.strength}, cfg.t_max,
                                    cfg.samples, EsdOptions{cfg.esd_threshold}, trajectory_options(cfg));
    std::ostringstream os;
    if (as_json) {
        json j;
        j["state"] = state_name(cfg.state);
        j["gamma"] = cfg.gamma;
        j["axis"] = std::string(to_string(cfg.axis));
        j["D"] = cfg.strength;
        j["t_max"] = cfg.t_max;
        j["threshold"] = cfg.esd_threshold;
        j["windows"] = json::array();
        for (const auto& w : windows) {
            j["windows"].push_back({{"t_start", w.t_start}, {"t_end", w.t_end}});
        }
        os << j.dump(2) << '\n';
    } else {
        os << "ESD windows for " << state_name(cfg.state) << " gamma=" << cfg.gamma << " axis=" << to_string(cfg.axis)
           << " D=" << cfg.strength << " on [0, " << cfg.t_max << "], concurrence < " << cfg.esd_threshold << '\n';
        if (windows.empty()) {
            os << "  none\n";
        }
        os << std::fixed << std::setprecision(6);
        for (const auto& w : windows) {
            os << "  [" << w.t_start << ", " << w.t_end << "]  width " << w.width() << '\n';
        }
    }
    return emit(cfg.output, os.str(), out, err);
}

int cmd_spectra(RunOptions& ro, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = ro.resolve();
    const Evolution evo(make_state(cfg.state, cfg.gamma), cfg.aux.value_or(QubitAmplitudes{}),
                        DMCoupling{cfg.axis, cfg.strength}, cfg.embedding);
    const auto scenario = scenario_for(cfg);
    const auto times = time_grid(cfg.t_max, cfg.samples);
    std::ostringstream os;
    os << "t,lambda1,lambda2,lambda3,lambda4,oracle1,oracle2,oracle3,oracle4\n";
    for (double t : times) {
        const auto l = concurrence_roots(evo.rdm_at(t));
        os << csv::number(t);
        for (double v : l) {
            os << ',' << csv::number(v);
        }
        if (scenario) {
            for (double v : oracle_spectrum({*scenario, cfg.gamma, cfg.strength}, t)) {
                os << ',' << csv::number(v);
            }
        } else {
            os << ",,,,";
        }
        os << '\n';
    }
    return emit(cfg.output, os.str(), out, err);
}

struct SweepOptions {
    std::string state = "mems";
    std::string axes = "z";
    std::string gammas;
    std::string strengths;
    double t_max = 10.0;
    int samples = 1000;
    std::string output;
};

int cmd_sweep(const SweepOptions& so, std::ostream& out, std::ostream& err) {
    const StateKind kind = parse_state(so.state);
    std::vector<Axis> axes;
    for (const auto& a : split(so.axes, ',')) {
        axes.push_back(parse_axis(a));
    }
    const auto gammas = parse_grid(so.gammas);
    const auto strengths = parse_grid(so.strengths);
    if (axes.empty() || gammas.empty() || strengths.empty()) {
        throw DomainError("sweep grid is empty");
    }
    for (double g : gammas) {
        make_state(kind, g);
    }
    for (double d : strengths) {
        DMCoupling{Axis::X, d}.validate();
    }
    if (so.samples < 1) {
        throw DomainError("--n must be >= 1");
    }
    if (so.samples > 1 && (!(so.t_max > 0.0) || !std::isfinite(so.t_max))) {
        throw DomainError("--tmax must be finite and > 0");
    }

    struct Cell {
        Axis axis;
        double strength;
        double gamma;
    };
    std::vector<Cell> cells;
    for (Axis a : axes) {
        for (double d : strengths) {
            for (double g : gammas) {
                cells.push_back({a, d, g});
            }
        }
    }

    const int n = static_cast<int>(cells.size());
    std::vector<std::string> rows(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const Cell& c = cells[i];
        const InitialState init = make_state(kind, c.gamma);
        const DMCoupling coupling{c.axis, c.strength};
        const auto samples = so.samples == 1 ? std::vector<CorrelationSample>{measure(evolve_rdm(init, {}, coupling, 0.0), 0.0)}
                                             : trajectory_serial(init, coupling, so.t_max, so.samples);
        std::ostringstream os;
        csv::write_sweep_rows(os, c.axis, c.strength, c.gamma, samples);
        rows[i] = os.str();
    }

    std::ostringstream os;
    os << csv::kSweepHeader << '\n';
    for (const auto& r : rows) {
        os << r;
    }
    return emit(so.output, os.str(), out, err);
}

int cmd_verify(bool as_json, double fault, int discord_states, std::ostream& out) {
    VerifyOptions opts;
    opts.fault = fault;
    if (discord_states < 1) {
        throw DomainError("--discord-states must be >= 1");
    }
    opts.discord_states = discord_states;
    const VerificationReport report = run_verification(opts);

    if (as_json) {
        json j;
        j["passed"] = report.all_passed();
        j["seconds"] = report.seconds;
        j["checks"] = json::array();
        for (const auto& c : report.checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"max_deviation", std::isfinite(c.max_deviation) ? json(c.max_deviation) : json(nullptr)},
                                   {"tolerance", c.tolerance},
                                   {"passed", c.passed},
                                   {"detail", c.detail}});
        }
        out << j.dump(2) << '\n';
    } else {
        out << std::left << std::setw(30) << "check" << std::setw(16) << "max-deviation" << std::setw(12) << "tolerance"
            << "result\n";
        for (const auto& c : report.checks) {
            std::ostringstream dev;
            dev << std::scientific << std::setprecision(3) << c.max_deviation;
            std::ostringstream tol;
            tol << std::scientific << std::setprecision(0) << c.tolerance;
            out << std::left << std::setw(30) << c.name << std::setw(16) << dev.str() << std::setw(12) << tol.str()
                << (c.passed ? "PASS" : "FAIL") << "  " << c.detail << '\n';
        }
        out << (report.all_passed() ? "all checks passed" : "verification FAILED") << " in " << std::fixed
            << std::setprecision(1) << report.seconds << " s\n";
    }
    return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

void RunConfig::validate() const {
    make_state(state, gamma);
    DMCoupling{axis, strength}.validate();
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw DomainError("--tmax must be finite and > 0");
    }
    if (samples < 2) {
        throw DomainError("--n must be >= 2");
    }
    if (!(esd_threshold > 0.0)) {
        throw DomainError("--threshold must be > 0");
    }
    if (aux) {
        aux->validate();
    }
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.empty()) {
        return out;
    }
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw DomainError("range must be 'start:stop:count', got '" + spec + "'");
        }
        const double a = parse_double(parts[0]);
        const double b = parse_double(parts[1]);
        const double count = parse_double(parts[2]);
        if (count < 1 || count != std::floor(count)) {
            throw DomainError("range count must be a positive integer, got '" + parts[2] + "'");
        }
        const int n = static_cast<int>(count);
        for (int k = 0; k < n; ++k) {
            out.push_back(n == 1 ? a : (k == n - 1 ? b : a + (b - a) * k / (n - 1)));
        }
        return out;
    }
    for (const auto& p : split(spec, ',')) {
        out.push_back(parse_double(p));
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pair-qubit correlations under a Dzyaloshinskii-Moriya coupled auxiliary qubit"};
    app.require_subcommand(1);

    RunOptions evolve_opts;
    auto* evolve = app.add_subcommand("evolve", "Concurrence / discord trajectory as CSV");
    evolve_opts.attach(evolve);

    RunOptions esd_opts;
    bool esd_json = false;
    auto* esd = app.add_subcommand("esd", "Entanglement-sudden-death windows");
    esd_opts.attach(esd);
    esd->add_option("--threshold", esd_opts.cfg.esd_threshold, "Concurrence threshold")->capture_default_str();
    esd->add_flag("--json", esd_json, "Machine-readable report");

    RunOptions spectra_opts;
    auto* spectra = app.add_subcommand("spectra", "Numeric vs closed-form square-root spectra of rho*rho~ as CSV");
    spectra_opts.attach(spectra);

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Long-format CSV over a grid of axes, strengths and gammas");
    sweep->add_option("--state", sweep_opts.state, "werner | mems")->required();
    sweep->add_option("--axis", sweep_opts.axes, "Comma-separated axes")->capture_default_str();
    sweep->add_option("--gamma", sweep_opts.gammas, "Gamma grid: 'a,b,c' or 'start:stop:count'")->required();
    sweep->add_option("--d", sweep_opts.strengths, "Strength grid: 'a,b,c' or 'start:stop:count'")->required();
    sweep->add_option("--tmax", sweep_opts.t_max, "End of the time window")->capture_default_str();
    sweep->add_option("--n", sweep_opts.samples, "Samples per cell; 1 means t = 0 only")->capture_default_str();
    sweep->add_option("--out", sweep_opts.output, "Output file (default: stdout)");

    bool verify_json = false;
    double verify_fault = 0.0;
    int discord_states = 200;
    auto* verify = app.add_subcommand("verify", "Run all model self-checks; exit 3 on any failure");
    verify->add_flag("--json", verify_json, "Machine-readable report");
    verify->add_option("--fault", verify_fault, "Perturb rho(0,0) of every evolved RDM (harness self-test)");
    verify->add_option("--discord-states", discord_states, "Random X states for the oracle check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*evolve) {
            return cmd_evolve(evolve_opts, out, err);
        }
        if (*esd) {
            return cmd_esd(esd_opts, esd_json, out, err);
        }
        if (*spectra) {
            return cmd_spectra(spectra_opts, out, err);
        }
        if (*sweep) {
            return cmd_sweep(sweep_opts, out, err);
        }
        if (*verify) {
            return cmd_verify(verify_json, verify_fault, discord_states, out);
        }
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ContractViolation& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace dmqc::cli
