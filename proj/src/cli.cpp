/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtom/examples.hpp"
#include "qtom/io.hpp"
#include "qtom/separability.hpp"

namespace qtom::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEntangled = 3;

std::vector<Index> parse_dims(const std::string& spec) {
    std::vector<Index> dims;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        dims.push_back(static_cast<Index>(std::stoll(item)));
    }
    return dims;
}

io::LoadedState load_state(const std::string& path,
                           const std::string& dims_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    io::json parsed;
    try {
        parsed = io::json::parse(text);
    } catch (const io::json::parse_error& e) {
        auto [line, column] = io::line_column(text, e.byte);
        std::ostringstream msg;
        msg << path << ":" << line << ":" << column << ": " << e.what();
        throw std::runtime_error(msg.str());
    }
    io::LoadedState state = io::state_from_json(parsed);
    if (!dims_override.empty()) {
        std::vector<Index> dims = parse_dims(dims_override);
        Index prod = 1;
        for (Index d : dims) prod *= d;
        if (prod != state.mat.rows())
            throw std::runtime_error("--dims do not match the state dimension");
        state.dims = std::move(dims);
    }
    return state;
}

DensityMatrix validate_state(const io::LoadedState& state, double spectral_tol) {
    Tolerances tol;
    tol.spectral = spectral_tol;
    return DensityMatrix(state.mat, state.dims, tol);
}

void check_hermitian(const io::LoadedState& state) {
    if (!is_hermitian(state.mat, 1e-10))
        throw std::runtime_error("state matrix is not Hermitian");
}

io::json report_to_json(double kappa, const ComplexMatrix& out) {
    io::json j;
    j["kappa"] = kappa;
    j["trace"] = out.trace().real();
    j["trace_preserved"] = std::abs(out.trace() - Complex(1.0)) <= 1e-10;
    j["hermiticity_preserved"] = max_abs(out - out.adjoint()) <= 1e-10;
    j["min_output_eigenvalue"] = min_eigenvalue((out + out.adjoint()) / 2.0);
    return j;
}

struct WitnessOpts {
    std::string state_file;
    std::string dims;
    std::size_t eps_points = 41;
    std::size_t g_samples = 0;
    std::uint64_t seed = 1;
    std::size_t subsystem = 0;
    double tol = 1e-9;
    bool serial = false;
};

int run_witness(const WitnessOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        auto start = std::chrono::steady_clock::now();
        io::LoadedState loaded = load_state(opts.state_file, opts.dims);
        if (loaded.dims.size() < 2)
            throw std::runtime_error(
                "witness needs a composite state (use --dims, e.g. 2,2)");
        DensityMatrix rho = validate_state(loaded, 1e-10);

        ScanConfig cfg;
        cfg.eps_points = opts.eps_points;
        cfg.g_samples = opts.g_samples;
        cfg.seed = opts.seed;
        cfg.subsystem = opts.subsystem;
        cfg.threshold = opts.tol;
        cfg.policy = opts.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
        WitnessResult result = witness_scan(rho, cfg);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();

        io::json j;
        j["command"] = "witness";
        j["f_max"] = result.f_max;
        j["argmax_eps"] = result.argmax_eps;
        j["argmax_index"] = result.argmax_index;
        j["verdict"] = result.entangled ? "entangled" : "separable-consistent";
        j["samples_used"] = result.samples_used;
        j["eps_points"] = opts.eps_points;
        j["g_samples"] = opts.g_samples;
        j["subsystem"] = opts.subsystem == 0 ? loaded.dims.size() : opts.subsystem;
        j["seed"] = opts.seed;
        j["threshold"] = opts.tol;
        j["wall_time_s"] = seconds;
        out << j.dump(2) << "\n";
        return result.entangled ? kExitEntangled : kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

struct TomogramOpts {
    std::string state_file;
    std::string dims;
    std::string g_mode = "identity";
    std::vector<double> theta;
    std::vector<double> phi;
    std::string g_file;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool hermitian_only = false;
};

ComplexMatrix tomogram_group_element(const TomogramOpts& opts,
                                     const std::vector<Index>& dims, Index n) {
    if (opts.g_mode == "identity") return ComplexMatrix::Identity(n, n);
    if (opts.g_mode == "haar") {
        RandomStream stream(opts.seed);
        return haar_unitary(n, stream);
    }
    if (opts.g_mode == "euler") {
        if (opts.theta.empty())
            throw std::runtime_error("euler mode needs --theta (and --phi)");
        auto pick = [](const std::vector<double>& v, std::size_t k) {
            if (v.empty()) return 0.0;
            return v.size() == 1 ? v[0] : v.at(k);
        };
        if (opts.theta.size() > 1 && opts.theta.size() != dims.size())
            throw std::runtime_error("--theta count must match subsystem count");
        if (opts.phi.size() > 1 && opts.phi.size() != dims.size())
            throw std::runtime_error("--phi count must match subsystem count");
        ComplexMatrix g = spin_rotation(dims[0], {pick(opts.theta, 0),
                                                  pick(opts.phi, 0)});
        for (std::size_t k = 1; k < dims.size(); ++k)
            g = kron(g, spin_rotation(dims[k], {pick(opts.theta, k),
                                                pick(opts.phi, k)}));
        return g;
    }
    if (opts.g_mode == "file") {
        if (opts.g_file.empty()) throw std::runtime_error("file mode needs --g-file");
        std::ifstream gin(opts.g_file);
        if (!gin) throw std::runtime_error("cannot open file: " + opts.g_file);
        ComplexMatrix g = io::matrix_from_json(io::json::parse(gin));
        if (g.rows() != n) throw std::runtime_error("--g-file dimension mismatch");
        return g;
    }
    throw std::runtime_error("unknown g mode: " + opts.g_mode);
}

int run_tomogram(const TomogramOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        io::LoadedState loaded = load_state(opts.state_file, opts.dims);
        if (opts.hermitian_only)
            check_hermitian(loaded);
        else
            validate_state(loaded, 1e-10);

        ComplexMatrix g =
            tomogram_group_element(opts, loaded.dims, loaded.mat.rows());
        Tomogram t = unitary_tomogram(loaded.mat, g, loaded.dims);

        std::vector<std::vector<Index>> outcomes(t.values.size());
        for (Index flat = 0; flat < t.values.size(); ++flat) {
            Index rest = flat;
            std::vector<Index> m(loaded.dims.size());
            for (std::size_t k = loaded.dims.size(); k-- > 0;) {
                m[k] = rest % loaded.dims[k];
                rest /= loaded.dims[k];
            }
            outcomes[flat] = std::move(m);
        }

        if (opts.format == "csv") {
            out << std::setprecision(17);
            for (std::size_t k = 0; k < loaded.dims.size(); ++k)
                out << "m" << k + 1 << ",";
            out << "value\n";
            for (Index flat = 0; flat < t.values.size(); ++flat) {
                for (Index m : outcomes[flat]) out << m << ",";
                out << t.values(flat) << "\n";
            }
        } else if (opts.format == "text") {
            for (Index flat = 0; flat < t.values.size(); ++flat) {
                out << "(";
                for (std::size_t k = 0; k < outcomes[flat].size(); ++k)
                    out << (k ? " " : "") << outcomes[flat][k];
                out << ") " << t.values(flat) << "\n";
            }
            out << "sum " << t.sum() << "\n";
        } else {
            io::json rows = io::json::array();
            for (Index flat = 0; flat < t.values.size(); ++flat)
                rows.push_back({{"m", outcomes[flat]}, {"value", t.values(flat)}});
            io::json j;
            j["command"] = "tomogram";
            j["dims"] = loaded.dims;
            j["g_mode"] = opts.g_mode;
            j["rows"] = std::move(rows);
            j["sum"] = t.sum();
            out << j.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

struct ChannelOpts {
    std::string state_file;
    std::string dims;
    std::string map;
    double eps = 0.0;
    bool eps_set = false;
    double lambda = 1.0;
    bool lambda_set = false;
    std::size_t subsystem = 0;
    std::string kraus_file;
    std::string output;
    bool hermitian_only = false;
};

Superoperator channel_superop(const ChannelOpts& opts,
                              const std::vector<Index>& dims, Index n) {
    Superoperator base;
    Index d = n;
    if (opts.subsystem != 0) {
        if (opts.subsystem > dims.size())
            throw std::runtime_error("--subsystem out of range");
        d = dims[opts.subsystem - 1];
    }
    if (opts.map == "depolarize") {
        if (!opts.eps_set) throw std::runtime_error("depolarize needs --eps");
        base = depolarizing(d, opts.eps);
    } else if (opts.map == "phase-damp") {
        if (!opts.lambda_set) throw std::runtime_error("phase-damp needs --lambda");
        base = phase_damping(d, opts.lambda);
    } else if (opts.map == "transpose") {
        base = transpose_superop(d);
    } else if (opts.map == "kraus") {
        if (opts.kraus_file.empty())
            throw std::runtime_error("kraus needs --kraus-file");
        KrausMap k = io::load_kraus_file(opts.kraus_file);
        if (k.dim() != d) throw std::runtime_error("kraus map dimension mismatch");
        base = kraus_superop(k);
    } else {
        throw std::runtime_error("unknown map: " + opts.map);
    }
    if (opts.subsystem == 0) return base;
    return ensemble_superop(
        single_subsystem_ensemble(dims, opts.subsystem, base), dims);
}

int run_channel(const ChannelOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        io::LoadedState loaded = load_state(opts.state_file, opts.dims);
        if (opts.hermitian_only)
            check_hermitian(loaded);
        else
            validate_state(loaded, 1e-10);

        Superoperator l = channel_superop(opts, loaded.dims, loaded.mat.rows());
        ComplexMatrix result = l.apply(loaded.mat);
        double purity_in = (loaded.mat * loaded.mat).trace().real();
        double kappa = (result * result).trace().real() / purity_in;

        io::json j;
        j["command"] = "channel";
        j["map"] = opts.map;
        j["report"] = report_to_json(kappa, result);
        if (opts.map == "depolarize")
            j["report"]["in_semigroup"] = depolarizing_in_semigroup(opts.eps);
        if (!opts.output.empty()) {
            io::save_state_file(opts.output, result, loaded.dims);
            j["state_file"] = opts.output;
        } else {
            j["state"] = io::state_to_json(result, loaded.dims);
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

struct ReconstructOpts {
    std::string measurements_file;
    std::string dims;
    std::string output;
};

int run_reconstruct(const ReconstructOpts& opts, std::ostream& out,
                    std::ostream& err) {
    try {
        std::ifstream in(opts.measurements_file);
        if (!in)
            throw std::runtime_error("cannot open file: " +
                                     opts.measurements_file);
        auto [measurements, dims] = io::measurements_from_json(io::json::parse(in));
        if (!opts.dims.empty()) dims = parse_dims(opts.dims);
        if (dims.empty())
            throw std::runtime_error(
                "no dims: provide --dims or a \"dims\" entry in the file");
        DensityMatrix rho = reconstruct(measurements, dims);

        io::json j;
        j["command"] = "reconstruct";
        j["measurements"] = measurements.size();
        if (!opts.output.empty()) {
            io::save_state_file(opts.output, rho.mat(), rho.dims());
            j["state_file"] = opts.output;
        } else {
            j["state"] = io::state_to_json(rho.mat(), rho.dims());
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

struct ExamplesOpts {
    std::string item;
    bool as_json = false;
    std::string write_states;
    std::uint64_t seed = 1;
};

int run_examples(const ExamplesOpts& opts, std::ostream& out, std::ostream& err) {
    try {
        if (!opts.write_states.empty()) {
            auto written = write_example_states(opts.write_states);
            if (!opts.as_json)
                for (const auto& p : written) out << "wrote " << p.string() << "\n";
        }
        std::vector<ExampleResult> results = run_example_suite(opts.item, opts.seed);
        if (results.empty() && !opts.item.empty())
            throw std::runtime_error("unknown item: " + opts.item);
        bool all_pass = true;
        for (const auto& r : results) all_pass = all_pass && r.pass;

        if (opts.as_json) {
            io::json items = io::json::array();
            for (const auto& r : results) {
                io::json item = {
                    {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
                if (!r.curve.empty()) {
                    io::json curve = io::json::array();
                    for (auto [eps, f] : r.curve) curve.push_back({eps, f});
                    item["curve"] = std::move(curve);
                }
                items.push_back(std::move(item));
            }
            io::json j;
            j["command"] = "examples";
            j["items"] = std::move(items);
            j["all_pass"] = all_pass;
            out << j.dump(2) << "\n";
        } else {
            for (const auto& r : results) {
                // single-item runs print the full witness curve
                if (!opts.item.empty() && !r.curve.empty()) {
                    out << std::setprecision(15);
                    out << "eps F\n";
                    for (auto [eps, f] : r.curve)
                        out << eps << " " << f << "\n";
                }
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — "
                    << r.detail << "\n";
            }
        }
        return all_pass ? kExitOk : kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "qtom — density-state geometry, positive maps and unitary tomograms"};
    app.require_subcommand(1);

    WitnessOpts w;
    CLI::App* witness = app.add_subcommand(
        "witness", "Scan the tomographic entanglement witness F(g, L)");
    witness->add_option("state", w.state_file, "state JSON file")->required();
    witness->add_option("--dims", w.dims, "subsystem dimensions, e.g. 2,2");
    witness->add_option("--eps-grid", w.eps_points, "probe-parameter grid size")
        ->check(CLI::PositiveNumber);
    witness->add_option("--g-samples", w.g_samples, "extra Haar samples per point");
    witness->add_option("--seed", w.seed, "random seed");
    witness->add_option("--subsystem", w.subsystem,
                        "1-based probed subsystem (default: last)");
    witness->add_option("--tol", w.tol, "entanglement threshold above 1");
    witness->add_flag("--serial", w.serial, "force the serial scan path");

    TomogramOpts t;
    CLI::App* tomogram =
        app.add_subcommand("tomogram", "Print the tomogram of a state");
    tomogram->add_option("state", t.state_file, "state JSON file")->required();
    tomogram->add_option("--dims", t.dims, "subsystem dimensions");
    tomogram->add_option("--g", t.g_mode, "group element: identity|haar|euler|file")
        ->check(CLI::IsMember({"identity", "haar", "euler", "file"}));
    tomogram->add_option("--theta", t.theta, "polar angles for euler mode");
    tomogram->add_option("--phi", t.phi, "azimuthal angles for euler mode");
    tomogram->add_option("--g-file", t.g_file, "matrix JSON for file mode");
    tomogram->add_option("--seed", t.seed, "random seed for haar mode");
    tomogram->add_option("--format", t.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    tomogram->add_flag("--hermitian-only", t.hermitian_only,
                       "skip the positivity check of the input");

    ChannelOpts c;
    CLI::App* channel =
        app.add_subcommand("channel", "Apply a positive map to a state");
    channel->add_option("state", c.state_file, "state JSON file")->required();
    channel->add_option("--dims", c.dims, "subsystem dimensions");
    channel->add_option("--map", c.map,
                        "map name: depolarize|phase-damp|transpose|kraus")
        ->required()
        ->check(CLI::IsMember({"depolarize", "phase-damp", "transpose", "kraus"}));
    channel->add_option("--eps", c.eps, "depolarize parameter")
        ->each([&c](const std::string&) { c.eps_set = true; });
    channel->add_option("--lambda", c.lambda, "phase damping parameter")
        ->each([&c](const std::string&) { c.lambda_set = true; });
    channel->add_option("--subsystem", c.subsystem,
                        "apply to this 1-based subsystem only");
    channel->add_option("--kraus-file", c.kraus_file, "Kraus JSON file");
    channel->add_option("--output", c.output, "write the result state here");
    channel->add_flag("--hermitian-only", c.hermitian_only,
                      "skip the positivity check of the input");

    ReconstructOpts r;
    CLI::App* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "Linear-inversion state reconstruction from tomograms");
    reconstruct_cmd->add_option("--measurements", r.measurements_file,
                                "measurements JSON file")
        ->required();
    reconstruct_cmd->add_option("--dims", r.dims, "subsystem dimensions");
    reconstruct_cmd->add_option("--output", r.output, "write the state here");

    ExamplesOpts e;
    CLI::App* examples =
        app.add_subcommand("examples", "Run the bundled closed-form checks");
    examples->add_option("--item", e.item, "run a single named item");
    examples->add_flag("--json", e.as_json, "machine-readable output");
    examples->add_option("--write-states", e.write_states,
                         "generate the bundled state files in this directory");
    examples->add_option("--seed", e.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (app.got_subcommand(witness)) return run_witness(w, out, err);
    if (app.got_subcommand(tomogram)) return run_tomogram(t, out, err);
    if (app.got_subcommand(channel)) return run_channel(c, out, err);
    if (app.got_subcommand(reconstruct_cmd)) return run_reconstruct(r, out, err);
    if (app.got_subcommand(examples)) return run_examples(e, out, err);
    return kExitUsage;
}

}  // namespace qtom::cli
