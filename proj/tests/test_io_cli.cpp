/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qtom/cli.hpp"
#include "qtom/examples.hpp"
#include "qtom/io.hpp"
#include "qtom/separability.hpp"
#include "test_util.hpp"

using namespace qtom;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
    io::json json() const { return io::json::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"qtom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult result;
    result.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "qtom_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

io::json load_schema(const std::string& name) {
    std::ifstream in(fs::path(QTOM_SCHEMA_DIR) / name);
    REQUIRE(in.good());
    return io::json::parse(in);
}

}  // namespace

TEST_CASE("matrix and state JSON round trips are exact") {
    RandomStream stream(1);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix m = testutil::random_matrix(3, 3, stream);
        ComplexMatrix back =
            io::matrix_from_json(io::json::parse(io::matrix_to_json(m).dump()));
        CHECK(max_abs(back - m) == 0.0);
    }

    DensityMatrix rho = werner_state(0.37);
    io::json j = io::state_to_json(rho.mat(), rho.dims());
    auto schema_err = io::schema_check(j, load_schema("state.schema.json"));
    CHECK_FALSE(schema_err.has_value());
    io::LoadedState loaded = io::state_from_json(io::json::parse(j.dump()));
    CHECK(max_abs(loaded.mat - rho.mat()) == 0.0);
    CHECK(loaded.dims == rho.dims());
}

TEST_CASE("kraus files accept signed entries") {
    io::json j = io::json::array();
    const double w = 1.0 / std::sqrt(2.0);
    j.push_back(
        {{"matrix", io::matrix_to_json(w * ComplexMatrix::Identity(2, 2))}});
    j.push_back({{"matrix", io::matrix_to_json(w * pauli(1))}, {"sign", "+"}});
    j.push_back({{"matrix", io::matrix_to_json(w * pauli(3))}, {"sign", "+"}});
    j.push_back({{"matrix", io::matrix_to_json(w * pauli(2))}, {"sign", "-"}});
    KrausMap k = io::kraus_from_json(j);
    CHECK(k.positive_part().size() == 3);
    CHECK(k.negative_part().size() == 1);
    // this signed set is the qubit transpose
    RandomStream stream(2);
    ComplexMatrix m = random_density({2}, stream).mat();
    CHECK(max_abs(kraus_apply(k, m) - m.transpose()) <= 1e-14);

    io::json bare = io::json::array();
    bare.push_back(io::matrix_to_json(ComplexMatrix::Identity(2, 2)));
    CHECK(io::kraus_from_json(bare).negative_part().empty());
}

TEST_CASE("measurement files round trip") {
    RandomStream stream(3);
    DensityMatrix rho = random_density({2}, stream);
    std::vector<TomogramMeasurement> ms;
    for (int s = 0; s < 5; ++s) {
        ComplexMatrix g = haar_unitary(2, stream);
        ms.push_back({g, unitary_tomogram(rho, g).values});
    }
    io::json j = io::measurements_to_json(ms, rho.dims());
    auto [back, dims] = io::measurements_from_json(io::json::parse(j.dump()));
    REQUIRE(back.size() == ms.size());
    CHECK(dims == rho.dims());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        CHECK(max_abs(back[i].g - ms[i].g) == 0.0);
        CHECK((back[i].values - ms[i].values).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("schema checker catches violations") {
    io::json schema = load_schema("witness.schema.json");
    io::json good = {{"command", "witness"},   {"f_max", 1.0},
                     {"argmax_eps", 0.5},      {"verdict", "entangled"},
                     {"samples_used", 41},     {"wall_time_s", 0.01}};
    CHECK_FALSE(io::schema_check(good, schema).has_value());

    io::json missing = good;
    missing.erase("f_max");
    CHECK(io::schema_check(missing, schema).has_value());

    io::json wrong_enum = good;
    wrong_enum["verdict"] = "maybe";
    CHECK(io::schema_check(wrong_enum, schema).has_value());

    io::json wrong_type = good;
    wrong_type["f_max"] = "big";
    CHECK(io::schema_check(wrong_type, schema).has_value());
}

TEST_CASE("witness command verdicts and exit codes") {
    fs::path dir = temp_dir();
    write_example_states(dir);

    CliResult entangled = run_cli({"witness", (dir / "werner_p0.5.json").string(),
                                   "--g-samples", "10", "--seed", "7"});
    CHECK(entangled.code == 3);
    io::json j = entangled.json();
    CHECK_FALSE(io::schema_check(j, load_schema("witness.schema.json")).has_value());
    CHECK(j["verdict"] == "entangled");
    CHECK(j["f_max"].get<double>() ==
          doctest::Approx((1.0 + 3.0 * 0.5) / 2.0).epsilon(1e-9));

    CliResult separable =
        run_cli({"witness", (dir / "werner_p0.2.json").string()});
    CHECK(separable.code == 0);
    CHECK(separable.json()["verdict"] == "separable-consistent");
    CHECK(separable.json()["f_max"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("witness command input errors") {
    fs::path dir = temp_dir();

    SUBCASE("truncated JSON reports line and column") {
        fs::path bad = dir / "truncated.json";
        std::ofstream(bad) << "{\"dim\": 4,\n  \"dims\": [2, 2";
        CliResult r = run_cli({"witness", bad.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find(":2:") != std::string::npos);
    }

    SUBCASE("a non-PSD matrix names its smallest eigenvalue") {
        fs::path bad = dir / "non_psd.json";
        ComplexMatrix m = ComplexMatrix::Zero(4, 4);
        m(0, 0) = 1.2;
        m(1, 1) = -0.2;
        m(2, 2) = 0.0;
        m(3, 3) = 0.0;
        io::save_state_file(bad, m, std::vector<Index>{2, 2});
        CliResult r = run_cli({"witness", bad.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("eigenvalue") != std::string::npos);
        CHECK(r.err.find("-0.2") != std::string::npos);
    }

    SUBCASE("a missing file is an input error") {
        CliResult r = run_cli({"witness", (dir / "absent.json").string()});
        CHECK(r.code == 1);
    }
}

TEST_CASE("tomogram command") {
    fs::path dir = temp_dir();
    ComplexMatrix up = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1.0;
    fs::path up_path = dir / "up.json";
    io::save_state_file(up_path, up, std::vector<Index>{2});

    SUBCASE("euler rotation by pi/2 splits the projector evenly") {
        CliResult r = run_cli({"tomogram", up_path.string(), "--g", "euler",
                               "--theta", "1.5707963267948966"});
        CHECK(r.code == 0);
        io::json j = r.json();
        CHECK_FALSE(
            io::schema_check(j, load_schema("tomogram.schema.json")).has_value());
        CHECK(j["rows"][0]["value"].get<double>() ==
              doctest::Approx(0.5).epsilon(1e-12));
        CHECK(j["rows"][1]["value"].get<double>() ==
              doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("identity mode prints the diagonal") {
        CliResult r = run_cli({"tomogram", up_path.string()});
        CHECK(r.code == 0);
        CHECK(r.json()["rows"][0]["value"].get<double>() == 1.0);
        CHECK(r.json()["sum"].get<double>() == doctest::Approx(1.0));
    }

    SUBCASE("haar mode is deterministic in the seed") {
        CliResult a = run_cli({"tomogram", up_path.string(), "--g", "haar",
                               "--seed", "21"});
        CliResult b = run_cli({"tomogram", up_path.string(), "--g", "haar",
                               "--seed", "21"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    SUBCASE("csv output carries one row per outcome") {
        CliResult r = run_cli(
            {"tomogram", up_path.string(), "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("m1,value") != std::string::npos);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    }
}

TEST_CASE("channel command") {
    fs::path dir = temp_dir();
    write_example_states(dir);
    fs::path werner1 = dir / "werner_p1.0.json";

    SUBCASE("depolarize to the maximally mixed state") {
        CliResult r = run_cli({"channel", werner1.string(), "--map", "depolarize",
                               "--eps", "0"});
        CHECK(r.code == 0);
        io::json j = r.json();
        CHECK_FALSE(
            io::schema_check(j, load_schema("channel.schema.json")).has_value());
        ComplexMatrix out = io::matrix_from_json(j["state"]["data"]);
        CHECK(max_abs(out - ComplexMatrix::Identity(4, 4) / 4.0) <= 1e-12);
    }

    SUBCASE("subsystem transpose flags the entangled input") {
        CliResult r = run_cli({"channel", werner1.string(), "--map", "transpose",
                               "--subsystem", "2"});
        CHECK(r.code == 0);
        CHECK(r.json()["report"]["min_output_eigenvalue"].get<double>() ==
              doctest::Approx(-0.5).epsilon(1e-10));
    }

    SUBCASE("phase damping at lambda = 1 echoes the input") {
        CliResult r = run_cli({"channel", werner1.string(), "--map", "phase-damp",
                               "--lambda", "1"});
        CHECK(r.code == 0);
        ComplexMatrix out = io::matrix_from_json(r.json()["state"]["data"]);
        CHECK(max_abs(out - werner_state(1.0).mat()) == 0.0);
    }

    SUBCASE("output files re-parse and keep trace and Hermiticity") {
        fs::path out_path = dir / "depolarized.json";
        CliResult r = run_cli({"channel", werner1.string(), "--map", "depolarize",
                               "--eps", "0.5", "--output", out_path.string()});
        CHECK(r.code == 0);
        io::LoadedState reloaded = io::load_state_file(out_path);
        CHECK(is_hermitian(reloaded.mat, 1e-12));
        CHECK(std::abs(reloaded.mat.trace().real() - 1.0) <= 1e-12);
        CHECK(reloaded.dims == std::vector<Index>{2, 2});
    }

    SUBCASE("unknown map names are usage errors listing the choices") {
        CliResult r = run_cli({"channel", werner1.string(), "--map", "squeeze"});
        CHECK(r.code == 2);
        CHECK(r.err.find("depolarize") != std::string::npos);
        CHECK(r.err.find("transpose") != std::string::npos);
    }

    SUBCASE("kraus files drive the map") {
        io::json kraus = io::json::array();
        for (Index k = 0; k < 4; ++k) {
            ComplexMatrix e = ComplexMatrix::Zero(4, 4);
            e(k, k) = 1.0;
            kraus.push_back(io::matrix_to_json(e));
        }
        fs::path kraus_path = dir / "decohere.json";
        std::ofstream(kraus_path) << kraus.dump();
        CliResult r = run_cli({"channel", werner1.string(), "--map", "kraus",
                               "--kraus-file", kraus_path.string()});
        CHECK(r.code == 0);
        ComplexMatrix out = io::matrix_from_json(r.json()["state"]["data"]);
        ComplexMatrix expected =
            werner_state(1.0).mat().diagonal().asDiagonal();
        CHECK(max_abs(out - expected) <= 1e-14);
    }
}

TEST_CASE("reconstruct command recovers a state from file data") {
    fs::path dir = temp_dir();
    RandomStream stream(31);
    DensityMatrix rho = random_density({2}, stream);
    std::vector<TomogramMeasurement> ms;
    for (int s = 0; s < 10; ++s) {
        ComplexMatrix g = haar_unitary(2, stream);
        ms.push_back({g, unitary_tomogram(rho, g).values});
    }
    fs::path m_path = dir / "measurements.json";
    std::ofstream(m_path) << io::measurements_to_json(ms, rho.dims()).dump();

    CliResult r = run_cli({"reconstruct", "--measurements", m_path.string()});
    CHECK(r.code == 0);
    ComplexMatrix recovered = io::matrix_from_json(r.json()["state"]["data"]);
    CHECK(max_abs(recovered - rho.mat()) <= 1e-9);

    SUBCASE("rank-deficient data is an input error") {
        std::vector<TomogramMeasurement> thin{ms.front()};
        fs::path thin_path = dir / "thin.json";
        std::ofstream(thin_path)
            << io::measurements_to_json(thin, rho.dims()).dump();
        CliResult bad = run_cli({"reconstruct", "--measurements",
                                 thin_path.string()});
        CHECK(bad.code == 1);
        CHECK(bad.err.find("rank") != std::string::npos);
    }
}

TEST_CASE("examples command") {
    CliResult r = run_cli({"examples", "--json", "--seed", "3"});
    CHECK(r.code == 0);
    io::json j = r.json();
    CHECK_FALSE(
        io::schema_check(j, load_schema("examples.schema.json")).has_value());
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["items"].size() == 5);

    CliResult one = run_cli({"examples", "--item", "qutrit3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("[PASS] qutrit3") != std::string::npos);

    CliResult unknown = run_cli({"examples", "--item", "nope"});
    CHECK(unknown.code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CliResult r = run_cli({"witness"});
    CHECK(r.code == 2);
    CliResult unknown_cmd = run_cli({"frobnicate"});
    CHECK(unknown_cmd.code == 2);
    CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("witness") != std::string::npos);
}
