#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "slicepl/cli.hpp"

using namespace slicepl;

namespace {
const std::string data = SLICEPL_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "slicepl_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find('\n' + line + '\n') != std::string::npos || text.rfind(line + '\n', 0) == 0;
}

const std::vector<std::string> small = {"--ntheta", "21", "--naxis", "16"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
}  // namespace

TEST_CASE("eval") {
    const Run r = run({"eval", "--function", data + "/q_times_i.json", "--q", "0,0,1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "[0,0,0,-1]\n");
    const Run e = run({"eval", "--function", data + "/exp_q.json", "--q", "0,0,0,0"});
    CHECK(e.out == "[1,0,0,0]\n");
}

TEST_CASE("input errors exit with 3") {
    CHECK(run({"eval", "--function", data + "/missing.json", "--q", "0,0,0,0"}).code == 3);
    CHECK(run({"eval", "--function", data + "/exp_q.json", "--q", "0,0,0"}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"verify", "nonsense", "--function", data + "/exp_q.json"}).code == 3);
    CHECK(run({"verify", "cone", "--function", data + "/exp_q.json", "--alpha", "2"}).code == 3);
    const auto bad = scratch("bad.json");
    write(bad, R"({"type": "log", "arg": {"type": "nope"}})");
    const Run b = run({"eval", "--function", bad.string(), "--q", "1,0,0,0"});
    CHECK(b.code == 3);
    CHECK(b.err.find("error:") == 0);
    const auto log0 = scratch("log.json");
    write(log0, R"({"type": "log"})");
    CHECK(run({"eval", "--function", log0.string(), "--q", "0,0,0,0"}).code == 3);
}

TEST_CASE("verify exit codes") {
    CHECK(run(with({"verify", "cone", "--function", data + "/exp_neg_q.json", "--alpha", "2", "--M", "1"}, small))
              .code == 0);
    CHECK(run(with({"verify", "cone", "--function", data + "/exp_q_pow2.json", "--alpha", "2", "--M", "1"}, small))
              .code == 2);
    CHECK(run(with({"verify", "strip", "--function", data + "/exp_exp_q.json", "--domain", data + "/strip_pi.json",
                    "--M", "1", "--N", "1", "--k", "1"},
                   small))
              .code == 2);
    CHECK(run(with({"verify", "sharp", "--function", data + "/exp_q_pow2.json", "--rho", "2", "--sigma", "1", "--M",
                    "1"},
                   small))
              .code == 0);
    CHECK(run(with({"verify", "liouville", "--function", data + "/exp_q.json", "--line", "0,0,0,1"}, small)).code ==
          2);
}

TEST_CASE("growth subcommands") {
    const Run o = run({"order", "--function", data + "/exp_q_pow2.json", "--ntheta", "21", "--naxis", "8"});
    CHECK(o.code == 0);
    CHECK(o.out.find("order_est") != std::string::npos);
    const Run t = run({"type", "--function", data + "/exp_q.json", "--rho", "1", "--ntheta", "21", "--naxis", "8"});
    CHECK(t.code == 0);
    CHECK(t.out.find("type_est") != std::string::npos);
}

TEST_CASE("config precedence") {
    const auto file = scratch("cfg.json");
    const auto env = scratch("env.json");
    write(file, R"({"n_axis": 12, "n_theta": 23})");
    write(env, R"({"n_axis": 10, "n_theta": 19, "r_max": 64})");
    const std::vector<std::string> base = {"verify", "cone", "--function", data + "/exp_neg_q.json", "--alpha", "2",
                                           "--M", "1"};

    ::unsetenv(kConfigEnv);
    CHECK(has_line(run(base).out, "config: n_axis=64"));

    ::setenv(kConfigEnv, env.c_str(), 1);
    const Run e = run(base);
    CHECK(has_line(e.out, "config: n_axis=10"));
    CHECK(has_line(e.out, "config: r_max=64"));

    // An explicit file replaces the environment file entirely.
    const Run f = run(with(base, {"--config", file.string()}));
    CHECK(has_line(f.out, "config: n_axis=12"));
    CHECK(has_line(f.out, "config: n_theta=23"));
    CHECK(has_line(f.out, "config: r_max=1024"));

    const Run g = run(with(base, {"--config", file.string(), "--naxis", "8"}));
    CHECK(has_line(g.out, "config: n_axis=8"));
    CHECK(has_line(g.out, "config: n_theta=23"));
    ::unsetenv(kConfigEnv);

    write(file, R"({"n_axes": 4})");
    CHECK(run(with(base, {"--config", file.string()})).code == 3);
}

TEST_CASE("config json keys") {
    RunConfig c;
    apply_config_json(R"({"conclusion_tol": 1e-8, "growth_n_r": 5, "offset": 0.001, "csv": "x.csv"})", c);
    CHECK(c.verify.conclusion_tol == 1e-8);
    CHECK(c.growth.n_r == 5);
    CHECK(c.verify.inward_offset == 0.001);
    CHECK(c.csv_path == "x.csv");
    CHECK_THROWS_AS(apply_config_json("[1, 2]", c), InputError);
    CHECK_THROWS_AS(apply_config_json(R"({"n_axis": -3})", c), InputError);
}

TEST_CASE("csv output") {
    const auto csv = scratch("w.csv");
    std::filesystem::remove(csv);
    const Run r = run(with({"verify", "cone", "--function", data + "/exp_q_pow2.json", "--alpha", "2", "--M", "1",
                            "--csv", csv.string()},
                           small));
    CHECK(r.code == 2);
    const std::string text = read(csv);
    CHECK(text.rfind("point_w,point_x,point_y,point_z,modulus,bound,slack\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') > 1);

    const auto gcsv = scratch("g.csv");
    CHECK(run({"order", "--function", data + "/exp_q.json", "--ntheta", "11", "--naxis", "4", "--csv", gcsv.string()})
              .code == 0);
    CHECK_FALSE(read(gcsv).empty());
}

TEST_CASE("repeated runs are byte-identical") {
    const auto args = with({"verify", "cone", "--function", data + "/exp_q_pow2.json", "--alpha", "2", "--M", "1"},
                           small);
    const Run a = run(with(args, {"--workers", "1"}));
    const Run b = run(with(args, {"--workers", "4"}));
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}
