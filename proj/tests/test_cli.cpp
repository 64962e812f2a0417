#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

using namespace std::string_literals;
namespace fs = std::filesystem;

namespace {

const std::string kCli = APOLLONET_CLI_PATH;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// run the CLI, capturing stdout+stderr
CommandResult run_cli(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "apollonet_cli_out.txt";
    const std::string command = kCli + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(command.c_str());

    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    result.output = {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("apollonet_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("cli: theory output carries the reference values") {
    const CommandResult r = run_cli("theory -d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("gamma,2.5\n") != std::string::npos);
    CHECK(r.output.find("rho,0.14583333333333334\n") != std::string::npos);
    CHECK(r.output.find("pc,0,0.75\n") != std::string::npos);
    CHECK(r.output.find("degree,3,0.5\n") != std::string::npos);
    CHECK(r.output.find("clustering,0.8131") != std::string::npos);
    CHECK(r.output.find("mean_parallel_degree,0.3333") != std::string::npos);
}

TEST_CASE("cli: generate writes deterministic edge lists") {
    const fs::path dir_a = fresh_dir("gen_a");
    const fs::path dir_b = fresh_dir("gen_b");
    const std::string spec = "generate -m pran -d 2 -n 300 -s 5 -r 2 -o ";
    CHECK(run_cli(spec + dir_a.string()).exit_code == 0);
    CHECK(run_cli(spec + dir_b.string()).exit_code == 0);

    for (const std::string name : {"pran_d2_run0.edges"s, "pran_d2_run1.edges"s,
                                   "pran_d2_run0.cliques"s, "pran_d2_run1.cliques"s}) {
        CHECK(fs::exists(dir_a / name));
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
    }
    // distinct run seeds give distinct graphs
    CHECK(slurp(dir_a / "pran_d2_run0.edges") != slurp(dir_a / "pran_d2_run1.edges"));
}

TEST_CASE("cli: APOLLONET_SEED overrides the flag") {
    const fs::path dir_env = fresh_dir("gen_env");
    const fs::path dir_flag = fresh_dir("gen_flag");
    const CommandResult env_run = run_cli("generate -d 2 -n 100 -s 1 -o " + dir_env.string() +
                                          " --no-sidecar");
    // same spec but seed 777 via environment
    const fs::path out_file = fs::temp_directory_path() / "apollonet_cli_out.txt";
    const std::string command = "APOLLONET_SEED=777 " + kCli + " generate -d 2 -n 100 -s 1 -o " +
                                dir_flag.string() + " --no-sidecar > " + out_file.string() +
                                " 2>&1";
    REQUIRE(std::system(command.c_str()) == 0);
    CHECK(env_run.exit_code == 0);

    const std::string base = slurp(dir_env / "pran_d2_run0.edges");
    const std::string with_env = slurp(dir_flag / "pran_d2_run0.edges");
    CHECK(base != with_env);
    CHECK(with_env.find("seed=777") != std::string::npos);
}

TEST_CASE("cli: compare smoke run populates every table") {
    const fs::path dir = fresh_dir("cmp");
    const CommandResult r =
        run_cli("compare -m pran -d 2 -n 100 -r 1 -s 3 --kmin 4 -o " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "parallel.csv"));
    CHECK(fs::exists(dir / "degree.csv"));
    CHECK(r.output.find("avg_parallel_degree") != std::string::npos);
    CHECK(r.output.find("mean_distance") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    SUBCASE("0 on success") {
        CHECK(run_cli("theory -d 1").exit_code == 0);
    }
    SUBCASE("1 on usage errors") {
        CHECK(run_cli("frobnicate").exit_code == 1);
        CHECK(run_cli("generate -d 2 -o /tmp/x").exit_code == 1);  // no --vertices/--steps
        CHECK(run_cli("generate -d 0 -n 10 -o /tmp/x").exit_code == 1);
        CHECK(run_cli("generate -m bogus -n 10 -o /tmp/x").exit_code == 1);
        CHECK(run_cli("compare -n 100 --analyses entropy -o /tmp/x").exit_code == 1);
        CHECK(run_cli("generate -n 10 --steps 3 -o /tmp/x").exit_code == 1);  // mutually exclusive
    }
    SUBCASE("2 on tolerance violation") {
        const fs::path dir = fresh_dir("tol");
        const CommandResult r = run_cli("compare -m pran -d 2 -n 200 -r 2 -s 1 --analyses parallel "
                                        "--max-abs-error 0.0000001 -o " +
                                        dir.string());
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("tolerance") != std::string::npos);
    }
    SUBCASE("3 on io errors") {
        CHECK(run_cli("generate -d 2 -n 10 -o /proc/apollonet_forbidden").exit_code == 3);
    }
    SUBCASE("0 on help") {
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("generate --help").exit_code == 0);
    }
}
