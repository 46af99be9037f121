#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

// runs the tool, returns its exit status, captures stdout+stderr into log
int cli(const std::string& args, const fs::path& log = "/dev/null") {
    const std::string cmd =
        std::string(IDEA_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("idea_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("run writes trace, archive and resolved params") {
    TempDir tmp;
    const fs::path out = tmp.path / "p";
    const fs::path log = tmp.path / "run.log";
    const int rc = cli("run --problem paraboloid --dim 3 --budget 20000 --seed 1 "
                       "--out " + out.string(), log);
    CHECK(rc == 0);
    CHECK(fs::exists(out.string() + "_trace.csv"));
    CHECK(fs::exists(out.string() + "_archive.jsonl"));
    CHECK(fs::exists(out.string() + "_params.txt"));

    const std::string params = slurp(out.string() + "_params.txt");
    CHECK(params.find("# problem = paraboloid") != std::string::npos);
    CHECK(params.find("[idea]") != std::string::npos);
    CHECK(params.find("strategy = best") != std::string::npos);

    // the quadratic bowl is solved well inside this budget
    const std::string text = slurp(log);
    const auto pos = text.find("best f: ");
    REQUIRE(pos != std::string::npos);
    const double best = std::stod(text.substr(pos + 8));
    CHECK(best <= 1e-6);
    CHECK(text.find("non-finite evaluations: 0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    TempDir tmp;
    CHECK(cli("run --problem nosuch --budget 100", tmp.path / "a.log") == 2);
    CHECK(cli("run --problem paraboloid --budget 0", tmp.path / "b.log") == 2);
    CHECK(cli("run --budget 100", tmp.path / "c.log") == 2);
    CHECK(cli("nosuchcommand", tmp.path / "d.log") == 2);
    CHECK(cli("run --problem paraboloid --budget 100 --algo nosuch",
              tmp.path / "e.log") == 2);
}

TEST_CASE("bench output is byte-identical across reruns") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
    const std::string args = "bench --problem rastrigin --dim 2 --algo de "
                             "--runs 5 --budgets 2000,4000 --seed 7 --out ";
    CHECK(cli(args + a.string(), tmp.path / "a.log") == 0);
    CHECK(cli(args + b.string(), tmp.path / "b.log") == 0);
    const std::string csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(csv.rfind("algorithm,problem,seed,N,n,j_s,p_s,ci_low,ci_high,"
                    "wall_seconds\n", 0) == 0);
    // one row per budget plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("bench refuses long experiments without the long-run flag") {
    TempDir tmp;
    CHECK(cli("bench --problem rastrigin --dim 2 --algo de --runs 101 "
              "--budgets 2000 --seed 1 --out " + (tmp.path / "x.csv").string(),
              tmp.path / "x.log") == 2);
}

TEST_CASE("params file overrides tuned defaults and malformed files are rejected") {
    TempDir tmp;
    const fs::path pf = tmp.path / "params.txt";
    {
        std::ofstream f(pf);
        f << "# comment\n[idea]\nn_pop = 7\ndelta = 0.31\n[de]\nf = 0.55\n";
    }
    const fs::path out = tmp.path / "q";
    CHECK(cli("run --problem paraboloid --dim 2 --budget 5000 --seed 2 "
              "--params " + pf.string() + " --out " + out.string(),
              tmp.path / "q.log") == 0);
    const std::string params = slurp(out.string() + "_params.txt");
    CHECK(params.find("n_pop = 7") != std::string::npos);
    CHECK(params.find("delta = 0.31") != std::string::npos);
    CHECK(params.find("f = 0.55") != std::string::npos);

    {
        std::ofstream f(pf);
        f << "[idea]\nno_such_key = 1\n";
    }
    CHECK(cli("run --problem paraboloid --dim 2 --budget 5000 --params " +
              pf.string() + " --out " + out.string(), tmp.path / "q2.log") == 2);
    {
        std::ofstream f(pf);
        f << "n_pop = 7\n"; // key before any section
    }
    CHECK(cli("run --problem paraboloid --dim 2 --budget 5000 --params " +
              pf.string() + " --out " + out.string(), tmp.path / "q3.log") == 2);
}

TEST_CASE("sample-size prints the conservative bound and documents the "
          "discrepant worked example") {
    TempDir tmp;
    const fs::path log = tmp.path / "ss.log";
    CHECK(cli("sample-size --derr 0.05", log) == 0);
    CHECK(slurp(log).rfind("n = 385", 0) == 0);
    CHECK(cli("sample-size --derr 0.1 --alpha 0.05", log) == 0);
    CHECK(slurp(log).rfind("n = 97", 0) == 0);

    CHECK(cli("sample-size --help", log) == 0);
    const std::string help = slurp(log);
    CHECK(help.find("175") != std::string::npos);
    CHECK(help.find("0.020857") != std::string::npos);
    CHECK(help.find("385") != std::string::npos);
}

TEST_CASE("harvest then analyze yields a landscape table") {
    TempDir tmp;
    const fs::path arch = tmp.path / "h.jsonl", out = tmp.path / "l.csv";
    CHECK(cli("harvest --problem rastrigin --dim 1 --starts 40 --budget 1500 "
              "--seed 3 --out " + arch.string(), tmp.path / "h.log") == 0);
    CHECK(cli("analyze --archive " + arch.string() +
              " --problem rastrigin --dim 1 --out " + out.string(),
              tmp.path / "l.log") == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("id,f,level,d_il,d_tl\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= 3);

    // merging the archive with itself must not duplicate minima
    const fs::path out2 = tmp.path / "l2.csv";
    CHECK(cli("analyze --archive " + arch.string() + " --archive " +
              arch.string() + " --problem rastrigin --dim 1 --out " +
              out2.string(), tmp.path / "l2.log") == 0);
    CHECK(slurp(out2) == csv);
}

TEST_CASE("analyze on an empty archive is a runtime failure") {
    TempDir tmp;
    const fs::path arch = tmp.path / "empty.jsonl";
    std::ofstream(arch).close();
    CHECK(cli("analyze --archive " + arch.string() + " --problem rastrigin "
              "--dim 1 --out " + (tmp.path / "x.csv").string(),
              tmp.path / "x.log") == 3);
}
