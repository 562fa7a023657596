#include "coolnum/cooling.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/graph_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace coolnum;
namespace fs = std::filesystem;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run cli(const std::string & args)
{
    const std::string command = std::string(COOLNUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run run;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        run.out.append(buf, got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("coolnum_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    std::string path(const std::string & name) const { return (dir_ / name).string(); }
    std::string graph(const std::string & name, const Graph & g) const
    {
        write_graph(g, dir_ / name);
        return path(name);
    }

private:
    fs::path dir_;
};

} // namespace

TEST_CASE("cli gen")
{
    Scratch tmp;
    const auto p7 = cli("gen path --n 7 --out " + tmp.path("p7.json"));
    CHECK(p7.exit_code == 0);
    CHECK(p7.out == "n=7 edges=6\n");
    CHECK(read_graph(tmp.path("p7.json")) == gen_path(7));

    const auto ilt = cli("gen ilt --base path:6 --t 1 --json --out " + tmp.path("ilt.json"));
    CHECK(ilt.exit_code == 0);
    CHECK(nlohmann::json::parse(ilt.out)["n"] == 12);

    const auto spider = cli("gen spider --legs 4 --r 2");
    CHECK(spider.exit_code == 0);
    CHECK(parse_graph_json(spider.out) == gen_spider(4, 2));

    CHECK(cli("gen grid --n 3 --dot " + tmp.path("g3.dot") + " --out " + tmp.path("g3.json")).exit_code == 0);
    CHECK(fs::exists(tmp.path("g3.dot")));
    CHECK(cli("gen cycle --n 2").exit_code == 1);
    CHECK(cli("gen hypercube --n 3").exit_code == 1);
}

TEST_CASE("cli solvers")
{
    Scratch tmp;
    const auto c8 = tmp.graph("c8.json", gen_cycle(8));
    CHECK(cli("exact --in " + c8).out == "4\n");
    CHECK(cli("burn --in " + tmp.graph("p9.json", gen_path(9))).out == "3\n");
    CHECK(cli("seqlen --in " + tmp.graph("p2.json", gen_path(2))).out == "1\n");

    const auto doc = nlohmann::json::parse(cli("exact --json --in " + c8).out);
    CHECK(doc["cooling_number"] == 4);
    CHECK(doc["rounds"] == 4);

    // Trace files replay through the engine.
    REQUIRE(cli("exact --in " + c8 + " --out " + tmp.path("trace.json")).exit_code == 0);
    const auto trace = read_trace(tmp.path("trace.json"));
    CHECK(trace.round_count() == 4);
    CHECK(validate_sequence(gen_cycle(8), trace.sources()) == trace);

    const auto big = tmp.graph("p30.json", gen_path(30));
    CHECK(cli("exact --in " + big).exit_code == 2);
    CHECK(cli("exact --in " + big + " --max-nodes 30").out == "16\n");
    CHECK(cli("exact --in " + tmp.graph("g7.json", gen_grid(7)) + " --max-nodes 64 --time-budget-ms 1").exit_code
        == 2);
    CHECK(cli("exact --in " + tmp.graph("split.json", build_graph(4, {{0, 1}, {2, 3}}))).exit_code == 3);
}

TEST_CASE("cli bounds")
{
    Scratch tmp;
    const auto p11 = cli("bounds --in " + tmp.graph("p11.json", gen_path(11)));
    CHECK(p11.exit_code == 0);
    const auto doc = nlohmann::json::parse(p11.out);
    CHECK(doc["order_upper"] == 6);
    CHECK(doc["diam_lower"] == 6);

    const auto g3 = nlohmann::json::parse(cli("bounds --in " + tmp.graph("g3.json", gen_grid(3))).out);
    CHECK(g3["diameter"] == 4);
    CHECK(g3["iso_upper"].is_number());
}

TEST_CASE("cli strategies")
{
    Scratch tmp;
    CHECK(cli("strategy caterpillar --d 6").out == "rounds=6 certified=exact[6,6]\n");
    CHECK(cli("strategy grid-simplicial --n 4").exit_code == 0);
    CHECK(cli("strategy ilt-path --n 6 --t 1").out == "rounds=5 certified=exact[5,5]\n");
    CHECK(cli("strategy spider --m 1 --r 3").out == "rounds=4 certified=lower_bound[4,]\n");
    CHECK(cli("strategy spider --in " + tmp.graph("s.json", gen_spider(4, 2))).exit_code == 0);
    CHECK(cli("strategy path-diameter --in " + tmp.graph("p5.json", gen_path(5))).out.starts_with("rounds=3"));

    CHECK(cli("strategy spider --in " + tmp.graph("c5.json", gen_cycle(5))).exit_code == 4);
    CHECK(cli("strategy caterpillar --in " + tmp.graph("p4.json", gen_path(4))).exit_code == 4);

    const auto doc = nlohmann::json::parse(cli("strategy caterpillar --d 4 --json").out);
    CHECK(doc["rounds"] == 4);
    CHECK(doc["certified"]["kind"] == "exact");
}

TEST_CASE("cli verify")
{
    const auto run = cli("verify cycle-formula");
    CHECK(run.exit_code == 0);
    CHECK(run.out.starts_with("PASS"));
    CHECK(cli("verify no-such-suite").exit_code == 5);
}
