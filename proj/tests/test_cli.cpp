#include "qp/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args)
{
    std::string cmd = std::string("\"") + QPX_PATH + "\" " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("command line exit codes")
{
    CHECK(run("triangulate 1 2 3") == 0);
    CHECK(run("triangulate 2 2 2") == 2);
    CHECK(run("triangulate 1 2") == 2);
    CHECK(run("find-potential 1 3 8") == 3);

    REQUIRE(run("find-potential 1 2 3 -o cli_fp.json") == 0);
    qp::Json report = qp::parse_json(slurp("cli_fp.json"));
    {
        std::ofstream out("cli_w.json");
        out << report.at("potential").dump();
    }
    CHECK(run("verify 1 2 3 cli_w.json") == 0);

    REQUIRE(run("curve-quiver 1 2 3 -o cli_q.json") == 0);
    {
        qp::Json q = qp::parse_json(slurp("cli_q.json"));
        std::ofstream out("cli_bare.json");
        out << qp::Json{{"quiver", q}}.dump();
    }
    CHECK(run("verify 1 2 3 cli_bare.json") == 1);

    REQUIRE(run("curve-quiver 1 1 1 -o cli_q111.json") == 0);
    {
        qp::Json q = qp::parse_json(slurp("cli_q111.json"));
        std::ofstream out("cli_q111_qwp.json");
        out << qp::Json{{"quiver", q}}.dump();
    }
    CHECK(run("mutate cli_q111_qwp.json 0") == 2);

    for (const char* f : {"cli_fp.json", "cli_w.json", "cli_q.json", "cli_bare.json", "cli_q111.json",
                          "cli_q111_qwp.json"})
        std::remove(f);
}

TEST_CASE("commands are deterministic")
{
    REQUIRE(run("sample-missing") == 2);
    REQUIRE(run("flip-graph 1 2 5 -o cli_a.json") == 0);
    REQUIRE(run("flip-graph 1 2 5 -o cli_b.json") == 0);
    CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
    std::remove("cli_a.json");
    std::remove("cli_b.json");
}
