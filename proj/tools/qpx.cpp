#include "qp/json_io.hpp"
#include "qp/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using qp::Json;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw qp::invalid("InvalidInput", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw qp::invalid("InvalidInput", "cannot write " + out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json group(int a, int b, int c, const std::string& method)
{
    return {{"a", a}, {"b", b}, {"c", c}, {"method", method}};
}

int serve(int port)
{
    httplib::Server server;
    // SO_REUSEADDR only: a second server on a live port must fail to bind
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
    });
    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(Json{{"ok", true}}.dump(), "application/json");
    });
    server.Post(R"(/api/[a-z\-]+)", [](const httplib::Request& req, httplib::Response& res) {
        qp::Reply r = qp::handle(req.path, req.body);
        res.status = r.status;
        res.set_content(dump(r.body), "application/json");
    });
    if (!server.bind_to_port("127.0.0.1", port)) {
        std::cerr << qp::error_json("PortInUse", "cannot bind port " + std::to_string(port)).dump() << "\n";
        return 2;
    }
    std::cerr << "listening on 127.0.0.1:" << port << "\n";
    server.listen_after_bind();
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quivers with potential, crepant triangulations and potential search"};
    app.require_subcommand(1);

    int a = 0, b = 0, c = 0, node = 0, port = 8080;
    std::string method = "craw-reid", out, input, potential_file;
    std::size_t budget = qp::default_budget;
    bool dot = false, no_loop_composites = false, no_minimal = false, csv = false;
    qp::SamplingConfig sampling;

    auto triple = [&](CLI::App* sub) {
        sub->add_option("a", a)->required();
        sub->add_option("b", b)->required();
        sub->add_option("c", c)->required();
    };

    auto* tri = app.add_subcommand("triangulate", "crepant triangulation of the junior simplex");
    triple(tri);
    tri->add_option("--method", method)->check(CLI::IsMember({"craw-reid", "seed"}));
    tri->add_option("-o,--output", out);

    auto* cq = app.add_subcommand("curve-quiver", "curve quiver of the triangulation");
    triple(cq);
    cq->add_option("--method", method)->check(CLI::IsMember({"craw-reid", "seed"}));
    cq->add_option("-o,--output", out);

    auto* fl = app.add_subcommand("flip", "flip one edge of a triangulation file");
    fl->add_option("triangulation", input)->required();
    int u = 0, v = 0;
    fl->add_option("u", u)->required();
    fl->add_option("v", v)->required();
    fl->add_option("-o,--output", out);

    auto* mu = app.add_subcommand("mutate", "mutate a quiver with potential");
    mu->add_option("qwp", input)->required();
    mu->add_option("node", node)->required();
    mu->add_flag("--no-loop-composites", no_loop_composites);
    mu->add_option("-o,--output", out);

    auto* qs = app.add_subcommand("quiver-set", "quivers reachable by mutation");
    qs->add_option("qwp", input)->required();
    qs->add_option("--budget", budget)->check(CLI::PositiveNumber);
    qs->add_flag("--no-loop-composites", no_loop_composites);
    qs->add_option("-o,--output", out);

    auto* fg = app.add_subcommand("flip-graph", "labelled flip graph");
    triple(fg);
    fg->add_option("--method", method)->check(CLI::IsMember({"craw-reid", "seed"}));
    fg->add_option("--budget", budget)->check(CLI::PositiveNumber);
    fg->add_flag("--dot", dot);
    fg->add_option("-o,--output", out);

    auto* fp = app.add_subcommand("find-potential", "search for a potential matching the flip graph");
    triple(fp);
    fp->add_option("--method", method)->check(CLI::IsMember({"craw-reid", "seed"}));
    fp->add_option("--budget", budget)->check(CLI::PositiveNumber);
    fp->add_flag("--no-minimal", no_minimal);
    fp->add_option("-o,--output", out);

    auto* ve = app.add_subcommand("verify", "check a potential against the flip graph");
    triple(ve);
    ve->add_option("potential", potential_file)->required();
    ve->add_option("--method", method)->check(CLI::IsMember({"craw-reid", "seed"}));
    ve->add_option("--budget", budget)->check(CLI::PositiveNumber);

    auto* sa = app.add_subcommand("sample", "exchange numbers of random potentials");
    sa->add_option("quiver", input)->required();
    sa->add_option("-n,--samples", sampling.samples)->required()->check(CLI::PositiveNumber);
    sa->add_option("--seed", sampling.seed)->required();
    sa->add_option("--max-terms", sampling.max_terms)->check(CLI::PositiveNumber);
    sa->add_option("--max-len", sampling.max_len)->check(CLI::PositiveNumber);
    sa->add_option("--budget", sampling.budget)->check(CLI::PositiveNumber);
    sa->add_flag("--csv", csv);
    sa->add_option("-o,--output", out);

    auto* se = app.add_subcommand("serve", "local HTTP service");
    se->add_option("--port", port)->check(CLI::Range(1, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*tri) {
            emit(dump(qp::api_triangulate(group(a, b, c, method))), out);
        } else if (*cq) {
            emit(dump(qp::api_curve_quiver(group(a, b, c, method))), out);
        } else if (*fl) {
            Json req{{"triangulation", qp::parse_json(read_file(input))}, {"edge", {u, v}}};
            emit(dump(qp::api_flip(req)), out);
        } else if (*mu) {
            Json req = qp::parse_json(read_file(input));
            req["node"] = node;
            req["loop_composites"] = !no_loop_composites;
            emit(dump(qp::api_mutate(req)), out);
        } else if (*qs) {
            Json req = qp::parse_json(read_file(input));
            req["budget"] = budget;
            req["loop_composites"] = !no_loop_composites;
            emit(dump(qp::api_quiver_set(req)), out);
        } else if (*fg) {
            qp::FlipGraph g = qp::flip_graph(qp::triangulate(qp::GroupData(a, b, c), method), budget);
            emit(dot ? qp::to_dot(g) : dump(qp::to_json(g)), out);
        } else if (*fp) {
            Json req = group(a, b, c, method);
            req["budget"] = budget;
            req["minimal"] = !no_minimal;
            Json report = qp::api_find_potential(req);
            emit(dump(report), out);
            if (report.at("status") != "found") {
                const Json& f = report.at("failure");
                std::cerr << qp::error_json(f.at("code"), f.at("detail")).dump() << "\n";
                return f.at("code") == "BudgetExceeded" ? 4 : 3;
            }
        } else if (*ve) {
            Json req = group(a, b, c, method);
            req["budget"] = budget;
            Json given = qp::parse_json(read_file(potential_file));
            if (given.contains("status") && given.contains("potential"))
                given = given.at("potential");
            if (given.contains("quiver")) {
                req["quiver"] = given.at("quiver");
                req["potential"] = given.value("potential", Json{{"terms", Json::array()}});
            } else {
                req["potential"] = given;
            }
            Json verdict = qp::api_verify(req);
            std::cout << dump(verdict);
            return verdict.at("verified").get<bool>() ? 0 : 1;
        } else if (*sa) {
            qp::Quiver q = qp::quiver_from_json(qp::parse_json(read_file(input)));
            qp::SamplingStats s = qp::sample_potentials(q, sampling);
            emit(csv ? qp::to_csv(s) : dump(qp::to_json(s)), out);
        } else if (*se) {
            return serve(port);
        }
    } catch (const qp::Error& e) {
        std::cerr << qp::error_json(e.code(), e.what()).dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << qp::error_json("InvalidInput", e.what()).dump() << "\n";
        return 2;
    }
    return 0;
}
