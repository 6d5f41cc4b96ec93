#include "qp/service.hpp"

namespace qp {

namespace {

GroupData group_from(const Json& req)
{
    try {
        return GroupData(req.at("a").get<int>(), req.at("b").get<int>(), req.at("c").get<int>());
    } catch (const Json::exception& e) {
        throw invalid("InvalidJson", std::string("expected integer fields a, b, c: ") + e.what());
    }
}

std::size_t budget_from(const Json& req)
{
    if (!req.contains("budget"))
        return default_budget;
    long long b = req.at("budget").get<long long>();
    if (b <= 0)
        throw invalid("InvalidArgument", "budget must be positive");
    return static_cast<std::size_t>(b);
}

Triangulation triangulation_for(const Json& req)
{
    if (req.contains("triangulation"))
        return triangulation_from_json(req.at("triangulation"));
    return triangulate(group_from(req), req.value("method", std::string("craw-reid")));
}

} // namespace

int http_status(ErrorClass c)
{
    switch (c) {
    case ErrorClass::invalid_input: return 400;
    case ErrorClass::algorithmic: return 422;
    case ErrorClass::budget: return 507;
    }
    return 500;
}

Triangulation triangulate(const GroupData& g, const std::string& method)
{
    if (method == "craw-reid")
        return craw_reid(g);
    if (method == "seed")
        return seed_triangulation(g);
    throw invalid("InvalidArgument", "unknown method " + method);
}

Json api_triangulate(const Json& req)
{
    return to_json(triangulate(group_from(req), req.value("method", std::string("craw-reid"))));
}

Json api_flip(const Json& req)
{
    Triangulation t = triangulation_from_json(req.at("triangulation"));
    if (auto v = validate(t); !v.empty())
        throw invalid("InvalidTriangulation", v.front().kind + ": " + v.front().detail);
    const Json& e = req.at("edge");
    return to_json(flip(t, Edge(e.at(0).get<int>(), e.at(1).get<int>())));
}

Json api_curve_quiver(const Json& req)
{
    return to_json(curve_quiver(triangulation_for(req)));
}

Json api_mutate(const Json& req)
{
    QwP p = qwp_from_json(req);
    MutationOptions opts;
    opts.loop_composites = req.value("loop_composites", true);
    return to_json(qwp_mutate(p, req.at("node").get<NodeId>(), opts));
}

Json api_quiver_set(const Json& req)
{
    MutationOptions opts;
    opts.loop_composites = req.value("loop_composites", true);
    return to_json(quiver_set(qwp_from_json(req), budget_from(req), static_cast<std::size_t>(-1), opts));
}

Json api_flip_graph(const Json& req)
{
    return to_json(flip_graph(triangulation_for(req), budget_from(req)));
}

Json api_find_potential(const Json& req)
{
    SearchConfig cfg;
    cfg.budget = budget_from(req);
    cfg.check_minimal = req.value("minimal", true);
    return to_json(find_potential(flip_graph(triangulation_for(req), cfg.budget), cfg));
}

Json api_verify(const Json& req)
{
    FlipGraph fg = flip_graph(triangulation_for(req), budget_from(req));
    QwP p{fg.quivers.at(0).quiver, {}};
    if (req.contains("quiver"))
        p = qwp_from_json(req);
    else if (req.contains("potential"))
        p.potential = potential_from_json(req.at("potential"));
    check_potential(p.quiver, p.potential);
    Verdict v = verify_exchange_graph(p, fg);
    return {{"verified", v.ok}, {"witness", v.witness}};
}

Reply handle(const std::string& route, const std::string& body)
{
    using Handler = Json (*)(const Json&);
    static const std::pair<const char*, Handler> routes[] = {
        {"/api/triangulate", api_triangulate},       {"/api/flip", api_flip},
        {"/api/curve-quiver", api_curve_quiver},     {"/api/mutate", api_mutate},
        {"/api/quiver-set", api_quiver_set},         {"/api/flip-graph", api_flip_graph},
        {"/api/find-potential", api_find_potential}, {"/api/verify", api_verify},
    };
    if (route == "/api/health")
        return {200, {{"ok", true}}};
    for (const auto& [name, fn] : routes) {
        if (route != name)
            continue;
        try {
            Json req = parse_json(body);
            if (!req.is_object())
                throw invalid("InvalidJson", "request body must be an object");
            return {200, fn(req)};
        } catch (const Error& e) {
            return {http_status(e.error_class()), error_json(e.code(), e.what())};
        } catch (const Json::exception& e) {
            return {400, error_json("InvalidJson", e.what())};
        }
    }
    return {404, error_json("UnknownRoute", route)};
}

} // namespace qp
