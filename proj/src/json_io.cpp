#include "qp/json_io.hpp"

#include <limits>
#include <sstream>

namespace qp {

namespace {

template <class F>
auto shaped(const char* what, F&& f)
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw invalid("InvalidJson", std::string("malformed ") + what + ": " + e.what());
    }
}

Json integer_json(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw invalid("InvalidJson", "expected an integer");
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

} // namespace

Json to_json(const Quiver& q)
{
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    return {{"nodes", q.nodes()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const Json& j)
{
    return shaped("quiver", [&] {
        Quiver q(j.at("nodes").get<std::vector<NodeId>>());
        for (const Json& a : j.at("arrows"))
            q.add_arrow(a.at("id").get<ArrowId>(), a.at("tail").get<NodeId>(), a.at("head").get<NodeId>());
        return q;
    });
}

Json to_json(const Rational& r)
{
    return {{"num", integer_json(boost::multiprecision::numerator(r))},
            {"den", integer_json(boost::multiprecision::denominator(r))}};
}

Rational rational_from_json(const Json& j)
{
    return shaped("coefficient", [&] {
        if (j.is_number_integer())
            return Rational(j.get<long long>());
        Integer den = integer_from_json(j.at("den"));
        if (den == 0)
            throw invalid("InvalidJson", "zero denominator");
        return Rational(integer_from_json(j.at("num")), den);
    });
}

Json to_json(const Potential& w)
{
    Json terms = Json::array();
    for (const auto& [c, coef] : w.terms())
        terms.push_back({{"coef", to_json(coef)}, {"cycle", c}});
    return {{"terms", std::move(terms)}};
}

Potential potential_from_json(const Json& j)
{
    return shaped("potential", [&] {
        Potential w;
        for (const Json& t : j.at("terms"))
            w.add_term(t.at("cycle").get<std::vector<ArrowId>>(), rational_from_json(t.at("coef")));
        return w;
    });
}

Json to_json(const QwP& p)
{
    return {{"quiver", to_json(p.quiver)}, {"potential", to_json(p.potential)}};
}

QwP qwp_from_json(const Json& j)
{
    return shaped("quiver with potential", [&] {
        QwP p{quiver_from_json(j.at("quiver")), {}};
        if (j.contains("potential"))
            p.potential = potential_from_json(j.at("potential"));
        check_potential(p.quiver, p.potential);
        return p;
    });
}

Json to_json(const Triangulation& t)
{
    Json pts = Json::array();
    for (const Point& p : t.points)
        pts.push_back(Json::array({p[0], p[1], p[2]}));
    Json tris = Json::array();
    for (const Triangle& tr : t.triangles)
        tris.push_back(Json::array({tr[0], tr[1], tr[2]}));
    return {{"r", t.r}, {"points", std::move(pts)}, {"denominator", t.r}, {"triangles", std::move(tris)}};
}

Triangulation triangulation_from_json(const Json& j)
{
    return shaped("triangulation", [&] {
        Triangulation t;
        t.r = j.at("r").get<int>();
        if (j.contains("denominator") && j.at("denominator").get<int>() != t.r)
            throw invalid("InvalidJson", "denominator must equal r");
        for (const Json& p : j.at("points"))
            t.points.push_back({p.at(0).get<long long>(), p.at(1).get<long long>(), p.at(2).get<long long>()});
        for (const Json& tr : j.at("triangles"))
            t.triangles.push_back({tr.at(0).get<int>(), tr.at(1).get<int>(), tr.at(2).get<int>()});
        t.normalize();
        return t;
    });
}

Json to_json(const LabelledQuiver& lq)
{
    Json j = to_json(lq.quiver);
    Json labels = Json::object();
    for (const auto& [n, e] : lq.labels)
        labels[std::to_string(n)] = edge_json(e);
    j["labels"] = std::move(labels);
    return j;
}

LabelledQuiver labelled_quiver_from_json(const Json& j)
{
    return shaped("labelled quiver", [&] {
        LabelledQuiver lq{quiver_from_json(j), {}};
        for (const auto& [key, e] : j.at("labels").items())
            lq.labels[std::stoi(key)] = Edge(e.at(0).get<int>(), e.at(1).get<int>());
        return lq;
    });
}

Json to_json(const FlipGraph& fg)
{
    Json nodes = Json::array();
    for (std::size_t i = 0; i < fg.nodes.size(); ++i) {
        Json n = to_json(fg.nodes[i]);
        if (i < fg.quivers.size())
            n["quiver"] = to_json(fg.quivers[i]);
        nodes.push_back(std::move(n));
    }
    Json edges = Json::array();
    for (const FlipEdge& e : fg.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"flipped", edge_json(e.flipped)}, {"node", e.node}});
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string to_dot(const FlipGraph& fg)
{
    std::ostringstream os;
    os << "graph flips {\n";
    for (std::size_t i = 0; i < fg.nodes.size(); ++i) {
        int loopless = i < fg.quivers.size() ? static_cast<int>(fg.quivers[i].quiver.loopless_nodes().size()) : 0;
        os << "  t" << i << " [label=\"" << i << " (" << loopless << ")\"];\n";
    }
    for (const FlipEdge& e : fg.edges)
        os << "  t" << e.a << " -- t" << e.b << " [label=\"" << e.node << "\"];\n";
    os << "}\n";
    return os.str();
}

Json to_json(const QuiverSet& qs)
{
    Json quivers = Json::array();
    for (const Quiver& q : qs.quivers)
        quivers.push_back(to_json(q));
    return {{"quivers", std::move(quivers)}, {"exchange_number", qs.quivers.size()}, {"blocked", qs.blocked}};
}

Json to_json(const SearchReport& r)
{
    Json j;
    j["status"] = r.status;
    if (r.potential)
        j["potential"] = to_json(*r.potential);
    Json seqs = Json::array();
    for (const auto& s : r.sequences)
        seqs.push_back(s ? Json(*s) : Json(nullptr));
    j["sequences"] = std::move(seqs);
    if (r.failure) {
        const SearchFailure& f = *r.failure;
        Json fj{{"code", f.code}, {"detail", f.detail}, {"node", f.node}, {"sequence", f.sequence}};
        if (f.site) {
            fj["site"] = {{"quadratic", f.site->quadratic},
                          {"blocker", f.site->blocker},
                          {"quadratic_walk", f.site->quadratic_walk},
                          {"blocker_walk", f.site->blocker_walk}};
        }
        j["failure"] = std::move(fj);
    }
    j["verified"] = r.verified;
    j["minimal"] = r.minimal ? Json(*r.minimal) : Json(nullptr);
    if (r.removable)
        j["removable"] = *r.removable;
    if (!r.witness.empty())
        j["witness"] = r.witness;
    return j;
}

Json to_json(const SamplingStats& s)
{
    Json hist = Json::object();
    for (auto [en, n] : s.histogram)
        hist[std::to_string(en)] = n;
    Json classes = Json::object();
    for (auto [en, n] : s.classes_by_en)
        classes[std::to_string(en)] = n;
    Json top = Json::array();
    for (const SetClass& c : s.top_sets)
        top.push_back({{"count", c.count}, {"en", c.en}});
    return {{"seed", s.seed},       {"samples", s.samples},         {"overruns", s.overruns},
            {"histogram", hist},    {"classes_by_en", classes},     {"distinct_sets", s.distinct_sets},
            {"top_sets", top}};
}

std::string to_csv(const SamplingStats& s)
{
    std::ostringstream os;
    os << "en,count\n";
    for (auto [en, n] : s.histogram)
        os << en << ',' << n << '\n';
    return os.str();
}

Json error_json(const std::string& code, const std::string& detail)
{
    return {{"error", {{"code", code}, {"detail", detail}}}};
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw invalid("InvalidJson", e.what());
    }
}

} // namespace qp
