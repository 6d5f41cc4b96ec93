#include "qp/curve_quiver.hpp"
#include "qp/error.hpp"

#include <set>

namespace qp {

EdgeLabels initial_labels(const Triangulation& t)
{
    EdgeLabels out;
    NodeId n = 0;
    for (const Edge& e : interior_edges(t))
        out[e] = n++;
    return out;
}

LabelledQuiver curve_quiver(const Triangulation& t, const EdgeLabels& labels)
{
    if (!validate(t).empty())
        throw invalid("InvalidTriangulation", "triangulation does not validate");
    const std::vector<Edge> inner = interior_edges(t);
    if (inner.size() != labels.size())
        throw invalid("InvalidTriangulation", "labels do not cover the interior edges");

    LabelledQuiver out;
    for (const Edge& e : inner) {
        auto it = labels.find(e);
        if (it == labels.end())
            throw invalid("InvalidTriangulation", "interior edge without a label");
        out.quiver.add_node(it->second);
        out.labels[it->second] = e;
    }
    for (const Edge& e : inner) {
        NodeId n = labels.at(e);
        for (int i = 0, loops = quad_relation(t, e).loops(); i < loops; ++i)
            out.quiver.add_arrow(n, n);
    }
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (const Triangle& tr : t.triangles) {
        std::vector<NodeId> sides;
        for (Edge e : {Edge(tr[0], tr[1]), Edge(tr[0], tr[2]), Edge(tr[1], tr[2])}) {
            auto it = labels.find(e);
            if (it != labels.end())
                sides.push_back(it->second);
        }
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j)
                pairs.emplace(std::min(sides[i], sides[j]), std::max(sides[i], sides[j]));
    }
    for (auto [i, j] : pairs) {
        out.quiver.add_arrow(i, j);
        out.quiver.add_arrow(j, i);
    }
    return out;
}

LabelledQuiver curve_quiver(const Triangulation& t)
{
    return curve_quiver(t, initial_labels(t));
}

NodeId node_for_edge(const LabelledQuiver& lq, const Triangulation& t, const Edge& e)
{
    auto edges = all_edges(t);
    if (!std::binary_search(edges.begin(), edges.end(), e))
        throw invalid("UnknownEdge", "edge is not in the triangulation");
    if (is_boundary(t, e))
        throw invalid("BoundaryEdge", "boundary edges carry no node");
    for (const auto& [n, lab] : lq.labels)
        if (lab == e)
            return n;
    throw invalid("UnknownEdge", "edge has no node");
}

EdgeLabels relabel_after_flip(const Triangulation& t, const EdgeLabels& labels, const Edge& e)
{
    Quad qd = quad(t, e);
    EdgeLabels out = labels;
    NodeId n = out.at(e);
    out.erase(e);
    out[Edge(qd.v2, qd.v4)] = n;
    return out;
}

} // namespace qp
