#include "qp/flip_graph.hpp"

#include <map>

namespace qp {

std::vector<std::vector<std::pair<int, NodeId>>> FlipGraph::adjacency() const
{
    std::vector<std::vector<std::pair<int, NodeId>>> adj(nodes.size());
    for (const FlipEdge& e : edges) {
        adj[e.a].emplace_back(e.b, e.node);
        adj[e.b].emplace_back(e.a, e.node);
    }
    return adj;
}

namespace {

struct Move {
    Edge edge;
    Triangulation result;
};

std::vector<Move> moves_from(const Triangulation& t)
{
    std::vector<Move> out;
    for (const Edge& e : interior_edges(t))
        if (flippable(t, e))
            out.push_back({e, flip(t, e)});
    return out;
}

class Builder {
public:
    Builder(const Triangulation& t0, std::size_t budget) : budget_(budget)
    {
        Triangulation start = t0;
        start.normalize();
        add(std::move(start), initial_labels(t0));
    }

    // Record the moves out of node i; returns ids of newly discovered nodes.
    void absorb(int i, const std::vector<Move>& moves)
    {
        for (const Move& m : moves) {
            auto it = index_.find(m.result.triangles);
            int j;
            if (it == index_.end()) {
                j = add(m.result, relabel_after_flip(g_.nodes[i], g_.labels[i], m.edge));
            } else {
                j = it->second;
            }
            if (i < j)
                g_.edges.push_back({i, j, m.edge, g_.labels[i].at(m.edge)});
        }
    }

    FlipGraph finish(bool parallel)
    {
        g_.quivers.resize(g_.nodes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t i = 0; i < g_.nodes.size(); ++i)
            g_.quivers[i] = curve_quiver(g_.nodes[i], g_.labels[i]);
        return std::move(g_);
    }

    std::size_t size() const { return g_.nodes.size(); }
    const Triangulation& node(std::size_t i) const { return g_.nodes[i]; }

private:
    int add(Triangulation t, EdgeLabels labels)
    {
        if (g_.nodes.size() >= budget_) {
            FlipGraph partial = g_;
            partial.quivers.clear();
            throw FlipBudgetExceeded(std::move(partial),
                                     "flip graph exceeds " + std::to_string(budget_) + " triangulations");
        }
        int id = static_cast<int>(g_.nodes.size());
        index_.emplace(t.triangles, id);
        g_.nodes.push_back(std::move(t));
        g_.labels.push_back(std::move(labels));
        return id;
    }

    std::size_t budget_;
    FlipGraph g_;
    std::map<std::vector<Triangle>, int> index_;
};

} // namespace

FlipGraph flip_graph_serial(const Triangulation& t0, std::size_t budget)
{
    Builder b(t0, budget);
    for (std::size_t i = 0; i < b.size(); ++i)
        b.absorb(static_cast<int>(i), moves_from(b.node(i)));
    return b.finish(false);
}

FlipGraph flip_graph(const Triangulation& t0, std::size_t budget)
{
    Builder b(t0, budget);
    std::size_t lo = 0;
    while (lo < b.size()) {
        const std::size_t hi = b.size();
        std::vector<std::vector<Move>> level(hi - lo);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = lo; i < hi; ++i)
            level[i - lo] = moves_from(b.node(i));
        // merging in node order reproduces the serial numbering
        for (std::size_t i = lo; i < hi; ++i)
            b.absorb(static_cast<int>(i), level[i - lo]);
        lo = hi;
    }
    return b.finish(true);
}

} // namespace qp
