#pragma once

#include "qp/curve_quiver.hpp"
#include "qp/error.hpp"
#include "qp/toric.hpp"

#include <cstddef>
#include <vector>

namespace qp {

struct FlipEdge {
    int a = 0, b = 0;
    Edge flipped; // the diagonal removed from node a
    NodeId node = 0;
};

struct FlipGraph {
    std::vector<Triangulation> nodes;
    std::vector<EdgeLabels> labels;
    std::vector<LabelledQuiver> quivers;
    std::vector<FlipEdge> edges; // a < b, ordered by discovery

    std::vector<std::vector<std::pair<int, NodeId>>> adjacency() const;
};

class FlipBudgetExceeded : public Error {
public:
    FlipBudgetExceeded(FlipGraph partial, const std::string& detail)
        : Error("BudgetExceeded", ErrorClass::budget, detail), partial_(std::move(partial)) {}
    const FlipGraph& partial() const noexcept { return partial_; }

private:
    FlipGraph partial_;
};

constexpr std::size_t default_budget = 10000;

// Breadth-first closure under flips. Node numbering follows discovery order,
// with each node's flippable edges visited in sorted order.
FlipGraph flip_graph(const Triangulation& t0, std::size_t budget = default_budget);

// Single-threaded reference for the level-parallel version above.
FlipGraph flip_graph_serial(const Triangulation& t0, std::size_t budget = default_budget);

} // namespace qp
