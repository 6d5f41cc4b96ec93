#pragma once

#include "qp/quiver.hpp"
#include "qp/toric.hpp"

#include <map>

namespace qp {

using EdgeLabels = std::map<Edge, NodeId>;

struct LabelledQuiver {
    Quiver quiver;
    std::map<NodeId, Edge> labels;
};

// Interior edges in sorted order, numbered from 0.
EdgeLabels initial_labels(const Triangulation& t);

// Labels must cover exactly the interior edges of t.
LabelledQuiver curve_quiver(const Triangulation& t, const EdgeLabels& labels);
LabelledQuiver curve_quiver(const Triangulation& t);

NodeId node_for_edge(const LabelledQuiver& lq, const Triangulation& t, const Edge& e);

// Labels after flipping e: the new diagonal inherits e's node.
EdgeLabels relabel_after_flip(const Triangulation& t, const EdgeLabels& labels, const Edge& e);

} // namespace qp
