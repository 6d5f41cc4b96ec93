#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace qp {

using NodeId = int;
using ArrowId = int;

struct Arrow {
    ArrowId id;
    NodeId tail;
    NodeId head;
    auto operator<=>(const Arrow&) const = default;
};

// A cycle is stored as its lexicographically least rotation.
using Cycle = std::vector<ArrowId>;

Cycle canonical_rotation(std::vector<ArrowId> word);

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::vector<NodeId> nodes);

    void add_node(NodeId n);
    ArrowId add_arrow(NodeId tail, NodeId head);
    void add_arrow(ArrowId id, NodeId tail, NodeId head);
    void remove_arrow(ArrowId id);

    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    ArrowId next_id() const noexcept { return next_id_; }

    bool has_node(NodeId n) const;
    const Arrow* find_arrow(ArrowId id) const;
    const Arrow& arrow(ArrowId id) const;

    int count(NodeId tail, NodeId head) const;
    int loop_count(NodeId n) const { return count(n, n); }
    bool has_loop(NodeId n) const { return loop_count(n) > 0; }
    bool has_two_cycle() const;

    std::vector<ArrowId> arrows_into(NodeId n) const;
    std::vector<ArrowId> arrows_out_of(NodeId n) const;
    std::vector<NodeId> neighbours(NodeId n) const;
    std::vector<NodeId> loopless_nodes() const;

    // Sorted (tail, head) multiset; this is what quiver equality compares.
    std::vector<std::pair<NodeId, NodeId>> arrow_multiset() const;

    void require_node(NodeId n) const;

private:
    std::vector<NodeId> nodes_;
    std::vector<Arrow> arrows_; // sorted by id
    ArrowId next_id_ = 0;
};

bool quiver_equal(const Quiver& a, const Quiver& b);

Quiver fz_mutate(const Quiver& q, NodeId k);

std::vector<std::pair<int, int>> degree_profile(const Quiver& q);

// One representative per rotation class, ordered by length then lexicographically.
std::vector<Cycle> cycles_up_to(const Quiver& q, std::size_t max_len);

} // namespace qp
