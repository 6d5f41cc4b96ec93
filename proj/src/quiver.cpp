#include "qp/quiver.hpp"
#include "qp/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace qp {

Cycle canonical_rotation(std::vector<ArrowId> word)
{
    if (word.empty())
        return word;
    Cycle best = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(word.begin(), word.begin() + 1, word.end());
        if (word < best)
            best = word;
    }
    return best;
}

Quiver::Quiver(std::vector<NodeId> nodes) : nodes_(std::move(nodes))
{
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

void Quiver::add_node(NodeId n)
{
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end() || *it != n)
        nodes_.insert(it, n);
}

bool Quiver::has_node(NodeId n) const
{
    return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

void Quiver::require_node(NodeId n) const
{
    if (!has_node(n))
        throw invalid("UnknownNode", "node " + std::to_string(n) + " is not in the quiver");
}

ArrowId Quiver::add_arrow(NodeId tail, NodeId head)
{
    ArrowId id = next_id_;
    add_arrow(id, tail, head);
    return id;
}

void Quiver::add_arrow(ArrowId id, NodeId tail, NodeId head)
{
    require_node(tail);
    require_node(head);
    if (id < 0)
        throw invalid("InvalidArrow", "negative arrow id");
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                               [](const Arrow& a, ArrowId x) { return a.id < x; });
    if (it != arrows_.end() && it->id == id)
        throw invalid("DuplicateArrow", "arrow id " + std::to_string(id) + " already used");
    arrows_.insert(it, Arrow{id, tail, head});
    next_id_ = std::max(next_id_, id + 1);
}

void Quiver::remove_arrow(ArrowId id)
{
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                               [](const Arrow& a, ArrowId x) { return a.id < x; });
    if (it == arrows_.end() || it->id != id)
        throw invalid("UnknownArrow", "arrow " + std::to_string(id) + " is not in the quiver");
    arrows_.erase(it);
}

const Arrow* Quiver::find_arrow(ArrowId id) const
{
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                               [](const Arrow& a, ArrowId x) { return a.id < x; });
    if (it == arrows_.end() || it->id != id)
        return nullptr;
    return &*it;
}

const Arrow& Quiver::arrow(ArrowId id) const
{
    if (const Arrow* a = find_arrow(id))
        return *a;
    throw invalid("UnknownArrow", "arrow " + std::to_string(id) + " is not in the quiver");
}

int Quiver::count(NodeId tail, NodeId head) const
{
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
        return a.tail == tail && a.head == head;
    }));
}

bool Quiver::has_two_cycle() const
{
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Arrow& a : arrows_)
        if (a.tail != a.head)
            seen.emplace(a.tail, a.head);
    for (auto [t, h] : seen)
        if (seen.count({h, t}))
            return true;
    return false;
}

std::vector<ArrowId> Quiver::arrows_into(NodeId n) const
{
    std::vector<ArrowId> out;
    for (const Arrow& a : arrows_)
        if (a.head == n)
            out.push_back(a.id);
    return out;
}

std::vector<ArrowId> Quiver::arrows_out_of(NodeId n) const
{
    std::vector<ArrowId> out;
    for (const Arrow& a : arrows_)
        if (a.tail == n)
            out.push_back(a.id);
    return out;
}

std::vector<NodeId> Quiver::neighbours(NodeId n) const
{
    std::set<NodeId> s;
    for (const Arrow& a : arrows_) {
        if (a.tail == n && a.head != n)
            s.insert(a.head);
        if (a.head == n && a.tail != n)
            s.insert(a.tail);
    }
    return {s.begin(), s.end()};
}

std::vector<NodeId> Quiver::loopless_nodes() const
{
    std::vector<NodeId> out;
    for (NodeId n : nodes_)
        if (!has_loop(n))
            out.push_back(n);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Quiver::arrow_multiset() const
{
    std::vector<std::pair<NodeId, NodeId>> m;
    m.reserve(arrows_.size());
    for (const Arrow& a : arrows_)
        m.emplace_back(a.tail, a.head);
    std::sort(m.begin(), m.end());
    return m;
}

bool quiver_equal(const Quiver& a, const Quiver& b)
{
    return a.nodes() == b.nodes() && a.arrow_multiset() == b.arrow_multiset();
}

Quiver fz_mutate(const Quiver& q, NodeId k)
{
    q.require_node(k);
    if (q.has_loop(k))
        throw invalid("NodeHasLoop", "node " + std::to_string(k) + " carries a loop");
    if (q.has_two_cycle())
        throw invalid("QuiverHasTwoCycles", "plain mutation needs a 2-cycle free quiver");

    Quiver out(q.nodes());
    for (const Arrow& a : q.arrows()) {
        if (a.head == k || a.tail == k)
            out.add_arrow(a.id, a.head, a.tail);
        else
            out.add_arrow(a.id, a.tail, a.head);
    }
    for (ArrowId in : q.arrows_into(k))
        for (ArrowId o : q.arrows_out_of(k))
            out.add_arrow(q.arrow(in).tail, q.arrow(o).head);

    // Cancel opposite pairs, lowest ids first.
    std::map<std::pair<NodeId, NodeId>, std::vector<ArrowId>> by_pair;
    for (const Arrow& a : out.arrows())
        if (a.tail != a.head)
            by_pair[{a.tail, a.head}].push_back(a.id);
    for (auto& [key, ids] : by_pair) {
        auto [t, h] = key;
        if (t > h)
            continue;
        auto rev = by_pair.find({h, t});
        if (rev == by_pair.end())
            continue;
        std::size_t n = std::min(ids.size(), rev->second.size());
        for (std::size_t i = 0; i < n; ++i) {
            out.remove_arrow(ids[i]);
            out.remove_arrow(rev->second[i]);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> degree_profile(const Quiver& q)
{
    std::map<NodeId, std::pair<int, int>> deg;
    for (NodeId n : q.nodes())
        deg[n] = {0, 0};
    for (const Arrow& a : q.arrows()) {
        ++deg[a.head].first;
        ++deg[a.tail].second;
    }
    std::vector<std::pair<int, int>> out;
    for (auto& [n, d] : deg)
        out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void extend_cycles(const Quiver& q, ArrowId first, NodeId start, std::vector<ArrowId>& walk,
                   std::size_t max_len, std::set<Cycle>& found)
{
    NodeId at = q.arrow(walk.back()).head;
    if (at == start)
        found.insert(canonical_rotation(walk));
    if (walk.size() == max_len)
        return;
    for (const Arrow& a : q.arrows()) {
        if (a.tail != at || a.id < first)
            continue;
        walk.push_back(a.id);
        extend_cycles(q, first, start, walk, max_len, found);
        walk.pop_back();
    }
}

} // namespace

std::vector<Cycle> cycles_up_to(const Quiver& q, std::size_t max_len)
{
    if (max_len < 1)
        throw invalid("InvalidArgument", "max_len must be at least 1");
    // Every rotation class has a rotation starting at its smallest arrow.
    std::set<Cycle> found;
    std::vector<ArrowId> walk;
    for (const Arrow& a : q.arrows()) {
        walk.assign(1, a.id);
        extend_cycles(q, a.id, a.tail, walk, max_len, found);
    }
    std::vector<Cycle> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Cycle& x, const Cycle& y) { return x.size() < y.size(); });
    return out;
}

} // namespace qp
