#pragma once

#include "qp/flip_graph.hpp"
#include "qp/potential.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qp {

// Terms that make mutation at i remove the arrows between j and k:
// x_ij x_jk x_ki and x_ik x_kj x_ji when j != k, x_ij x_jj x_ji when j == k.
std::vector<Cycle> edge_removal_terms(const Quiver& q, NodeId i, NodeId j, NodeId k);

// x_ji x_ik x_ki x_ij: removes the composite 2-cycle between j and k created
// by mutation at i when j and k are not joined in q.
Cycle composite_removal_term(const Quiver& q, NodeId i, NodeId j, NodeId k);

std::vector<NodeId> possible_mutation_nodes(const Quiver& q1, const Quiver& q2);

struct QuiverSet {
    std::vector<Quiver> quivers; // discovery order, starting with the input quiver
    std::size_t blocked = 0;     // mutations refused as non-reducible
};

// term_cap bounds the size of any potential met on the way; exceeding it
// counts against the budget. Mutations that cannot be carried out under opts
// are counted as blocked.
QuiverSet quiver_set(const QwP& p, std::size_t budget = default_budget,
                     std::size_t term_cap = static_cast<std::size_t>(-1), const MutationOptions& opts = {});
std::size_t exchange_number(const QwP& p, std::size_t budget = default_budget);

// States distinguished by quiver and potential support; an approximation of
// counting QwPs up to right equivalence.
std::size_t total_exchange_number(const QwP& p, std::size_t budget = default_budget);

struct ExchangeEdge {
    int a = 0, b = 0;
    NodeId node = 0;
};

struct ExchangeGraph {
    std::vector<QwP> states;
    std::vector<ExchangeEdge> edges;
    std::vector<std::string> warnings;
    std::size_t blocked = 0;
};

ExchangeGraph exchange_graph(const QwP& p, std::size_t budget = default_budget);

struct Verdict {
    bool ok = false;
    std::string witness;
};

Verdict verify_exchange_graph(const QwP& p, const FlipGraph& fg);

struct Minimality {
    bool minimal = true;
    std::optional<Cycle> removable;
};

Minimality minimality_check(const QwP& p, const FlipGraph& fg, std::size_t budget = default_budget);

struct SearchConfig {
    std::size_t budget = default_budget;
    bool check_minimal = true;
};

struct SearchFailure {
    std::string code;
    std::string detail;
    ErrorClass error_class = ErrorClass::algorithmic;
    int node = -1;                 // flip-graph node being processed
    std::vector<NodeId> sequence;  // its mutation sequence
    std::optional<NonReducible::Site> site;
};

struct SearchReport {
    std::string status; // "found" or "failed"
    std::optional<QwP> potential;
    std::vector<std::optional<std::vector<NodeId>>> sequences;
    std::optional<SearchFailure> failure;
    bool verified = false;
    std::optional<bool> minimal;
    std::optional<Cycle> removable;
    std::string witness;
};

SearchReport find_potential(const FlipGraph& fg, const SearchConfig& config = {});

struct SamplingConfig {
    std::size_t samples = 1000;
    std::size_t max_terms = 30;
    std::size_t max_len = 6;
    std::uint64_t seed = 0;
    std::size_t budget = 1000;      // quiver-set states per sample
    std::size_t term_cap = 20000;   // potential size beyond which a sample is abandoned
};

struct SetClass {
    std::size_t count = 0;
    std::size_t en = 0;
    bool operator==(const SetClass&) const = default;
};

struct SamplingStats {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t overruns = 0;
    std::map<std::size_t, std::size_t> histogram;       // en -> samples
    std::map<std::size_t, std::size_t> classes_by_en;   // en -> distinct quiver-set classes
    std::size_t distinct_sets = 0;
    std::vector<SetClass> top_sets;                     // most frequent classes first

    bool operator==(const SamplingStats&) const = default;
};

Potential random_potential(const std::vector<Cycle>& cycles, std::size_t max_terms,
                           std::uint64_t seed, std::uint64_t index);

SamplingStats sample_potentials(const Quiver& q, const SamplingConfig& config);
SamplingStats sample_potentials_serial(const Quiver& q, const SamplingConfig& config);

} // namespace qp
