#pragma once

#include "qp/error.hpp"
#include "qp/quiver.hpp"
#include "qp/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qp {

using Path = std::vector<ArrowId>;

class Potential {
public:
    using Terms = std::map<Cycle, Rational>;

    Potential() = default;

    void add_term(std::vector<ArrowId> word, const Rational& coef);
    void erase(const Cycle& c) { terms_.erase(c); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    Rational coefficient(const Cycle& c) const;
    std::vector<Cycle> support() const;

    bool operator==(const Potential&) const = default;

private:
    Terms terms_;
};

struct QwP {
    Quiver quiver;
    Potential potential;
};

bool is_reduced(const Potential& w);

// Throws UnknownArrow when some term uses an arrow missing from q, or
// InvalidCycle when a term is not a closed composable walk.
void check_potential(const Quiver& q, const Potential& w);

std::map<Path, Rational> cyclic_derivative(const Quiver& q, const Potential& w, ArrowId a);

struct MutationOptions {
    // Create the composite [ab] for a: i->k, b: k->i (a loop at i). Some
    // worked examples leave these out.
    bool loop_composites = true;
};

QwP premutate(const QwP& p, NodeId k, const MutationOptions& opts = {});
QwP reduce(const QwP& p);
QwP qwp_mutate(const QwP& p, NodeId k, const MutationOptions& opts = {});

// Walk of node ids visited by a cycle, starting at the tail of its first arrow.
std::vector<NodeId> node_walk(const Quiver& q, const Cycle& c);

class NonReducible : public Error {
public:
    struct Site {
        Cycle quadratic;
        Cycle blocker;
        std::vector<NodeId> quadratic_walk;
        std::vector<NodeId> blocker_walk;
    };

    NonReducible(Site site, const std::string& detail)
        : Error("NonReducible", ErrorClass::algorithmic, detail), site_(std::move(site)) {}

    const Site& site() const noexcept { return site_; }

private:
    Site site_;
};

} // namespace qp
