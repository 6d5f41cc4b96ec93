#include "qp/lab.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace qp {

namespace {

using Counts = std::map<std::pair<NodeId, NodeId>, int>;
using QuiverKey = std::vector<std::pair<NodeId, NodeId>>;

Counts counts(const Quiver& q)
{
    Counts c;
    for (const Arrow& a : q.arrows())
        ++c[{a.tail, a.head}];
    return c;
}

int at(const Counts& c, NodeId t, NodeId h)
{
    auto it = c.find({t, h});
    return it == c.end() ? 0 : it->second;
}

ArrowId arrow_between(const Quiver& q, NodeId t, NodeId h)
{
    for (const Arrow& a : q.arrows())
        if (a.tail == t && a.head == h)
            return a.id;
    throw invalid("MissingArrow", "no arrow " + std::to_string(t) + "->" + std::to_string(h));
}

Quiver zero_mutation(const Quiver& q, NodeId k)
{
    return premutate(QwP{q, {}}, k).quiver;
}

// Unordered node pairs (and loops) on which two count tables might differ.
std::set<std::pair<NodeId, NodeId>> touched_pairs(const Counts& a, const Counts& b)
{
    std::set<std::pair<NodeId, NodeId>> out;
    for (const Counts* c : {&a, &b})
        for (const auto& [key, n] : *c)
            out.emplace(std::min(key.first, key.second), std::max(key.first, key.second));
    return out;
}

enum class Removal { loop, triangle, composite };

struct PlanStep {
    Removal kind;
    NodeId j, l;
};

using Plan = std::vector<PlanStep>;

// Gate used while assigning sequences: can the arrows left over by mutating
// q at k with zero potential be removed by edge or composite removal terms?
std::optional<Plan> construction_plan(const Quiver& q, NodeId k, const Quiver& target)
{
    const Counts R = counts(zero_mutation(q, k)), T = counts(target), O = counts(q);
    Plan plan;
    for (auto [j, l] : touched_pairs(R, T)) {
        int d = at(R, j, l) - at(T, j, l);
        if (j == l) {
            if (d < 0)
                return std::nullopt;
            if (d == 0)
                continue;
            if (d == 2 && at(O, j, j) >= 1 && at(O, k, j) >= 1 && at(O, j, k) >= 1)
                plan.push_back({Removal::loop, j, j});
            else
                return std::nullopt;
            continue;
        }
        int d2 = at(R, l, j) - at(T, l, j);
        if (d < 0 || d2 != d)
            return std::nullopt;
        if (d == 0)
            continue;
        if (d == 2 && at(O, j, l) >= 1 && at(O, l, j) >= 1)
            plan.push_back({Removal::triangle, j, l});
        else if (d == 1 && at(O, j, k) && at(O, k, l) && at(O, l, k) && at(O, k, j) && at(R, j, l) - at(O, j, l) >= 1)
            plan.push_back({Removal::composite, j, l});
        else
            return std::nullopt;
    }
    return plan;
}

// Terms to add to q's potential so that mutation at k no longer leaves the
// surplus seen in `result` compared with `target`.
std::optional<Plan> repair_plan(const Quiver& q, const Quiver& result, const Quiver& target)
{
    const Counts R = counts(result), T = counts(target), O = counts(q);
    Plan plan;
    for (auto [j, l] : touched_pairs(R, T)) {
        int d = at(R, j, l) - at(T, j, l);
        if (d < 0)
            return std::nullopt;
        if (j == l) {
            if (d == 0)
                continue;
            if (at(O, j, j) >= 1)
                plan.push_back({Removal::loop, j, j});
            else
                return std::nullopt;
            continue;
        }
        int d2 = at(R, l, j) - at(T, l, j);
        if (d2 != d)
            return std::nullopt;
        if (d == 0)
            continue;
        if (d == 2 && at(O, j, l) >= 1)
            plan.push_back({Removal::triangle, j, l});
        else if (d == 1 && at(O, j, l) >= 1 && at(T, j, l) == 0)
            plan.push_back({Removal::triangle, j, l});
        else if (d == 1)
            plan.push_back({Removal::composite, j, l});
        else
            return std::nullopt;
    }
    return plan;
}

std::vector<Cycle> plan_terms(const Quiver& q, NodeId k, const Plan& plan)
{
    std::vector<Cycle> out;
    for (const PlanStep& s : plan) {
        switch (s.kind) {
        case Removal::loop:
        case Removal::triangle:
            for (Cycle& c : edge_removal_terms(q, k, s.j, s.l))
                out.push_back(std::move(c));
            break;
        case Removal::composite:
            out.push_back(composite_removal_term(q, k, s.j, s.l));
            break;
        }
    }
    return out;
}

QwP mutate_along(QwP p, const std::vector<NodeId>& seq)
{
    for (NodeId k : seq)
        p = qwp_mutate(p, k);
    return p;
}

std::vector<std::vector<NodeId>> support_walks(const QwP& p)
{
    std::vector<std::vector<NodeId>> out;
    for (const Cycle& c : p.potential.support()) {
        std::vector<NodeId> w = node_walk(p.quiver, c);
        out.push_back(canonical_rotation(std::move(w)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Exploration {
    std::vector<QwP> states;
    std::vector<ExchangeEdge> edges;
    std::vector<std::string> warnings;
    std::size_t blocked = 0;
};

Exploration explore(const QwP& p, std::size_t budget, std::size_t term_cap, const MutationOptions& opts = {})
{
    Exploration ex;
    std::map<QuiverKey, int> index;
    std::set<std::tuple<int, int, NodeId>> seen_edges;
    ex.states.push_back(p);
    index.emplace(p.quiver.arrow_multiset(), 0);
    for (std::size_t i = 0; i < ex.states.size(); ++i) {
        for (NodeId k : ex.states[i].quiver.loopless_nodes()) {
            QwP next;
            try {
                next = qwp_mutate(ex.states[i], k, opts);
            } catch (const NonReducible&) {
                ++ex.blocked;
                continue;
            } catch (const Error& e) {
                // only reachable without loop composites
                if (e.code() != "TwoCycleThroughNode")
                    throw;
                ++ex.blocked;
                continue;
            }
            if (next.potential.size() > term_cap)
                throw budget_exceeded("potential grew beyond " + std::to_string(term_cap) + " terms");
            QuiverKey key = next.quiver.arrow_multiset();
            auto it = index.find(key);
            int j;
            if (it == index.end()) {
                if (ex.states.size() >= budget)
                    throw budget_exceeded("more than " + std::to_string(budget) + " quivers");
                j = static_cast<int>(ex.states.size());
                index.emplace(std::move(key), j);
                ex.states.push_back(std::move(next));
            } else {
                j = it->second;
                if (support_walks(next) != support_walks(ex.states[j]))
                    ex.warnings.push_back("state " + std::to_string(j) + " reached with a different support");
            }
            int a = std::min(static_cast<int>(i), j), b = std::max(static_cast<int>(i), j);
            if (seen_edges.emplace(a, b, k).second)
                ex.edges.push_back({a, b, k});
        }
    }
    return ex;
}

std::set<QuiverKey> expected_quivers(const FlipGraph& fg)
{
    std::set<QuiverKey> out;
    for (const LabelledQuiver& lq : fg.quivers)
        out.insert(lq.quiver.arrow_multiset());
    return out;
}

SearchFailure make_failure(std::string code, std::string detail, int node = -1, std::vector<NodeId> seq = {},
                           ErrorClass cls = ErrorClass::algorithmic)
{
    SearchFailure f;
    f.code = std::move(code);
    f.detail = std::move(detail);
    f.node = node;
    f.sequence = std::move(seq);
    f.error_class = cls;
    return f;
}

} // namespace

std::vector<Cycle> edge_removal_terms(const Quiver& q, NodeId i, NodeId j, NodeId k)
{
    auto x = [&](NodeId t, NodeId h) { return arrow_between(q, t, h); };
    if (j == k)
        return {canonical_rotation({x(i, j), x(j, j), x(j, i)})};
    return {canonical_rotation({x(i, j), x(j, k), x(k, i)}), canonical_rotation({x(i, k), x(k, j), x(j, i)})};
}

Cycle composite_removal_term(const Quiver& q, NodeId i, NodeId j, NodeId k)
{
    auto x = [&](NodeId t, NodeId h) { return arrow_between(q, t, h); };
    return canonical_rotation({x(j, i), x(i, k), x(k, i), x(i, j)});
}

std::vector<NodeId> possible_mutation_nodes(const Quiver& q1, const Quiver& q2)
{
    if (q1.nodes() != q2.nodes())
        throw invalid("NodeSetMismatch", "quivers have different node sets");
    const Counts c1 = counts(q1), c2 = counts(q2);
    std::vector<NodeId> out;
    for (NodeId k : q1.nodes()) {
        if (q1.has_loop(k) || q2.has_loop(k))
            continue;
        std::set<NodeId> hood;
        for (NodeId n : q1.neighbours(k))
            hood.insert(n);
        hood.insert(k);
        auto inside = [&](NodeId t, NodeId h) { return hood.count(t) && hood.count(h); };

        bool ok = true;
        for (const Counts* c : {&c1, &c2})
            for (const auto& [key, n] : *c)
                if (!inside(key.first, key.second) && at(c1, key.first, key.second) != at(c2, key.first, key.second))
                    ok = false;
        for (NodeId x : hood)
            if (x != k && (at(c1, x, k) != at(c2, k, x) || at(c1, k, x) != at(c2, x, k)))
                ok = false;
        if (!ok)
            continue;
        const Counts r = counts(zero_mutation(q1, k));
        for (const auto& [key, n] : c2)
            if (inside(key.first, key.second) && n > at(r, key.first, key.second))
                ok = false;
        if (ok)
            out.push_back(k);
    }
    return out;
}

QuiverSet quiver_set(const QwP& p, std::size_t budget, std::size_t term_cap, const MutationOptions& opts)
{
    Exploration ex = explore(p, budget, term_cap, opts);
    QuiverSet out;
    out.blocked = ex.blocked;
    for (QwP& s : ex.states)
        out.quivers.push_back(std::move(s.quiver));
    return out;
}

std::size_t exchange_number(const QwP& p, std::size_t budget)
{
    return quiver_set(p, budget).quivers.size();
}

std::size_t total_exchange_number(const QwP& p, std::size_t budget)
{
    using StateKey = std::pair<QuiverKey, std::vector<std::vector<NodeId>>>;
    std::set<StateKey> seen;
    std::deque<QwP> queue;
    seen.emplace(p.quiver.arrow_multiset(), support_walks(p));
    queue.push_back(p);
    while (!queue.empty()) {
        QwP cur = std::move(queue.front());
        queue.pop_front();
        for (NodeId k : cur.quiver.loopless_nodes()) {
            QwP next;
            try {
                next = qwp_mutate(cur, k);
            } catch (const NonReducible&) {
                continue;
            }
            if (seen.emplace(next.quiver.arrow_multiset(), support_walks(next)).second) {
                if (seen.size() > budget)
                    throw budget_exceeded("more than " + std::to_string(budget) + " states");
                queue.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

ExchangeGraph exchange_graph(const QwP& p, std::size_t budget)
{
    Exploration ex = explore(p, budget, static_cast<std::size_t>(-1));
    return {std::move(ex.states), std::move(ex.edges), std::move(ex.warnings), ex.blocked};
}

Verdict verify_exchange_graph(const QwP& p, const FlipGraph& fg)
{
    const auto adj = fg.adjacency();
    std::map<int, QwP> state;
    std::set<std::pair<int, int>> done;
    std::deque<int> queue{0};
    state.emplace(0, p);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        const QwP& cur = state.at(i);
        if (!quiver_equal(cur.quiver, fg.quivers[i].quiver))
            return {false, "quiver at flip-graph node " + std::to_string(i) + " differs from its curve quiver"};
        std::set<NodeId> flips;
        for (auto [j, k] : adj[i])
            flips.insert(k);
        std::vector<NodeId> loopless = cur.quiver.loopless_nodes();
        if (std::set<NodeId>(loopless.begin(), loopless.end()) != flips)
            return {false, "mutable nodes at flip-graph node " + std::to_string(i) + " differ from its flips"};
        // each flip is checked once, from the endpoint reached first
        for (auto [j, k] : adj[i]) {
            if (!done.emplace(std::min(i, j), std::max(i, j)).second)
                continue;
            QwP next;
            try {
                next = qwp_mutate(cur, k);
            } catch (const Error& e) {
                return {false, "mutation at node " + std::to_string(k) + " from flip-graph node " +
                                   std::to_string(i) + " failed: " + e.what()};
            }
            if (!quiver_equal(next.quiver, fg.quivers[j].quiver))
                return {false, "mutation at node " + std::to_string(k) + " from flip-graph node " +
                                   std::to_string(i) + " does not give the quiver of node " + std::to_string(j)};
            if (!state.count(j)) {
                state.emplace(j, std::move(next));
                queue.push_back(j);
            }
        }
    }
    if (state.size() != fg.nodes.size())
        return {false, "flip graph is not connected"};
    return {true, ""};
}

Minimality minimality_check(const QwP& p, const FlipGraph& fg, std::size_t budget)
{
    const std::set<QuiverKey> expected = expected_quivers(fg);
    for (const Cycle& c : p.potential.support()) {
        QwP smaller = p;
        smaller.potential.erase(c);
        bool same = false;
        try {
            QuiverSet qs = quiver_set(smaller, budget);
            std::set<QuiverKey> got;
            for (const Quiver& q : qs.quivers)
                got.insert(q.arrow_multiset());
            same = got == expected;
        } catch (const Error&) {
            same = false;
        }
        if (same)
            return {false, c};
    }
    return {true, std::nullopt};
}

SearchReport find_potential(const FlipGraph& fg, const SearchConfig& config)
{
    SearchReport report;
    const std::size_t n = fg.nodes.size();
    report.sequences.assign(n, std::nullopt);
    auto fail = [&](SearchFailure f) {
        report.status = "failed";
        report.failure = std::move(f);
        return report;
    };
    if (n == 0)
        return fail(make_failure("NoCandidateSequence", "empty flip graph"));
    if (n > config.budget)
        return fail(make_failure("BudgetExceeded", "flip graph exceeds the budget", -1, {}, ErrorClass::budget));

    auto quiver = [&](std::size_t i) -> const Quiver& { return fg.quivers[i].quiver; };

    // (a) a mutation sequence for every triangulation
    report.sequences[0] = std::vector<NodeId>{};
    std::size_t assigned = 1;
    while (assigned < n) {
        bool progress = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (report.sequences[i])
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!report.sequences[j])
                    continue;
                auto cand = possible_mutation_nodes(quiver(j), quiver(i));
                if (cand.size() != 1 || !construction_plan(quiver(j), cand[0], quiver(i)))
                    continue;
                std::vector<NodeId> seq = *report.sequences[j];
                seq.push_back(cand[0]);
                report.sequences[i] = std::move(seq);
                ++assigned;
                progress = true;
                break;
            }
        }
        if (!progress) {
            std::size_t first = 0;
            while (report.sequences[first])
                ++first;
            return fail(make_failure("NoCandidateSequence",
                                     "no unique mutation reaches flip-graph node " + std::to_string(first),
                                     static_cast<int>(first)));
        }
    }

    // (b) shortest sequences first
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return report.sequences[x]->size() < report.sequences[y]->size();
    });

    // (c) grow the potential one triangulation at a time
    QwP base{quiver(0), {}};
    for (std::size_t i : order) {
        const std::vector<NodeId>& seq = *report.sequences[i];
        if (seq.empty())
            continue;
        std::vector<NodeId> prefix(seq.begin(), seq.end() - 1);
        const NodeId k = seq.back();
        try {
            QwP before = mutate_along(base, prefix);
            QwP after = qwp_mutate(before, k);
            if (!quiver_equal(after.quiver, quiver(i))) {
                auto plan = repair_plan(before.quiver, after.quiver, quiver(i));
                if (!plan) {
                    return fail(make_failure("NoCandidateSequence",
                                             "no removal terms explain the quiver at flip-graph node " +
                                                 std::to_string(i),
                                             static_cast<int>(i), seq));
                }
                for (Cycle& c : plan_terms(before.quiver, k, *plan))
                    before.potential.add_term(std::move(c), 1);
                after = qwp_mutate(before, k);
                if (!quiver_equal(after.quiver, quiver(i))) {
                    return fail(make_failure("VerificationFailed",
                                             "added terms do not produce the quiver of flip-graph node " +
                                                 std::to_string(i),
                                             static_cast<int>(i), seq));
                }
            }
            std::vector<NodeId> back(prefix.rbegin(), prefix.rend());
            QwP returned = mutate_along(std::move(before), back);
            if (!quiver_equal(returned.quiver, base.quiver)) {
                return fail(make_failure("VerificationFailed", "mutating back does not return to the base quiver",
                                         static_cast<int>(i), seq));
            }
            base = std::move(returned);
        } catch (const NonReducible& e) {
            SearchFailure f = make_failure(e.code(), e.what(), static_cast<int>(i), seq);
            f.site = e.site();
            return fail(std::move(f));
        } catch (const Error& e) {
            return fail(make_failure(e.code(), e.what(), static_cast<int>(i), seq, e.error_class()));
        }
    }

    // (d) confirmation
    report.potential = base;
    Verdict v = verify_exchange_graph(base, fg);
    report.verified = v.ok;
    report.witness = v.witness;
    if (!v.ok)
        return fail(make_failure("VerificationFailed", v.witness));
    if (config.check_minimal) {
        Minimality m = minimality_check(base, fg, config.budget);
        report.minimal = m.minimal;
        report.removable = m.removable;
    }
    report.status = "found";
    return report;
}

Potential random_potential(const std::vector<Cycle>& cycles, std::size_t max_terms,
                           std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    Potential w;
    if (cycles.empty() || max_terms == 0)
        return w;
    std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    terms = std::min(terms, cycles.size());
    std::vector<std::size_t> pick(cycles.size());
    for (std::size_t i = 0; i < pick.size(); ++i)
        pick[i] = i;
    static constexpr int coefs[] = {-3, -2, -1, 1, 2, 3};
    std::uniform_int_distribution<int> coef(0, 5);
    for (std::size_t i = 0; i < terms; ++i) {
        std::size_t j = std::uniform_int_distribution<std::size_t>(i, pick.size() - 1)(rng);
        std::swap(pick[i], pick[j]);
        w.add_term(cycles[pick[i]], coefs[coef(rng)]);
    }
    return w;
}

namespace {

using ClassKey = std::vector<std::vector<std::pair<int, int>>>;

struct SampleResult {
    bool overrun = false;
    std::size_t en = 0;
    ClassKey key;
};

SampleResult run_sample(const Quiver& q, const std::vector<Cycle>& cycles, const SamplingConfig& cfg,
                        std::uint64_t index)
{
    SampleResult r;
    QwP p{q, random_potential(cycles, cfg.max_terms, cfg.seed, index)};
    try {
        QuiverSet qs = quiver_set(p, cfg.budget, cfg.term_cap);
        r.en = qs.quivers.size();
        for (const Quiver& x : qs.quivers)
            r.key.push_back(degree_profile(x));
        std::sort(r.key.begin(), r.key.end());
    } catch (const Error&) {
        r.overrun = true;
    }
    return r;
}

std::vector<Cycle> sampling_cycles(const Quiver& q, std::size_t max_len)
{
    std::vector<Cycle> out;
    if (max_len < 3)
        return out;
    for (Cycle& c : cycles_up_to(q, max_len))
        if (c.size() >= 3)
            out.push_back(std::move(c));
    return out;
}

SamplingStats aggregate(const SamplingConfig& cfg, const std::vector<SampleResult>& results)
{
    SamplingStats s;
    s.seed = cfg.seed;
    s.samples = results.size();
    std::map<ClassKey, SetClass> classes;
    for (const SampleResult& r : results) {
        if (r.overrun) {
            ++s.overruns;
            continue;
        }
        ++s.histogram[r.en];
        SetClass& c = classes[r.key];
        ++c.count;
        c.en = r.en;
    }
    s.distinct_sets = classes.size();
    for (const auto& [key, c] : classes) {
        ++s.classes_by_en[c.en];
        s.top_sets.push_back(c);
    }
    std::stable_sort(s.top_sets.begin(), s.top_sets.end(),
                     [](const SetClass& a, const SetClass& b) { return a.count > b.count; });
    if (s.top_sets.size() > 5)
        s.top_sets.resize(5);
    return s;
}

} // namespace

SamplingStats sample_potentials_serial(const Quiver& q, const SamplingConfig& cfg)
{
    const std::vector<Cycle> cycles = sampling_cycles(q, cfg.max_len);
    std::vector<SampleResult> results(cfg.samples);
    for (std::size_t i = 0; i < cfg.samples; ++i)
        results[i] = run_sample(q, cycles, cfg, i);
    return aggregate(cfg, results);
}

SamplingStats sample_potentials(const Quiver& q, const SamplingConfig& cfg)
{
    const std::vector<Cycle> cycles = sampling_cycles(q, cfg.max_len);
    std::vector<SampleResult> results(cfg.samples);
    const long long n = static_cast<long long>(cfg.samples);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i)
        results[i] = run_sample(q, cycles, cfg, static_cast<std::uint64_t>(i));
    return aggregate(cfg, results);
}

} // namespace qp
