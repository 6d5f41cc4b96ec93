#include "qp/potential.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qp {

void Potential::add_term(std::vector<ArrowId> word, const Rational& coef)
{
    if (word.empty())
        throw invalid("InvalidCycle", "empty cycle");
    if (coef == 0)
        return;
    Cycle c = canonical_rotation(std::move(word));
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(std::move(c), coef);
        return;
    }
    it->second += coef;
    if (it->second == 0)
        terms_.erase(it);
}

Rational Potential::coefficient(const Cycle& c) const
{
    auto it = terms_.find(canonical_rotation(c));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Cycle> Potential::support() const
{
    std::vector<Cycle> out;
    out.reserve(terms_.size());
    for (const auto& [c, coef] : terms_)
        out.push_back(c);
    return out;
}

bool is_reduced(const Potential& w)
{
    return std::none_of(w.terms().begin(), w.terms().end(),
                        [](const auto& t) { return t.first.size() == 2; });
}

std::vector<NodeId> node_walk(const Quiver& q, const Cycle& c)
{
    std::vector<NodeId> out;
    out.reserve(c.size());
    for (ArrowId a : c)
        out.push_back(q.arrow(a).tail);
    return out;
}

void check_potential(const Quiver& q, const Potential& w)
{
    for (const auto& [c, coef] : w.terms()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Arrow& a = q.arrow(c[i]);
            const Arrow& b = q.arrow(c[(i + 1) % c.size()]);
            if (a.head != b.tail)
                throw invalid("InvalidCycle", "potential term is not a closed walk");
        }
    }
}

std::map<Path, Rational> cyclic_derivative(const Quiver& q, const Potential& w, ArrowId a)
{
    q.arrow(a);
    std::map<Path, Rational> out;
    for (const auto& [c, coef] : w.terms()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] != a)
                continue;
            Path p;
            for (std::size_t j = 1; j < c.size(); ++j)
                p.push_back(c[(i + j) % c.size()]);
            auto& slot = out[p];
            slot += coef;
            if (slot == 0)
                out.erase(p);
        }
    }
    return out;
}

QwP premutate(const QwP& p, NodeId k, const MutationOptions& opts)
{
    const Quiver& q = p.quiver;
    q.require_node(k);
    if (q.has_loop(k))
        throw invalid("NodeHasLoop", "node " + std::to_string(k) + " carries a loop");

    const std::vector<ArrowId> ins = q.arrows_into(k);
    const std::vector<ArrowId> outs = q.arrows_out_of(k);

    Quiver nq(q.nodes());
    for (const Arrow& a : q.arrows())
        if (a.tail != k && a.head != k)
            nq.add_arrow(a.id, a.tail, a.head);
    // keep fresh ids above everything the old quiver used
    ArrowId next = q.next_id();
    auto fresh = [&](NodeId t, NodeId h) {
        nq.add_arrow(next, t, h);
        return next++;
    };

    std::map<ArrowId, ArrowId> star;
    for (ArrowId a : ins)
        star[a] = fresh(k, q.arrow(a).tail);
    for (ArrowId b : outs)
        star[b] = fresh(q.arrow(b).head, k);

    std::map<std::pair<ArrowId, ArrowId>, ArrowId> composite;
    for (ArrowId a : ins)
        for (ArrowId b : outs) {
            NodeId t = q.arrow(a).tail, h = q.arrow(b).head;
            if (!opts.loop_composites && t == h)
                continue;
            composite[{a, b}] = fresh(t, h);
        }

    Potential nw;
    for (const auto& [c, coef] : p.potential.terms()) {
        std::size_t start = 0;
        while (start < c.size() && q.arrow(c[start]).tail == k)
            ++start;
        if (start == c.size())
            throw invalid("InvalidCycle", "term lies entirely at the mutated node");
        std::vector<ArrowId> rot(c.begin() + start, c.end());
        rot.insert(rot.end(), c.begin(), c.begin() + start);

        std::vector<ArrowId> word;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (q.arrow(rot[i]).head != k) {
                word.push_back(rot[i]);
                continue;
            }
            auto it = composite.find({rot[i], rot[i + 1]});
            if (it == composite.end())
                throw invalid("TwoCycleThroughNode",
                              "a potential term runs through a 2-cycle at node " + std::to_string(k));
            word.push_back(it->second);
            ++i;
        }
        nw.add_term(std::move(word), coef);
    }
    for (const auto& [ab, y] : composite)
        nw.add_term({star.at(ab.second), star.at(ab.first), y}, 1);
    return {std::move(nq), std::move(nw)};
}

namespace {

std::vector<ArrowId> rotate_to(const Cycle& c, ArrowId a)
{
    auto it = std::find(c.begin(), c.end(), a);
    std::vector<ArrowId> out(it, c.end());
    out.insert(out.end(), c.begin(), it);
    return out;
}

std::string describe(const Quiver& q, const Cycle& c)
{
    std::ostringstream os;
    bool first = true;
    for (ArrowId a : c) {
        const Arrow& x = q.arrow(a);
        os << (first ? "" : " ") << 'x' << x.tail << ',' << x.head;
        first = false;
    }
    return os.str();
}

} // namespace

QwP reduce(const QwP& p)
{
    Quiver q = p.quiver;
    Potential w = p.potential;
    for (;;) {
        std::vector<Cycle> quads;
        for (const auto& [c, coef] : w.terms())
            if (c.size() == 2)
                quads.push_back(c);
        if (quads.empty())
            return {std::move(q), std::move(w)};

        bool done = false;
        std::optional<NonReducible::Site> first_bad;
        for (const Cycle& quad : quads) {
            const ArrowId u = quad[0], v = quad[1];
            const Rational c = w.coefficient(quad);

            const Cycle* blocker = nullptr;
            for (const auto& [t, coef] : w.terms()) {
                if (t == quad)
                    continue;
                auto n = std::count_if(t.begin(), t.end(), [&](ArrowId x) { return x == u || x == v; });
                if (n >= 2) {
                    blocker = &t;
                    break;
                }
            }
            if (blocker) {
                if (!first_bad)
                    first_bad = NonReducible::Site{quad, *blocker, node_walk(q, quad), node_walk(q, *blocker)};
                continue;
            }

            Potential next;
            std::vector<std::pair<Path, Rational>> with_u, with_v;
            for (const auto& [t, coef] : w.terms()) {
                if (t == quad)
                    continue;
                bool has_u = std::find(t.begin(), t.end(), u) != t.end();
                bool has_v = std::find(t.begin(), t.end(), v) != t.end();
                if (has_u) {
                    auto r = rotate_to(t, u);
                    with_u.emplace_back(Path(r.begin() + 1, r.end()), coef);
                } else if (has_v) {
                    auto r = rotate_to(t, v);
                    with_v.emplace_back(Path(r.begin() + 1, r.end()), coef);
                } else {
                    next.add_term(t, coef);
                }
            }
            if (u == v) {
                // c*u^2 + u*A: completing the square gives -A^2/(4c)
                for (const auto& [a1, c1] : with_u)
                    for (const auto& [a2, c2] : with_u) {
                        Path word = a1;
                        word.insert(word.end(), a2.begin(), a2.end());
                        next.add_term(std::move(word), -c1 * c2 / (4 * c));
                    }
                q.remove_arrow(u);
            } else {
                // c*uv + u*A + v*B: u = -B/c, v = -A/c leaves -AB/c
                for (const auto& [a, ca] : with_u)
                    for (const auto& [b, cb] : with_v) {
                        Path word = a;
                        word.insert(word.end(), b.begin(), b.end());
                        next.add_term(std::move(word), -ca * cb / c);
                    }
                q.remove_arrow(u);
                q.remove_arrow(v);
            }
            w = std::move(next);
            done = true;
            break;
        }
        if (!done) {
            std::string detail = "quadratic term " + describe(q, first_bad->quadratic) +
                                 " shares its arrows with " + describe(q, first_bad->blocker);
            throw NonReducible(std::move(*first_bad), detail);
        }
    }
}

QwP qwp_mutate(const QwP& p, NodeId k, const MutationOptions& opts)
{
    return reduce(premutate(p, k, opts));
}

} // namespace qp
