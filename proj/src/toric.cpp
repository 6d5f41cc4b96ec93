#include "qp/toric.hpp"
#include "qp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace qp {

namespace {

long long orient(const Point& a, const Point& b, const Point& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

long long det3(const Point& u, const Point& v, const Point& w)
{
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Triangle sorted_triangle(int a, int b, int c)
{
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

std::map<Edge, std::vector<int>> edge_map(const Triangulation& t)
{
    std::map<Edge, std::vector<int>> m;
    for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
        const Triangle& tr = t.triangles[i];
        m[Edge(tr[0], tr[1])].push_back(i);
        m[Edge(tr[0], tr[2])].push_back(i);
        m[Edge(tr[1], tr[2])].push_back(i);
    }
    return m;
}

std::string edge_name(const Edge& e)
{
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

int opposite(const Triangle& tr, const Edge& e)
{
    for (int x : tr)
        if (x != e.u && x != e.v)
            return x;
    return -1;
}

// Subgroup of (Z/r)^3 generated by the points, or nullopt once it outgrows r.
std::optional<std::set<Point>> generated_group(long long r, const std::vector<Point>& points)
{
    std::set<Point> group{{0, 0, 0}};
    std::vector<Point> frontier{{0, 0, 0}};
    while (!frontier.empty()) {
        Point x = frontier.back();
        frontier.pop_back();
        for (const Point& p : points) {
            Point y{(x[0] + p[0]) % r, (x[1] + p[1]) % r, (x[2] + p[2]) % r};
            if (group.insert(y).second) {
                if (static_cast<long long>(group.size()) > r)
                    return std::nullopt;
                frontier.push_back(y);
            }
        }
    }
    return group;
}

} // namespace

GroupData::GroupData(int a, int b, int c) : a_(a), b_(b), c_(c)
{
    if (a <= 0 || b <= 0 || c <= 0)
        throw invalid("InvalidGroup", "weights must be positive");
    if (std::gcd(std::gcd(a, b), c) != 1)
        throw invalid("InvalidGroup", "weights must have gcd 1");
}

void Triangulation::normalize()
{
    for (Triangle& tr : triangles)
        std::sort(tr.begin(), tr.end());
    std::sort(triangles.begin(), triangles.end());
}

std::vector<Point> junior_points(const GroupData& g)
{
    const long long r = g.r();
    std::vector<Point> out{{r, 0, 0}, {0, r, 0}, {0, 0, r}};
    std::set<Point> inner;
    for (long long i = 1; i < r; ++i) {
        Point p{i * g.a() % r, i * g.b() % r, i * g.c() % r};
        if (p[0] + p[1] + p[2] == r)
            inner.insert(p);
    }
    out.insert(out.end(), inner.begin(), inner.end());
    return out;
}

Triangulation seed_triangulation(const GroupData& g)
{
    return seed_triangulation(g.r(), junior_points(g));
}

Triangulation seed_triangulation(int r, const std::vector<Point>& points)
{
    Triangulation t;
    t.r = r;
    t.points = points;
    std::vector<Triangle> tris{{0, 1, 2}};
    for (int p = 3; p < static_cast<int>(points.size()); ++p) {
        const Point& x = points[p];
        std::vector<Triangle> next;
        for (const Triangle& tr : tris) {
            const Point &a = points[tr[0]], &b = points[tr[1]], &c = points[tr[2]];
            long long s = orient(a, b, c) > 0 ? 1 : -1;
            long long o[3] = {s * orient(a, b, x), s * orient(b, c, x), s * orient(c, a, x)};
            if (o[0] < 0 || o[1] < 0 || o[2] < 0) {
                next.push_back(tr);
                continue;
            }
            // x is inside or on a side: fan out from x, skipping the side it lies on
            const int side[3][2] = {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}};
            for (int j = 0; j < 3; ++j)
                if (o[j] != 0)
                    next.push_back(sorted_triangle(side[j][0], side[j][1], p));
        }
        tris = std::move(next);
    }
    t.triangles = std::move(tris);
    t.normalize();
    return t;
}

std::vector<Edge> all_edges(const Triangulation& t)
{
    std::vector<Edge> out;
    for (const auto& [e, ts] : edge_map(t))
        out.push_back(e);
    return out;
}

bool is_boundary(const Triangulation& t, const Edge& e)
{
    const Point &p = t.points.at(e.u), &q = t.points.at(e.v);
    for (int j = 0; j < 3; ++j)
        if (p[j] == 0 && q[j] == 0)
            return true;
    return false;
}

std::vector<Edge> interior_edges(const Triangulation& t)
{
    std::vector<Edge> out;
    for (const auto& [e, ts] : edge_map(t))
        if (!is_boundary(t, e))
            out.push_back(e);
    return out;
}

Quad quad(const Triangulation& t, const Edge& e)
{
    auto m = edge_map(t);
    auto it = m.find(e);
    if (it == m.end())
        throw invalid("UnknownEdge", "edge " + edge_name(e) + " is not in the triangulation");
    if (is_boundary(t, e) || it->second.size() != 2)
        throw invalid("BoundaryEdge", "edge " + edge_name(e) + " lies on the boundary");
    Quad out;
    out.edge = e;
    out.v2 = opposite(t.triangles[it->second[0]], e);
    out.v4 = opposite(t.triangles[it->second[1]], e);
    const Point &v1 = t.points[e.u], &v3 = t.points[e.v];
    const Point &v2 = t.points[out.v2], &v4 = t.points[out.v4];
    // v2 + v4 - 2*v3 = alpha*(v1 - v3)
    std::optional<long long> alpha;
    for (int j = 0; j < 3 && !alpha; ++j) {
        long long d = v1[j] - v3[j];
        if (d != 0) {
            long long n = v2[j] + v4[j] - 2 * v3[j];
            if (n % d != 0)
                throw invalid("InvalidTriangulation", "quadrilateral at " + edge_name(e) + " is not unimodular");
            alpha = n / d;
        }
    }
    for (int j = 0; j < 3; ++j)
        if (v2[j] + v4[j] != *alpha * v1[j] + (2 - *alpha) * v3[j])
            throw invalid("InvalidTriangulation", "quadrilateral at " + edge_name(e) + " is not unimodular");
    out.rel = {static_cast<int>(*alpha), static_cast<int>(2 - *alpha)};
    return out;
}

QuadRelation quad_relation(const Triangulation& t, const Edge& e)
{
    return quad(t, e).rel;
}

bool flippable(const Triangulation& t, const Edge& e)
{
    return quad_relation(t, e) == QuadRelation{1, 1};
}

Triangulation flip(const Triangulation& t, const Edge& e)
{
    Quad qd = quad(t, e);
    if (!(qd.rel == QuadRelation{1, 1}))
        throw invalid("NotFlippable", "edge " + edge_name(e) + " has relation (" + std::to_string(qd.rel.alpha) +
                                          "," + std::to_string(qd.rel.beta) + ")");
    Triangulation out;
    out.r = t.r;
    out.points = t.points;
    for (const Triangle& tr : t.triangles) {
        bool has = std::count(tr.begin(), tr.end(), e.u) && std::count(tr.begin(), tr.end(), e.v);
        if (!has)
            out.triangles.push_back(tr);
    }
    out.triangles.push_back(sorted_triangle(e.u, qd.v2, qd.v4));
    out.triangles.push_back(sorted_triangle(e.v, qd.v2, qd.v4));
    out.normalize();
    return out;
}

std::vector<Violation> validate(const Triangulation& t)
{
    std::vector<Violation> out;
    const long long r = t.r;
    const int n = static_cast<int>(t.points.size());
    if (r <= 0) {
        out.push_back({"InvalidPoint", "r must be positive"});
        return out;
    }
    std::set<Point> seen;
    for (int i = 0; i < n; ++i) {
        const Point& p = t.points[i];
        if (p[0] < 0 || p[1] < 0 || p[2] < 0 || p[0] + p[1] + p[2] != r)
            out.push_back({"InvalidPoint", "point " + std::to_string(i) + " is not in the junior simplex"});
        if (!seen.insert(p).second)
            out.push_back({"InvalidPoint", "point " + std::to_string(i) + " is repeated"});
    }
    if (!out.empty())
        return out;

    auto group = generated_group(r, t.points);
    if (!group) {
        out.push_back({"InvalidPoint", "points do not lie in a group of order " + std::to_string(r)});
        return out;
    }
    if (static_cast<long long>(group->size()) < r)
        out.push_back({"NotFull", "points generate a group of order " + std::to_string(group->size()) +
                                      ", expected " + std::to_string(r)});
    else
        for (const Point& g : *group)
            if (g[0] + g[1] + g[2] == r && !seen.count(g))
                out.push_back({"NotFull", "lattice point (" + std::to_string(g[0]) + "," + std::to_string(g[1]) +
                                              "," + std::to_string(g[2]) + ")/" + std::to_string(r) +
                                              " is missing"});

    long long area = 0;
    std::vector<bool> used(n, false);
    for (const Triangle& tr : t.triangles) {
        std::string name = "triangle [" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                           std::to_string(tr[2]) + "]";
        if (tr[0] < 0 || tr[1] < 0 || tr[2] < 0 || tr[0] >= n || tr[1] >= n || tr[2] >= n ||
            tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) {
            out.push_back({"InvalidTriangle", name});
            return out;
        }
        long long d = det3(t.points[tr[0]], t.points[tr[1]], t.points[tr[2]]);
        d = d < 0 ? -d : d;
        area += d;
        if (d != r * r)
            out.push_back({"NotUnimodular", name + " has normalized area " + std::to_string(d / r) + "/" +
                                                std::to_string(r)});
        for (int x : tr)
            used[x] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!used[i])
            out.push_back({"NotFull", "point " + std::to_string(i) + " is not a vertex"});
    if (static_cast<long long>(t.triangles.size()) != r)
        out.push_back({"WrongCount", std::to_string(t.triangles.size()) + " triangles, expected " + std::to_string(r)});
    if (area != r * r * r)
        out.push_back({"NotTiling", "total area " + std::to_string(area) + ", expected " + std::to_string(r * r * r)});

    auto m = edge_map(t);
    for (const auto& [e, ts] : m) {
        if (ts.size() > 2) {
            out.push_back({"NotTiling", "edge " + edge_name(e) + " is shared by more than two triangles"});
        } else if (ts.size() == 1 && !is_boundary(t, e)) {
            out.push_back({"NotTiling", "interior edge " + edge_name(e) + " borders a gap"});
        } else if (ts.size() == 2) {
            const Point &a = t.points[e.u], &b = t.points[e.v];
            long long s1 = orient(a, b, t.points[opposite(t.triangles[ts[0]], e)]);
            long long s2 = orient(a, b, t.points[opposite(t.triangles[ts[1]], e)]);
            if ((s1 > 0) == (s2 > 0))
                out.push_back({"NotTiling", "triangles at edge " + edge_name(e) + " overlap"});
        }
    }
    long long euler = n - static_cast<long long>(m.size()) + static_cast<long long>(t.triangles.size()) + 1;
    if (euler != 2)
        out.push_back({"Euler", "V - E + F = " + std::to_string(euler)});
    return out;
}

} // namespace qp
