#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace qp {

class GroupData {
public:
    // Throws InvalidGroup unless a, b, c are positive with gcd 1.
    GroupData(int a, int b, int c);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int c() const noexcept { return c_; }
    int r() const noexcept { return a_ + b_ + c_; }

private:
    int a_, b_, c_;
};

// Lattice point of the junior simplex, stored as numerators over r.
using Point = std::array<long long, 3>;
using Triangle = std::array<int, 3>;

struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

struct Triangulation {
    int r = 0;
    std::vector<Point> points;
    std::vector<Triangle> triangles; // each sorted, list sorted

    void normalize();
    bool operator==(const Triangulation&) const = default;
};

struct QuadRelation {
    int alpha = 0, beta = 0;
    bool operator==(const QuadRelation&) const = default;
    int loops() const { return (alpha > beta ? alpha : beta) - 1; }
};

// The quadrilateral around an interior edge {v1, v3}: v2 + v4 = alpha*v1 + beta*v3.
struct Quad {
    Edge edge;
    int v2 = 0, v4 = 0;
    QuadRelation rel;
};

struct Violation {
    std::string kind;
    std::string detail;
};

std::vector<Point> junior_points(const GroupData& g);

Triangulation seed_triangulation(const GroupData& g);
Triangulation seed_triangulation(int r, const std::vector<Point>& points);

Triangulation craw_reid(const GroupData& g);

std::vector<Edge> all_edges(const Triangulation& t);
std::vector<Edge> interior_edges(const Triangulation& t);
bool is_boundary(const Triangulation& t, const Edge& e);

Quad quad(const Triangulation& t, const Edge& e);
QuadRelation quad_relation(const Triangulation& t, const Edge& e);
bool flippable(const Triangulation& t, const Edge& e);
Triangulation flip(const Triangulation& t, const Edge& e);

std::vector<Violation> validate(const Triangulation& t);

} // namespace qp
