#include "qp/error.hpp"
#include "qp/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

// Regular-triangle construction of the G-Hilb triangulation.
//
// From each corner e_i we take the chain of lattice points on the hull of the
// remaining points facing e_i. Every interior chain point P_j carries a
// self-intersection number b_j from P_{j-1} + P_{j+1} = b_j P_j + (2 - b_j) e_i,
// and starts a line pointing away from e_i. A line at its k-th point has
// strength b minus the number of lines from other corners met at earlier
// points; it stops at the first point where a line from another corner is at
// least as strong. Line extents are solved as a fixpoint.

namespace qp {

namespace {

using P3 = Point;

P3 add(const P3& a, const P3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
bool on_boundary(const P3& p) { return p[0] == 0 || p[1] == 0 || p[2] == 0; }
bool nonnegative(const P3& p) { return p[0] >= 0 && p[1] >= 0 && p[2] >= 0; }

P3 primitive(const P3& d)
{
    long long g = std::gcd(std::gcd(std::llabs(d[0]), std::llabs(d[1])), std::llabs(d[2]));
    return {d[0] / g, d[1] / g, d[2] / g};
}

long long cross2(const std::array<long long, 2>& o, const std::array<long long, 2>& a,
                 const std::array<long long, 2>& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Error champions(const std::string& detail)
{
    return algorithmic("MeetingOfChampions", detail);
}

// Hull chain facing corner i, from the side where the second coordinate
// vanishes to the side where the first does (coordinates other than i).
std::vector<P3> corner_chain(const std::vector<P3>& pts, int i)
{
    int j0 = (i + 1) % 3, j1 = (i + 2) % 3;
    if (j0 > j1)
        std::swap(j0, j1);
    using P2 = std::array<long long, 2>;
    std::map<P2, P3> back;
    for (std::size_t n = 0; n < pts.size(); ++n)
        if (static_cast<int>(n) != i)
            back[{pts[n][j0], pts[n][j1]}] = pts[n];

    std::optional<P2> start, end;
    for (const auto& [q, p] : back) {
        if (q[1] == 0 && (!start || q[0] < (*start)[0]))
            start = q;
        if (q[0] == 0 && (!end || q[1] < (*end)[1]))
            end = q;
    }
    std::vector<P3> chain{back.at(*start)};
    P2 cur = *start;
    while (cur != *end) {
        std::optional<P2> best;
        for (const auto& [q, p] : back) {
            if (q == cur || q[1] * cur[0] - q[0] * cur[1] <= 0)
                continue;
            if (!best) {
                best = q;
                continue;
            }
            long long c = cross2(cur, *best, q);
            auto l1 = [&](const P2& x) { return std::llabs(x[0] - cur[0]) + std::llabs(x[1] - cur[1]); };
            if (c > 0 || (c == 0 && l1(q) < l1(*best)))
                best = q;
        }
        if (!best)
            throw champions("corner chain is not closed");
        chain.push_back(back.at(*best));
        cur = *best;
    }
    return chain;
}

struct Line {
    int corner;
    long long b;
    std::vector<P3> path;
};

class LineSystem {
public:
    explicit LineSystem(std::vector<Line> lines) : lines_(std::move(lines)) {}

    std::size_t size() const { return lines_.size(); }
    const Line& operator[](std::size_t i) const { return lines_[i]; }

    // Where line L stops when the others occupy the prefixes given by ext.
    std::size_t stop(const std::vector<std::size_t>& ext, std::size_t L, std::size_t cap) const
    {
        auto occ = occupancy(ext);
        const Line& l = lines_[L];
        std::size_t k = 0;
        while (k + 1 < l.path.size()) {
            long long vl = value(occ, L, k);
            bool blocked = false;
            auto it = occ.find(l.path[k]);
            if (it != occ.end())
                for (std::size_t M : it->second) {
                    if (lines_[M].corner == l.corner)
                        continue;
                    if (value(occ, M, index_of(M, l.path[k])) >= vl) {
                        blocked = true;
                        break;
                    }
                }
            if (blocked)
                break;
            ++k;
            if (k > cap)
                break;
        }
        return k;
    }

    bool is_fixpoint(const std::vector<std::size_t>& ext) const
    {
        for (std::size_t L = 0; L < lines_.size(); ++L)
            if (stop(ext, L, lines_[L].path.size()) != ext[L])
                return false;
        return true;
    }

private:
    using Occupancy = std::map<P3, std::vector<std::size_t>>;

    Occupancy occupancy(const std::vector<std::size_t>& ext) const
    {
        Occupancy occ;
        for (std::size_t M = 0; M < lines_.size(); ++M)
            for (std::size_t k = 0; k <= ext[M]; ++k)
                occ[lines_[M].path[k]].push_back(M);
        return occ;
    }

    std::size_t index_of(std::size_t M, const P3& p) const
    {
        const auto& path = lines_[M].path;
        return static_cast<std::size_t>(std::find(path.begin(), path.end(), p) - path.begin());
    }

    long long value(const Occupancy& occ, std::size_t L, std::size_t k) const
    {
        long long v = lines_[L].b;
        for (std::size_t j = 0; j < k; ++j) {
            auto it = occ.find(lines_[L].path[j]);
            if (it == occ.end())
                continue;
            for (std::size_t M : it->second)
                if (lines_[M].corner != lines_[L].corner)
                    --v;
        }
        return v;
    }

    std::vector<Line> lines_;
};

std::vector<std::size_t> solve_extents(const LineSystem& sys)
{
    const std::size_t n = sys.size();
    std::vector<std::size_t> ext(n, 0);
    for (int it = 0; it < 1000; ++it) {
        bool changed = false;
        for (std::size_t L = 0; L < n; ++L) {
            std::size_t k = sys.stop(ext, L, ext[L]);
            if (k != ext[L]) {
                ext[L] = k;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    if (sys.is_fixpoint(ext))
        return ext;

    // Growing one step at a time can cycle; fall back to the whole product.
    constexpr long long limit = 5'000'000;
    long long total = 1;
    for (std::size_t L = 0; L < n; ++L) {
        total *= static_cast<long long>(sys[L].path.size());
        if (total > limit)
            throw champions("line extents do not settle");
    }
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> cur(n, 0);
    for (;;) {
        if (sys.is_fixpoint(cur))
            found.push_back(cur);
        std::size_t L = 0;
        while (L < n && ++cur[L] == sys[L].path.size())
            cur[L++] = 0;
        if (L == n)
            break;
    }
    if (found.size() != 1)
        throw champions(std::to_string(found.size()) + " consistent line configurations");
    return found.front();
}

using Seg = std::pair<P3, P3>;

// Faces of the planar graph on the segments, outer face excluded.
std::vector<std::vector<P3>> faces(const std::set<Seg>& directed)
{
    std::map<P3, std::vector<P3>> adj;
    for (const auto& [p, q] : directed)
        adj[p].push_back(q);
    // Angular order around p; the affine chart (x, y) has positive orientation.
    for (auto& [p, nb] : adj) {
        auto half = [&](const P3& q) {
            long long x = q[0] - p[0], y = q[1] - p[1];
            return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
        };
        std::sort(nb.begin(), nb.end(), [&](const P3& a, const P3& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb)
                return ha < hb;
            return (a[0] - p[0]) * (b[1] - p[1]) - (a[1] - p[1]) * (b[0] - p[0]) > 0;
        });
    }
    std::set<Seg> used;
    std::vector<std::vector<P3>> out;
    for (const Seg& s : directed) {
        if (used.count(s))
            continue;
        std::vector<P3> face;
        P3 a = s.first, b = s.second;
        while (!used.count({a, b})) {
            used.insert({a, b});
            face.push_back(a);
            const auto& nb = adj.at(b);
            auto pos = std::find(nb.begin(), nb.end(), a) - nb.begin();
            const P3& c = nb[(pos + nb.size() - 1) % nb.size()];
            a = b;
            b = c;
        }
        long long area = 0;
        for (std::size_t i = 0; i < face.size(); ++i) {
            const P3 &u = face[i], &v = face[(i + 1) % face.size()];
            area += u[0] * v[1] - v[0] * u[1];
        }
        if (area > 0)
            out.push_back(std::move(face));
    }
    return out;
}

} // namespace

Triangulation craw_reid(const GroupData& g)
{
    const long long r = g.r();
    const std::vector<P3> pts = junior_points(g);
    const std::set<P3> members(pts.begin(), pts.end());

    std::vector<Line> lines;
    for (int i = 0; i < 3; ++i) {
        const P3& e = pts[i];
        std::vector<P3> ch = corner_chain(pts, i);
        for (std::size_t j = 1; j + 1 < ch.size(); ++j) {
            const P3& pj = ch[j];
            P3 s = sub(add(ch[j - 1], ch[j + 1]), add(e, e));
            P3 d = sub(pj, e);
            std::optional<long long> b;
            for (int k = 0; k < 3; ++k)
                if (d[k] != 0) {
                    b = s[k] / d[k];
                    break;
                }
            for (int k = 0; k < 3; ++k)
                if (!b || s[k] != *b * d[k])
                    throw champions("corner chain has no continued fraction step");
            P3 step = primitive(d);
            Line line{i, *b, {pj}};
            while (!on_boundary(line.path.back())) {
                P3 nx = add(line.path.back(), step);
                while (nonnegative(nx) && !members.count(nx))
                    nx = add(nx, step);
                if (!nonnegative(nx))
                    break;
                line.path.push_back(nx);
            }
            lines.push_back(std::move(line));
        }
    }
    LineSystem sys(std::move(lines));
    std::vector<std::size_t> ext = solve_extents(sys);

    std::set<Seg> directed;
    auto segment = [&](const P3& p, const P3& q) {
        directed.insert({p, q});
        directed.insert({q, p});
    };
    for (std::size_t L = 0; L < sys.size(); ++L) {
        segment(pts[sys[L].corner], sys[L].path[0]);
        for (std::size_t k = 0; k < ext[L]; ++k)
            segment(sys[L].path[k], sys[L].path[k + 1]);
    }
    for (int j = 0; j < 3; ++j) {
        std::vector<P3> side;
        for (const P3& p : pts)
            if (p[j] == 0)
                side.push_back(p);
        int k = (j + 1) % 3;
        std::sort(side.begin(), side.end(), [&](const P3& a, const P3& b) { return a[k] < b[k]; });
        for (std::size_t n = 0; n + 1 < side.size(); ++n)
            segment(side[n], side[n + 1]);
    }

    std::map<P3, int> index;
    for (int n = 0; n < static_cast<int>(pts.size()); ++n)
        index[pts[n]] = n;
    auto lattice_length = [&](const P3& a, const P3& b) {
        P3 d = sub(b, a);
        long long gg = std::gcd(std::gcd(std::llabs(d[0]), std::llabs(d[1])), std::llabs(d[2]));
        long long n = 0;
        for (long long t = 1; t <= gg; ++t)
            if (members.count({a[0] + d[0] * t / gg, a[1] + d[1] * t / gg, a[2] + d[2] * t / gg}))
                ++n;
        return n;
    };

    Triangulation out;
    out.r = static_cast<int>(r);
    out.points = pts;
    for (const auto& f : faces(directed)) {
        std::vector<P3> corners;
        const std::size_t n = f.size();
        for (std::size_t i = 0; i < n; ++i) {
            const P3 &p0 = f[(i + n - 1) % n], &p1 = f[i], &p2 = f[(i + 1) % n];
            if ((p1[0] - p0[0]) * (p2[1] - p1[1]) - (p1[1] - p0[1]) * (p2[0] - p1[0]) != 0)
                corners.push_back(p1);
        }
        if (corners.size() != 3)
            throw champions("region with " + std::to_string(corners.size()) + " corners");
        const P3 &A = corners[0], &B = corners[1], &C = corners[2];
        long long l = lattice_length(A, B);
        if (lattice_length(B, C) != l || lattice_length(C, A) != l)
            throw champions("region is not a regular triangle");
        long long area = std::llabs((B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0]));
        if (area != l * l * r)
            throw champions("region is not a regular triangle");
        auto at = [&](long long x, long long y) {
            P3 p{A[0] + ((B[0] - A[0]) * x + (C[0] - A[0]) * y) / l,
                 A[1] + ((B[1] - A[1]) * x + (C[1] - A[1]) * y) / l,
                 A[2] + ((B[2] - A[2]) * x + (C[2] - A[2]) * y) / l};
            auto it = index.find(p);
            if (it == index.end())
                throw champions("regular triangle subdivision leaves the lattice");
            return it->second;
        };
        for (long long i = 0; i < l; ++i)
            for (long long j = 0; i + j < l; ++j) {
                Triangle t1{at(i, j), at(i + 1, j), at(i, j + 1)};
                out.triangles.push_back(t1);
                if (i + j < l - 1)
                    out.triangles.push_back(Triangle{at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)});
            }
    }
    out.normalize();
    if (!validate(out).empty())
        throw champions("regular triangles do not tile the simplex");
    return out;
}

} // namespace qp
