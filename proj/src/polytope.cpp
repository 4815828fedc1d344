#include "polyrec/polytope.hpp"

#include "polyrec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polyrec {

namespace {

using Wide = __int128;

Wide cross(const ExpVec& o, const ExpVec& a, const ExpVec& b) {
    return static_cast<Wide>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<Wide>(a[1] - o[1]) * (b[0] - o[0]);
}

Integer to_integer(Wide v) {
    // via decimal string to stay exact beyond 64 bits
    if (v == 0) return 0;
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return Integer(s);
}

Exponent igcd(Exponent a, Exponent b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void check_direction(const Polytope& p, std::span<const Exponent> u) {
    require(u.size() == p.dim, "direction has wrong dimension");
    require(std::any_of(u.begin(), u.end(), [](Exponent x) { return x != 0; }), "zero direction");
}

const std::vector<ExpVec>& ring16() {
    static const std::vector<ExpVec> dirs = {{1, 0},  {2, 1},   {1, 1},   {1, 2},  {0, 1},  {-1, 2},
                                             {-1, 1}, {-2, 1},  {-1, 0},  {-2, -1}, {-1, -1}, {-1, -2},
                                             {0, -1}, {1, -2},  {1, -1},  {2, -1}};
    return dirs;
}

}  // namespace

Polytope Polytope::hull(std::size_t dim, std::vector<ExpVec> points) {
    require(dim == 1 || dim == 2, "polytopes are supported in dimension 1 or 2");
    require(!points.empty(), "hull of an empty point set");
    for (const auto& p : points) require(p.size() == dim, "point has wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Polytope out{dim, {}};
    if (points.size() == 1) {
        out.vertices = std::move(points);
        return out;
    }
    if (dim == 1) {
        out.vertices = {points.front(), points.back()};
        return out;
    }
    // Andrew's monotone chain; strict turns only, so collinear points drop out.
    std::vector<ExpVec> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    out.vertices = std::move(h);
    return out;
}

Polytope newton_polytope(const LaurentPoly& p) {
    require(!p.is_zero(), "Newton polytope of the zero polynomial");
    require(p.var_count() >= 1 && p.var_count() <= 2, "Newton polytopes need r = 1 or 2; use support directions for r >= 3");
    std::vector<ExpVec> pts;
    pts.reserve(p.size());
    for (const auto& t : p.terms()) pts.push_back(t.exp);
    return Polytope::hull(p.var_count(), std::move(pts));
}

Rational support(const Polytope& p, std::span<const Exponent> u) {
    check_direction(p, u);
    Wide best = 0;
    bool first = true;
    for (const auto& v : p.vertices) {
        Wide s = 0;
        for (std::size_t i = 0; i < p.dim; ++i) s += static_cast<Wide>(u[i]) * v[i];
        if (first || s > best) best = s;
        first = false;
    }
    return Rational(to_integer(best));
}

Segment project(const Polytope& p, std::span<const Exponent> omega) {
    check_direction(p, omega);
    ExpVec neg(omega.begin(), omega.end());
    for (auto& x : neg) x = -x;
    return {-support(p, neg), support(p, omega)};
}

Integer boundary_count(const Polytope& p) {
    const auto& v = p.vertices;
    if (v.size() == 1) return 1;
    if (p.dim == 1) return 2;
    if (v.size() == 2) return 2;
    Integer b = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& c = v[(i + 1) % v.size()];
        b += Integer(static_cast<long>(igcd(c[0] - a[0], c[1] - a[1])));
    }
    return b;
}

Integer lattice_count(const Polytope& p) {
    const auto& v = p.vertices;
    if (v.size() == 1) return 1;
    if (p.dim == 1) return Integer(static_cast<long>(v[1][0] - v[0][0] + 1));
    if (v.size() == 2) return Integer(static_cast<long>(igcd(v[1][0] - v[0][0], v[1][1] - v[0][1]) + 1));
    Exponent ylo = v[0][1], yhi = v[0][1];
    for (const auto& q : v) {
        ylo = std::min(ylo, q[1]);
        yhi = std::max(yhi, q[1]);
    }
    Integer total = 0;
    for (Exponent y = ylo; y <= yhi; ++y) {
        bool any = false;
        Rational lo, hi;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            if (y < std::min(a[1], b[1]) || y > std::max(a[1], b[1])) continue;
            Rational x0, x1;
            if (a[1] == b[1]) {
                x0 = Rational(static_cast<long>(std::min(a[0], b[0])));
                x1 = Rational(static_cast<long>(std::max(a[0], b[0])));
            } else {
                x0 = x1 = Rational(static_cast<long>(a[0])) +
                          make_rational(Integer(static_cast<long>(y - a[1])) * (b[0] - a[0]),
                                        Integer(static_cast<long>(b[1] - a[1])));
            }
            if (!any || x0 < lo) lo = x0;
            if (!any || x1 > hi) hi = x1;
            any = true;
        }
        if (any) {
            Integer n = floor_of(hi) - ceil_of(lo) + 1;
            if (n > 0) total += n;
        }
    }
    return total;
}

Rational area(const Polytope& p) {
    const auto& v = p.vertices;
    if (p.dim == 1 || v.size() < 3) return 0;
    Wide twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        twice += static_cast<Wide>(a[0]) * b[1] - static_cast<Wide>(b[0]) * a[1];
    }
    return make_rational(to_integer(twice), 2);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    require(a.dim == b.dim, "Minkowski sum of polytopes of different dimension");
    std::vector<ExpVec> pts;
    pts.reserve(a.vertices.size() * b.vertices.size());
    for (const auto& x : a.vertices)
        for (const auto& y : b.vertices) {
            ExpVec s(a.dim);
            for (std::size_t i = 0; i < a.dim; ++i) s[i] = x[i] + y[i];
            pts.push_back(std::move(s));
        }
    return Polytope::hull(a.dim, std::move(pts));
}

std::vector<ExpVec> edge_normals(const Polytope& p) {
    std::vector<ExpVec> out;
    if (p.dim != 2 || p.vertices.size() < 2) return out;
    const auto& v = p.vertices;
    const std::size_t edges = v.size() == 2 ? 2 : v.size();
    for (std::size_t i = 0; i < edges; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        Exponent dx = b[0] - a[0], dy = b[1] - a[1];
        const Exponent g = igcd(dx, dy);
        out.push_back({dy / g, -dx / g});
    }
    return out;
}

bool support_equal(const Polytope& a, const Polytope& b) {
    if (a.dim != b.dim) return false;
    std::vector<ExpVec> dirs;
    if (a.dim == 1) {
        dirs = {{1}, {-1}};
    } else {
        dirs = ring16();
        for (const auto* p : {&a, &b})
            for (auto& n : edge_normals(*p)) dirs.push_back(std::move(n));
    }
    return std::all_of(dirs.begin(), dirs.end(), [&](const ExpVec& u) { return support(a, u) == support(b, u); });
}

std::string render_svg(std::span<const Polytope> frames, std::span<const std::int64_t> labels) {
    require(labels.size() == frames.size(), "one label per frame");
    constexpr int kCell = 12, kPad = 24, kGap = 30;
    Exponent xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    for (const auto& f : frames)
        for (const auto& v : f.vertices) {
            const Exponent x = v[0], y = f.dim == 2 ? v[1] : 0;
            xlo = first ? x : std::min(xlo, x);
            xhi = first ? x : std::max(xhi, x);
            ylo = first ? y : std::min(ylo, y);
            yhi = first ? y : std::max(yhi, y);
            first = false;
        }
    const long w = static_cast<long>(xhi - xlo) * kCell + 2 * kPad;
    const long h = static_cast<long>(yhi - ylo) * kCell + 2 * kPad;
    const long total_h = static_cast<long>(frames.size()) * (h + kGap);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << total_h << "\">\n";
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const long top = static_cast<long>(i) * (h + kGap);
        auto px = [&](Exponent x) { return kPad + static_cast<long>(x - xlo) * kCell; };
        auto py = [&](Exponent y) { return top + kGap + h - kPad - static_cast<long>(y - ylo) * kCell; };
        os << "<g>\n<text x=\"4\" y=\"" << top + 16 << "\" font-size=\"12\">n = " << labels[i] << "</text>\n";
        for (Exponent x = xlo; x <= xhi; ++x)
            for (Exponent y = ylo; y <= yhi; ++y)
                os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1\" fill=\"#bbb\"/>\n";
        os << "<polygon fill=\"#9cf\" fill-opacity=\"0.5\" stroke=\"#036\" points=\"";
        for (const auto& v : frames[i].vertices) os << px(v[0]) << "," << py(frames[i].dim == 2 ? v[1] : 0) << " ";
        os << "\"/>\n</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace polyrec
