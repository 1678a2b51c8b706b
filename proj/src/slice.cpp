#include "wallchamber/slice.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wallchamber {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 40.0;

// Screen positions of the three corners: p0 on top, p1 bottom left, p2 bottom right.
constexpr double kCorner[3][2] = {
    {kSize / 2, kMargin}, {kMargin, kSize - kMargin}, {kSize - kMargin, kSize - kMargin}};

std::vector<RatVec> corners(const SlicePlane& plane) {
    return {plane.p0, plane.p1, plane.p2};
}

// Rows of the pulled-back constraint: a . (u p0 + v p1 + w p2) for each a.
std::vector<RatVec> pull_back(const std::vector<IntVec>& rows, const SlicePlane& plane) {
    const auto ps = corners(plane);
    std::vector<RatVec> out;
    for (const auto& a : rows) {
        RatVec r;
        for (const auto& p : ps)
            r.push_back(dot(std::span<const Integer>(a), std::span<const Rational>(p)));
        out.push_back(std::move(r));
    }
    return out;
}

RatVec barycentric(const IntVec& ray) {
    Integer total = 0;
    for (const auto& x : ray)
        total += x;
    RatVec out;
    for (const auto& x : ray)
        out.emplace_back(Rational(x, total));
    for (auto& x : out)
        x.canonicalize();
    return out;
}

// Exact counterclockwise order of convex-position points around their centroid,
// in the (v, w) chart.
void sort_ccw(std::vector<RatVec>& pts) {
    Rational cv = 0, cw = 0;
    for (const auto& p : pts) {
        cv += p[1];
        cw += p[2];
    }
    cv /= static_cast<long>(pts.size());
    cw /= static_cast<long>(pts.size());
    auto half = [&](const RatVec& p) {
        Rational x = p[1] - cv, y = p[2] - cw;
        return (sgn(y) > 0 || (sgn(y) == 0 && sgn(x) > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        Rational cross = (a[1] - cv) * (b[2] - cw) - (a[2] - cw) * (b[1] - cv);
        return sgn(cross) > 0;
    });
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::pair<double, double> screen(const RatVec& bary) {
    double x = 0, y = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        double c = bary[k].get_d();
        x += c * kCorner[k][0];
        y += c * kCorner[k][1];
    }
    return {x, y};
}

std::string point_list(const std::vector<RatVec>& vertices) {
    std::string out;
    for (const auto& v : vertices) {
        auto [x, y] = screen(v);
        if (!out.empty())
            out += ' ';
        out += fmt(x) + "," + fmt(y);
    }
    return out;
}

std::string d_attr(const DimVector& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out += (i ? "," : "") + std::to_string(d[i]);
    return out;
}

nlohmann::ordered_json rational_strings(const RatVec& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : v)
        arr.push_back(to_string(x));
    return arr;
}

RatVec parse_rational_strings(const nlohmann::ordered_json& arr) {
    if (!arr.is_array())
        throw ParseError("slice sidecar: expected an array of rationals");
    RatVec out;
    for (const auto& x : arr) {
        if (!x.is_string())
            throw ParseError("slice sidecar: rationals must be strings");
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

} // namespace

SlicePlane default_plane(std::size_t n) {
    if (n != 3)
        throw PreconditionError("slice: the default plane needs exactly three vertices; pass --plane");
    return SlicePlane{rat_vec({1, 0, 0}), rat_vec({0, -1, 0}), rat_vec({0, 0, -1})};
}

void validate_plane(const SlicePlane& plane, std::size_t n) {
    for (const auto& p : corners(plane))
        if (p.size() != n)
            throw PreconditionError("slice: plane corner has length " + std::to_string(p.size()) + ", expected " +
                                    std::to_string(n));
    std::vector<RatVec> edges(2, RatVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        edges[0][i] = plane.p1[i] - plane.p0[i];
        edges[1][i] = plane.p2[i] - plane.p0[i];
    }
    if (rank(edges, n) != 2)
        throw PreconditionError("slice: plane corners are not affinely independent");
}

const char* to_string(PieceKind kind) {
    switch (kind) {
    case PieceKind::point:
        return "point";
    case PieceKind::segment:
        return "segment";
    case PieceKind::polygon:
        return "polygon";
    }
    return "point";
}

RatVec to_ambient(const SlicePlane& plane, const RatVec& bary) {
    if (bary.size() != 3)
        throw PreconditionError("slice: barycentric coordinates need three entries");
    const auto ps = corners(plane);
    RatVec out(ps[0].size(), Rational(0));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += bary[k] * ps[k][i];
    return out;
}

std::vector<SlicePiece> slice_walls(WallTable& table, const SlicePlane& plane, long degree_bound) {
    if (degree_bound < 1)
        throw PreconditionError("slice: degree bound must be positive");
    const std::size_t n = table.quiver().vertex_count();
    validate_plane(plane, n);
    table.sweep(degree_bound);

    std::vector<RatVec> orthant{rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1})};
    std::vector<SlicePiece> pieces;
    for (const auto& d : dimension_vectors_up_to(n, degree_bound)) {
        Cone wall = table.wall(d);
        auto ineqs = pull_back(wall.ineqs(), plane);
        ineqs.insert(ineqs.end(), orthant.begin(), orthant.end());
        Cone cut = Cone::from_constraints(3, ineqs, pull_back(wall.eqs(), plane));
        if (cut.is_zero())
            continue;
        if (!cut.strongly_convex())
            throw InternalError("slice: pulled-back wall is not pointed");
        SlicePiece piece{d, PieceKind::point, {}};
        for (const auto& r : cut.rays())
            piece.vertices.push_back(barycentric(r));
        switch (cut.dim()) {
        case 1:
            piece.kind = PieceKind::point;
            break;
        case 2:
            piece.kind = PieceKind::segment;
            break;
        default:
            piece.kind = PieceKind::polygon;
            sort_ccw(piece.vertices);
            break;
        }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::string slice_svg(const std::vector<SlicePiece>& pieces, const SlicePlane& plane, long degree_bound) {
    std::ostringstream os;
    const std::string caption = "Walls of total degree &lt;= " + std::to_string(degree_bound) +
                                " (truncated: higher-degree walls are not drawn)";
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kSize) << "\" height=\""
       << fmt(kSize + kMargin) << "\" viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize + kMargin) << "\">\n";
    os << "<title>" << caption << "</title>\n";
    os << "<text x=\"" << fmt(kSize / 2) << "\" y=\"" << fmt(kSize + kMargin / 2)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << caption << "</text>\n";

    std::vector<RatVec> frame{rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1})};
    os << "<polygon class=\"frame\" points=\"" << point_list(frame) << "\" fill=\"none\" stroke=\"#888888\"/>\n";
    const char* labels[3] = {"p0", "p1", "p2"};
    const auto ps = corners(plane);
    for (std::size_t k = 0; k < 3; ++k) {
        os << "<text class=\"corner\" x=\"" << fmt(kCorner[k][0]) << "\" y=\""
           << fmt(kCorner[k][1] + (k == 0 ? -10.0 : 20.0)) << "\" text-anchor=\"middle\" font-size=\"12\">"
           << labels[k] << " = (";
        for (std::size_t i = 0; i < ps[k].size(); ++i)
            os << (i ? "," : "") << to_string(ps[k][i]);
        os << ")</text>\n";
    }

    os << "<g class=\"walls\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" fill=\"#1f4e9c\" fill-opacity=\"0.25\">\n";
    for (const auto& p : pieces) {
        const std::string attr = "data-d=\"" + d_attr(p.d) + "\"";
        switch (p.kind) {
        case PieceKind::point: {
            auto [x, y] = screen(p.vertices[0]);
            os << "<circle " << attr << " cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n";
            break;
        }
        case PieceKind::segment: {
            auto [x1, y1] = screen(p.vertices[0]);
            auto [x2, y2] = screen(p.vertices[1]);
            os << "<line " << attr << " x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
               << "\" y2=\"" << fmt(y2) << "\"/>\n";
            break;
        }
        case PieceKind::polygon:
            os << "<polygon " << attr << " points=\"" << point_list(p.vertices) << "\"/>\n";
            break;
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

nlohmann::ordered_json slice_json(const std::vector<SlicePiece>& pieces, const SlicePlane& plane, long degree_bound) {
    nlohmann::ordered_json out;
    out["bound"] = degree_bound;
    auto corners_json = nlohmann::ordered_json::array();
    for (const auto& p : corners(plane))
        corners_json.push_back(rational_strings(p));
    out["plane"] = std::move(corners_json);
    auto walls = nlohmann::ordered_json::array();
    for (const auto& p : pieces) {
        nlohmann::ordered_json w;
        w["d"] = p.d.entries();
        w["kind"] = to_string(p.kind);
        auto verts = nlohmann::ordered_json::array();
        for (const auto& v : p.vertices)
            verts.push_back(rational_strings(v));
        w["vertices"] = std::move(verts);
        walls.push_back(std::move(w));
    }
    out["walls"] = std::move(walls);
    return out;
}

std::size_t check_slice_sidecar(WallTable& table, const nlohmann::ordered_json& sidecar) {
    try {
        const auto& planes = sidecar.at("plane");
        if (!planes.is_array() || planes.size() != 3)
            throw ParseError("slice sidecar: plane must list three corners");
        SlicePlane plane{parse_rational_strings(planes[0]), parse_rational_strings(planes[1]),
                         parse_rational_strings(planes[2])};
        validate_plane(plane, table.quiver().vertex_count());
        std::size_t failures = 0;
        for (const auto& w : sidecar.at("walls")) {
            DimVector d(w.at("d").get<std::vector<long>>());
            Cone wall = table.wall(d);
            for (const auto& v : w.at("vertices"))
                if (!wall.contains(std::span<const Rational>(to_ambient(plane, parse_rational_strings(v)))))
                    ++failures;
        }
        return failures;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("slice sidecar: ") + e.what());
    }
}

} // namespace wallchamber
