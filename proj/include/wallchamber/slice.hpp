#pragma once

#include "wallchamber/walls.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wallchamber {

/// Affine triangle {u p0 + v p1 + w p2 : u, v, w >= 0, u + v + w = 1}.
struct SlicePlane {
    RatVec p0, p1, p2;
};

/// p0 = e1, p1 = -e2, p2 = -e3. Only defined for three vertices.
SlicePlane default_plane(std::size_t n);

/// Throws PreconditionError unless the corners have length n and are
/// affinely independent.
void validate_plane(const SlicePlane& plane, std::size_t n);

enum class PieceKind { point, segment, polygon };

const char* to_string(PieceKind kind);

/// A wall meeting the triangle. Vertices are barycentric (u, v, w); polygon
/// vertices run counterclockwise in the (v, w) chart.
struct SlicePiece {
    DimVector d;
    PieceKind kind;
    std::vector<RatVec> vertices;
};

/// Every wall of total degree <= degree_bound that meets the triangle, in
/// (degree, lex) order of d.
std::vector<SlicePiece> slice_walls(WallTable& table, const SlicePlane& plane, long degree_bound);

RatVec to_ambient(const SlicePlane& plane, const RatVec& barycentric);

std::string slice_svg(const std::vector<SlicePiece>& pieces, const SlicePlane& plane, long degree_bound);

nlohmann::ordered_json slice_json(const std::vector<SlicePiece>& pieces, const SlicePlane& plane, long degree_bound);

/// Reads a sidecar produced by slice_json and checks that every vertex, mapped
/// back to the ambient space, lies on the wall of its d. Returns the number of
/// vertices that do not; malformed input throws ParseError.
std::size_t check_slice_sidecar(WallTable& table, const nlohmann::ordered_json& sidecar);

} // namespace wallchamber
