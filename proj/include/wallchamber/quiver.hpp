#pragma once

#include "wallchamber/arith.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wallchamber {

/// A class in K0(mod A): one non-negative integer per vertex.
class DimVector {
  public:
    DimVector() = default;
    explicit DimVector(std::vector<long> entries);
    DimVector(std::initializer_list<long> entries) : DimVector(std::vector<long>(entries)) {}

    static DimVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    long operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<long>& entries() const { return entries_; }

    bool is_zero() const;
    long total_degree() const;
    long content() const; // gcd of the entries; 0 for the zero vector
    bool indivisible() const { return content() == 1; }
    std::vector<std::size_t> support() const;
    IntVec as_int_vec() const;

    DimVector operator+(const DimVector& other) const;
    // Componentwise difference; throws if the result would be negative.
    DimVector operator-(const DimVector& other) const;
    // Componentwise c <= *this.
    bool dominates(const DimVector& c) const;

    auto operator<=>(const DimVector&) const = default;

  private:
    std::vector<long> entries_;
};

std::string to_string(const DimVector& d);

/// A stability parameter in the [P_1],...,[P_n] basis of K0(proj A)_R.
struct Weight {
    RatVec coords;

    Weight() = default;
    explicit Weight(RatVec c) : coords(std::move(c)) {}
    std::size_t size() const { return coords.size(); }
    bool operator==(const Weight&) const = default;
};

enum class RootKind { real, isotropic, imaginary_nonisotropic, none };

const char* to_string(RootKind kind);

struct RootLabel {
    long euler_self = 0;
    RootKind kind = RootKind::none;
};

/// Finite acyclic quiver on vertices 1..n. Vertices are 0-based internally.
class Quiver {
  public:
    using Arrow = std::pair<std::size_t, std::size_t>;

    // Arrows are 0-based (source, target). Throws PreconditionError on a loop,
    // an out-of-range vertex or a directed cycle.
    Quiver(std::size_t n, std::vector<Arrow> arrows);

    std::size_t vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_count(std::size_t from, std::size_t to) const;

    /// Euler matrix entry: 1 on the diagonal, minus the number of arrows i -> j off it.
    long euler_entry(std::size_t i, std::size_t j) const;

    long euler_pairing(std::span<const long> d, std::span<const long> e) const;
    long euler_pairing(const DimVector& d, const DimVector& e) const {
        return euler_pairing(std::span<const long>(d.entries()), std::span<const long>(e.entries()));
    }

    RootLabel root_label(const DimVector& d) const;

    /// dimv P_i: number of paths from i to each vertex.
    DimVector projective_dimension_vector(std::size_t i) const;

    /// Whether the symmetrized Tits form is positive definite, i.e. the
    /// underlying graph is a disjoint union of ADE Dynkin diagrams.
    bool is_representation_finite() const;

    /// All positive roots, lexicographically sorted. Requires Dynkin type.
    std::vector<DimVector> positive_roots() const;

    /// Largest total degree among positive roots. Requires Dynkin type.
    long highest_root_degree() const;

    void check_length(std::size_t len, const char* what) const;

  private:
    std::size_t n_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<long>> arrow_matrix_;
};

/// Parses the line-oriented quiver format:
///   vertices <n>
///   arrow <i> <j>     (1-based, repeated for multiple arrows)
/// '#' starts a comment. Any violation raises ParseError.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

Rational stability_pairing(const Weight& theta, const DimVector& d);

/// s_0 = 0, s_1 = 1, s_{i+2} = m s_{i+1} - s_i.
std::vector<Integer> kronecker_sequence(long m, std::size_t length);

} // namespace wallchamber
