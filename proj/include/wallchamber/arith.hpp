#pragma once

// Exact integer/rational linear algebra used by every other module.
// Nothing in this library touches floating point except the SVG writer.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wallchamber {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

IntVec int_vec(std::initializer_list<long> values);
RatVec rat_vec(std::initializer_list<long> values);
RatVec to_rational(const IntVec& v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

IntVec negated(const IntVec& v);

// Scales v by a positive rational so that its entries are coprime integers.
// Direction is preserved; the zero vector maps to the zero vector.
IntVec primitive(std::span<const Rational> v);
IntVec primitive(std::span<const Integer> v);

// Flip sign so the first nonzero coordinate is positive.
void normalize_sign(IntVec& v);

// Reduced row echelon form; zero rows dropped. The row space is the input's.
std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t ncols);

std::size_t rank(const std::vector<RatVec>& rows, std::size_t ncols);
std::size_t rank(const std::vector<IntVec>& rows, std::size_t ncols);

// Basis of {x : row . x = 0 for every row}. One vector per free column of
// the echelon form, so the output is deterministic for a given row space.
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols);

// Canonical integer basis of the row space: rref rows, each made primitive.
std::vector<IntVec> canonical_basis(const std::vector<RatVec>& rows, std::size_t ncols);

// Orthogonal projection of v onto the complement of span(basis).
RatVec project_out(const RatVec& v, const std::vector<RatVec>& basis);

Integer determinant(const std::vector<IntVec>& square);

Integer gcd_of(std::span<const Integer> v);

// "3", "-2", "7/4". Whitespace around the literal is rejected by the caller.
Rational parse_rational(std::string_view text);
// Comma-separated rationals: "1,-1/2,0".
RatVec parse_rational_vector(std::string_view text);
// Comma-separated non-negative integers: "1,2,0".
std::vector<long> parse_int_list(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Integer> v);

} // namespace wallchamber
