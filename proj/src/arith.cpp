#include "wallchamber/arith.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wallchamber {

IntVec int_vec(std::initializer_list<long> values) {
    IntVec out;
    out.reserve(values.size());
    for (long x : values)
        out.emplace_back(x);
    return out;
}

RatVec rat_vec(std::initializer_list<long> values) {
    RatVec out;
    out.reserve(values.size());
    for (long x : values)
        out.emplace_back(x);
    return out;
}

RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

bool is_zero(std::span<const Integer> v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Rational(a[i]) * b[i];
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

Integer gcd_of(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVec primitive(std::span<const Integer> v) {
    IntVec out(v.begin(), v.end());
    Integer g = gcd_of(v);
    if (g > 1)
        for (auto& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVec primitive(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        scaled[i] = s.get_num();
    }
    return primitive(std::span<const Integer>(scaled));
}

void normalize_sign(IntVec& v) {
    for (const auto& x : v) {
        if (sgn(x) == 0)
            continue;
        if (sgn(x) < 0)
            for (auto& y : v)
                y = -y;
        return;
    }
}

std::vector<RatVec> rref(std::vector<RatVec> rows, std::size_t ncols) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && sgn(rows[sel][col]) == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = 1 / rows[pivot_row][col];
        for (auto& x : rows[pivot_row])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || sgn(rows[r][col]) == 0)
                continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= f * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::size_t rank(const std::vector<RatVec>& rows, std::size_t ncols) {
    return rref(rows, ncols).size();
}

std::size_t rank(const std::vector<IntVec>& rows, std::size_t ncols) {
    std::vector<RatVec> r;
    r.reserve(rows.size());
    for (const auto& v : rows)
        r.push_back(to_rational(v));
    return rank(r, ncols);
}

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols) {
    auto echelon = rref(rows, ncols);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : echelon) {
        auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; });
        auto c = static_cast<std::size_t>(it - row.begin());
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        RatVec v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < echelon.size(); ++r)
            v[pivots[r]] = -echelon[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IntVec> canonical_basis(const std::vector<RatVec>& rows, std::size_t ncols) {
    std::vector<IntVec> out;
    for (const auto& r : rref(rows, ncols))
        out.push_back(primitive(std::span<const Rational>(r)));
    return out;
}

RatVec project_out(const RatVec& v, const std::vector<RatVec>& basis) {
    std::vector<RatVec> ortho;
    for (const auto& b : basis) {
        RatVec w = b;
        for (const auto& o : ortho) {
            Rational f = dot(std::span<const Rational>(w), o) / dot(std::span<const Rational>(o), o);
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] -= f * o[i];
        }
        if (!is_zero(std::span<const Rational>(w)))
            ortho.push_back(std::move(w));
    }
    RatVec out = v;
    for (const auto& o : ortho) {
        Rational f = dot(std::span<const Rational>(out), o) / dot(std::span<const Rational>(o), o);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] -= f * o[i];
    }
    return out;
}

// Bareiss fraction-free elimination.
Integer determinant(const std::vector<IntVec>& square) {
    const std::size_t n = square.size();
    if (n == 0)
        return 1;
    std::vector<IntVec> m = square;
    for (const auto& row : m)
        if (row.size() != n)
            throw PreconditionError("determinant: matrix is not square");
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t s = k + 1;
            while (s < n && sgn(m[s][k]) == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    if (start == text.size())
        throw ParseError("malformed number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("malformed number '" + std::string(whole) + "'");
    Integer v(std::string(text.substr(start)), 10);
    return negative ? Integer(-v) : v;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(',', pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return parts;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("malformed number '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (sgn(den) == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatVec parse_rational_vector(std::string_view text) {
    if (text.empty())
        throw ParseError("empty vector literal");
    RatVec out;
    for (auto part : split_commas(text))
        out.push_back(parse_rational(part));
    return out;
}

std::vector<long> parse_int_list(std::string_view text) {
    if (text.empty())
        throw ParseError("empty vector literal");
    std::vector<long> out;
    for (auto part : split_commas(text)) {
        Integer v = parse_integer(part, text);
        if (sgn(v) < 0)
            throw ParseError("negative entry in dimension vector '" + std::string(text) + "'");
        if (!v.fits_slong_p())
            throw ParseError("entry too large in '" + std::string(text) + "'");
        out.push_back(v.get_si());
    }
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

std::string to_string(std::span<const Integer> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str(10);
    os << ')';
    return os.str();
}

} // namespace wallchamber
