#include "wallchamber/quiver.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace wallchamber {

DimVector::DimVector(std::vector<long> entries) : entries_(std::move(entries)) {
    for (long x : entries_)
        if (x < 0)
            throw PreconditionError("dimension vector entries must be non-negative");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    std::vector<long> e(n, 0);
    e.at(i) = 1;
    return DimVector(std::move(e));
}

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](long x) { return x == 0; });
}

long DimVector::total_degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

long DimVector::content() const {
    long g = 0;
    for (long x : entries_)
        g = std::gcd(g, x);
    return g;
}

std::vector<std::size_t> DimVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > 0)
            s.push_back(i);
    return s;
}

IntVec DimVector::as_int_vec() const {
    IntVec v;
    v.reserve(entries_.size());
    for (long x : entries_)
        v.emplace_back(x);
    return v;
}

DimVector DimVector::operator+(const DimVector& other) const {
    if (other.size() != size())
        throw PreconditionError("dimension vector length mismatch");
    std::vector<long> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = entries_[i] + other.entries_[i];
    return DimVector(std::move(out));
}

DimVector DimVector::operator-(const DimVector& other) const {
    if (other.size() != size())
        throw PreconditionError("dimension vector length mismatch");
    std::vector<long> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = entries_[i] - other.entries_[i];
    return DimVector(std::move(out));
}

bool DimVector::dominates(const DimVector& c) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (c.entries_[i] > entries_[i])
            return false;
    return true;
}

std::string to_string(const DimVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(d[i]);
    }
    return s + ")";
}

const char* to_string(RootKind kind) {
    switch (kind) {
    case RootKind::real:
        return "real";
    case RootKind::isotropic:
        return "isotropic";
    case RootKind::imaginary_nonisotropic:
        return "imaginary-nonisotropic";
    case RootKind::none:
        return "none";
    }
    return "none";
}

Quiver::Quiver(std::size_t n, std::vector<Arrow> arrows)
    : n_(n), arrows_(std::move(arrows)), arrow_matrix_(n, std::vector<long>(n, 0)) {
    if (n_ == 0)
        throw PreconditionError("quiver must have at least one vertex");
    for (const auto& [s, t] : arrows_) {
        if (s >= n_ || t >= n_)
            throw PreconditionError("arrow endpoint out of range");
        if (s == t)
            throw PreconditionError("loop at vertex " + std::to_string(s + 1));
        ++arrow_matrix_[s][t];
    }
    std::sort(arrows_.begin(), arrows_.end());

    // Kahn's algorithm; leftover vertices lie on a cycle.
    std::vector<long> indegree(n_, 0);
    for (const auto& a : arrows_)
        ++indegree[a.second];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n_; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t w = 0; w < n_; ++w) {
            if (arrow_matrix_[v][w] == 0)
                continue;
            indegree[w] -= arrow_matrix_[v][w];
            if (indegree[w] == 0)
                ready.push_back(w);
        }
    }
    if (seen != n_)
        throw PreconditionError("quiver has a directed cycle");
}

std::size_t Quiver::arrow_count(std::size_t from, std::size_t to) const {
    return static_cast<std::size_t>(arrow_matrix_.at(from).at(to));
}

long Quiver::euler_entry(std::size_t i, std::size_t j) const {
    return i == j ? 1 : -arrow_matrix_[i][j];
}

void Quiver::check_length(std::size_t len, const char* what) const {
    if (len != n_)
        throw PreconditionError(std::string(what) + ": expected length " + std::to_string(n_) + ", got " +
                                std::to_string(len));
}

long Quiver::euler_pairing(std::span<const long> d, std::span<const long> e) const {
    check_length(d.size(), "euler_pairing");
    check_length(e.size(), "euler_pairing");
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        s += d[i] * e[i];
    for (const auto& [from, to] : arrows_)
        s -= d[from] * e[to];
    return s;
}

RootLabel Quiver::root_label(const DimVector& d) const {
    check_length(d.size(), "root_label");
    if (d.is_zero())
        throw PreconditionError("root_label: zero dimension vector");
    RootLabel label;
    label.euler_self = euler_pairing(d, d);
    if (label.euler_self == 1)
        label.kind = RootKind::real;
    else if (label.euler_self == 0)
        label.kind = RootKind::isotropic;
    else if (label.euler_self < 0)
        label.kind = RootKind::imaginary_nonisotropic;
    else
        label.kind = RootKind::none;
    return label;
}

DimVector Quiver::projective_dimension_vector(std::size_t i) const {
    // paths[v] = number of paths i -> v, accumulated in topological order.
    std::vector<long> indegree(n_, 0);
    for (const auto& a : arrows_)
        ++indegree[a.second];
    std::vector<std::size_t> order, ready;
    for (std::size_t v = 0; v < n_; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (std::size_t w = 0; w < n_; ++w) {
            if (arrow_matrix_[v][w] == 0)
                continue;
            indegree[w] -= arrow_matrix_[v][w];
            if (indegree[w] == 0)
                ready.push_back(w);
        }
    }
    std::vector<long> paths(n_, 0);
    paths.at(i) = 1;
    for (auto v : order)
        for (std::size_t w = 0; w < n_; ++w)
            paths[w] += paths[v] * arrow_matrix_[v][w];
    return DimVector(std::move(paths));
}

bool Quiver::is_representation_finite() const {
    // Sylvester's criterion on E + E^T.
    for (std::size_t k = 1; k <= n_; ++k) {
        std::vector<IntVec> minor(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = euler_entry(i, j) + euler_entry(j, i);
        if (determinant(minor) <= 0)
            return false;
    }
    return true;
}

std::vector<DimVector> Quiver::positive_roots() const {
    if (!is_representation_finite())
        throw PreconditionError("quiver is not representation-finite (underlying graph is not Dynkin)");
    // Every non-simple positive root is a positive root plus a simple root.
    std::set<DimVector> roots;
    std::vector<DimVector> frontier;
    for (std::size_t i = 0; i < n_; ++i) {
        roots.insert(DimVector::unit(n_, i));
        frontier.push_back(DimVector::unit(n_, i));
    }
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (const auto& d : frontier) {
            for (std::size_t i = 0; i < n_; ++i) {
                DimVector e = d + DimVector::unit(n_, i);
                if (euler_pairing(e, e) == 1 && roots.insert(e).second)
                    next.push_back(e);
            }
        }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

long Quiver::highest_root_degree() const {
    long best = 0;
    for (const auto& r : positive_roots())
        best = std::max(best, r.total_degree());
    return best;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

long parse_index(const std::string& token, std::size_t line_no) {
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("line " + std::to_string(line_no) + ": expected a positive integer, got '" + token + "'");
    long v = 0;
    for (char c : token)
        v = v * 10 + (c - '0');
    return v;
}

} // namespace

Quiver parse_quiver(std::string_view text) {
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Quiver::Arrow> arrows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (tokens[0] != "vertices" || tokens.size() != 2)
                throw ParseError(where + "expected 'vertices <n>'");
            long v = parse_index(tokens[1], line_no);
            if (v < 1)
                throw ParseError(where + "vertex count must be positive");
            n = static_cast<std::size_t>(v);
            have_header = true;
            continue;
        }
        if (tokens[0] != "arrow" || tokens.size() != 3)
            throw ParseError(where + "expected 'arrow <i> <j>'");
        long s = parse_index(tokens[1], line_no);
        long t = parse_index(tokens[2], line_no);
        if (s < 1 || t < 1 || static_cast<std::size_t>(s) > n || static_cast<std::size_t>(t) > n)
            throw ParseError(where + "vertex index out of range 1.." + std::to_string(n));
        if (s == t)
            throw ParseError(where + "loop at vertex " + std::to_string(s));
        arrows.emplace_back(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1));
    }
    if (!have_header)
        throw ParseError("missing 'vertices <n>' line");
    try {
        return Quiver(n, std::move(arrows));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open quiver file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

Rational stability_pairing(const Weight& theta, const DimVector& d) {
    if (theta.size() != d.size())
        throw PreconditionError("stability_pairing: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += theta.coords[i] * d[i];
    return s;
}

std::vector<Integer> kronecker_sequence(long m, std::size_t length) {
    if (m < 0)
        throw PreconditionError("kronecker_sequence: m must be non-negative");
    if (length == 0)
        throw PreconditionError("kronecker_sequence: length must be positive");
    std::vector<Integer> s;
    s.reserve(length);
    s.emplace_back(0);
    if (length > 1)
        s.emplace_back(1);
    while (s.size() < length)
        s.push_back(m * s[s.size() - 1] - s[s.size() - 2]);
    return s;
}

} // namespace wallchamber
