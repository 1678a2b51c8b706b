#include "wallchamber/walls.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace wallchamber {

namespace {

void compositions(std::size_t n, long remaining, std::vector<long>& prefix, std::vector<DimVector>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long x = remaining; x >= 0; --x) {
        prefix.push_back(x);
        compositions(n, remaining - x, prefix, out);
        prefix.pop_back();
    }
}

IntVec unit_int(std::size_t n, std::size_t i) {
    IntVec v(n, Integer(0));
    v[i] = 1;
    return v;
}

std::vector<IntVec> coordinate_lineality(std::size_t n, const std::vector<std::size_t>& excluded) {
    std::vector<IntVec> lin;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end())
            lin.push_back(unit_int(n, i));
    return lin;
}

Cone ray_in_plane(long first, long second) {
    return Cone::from_generators(2, std::vector<IntVec>{int_vec({first, second})}, {});
}

} // namespace

std::vector<DimVector> dimension_vectors_of_degree(std::size_t n, long degree) {
    std::vector<DimVector> out;
    if (n == 0 || degree <= 0)
        return out;
    std::vector<long> prefix;
    compositions(n, degree, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DimVector> dimension_vectors_up_to(std::size_t n, long bound) {
    std::vector<DimVector> out;
    for (long k = 1; k <= bound; ++k) {
        auto level = dimension_vectors_of_degree(n, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Cone base_case_wall(const Quiver& q, const DimVector& d) {
    const std::size_t n = q.vertex_count();
    auto supp = d.support();
    if (supp.size() == 1)
        return Cone::from_generators(n, std::vector<IntVec>{}, coordinate_lineality(n, supp));
    if (supp.size() != 2)
        throw PreconditionError("base_case_wall: support must have one or two vertices");

    std::size_t k = supp[0], l = supp[1];
    if (q.arrow_count(l, k) > 0)
        std::swap(k, l);
    const long m = static_cast<long>(q.arrow_count(k, l));
    const long g = std::gcd(d[k], d[l]);
    const long a = d[k] / g, b = d[l] / g;

    auto lin = coordinate_lineality(n, supp);
    if (a * a + b * b - m * a * b > 1)
        return Cone::from_generators(n, std::vector<IntVec>{}, lin);
    IntVec ray(n, Integer(0));
    ray[k] = b;
    ray[l] = -a;
    return Cone::from_generators(n, std::vector<IntVec>{ray}, lin);
}

Cone kronecker_wall_oracle(long m, const DimVector& d) {
    if (m < 0)
        throw PreconditionError("kronecker_wall_oracle: m must be non-negative");
    if (d.size() != 2)
        throw PreconditionError("kronecker_wall_oracle: dimension vector must have length 2");
    if (d.is_zero())
        throw PreconditionError("kronecker_wall_oracle: zero dimension vector");
    const long a = d[0], b = d[1];
    if (a == 0)
        return Cone::from_generators(2, std::vector<IntVec>{}, {int_vec({1, 0})});
    if (b == 0)
        return Cone::from_generators(2, std::vector<IntVec>{}, {int_vec({0, 1})});

    const long g = std::gcd(a, b);
    const long ra = a / g, rb = b / g;
    switch (m) {
    case 0:
        return Cone::zero(2);
    case 1:
        return a == b ? ray_in_plane(1, -1) : Cone::zero(2);
    case 2:
        if (a == b)
            return ray_in_plane(1, -1);
        if (rb == ra + 1) // multiple of (i, i+1)
            return ray_in_plane(ra + 1, -ra);
        if (ra == rb + 1) // multiple of (i+1, i)
            return ray_in_plane(rb, -(rb + 1));
        return Cone::zero(2);
    default:
        break;
    }

    // m >= 3: walk the s-sequence past max(ra, rb).
    long prev = 0, cur = 1;
    while (cur <= std::max(ra, rb)) {
        if (prev >= 1 && ra == prev && rb == cur)
            return ray_in_plane(cur, -prev);
        if (prev >= 1 && ra == cur && rb == prev)
            return ray_in_plane(prev, -cur);
        long next = m * cur - prev;
        prev = cur;
        cur = next;
    }
    if (a * a + b * b - m * a * b < 0)
        return ray_in_plane(b, -a);
    return Cone::zero(2);
}

void WallTable::validate(const DimVector& d) const {
    quiver_.check_length(d.size(), "wall");
    if (d.is_zero())
        throw PreconditionError("wall: zero dimension vector");
}

const Cone* WallTable::find(const DimVector& d) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(d);
    return it == memo_.end() ? nullptr : &it->second;
}

std::size_t WallTable::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

Cone WallTable::wall(const DimVector& d) {
    validate(d);
    if (const Cone* hit = find(d))
        return *hit;
    Cone result = compute(d);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(d, std::move(result)).first->second;
}

Cone WallTable::compute(const DimVector& d) {
    if (d.support().size() <= 2)
        return base_case_wall(quiver_, d);

    // Unordered splits {c, d - c}: keep c <= d - c lexicographically.
    const std::size_t n = d.size();
    std::vector<Cone> pieces;
    std::vector<long> c(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && c[i] == d[i]) {
            c[i] = 0;
            ++i;
        }
        if (i == n)
            break;
        ++c[i];
        DimVector part(c);
        if (part == d)
            continue;
        DimVector rest = d - part;
        if (rest < part)
            continue;
        Cone meet = intersect(wall(part), wall(rest));
        if (!meet.is_zero())
            pieces.push_back(std::move(meet));
    }
    if (pieces.empty())
        return Cone::zero(n);
    return conic_hull(pieces);
}

SchurReport WallTable::classify_schur(const DimVector& d) {
    validate(d);
    SchurReport report;
    report.d = d;
    report.label = quiver_.root_label(d);
    report.wall_dim = wall(d).dim();
    const bool full = report.wall_dim + 1 == quiver_.vertex_count();
    if (report.label.euler_self >= 0) {
        report.is_schur = d.indivisible() && full;
        report.is_multiple_of_schur = full;
    } else {
        report.is_schur = full;
        report.is_multiple_of_schur = full;
    }
    return report;
}

std::vector<std::pair<DimVector, Cone>> WallTable::sweep(long degree_bound) {
    if (degree_bound < 1)
        throw PreconditionError("wall_sweep: degree bound must be positive");
    const std::size_t n = quiver_.vertex_count();
    std::vector<std::pair<DimVector, Cone>> out;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

    for (long k = 1; k <= degree_bound; ++k) {
        auto level = dimension_vectors_of_degree(n, k);
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        auto worker = [&] {
            try {
                for (std::size_t i = next++; i < level.size(); i = next++)
                    wall(level[i]);
            } catch (...) {
                std::lock_guard guard(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = level.size();
            }
        };
        const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, level.size()));
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(worker);
        }
        if (error)
            std::rethrow_exception(error);
        for (auto& d : level)
            out.emplace_back(d, *find(d));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

} // namespace wallchamber
