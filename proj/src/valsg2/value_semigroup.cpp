#include <weierforge/valsg2/value_semigroup.hpp>

#include <algorithm>

#include <weierforge/error.hpp>
#include <weierforge/exact/linalg.hpp>

namespace weierforge::valsg2
{

using exact::Scalar;
using exact::ScalarMatrix;

std::string ValuePoint::to_string() const
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

LocalRing validate_ring(Characteristic p, int xi1, int xi2, std::vector<BranchTuple> basis, bool strict)
{
    LocalRing ring(p, {xi1, xi2}, std::move(basis), strict);
    ensure(ring.delta() >= 1, ErrorCode::invalid_argument, "the ring is the normalization itself");
    return ring;
}

namespace
{

// dim of {f in O / C : nu_1(f) >= x, nu_2(f) >= y}
struct DimensionTable {
    int xi1, xi2;
    std::vector<std::vector<int>> d;

    DimensionTable(const LocalRing &ring) : xi1(ring.conductor()[0]), xi2(ring.conductor()[1])
    {
        ScalarMatrix rows;
        for (const auto &b : ring.basis()) {
            rows.push_back(ring.reduce(b));
        }
        const int n = static_cast<int>(rows.size());
        d.assign(static_cast<std::size_t>(xi1 + 1), std::vector<int>(static_cast<std::size_t>(xi2 + 1), 0));
        for (int x = 0; x <= xi1; ++x) {
            for (int y = 0; y <= xi2; ++y) {
                ScalarMatrix m;
                for (const auto &r : rows) {
                    std::vector<Scalar> sub(r.begin(), r.begin() + x);
                    sub.insert(sub.end(), r.begin() + xi1, r.begin() + xi1 + y);
                    m.push_back(std::move(sub));
                }
                const int rk = (x + y == 0) ? 0 : static_cast<int>(exact::rank(m));
                d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = n - rk;
            }
        }
    }

    int at(int x, int y) const
    {
        return d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
};

} // namespace

ValueSemigroup2::ValueSemigroup2(const LocalRing &ring)
{
    ensure(ring.branches() == 2, ErrorCode::invalid_argument, "value semigroups here need exactly two branches");
    const DimensionTable t(ring);
    const int X = t.xi1;
    const int Y = t.xi2;
    ring_xi_ = {X, Y};
    member_.assign(static_cast<std::size_t>(X + 1), std::vector<bool>(static_cast<std::size_t>(Y + 1), false));
    for (int x = 0; x <= X; ++x) {
        for (int y = 0; y <= Y; ++y) {
            bool in = true;
            // Past the conductor on one branch, elements of C fix nu there.
            if (x < X) {
                in = in && t.at(x, y) > t.at(x + 1, y);
            }
            if (y < Y) {
                in = in && t.at(x, y) > t.at(x, y + 1);
            }
            member_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = in;
        }
    }

    // Least point whose quadrant lies in S.
    std::vector<ValuePoint> valid;
    for (int a = 0; a <= X; ++a) {
        for (int b = 0; b <= Y; ++b) {
            bool ok = true;
            for (int x = a; x <= X && ok; ++x) {
                for (int y = b; y <= Y && ok; ++y) {
                    ok = cell(x, y);
                }
            }
            if (ok) {
                valid.push_back({a, b});
                break;
            }
        }
    }
    ensure(!valid.empty(), ErrorCode::internal, "conductor point missing from the table");
    xi_ = valid.front();
    for (const auto &v : valid) {
        if (v.y < xi_.y) {
            xi_.y = v.y;
        }
    }
    // The minimum exists for value semigroups; a lone corner guarantees it.
    ensure(std::any_of(valid.begin(), valid.end(), [&](const ValuePoint &v) { return v == xi_; }),
           ErrorCode::internal, "value set has no least conductor point");

    for (int x = 0; x < xi_.x; ++x) {
        for (int y = 0; y < xi_.y; ++y) {
            if (cell(x, y) && delta_empty(x, y)) {
                maximals_.push_back({x, y});
            }
        }
    }
    std::vector<int> gaps1, gaps2;
    for (int x = 0; x < xi_.x; ++x) {
        if (vertical_fiber(x) == FiberKind::empty) {
            gaps1.push_back(x);
        }
    }
    for (int y = 0; y < xi_.y; ++y) {
        if (horizontal_fiber(y) == FiberKind::empty) {
            gaps2.push_back(y);
        }
    }
    s1_ = numsg::NumericalSemigroup::from_gaps(std::move(gaps1));
    s2_ = numsg::NumericalSemigroup::from_gaps(std::move(gaps2));
    delta_ = ring.delta();
    gorenstein_ = ring.is_gorenstein();
}

bool ValueSemigroup2::cell(int x, int y) const
{
    return member_[static_cast<std::size_t>(std::min(x, ring_xi_.x))][static_cast<std::size_t>(std::min(y, ring_xi_.y))];
}

bool ValueSemigroup2::contains(long long x, long long y) const
{
    if (x < 0 || y < 0) {
        return false;
    }
    return cell(static_cast<int>(std::min<long long>(x, ring_xi_.x)), static_cast<int>(std::min<long long>(y, ring_xi_.y)));
}

bool ValueSemigroup2::delta_empty(long long x, long long y) const
{
    if (x >= 0) {
        for (long long z = std::max(y + 1, 0LL); z <= std::max<long long>(y + 1, ring_xi_.y); ++z) {
            if (contains(x, z)) {
                return false;
            }
        }
    }
    if (y >= 0) {
        for (long long z = std::max(x + 1, 0LL); z <= std::max<long long>(x + 1, ring_xi_.x); ++z) {
            if (contains(z, y)) {
                return false;
            }
        }
    }
    return true;
}

FiberKind ValueSemigroup2::vertical_fiber(int x) const
{
    if (contains(x, ring_xi_.y)) {
        return FiberKind::infinite;
    }
    for (int y = 0; y < ring_xi_.y; ++y) {
        if (contains(x, y)) {
            return FiberKind::finite;
        }
    }
    return FiberKind::empty;
}

FiberKind ValueSemigroup2::horizontal_fiber(int y) const
{
    if (contains(ring_xi_.x, y)) {
        return FiberKind::infinite;
    }
    for (int x = 0; x < ring_xi_.x; ++x) {
        if (contains(x, y)) {
            return FiberKind::finite;
        }
    }
    return FiberKind::empty;
}

std::vector<ValuePoint> maximal_points(const ValueSemigroup2 &s)
{
    return s.maximals();
}

SymmetryCheck symmetry_check(const ValueSemigroup2 &s)
{
    SymmetryCheck out;
    const ValuePoint mu = s.mu();
    const ValuePoint xi = s.conductor();
    for (int x = -1; x <= xi.x && out.first_property; ++x) {
        for (int y = -1; y <= xi.y && out.first_property; ++y) {
            if (s.contains(x, y) != s.delta_empty(mu.x - x, mu.y - y)) {
                out.first_property = false;
                out.witness = ValuePoint{x, y};
            }
        }
    }
    for (const auto &m : s.maximals()) {
        const ValuePoint r{mu.x - m.x, mu.y - m.y};
        const bool is_max = r.x >= 0 && r.y >= 0 && s.contains(r) && s.delta_empty(r.x, r.y);
        if (!is_max) {
            out.second_property = false;
            if (!out.witness) {
                out.witness = m;
            }
            break;
        }
    }
    return out;
}

EdgePoints edge_points(const ValueSemigroup2 &s)
{
    EdgePoints e;
    const ValuePoint xi = s.conductor();
    for (int r = 0; r < xi.x; ++r) {
        if (s.contains(r, xi.y)) {
            e.top.push_back(r);
        }
    }
    for (int c = 0; c < xi.y; ++c) {
        if (s.contains(xi.x, c)) {
            e.right.push_back(c);
        }
    }
    return e;
}

EdgePoints edge_points_from_gaps(const ValueSemigroup2 &s)
{
    EdgePoints e;
    const ValuePoint xi = s.conductor();
    for (int l : s.first_projection().gaps()) {
        e.top.push_back(xi.x - 1 - l);
    }
    for (int l : s.second_projection().gaps()) {
        e.right.push_back(xi.y - 1 - l);
    }
    std::sort(e.top.begin(), e.top.end());
    std::sort(e.right.begin(), e.right.end());
    return e;
}

std::pair<std::optional<std::vector<int>>, std::optional<std::vector<int>>>
edge_points_from_symmetric_projection(const ValueSemigroup2 &s)
{
    const auto side = [&](const numsg::NumericalSemigroup &p) -> std::optional<std::vector<int>> {
        if (!p.is_symmetric()) {
            return std::nullopt;
        }
        std::vector<int> out;
        for (int m : p.small_elements()) {
            out.push_back(s.intersection() + m);
        }
        return out;
    };
    return {side(s.first_projection()), side(s.second_projection())};
}

} // namespace weierforge::valsg2
