#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <weierforge/curve/local_ring.hpp>
#include <weierforge/numsg/semigroup.hpp>

namespace weierforge::valsg2
{

using curve::BranchTuple;
using curve::LocalRing;
using exact::Characteristic;

struct ValuePoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const ValuePoint &, const ValuePoint &) = default;
    std::string to_string() const;
};

// A local ring with two branches; strict mode requires it to be Gorenstein.
LocalRing validate_ring(Characteristic p, int xi1, int xi2, std::vector<BranchTuple> basis, bool strict = true);

enum class FiberKind { empty, finite, infinite };

// S = {(nu_1(f), nu_2(f)) : f in O, f a nonzerodivisor} inside N x N.
class ValueSemigroup2
{
public:
    // (x, y) is a value iff dim V(x, y) drops both when x and when y is
    // raised, V(x, y) being the elements with nu_1 >= x and nu_2 >= y.
    explicit ValueSemigroup2(const LocalRing &ring);

    ValuePoint conductor() const noexcept
    {
        return xi_;
    }
    ValuePoint mu() const noexcept
    {
        return {xi_.x - 1, xi_.y - 1};
    }
    // Any point of Z x Z.
    bool contains(long long x, long long y) const;
    bool contains(ValuePoint p) const
    {
        return contains(p.x, p.y);
    }
    // No element of S above or to the right of (x, y), for any (x, y) in Z x Z.
    bool delta_empty(long long x, long long y) const;

    FiberKind vertical_fiber(int x) const;
    FiberKind horizontal_fiber(int y) const;

    // Lexicographically sorted.
    const std::vector<ValuePoint> &maximals() const noexcept
    {
        return maximals_;
    }
    const numsg::NumericalSemigroup &first_projection() const noexcept
    {
        return s1_;
    }
    const numsg::NumericalSemigroup &second_projection() const noexcept
    {
        return s2_;
    }
    int intersection() const noexcept
    {
        return static_cast<int>(maximals_.size());
    }
    int delta1() const
    {
        return s1_.genus();
    }
    int delta2() const
    {
        return s2_.genus();
    }
    int delta() const noexcept
    {
        return delta_;
    }
    bool ring_is_gorenstein() const noexcept
    {
        return gorenstein_;
    }

private:
    bool cell(int x, int y) const;

    ValuePoint ring_xi_;
    ValuePoint xi_;
    std::vector<std::vector<bool>> member_;
    std::vector<ValuePoint> maximals_;
    numsg::NumericalSemigroup s1_ = numsg::NumericalSemigroup::naturals();
    numsg::NumericalSemigroup s2_ = numsg::NumericalSemigroup::naturals();
    int delta_ = 0;
    bool gorenstein_ = false;
};

std::vector<ValuePoint> maximal_points(const ValueSemigroup2 &s);

struct SymmetryCheck {
    bool first_property = true;   // (x, y) in S iff Delta(mu - (x, y)) is empty
    bool second_property = true;  // maximals are exchanged by (x, y) -> mu - (x, y)
    std::optional<ValuePoint> witness;

    bool symmetric() const noexcept
    {
        return first_property && second_property;
    }
};

SymmetryCheck symmetry_check(const ValueSemigroup2 &s);

// Points of S on the top edge (r, xi_2), r < xi_1, and the right edge
// (xi_1, s), s < xi_2, listed by r and by s.
struct EdgePoints {
    std::vector<int> top;
    std::vector<int> right;
};

// Read off the semigroup.
EdgePoints edge_points(const ValueSemigroup2 &s);
// From the gaps l of the projections: r = xi_1 - 1 - l, s = xi_2 - 1 - l'.
EdgePoints edge_points_from_gaps(const ValueSemigroup2 &s);
// For a symmetric projection: r = I + m over the elements m < c_1 of S_1
// (and likewise on the right). nullopt for a side whose projection is not
// symmetric.
std::pair<std::optional<std::vector<int>>, std::optional<std::vector<int>>>
edge_points_from_symmetric_projection(const ValueSemigroup2 &s);

} // namespace weierforge::valsg2
