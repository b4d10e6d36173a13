#include <weierforge/curve/formulas.hpp>

#include <weierforge/error.hpp>

namespace weierforge::curve
{

using exact::Point;
using numsg::NumericalSemigroup;

MonomialCurveWeights monomial_curve_weights(const NumericalSemigroup &s, exact::Characteristic p)
{
    ensure(s.is_symmetric(), ErrorCode::not_symmetric, "semigroup " + s.to_string() + " is not symmetric");
    const int g = s.genus();
    ensure(g >= 1, ErrorCode::invalid_argument, "the semigroup N has no singular model");
    const auto n = s.first_elements(static_cast<std::size_t>(g));
    const auto &gaps = s.gaps();
    MonomialCurveWeights out;
    out.orders = padic::monomial_order_sequence(n, p);
    for (int i = 0; i < g; ++i) {
        const long long e = out.orders[static_cast<std::size_t>(i)];
        out.at_singularity += n[static_cast<std::size_t>(i)] - e + 2LL * g * e;
        out.at_infinity += gaps[static_cast<std::size_t>(i)] - 1 - e;
    }
    return out;
}

long long unibranch_weight(const NumericalSemigroup &s, int genus, long long w_y)
{
    const long long delta = s.genus();
    ensure(delta <= genus, ErrorCode::invalid_argument, "delta exceeds the genus");
    const long long g = genus;
    return delta * (g - 1) * (g + 1) - s.weight() + w_y;
}

TwoPointCase two_point_case_from_tag(int tag)
{
    ensure(tag >= 1 && tag <= 3, ErrorCode::invalid_argument, "case tag must be 1, 2 or 3, got " + std::to_string(tag));
    return static_cast<TwoPointCase>(tag);
}

namespace
{

TwoMonomialWeights combine(const NumericalSemigroup &s1, const NumericalSemigroup &s2, bool cross1, bool cross2)
{
    ensure(s1.is_symmetric() && s2.is_symmetric(), ErrorCode::not_symmetric, "semigroups must be symmetric");
    const int g = s1.genus() + s2.genus();
    TwoMonomialWeights out;
    out.first = unibranch_weight(s1, g, cross1 ? s2.weight() : 0);
    out.second = unibranch_weight(s2, g, cross2 ? s1.weight() : 0);
    out.smooth_count = (cross2 ? 0 : s1.weight()) + (cross1 ? 0 : s2.weight());
    return out;
}

Point pole_of_chart(const Point &a)
{
    return a.is_infinite() ? Point::from_int(a.characteristic(), 0) : Point::infinity(a.characteristic());
}

} // namespace

TwoMonomialWeights two_monomial_weights(const NumericalSemigroup &s1, const NumericalSemigroup &s2, TwoPointCase c)
{
    switch (c) {
    case TwoPointCase::reciprocal:
        return combine(s1, s2, true, true);
    case TwoPointCase::one_sided:
        return combine(s1, s2, true, false);
    case TwoPointCase::generic:
        return combine(s1, s2, false, false);
    }
    fail(ErrorCode::invalid_argument, "unknown placement case");
}

std::optional<TwoPointCase> two_point_case(const Point &a1, const Point &a2)
{
    ensure(a1 != a2, ErrorCode::invalid_argument, "the two singularities must be at distinct points");
    const bool cross1 = a1 == pole_of_chart(a2);
    const bool cross2 = a2 == pole_of_chart(a1);
    if (cross1 && cross2) {
        return TwoPointCase::reciprocal;
    }
    if (cross1) {
        return TwoPointCase::one_sided;
    }
    if (cross2) {
        return std::nullopt;
    }
    return TwoPointCase::generic;
}

TwoMonomialWeights two_monomial_weights_at(const NumericalSemigroup &s1, const Point &a1, const NumericalSemigroup &s2,
                                           const Point &a2)
{
    ensure(a1 != a2, ErrorCode::invalid_argument, "the two singularities must be at distinct points");
    return combine(s1, s2, a1 == pole_of_chart(a2), a2 == pole_of_chart(a1));
}

long long unibranch_smooth_count(const std::vector<NumericalSemigroup> &semigroups)
{
    long long n = 0;
    for (const auto &s : semigroups) {
        n += s.weight();
    }
    return n;
}

} // namespace weierforge::curve
