#include <weierforge/valsg2/adapted.hpp>

#include <algorithm>

#include <weierforge/error.hpp>
#include <weierforge/exact/series.hpp>
#include <weierforge/wronski/wronski.hpp>

namespace weierforge::valsg2
{

using exact::Point;
using exact::Scalar;
using exact::TruncatedSeries;

std::vector<RationalFunction> AdaptedBasis::with_role(AdaptedRole role) const
{
    std::vector<RationalFunction> out;
    for (const auto &e : elements) {
        if (e.role == role) {
            out.push_back(e.differential);
        }
    }
    return out;
}

namespace
{

// A dualizing differential, as coordinates in the computed basis together
// with the expansions of its ratio to the generator on both branches.
struct Row {
    std::vector<Scalar> coords;
    TruncatedSeries b1, b2;

    int nu1(int xi1) const
    {
        return std::min(b1.valuation(), xi1);
    }
    int nu2(int xi2) const
    {
        return std::min(b2.valuation(), xi2);
    }
    void subtract(const Scalar &c, const Row &o)
    {
        for (std::size_t k = 0; k < coords.size(); ++k) {
            coords[k] -= c * o.coords[k];
        }
        b1 = b1 - c * o.b1;
        b2 = b2 - c * o.b2;
    }
};

// Pivots with distinct valuations below the bound on one branch; the rows
// left over reach the bound.
std::vector<Row> echelon_by(std::vector<Row> &rest, bool first, int bound)
{
    std::vector<Row> pivots;
    const auto val = [&](const Row &r) { return first ? r.nu1(bound) : r.nu2(bound); };
    const auto coeff = [&](const Row &r, int k) { return first ? r.b1.coeff(k) : r.b2.coeff(k); };
    for (;;) {
        auto best = std::min_element(rest.begin(), rest.end(),
                                     [&](const Row &a, const Row &b) { return val(a) < val(b); });
        if (best == rest.end() || val(*best) >= bound) {
            break;
        }
        Row pivot = *best;
        rest.erase(best);
        const int v = val(pivot);
        for (auto &r : rest) {
            if (val(r) == v) {
                r.subtract(coeff(r, v) / coeff(pivot, v), pivot);
            }
        }
        pivots.push_back(std::move(pivot));
    }
    return pivots;
}

long long system_weight(const std::vector<RationalFunction> &v, const Point &q)
{
    if (v.size() < 2) {
        return 0;
    }
    return wronski::smooth_weight(wronski::LinearSystem(v), q).weight;
}

} // namespace

AdaptedBasis adapted_basis(const RationalCurve &x, std::size_t singularity)
{
    const auto &sing = x.singularities().at(singularity);
    ensure(sing.kind() == curve::SingularityKind::two_branch, ErrorCode::invalid_argument,
           "adapted bases are built at two-branch singularities");
    const auto p = x.characteristic();
    const int xi1 = sing.ring().conductor()[0];
    const int xi2 = sing.ring().conductor()[1];
    const Point &q1 = sing.locations()[0];
    const Point &q2 = sing.locations()[1];

    const auto basis = curve::dualizing_basis(x);
    const RationalFunction tau = basis.generator(singularity);
    const auto diffs = basis.differentials();
    std::vector<Row> rest;
    for (std::size_t j = 0; j < diffs.size(); ++j) {
        Row r;
        r.coords.assign(diffs.size(), Scalar::zero(p));
        r.coords[j] = Scalar::one(p);
        const RationalFunction f = diffs[j] / tau;
        r.b1 = exact::expand(f, q1, xi1);
        r.b2 = exact::expand(f, q2, xi2);
        ensure(r.b1.valuation() >= 0 && r.b2.valuation() >= 0, ErrorCode::internal,
               "ratio to the generator is not regular");
        rest.push_back(std::move(r));
    }

    std::vector<Row> left = echelon_by(rest, true, xi1);
    std::vector<Row> right = echelon_by(rest, false, xi2);
    std::vector<Row> regular = std::move(rest);

    // Raise nu_2 of each row with nu_1 = x < xi_1, largest x first, using
    // finished rows that all have larger nu_1.
    std::sort(left.begin(), left.end(), [&](const Row &a, const Row &b) { return a.nu1(xi1) > b.nu1(xi1); });
    std::vector<const Row *> finished;
    for (const auto &r : right) {
        finished.push_back(&r);
    }
    std::vector<std::pair<Row, AdaptedRole>> done;
    done.reserve(left.size());
    for (auto &rho : left) {
        AdaptedRole role = AdaptedRole::maximal;
        for (;;) {
            const int y = rho.nu2(xi2);
            if (y >= xi2) {
                role = AdaptedRole::top_edge;
                break;
            }
            const auto it = std::find_if(finished.begin(), finished.end(),
                                         [&](const Row *o) { return o->nu2(xi2) == y; });
            if (it == finished.end()) {
                break;
            }
            rho.subtract(rho.b2.coeff(y) / (*it)->b2.coeff(y), **it);
        }
        done.emplace_back(rho, role);
        finished.push_back(&done.back().first);
    }

    AdaptedBasis out;
    out.singularity = singularity;
    const auto differential = [&](const Row &r) {
        RationalFunction acc{exact::Polynomial(p)};
        for (std::size_t j = 0; j < r.coords.size(); ++j) {
            if (!r.coords[j].is_zero()) {
                acc += RationalFunction::constant(r.coords[j]) * diffs[j];
            }
        }
        return acc;
    };
    std::vector<AdaptedElement> maximal, top, side, reg;
    for (const auto &[r, role] : done) {
        AdaptedElement e{differential(r), role, {r.nu1(xi1), r.nu2(xi2)}};
        (role == AdaptedRole::maximal ? maximal : top).push_back(std::move(e));
    }
    for (const auto &r : right) {
        side.push_back({differential(r), AdaptedRole::right_edge, {r.nu1(xi1), r.nu2(xi2)}});
    }
    for (const auto &r : regular) {
        reg.push_back({differential(r), AdaptedRole::regular, {r.nu1(xi1), r.nu2(xi2)}});
    }
    const auto by_value = [](const AdaptedElement &a, const AdaptedElement &b) { return a.value < b.value; };
    std::sort(maximal.begin(), maximal.end(), by_value);
    std::sort(top.begin(), top.end(), by_value);
    std::sort(side.begin(), side.end(), by_value);

    const ValueSemigroup2 s(sing.ring());
    const EdgePoints edges = edge_points(s);
    std::vector<ValuePoint> got_max;
    std::vector<int> got_top, got_right;
    for (const auto &e : maximal) {
        got_max.push_back(e.value);
    }
    for (const auto &e : top) {
        got_top.push_back(e.value.x);
    }
    for (const auto &e : side) {
        got_right.push_back(e.value.y);
    }
    ensure(got_max == s.maximals() && got_top == edges.top && got_right == edges.right, ErrorCode::elimination_stuck,
           "eliminated values do not match the maximal and edge points of the value semigroup");
    ensure(static_cast<int>(reg.size()) == x.genus() - sing.delta(), ErrorCode::elimination_stuck,
           "wrong number of differentials regular at both branch points");

    for (auto *part : {&maximal, &top, &side, &reg}) {
        for (auto &e : *part) {
            out.elements.push_back(std::move(e));
        }
    }
    return out;
}

long long two_branch_weight(const ValueSemigroup2 &s, int genus, long long w_v1, long long w_v2)
{
    const long long g = genus;
    const long long delta = s.intersection() + s.delta1() + s.delta2();
    return delta * (g - 1) * (g + 1) - s.intersection() * (g - 1) - s.first_projection().weight()
           - s.second_projection().weight() + w_v1 + w_v2;
}

long long node_weight(int genus, long long w_1, long long w_2)
{
    const long long g = genus;
    return (g - 1) * g + w_1 + w_2;
}

long long two_branch_smooth_count(const ValueSemigroup2 &s, int genus)
{
    return static_cast<long long>(s.intersection()) * (genus - 1) + s.first_projection().weight()
           + s.second_projection().weight();
}

std::pair<long long, long long> v_systems_weights(const RationalCurve &x)
{
    ensure(x.singularities().size() == 1 && x.singularities()[0].kind() == curve::SingularityKind::two_branch,
           ErrorCode::invalid_argument, "the curve must have a single two-branch singularity");
    const AdaptedBasis a = adapted_basis(x, 0);
    const auto &loc = x.singularities()[0].locations();
    return {system_weight(a.with_role(AdaptedRole::right_edge), loc[0]),
            system_weight(a.with_role(AdaptedRole::top_edge), loc[1])};
}

} // namespace weierforge::valsg2
