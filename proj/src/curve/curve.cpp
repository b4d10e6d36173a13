#include <weierforge/curve/curve.hpp>

#include <algorithm>
#include <sstream>

#include <weierforge/error.hpp>
#include <weierforge/exact/linalg.hpp>
#include <weierforge/exact/series.hpp>

namespace weierforge::curve
{

using exact::ScalarMatrix;

std::string to_string(SingularityKind kind)
{
    switch (kind) {
    case SingularityKind::monomial:
        return "monomial";
    case SingularityKind::unibranch:
        return "unibranch";
    case SingularityKind::two_branch:
        return "two-branch";
    }
    return "unknown";
}

Singularity::Singularity(SingularityKind kind, std::vector<Point> locations, LocalRing ring)
    : kind_(kind), locations_(std::move(locations)), ring_(std::move(ring))
{
    ensure(ring_.branches() == locations_.size(), ErrorCode::size_mismatch, "one location per branch is required");
    for (const auto &q : locations_) {
        ensure(q.characteristic() == ring_.characteristic(), ErrorCode::characteristic_mismatch,
               "location and ring characteristics differ");
    }
    ensure(ring_.delta() >= 1, ErrorCode::invalid_argument, "a singularity has positive delta");
    ensure(ring_.is_gorenstein(), ErrorCode::not_gorenstein, "the local ring is not Gorenstein");
    if (ring_.branches() == 1) {
        semigroup_ = ring_.value_semigroup();
    }
}

Singularity Singularity::monomial(const numsg::NumericalSemigroup &s, const Point &location)
{
    ensure(s.is_symmetric(), ErrorCode::not_gorenstein, "monomial singularity with non-symmetric semigroup " + s.to_string());
    return Singularity(SingularityKind::monomial, {location}, LocalRing::monomial(s, location.characteristic()));
}

Singularity Singularity::unibranch(std::vector<TruncatedSeries> basis, int conductor, const Point &location)
{
    std::vector<BranchTuple> tuples;
    for (auto &b : basis) {
        tuples.push_back({std::move(b)});
    }
    return Singularity(SingularityKind::unibranch, {location},
                       LocalRing(location.characteristic(), {conductor}, std::move(tuples)));
}

Singularity Singularity::two_branch(LocalRing ring, const Point &first, const Point &second)
{
    ensure(ring.branches() == 2, ErrorCode::invalid_argument, "a two-branch singularity needs a two-branch ring");
    ensure(first != second, ErrorCode::invalid_argument, "the two branches must lie over distinct points");
    return Singularity(SingularityKind::two_branch, {first, second}, std::move(ring));
}

std::string Singularity::describe() const
{
    std::ostringstream os;
    os << to_string(kind_);
    if (semigroup_) {
        os << ' ' << semigroup_->to_string();
    }
    os << " at ";
    for (std::size_t i = 0; i < locations_.size(); ++i) {
        os << (i ? ", " : "") << locations_[i].to_string();
    }
    return os.str();
}

RationalCurve::RationalCurve(Characteristic p, std::vector<Singularity> singularities)
    : p_(p), sing_(std::move(singularities))
{
    exact::check_characteristic(p);
    std::vector<Point> seen;
    for (const auto &s : sing_) {
        ensure(s.ring().characteristic() == p, ErrorCode::characteristic_mismatch,
               "singularity characteristic differs from the curve");
        for (const auto &q : s.locations()) {
            ensure(std::find(seen.begin(), seen.end(), q) == seen.end(), ErrorCode::invalid_argument,
                   "two branches lie over the point " + q.to_string());
            seen.push_back(q);
        }
        genus_ += s.delta();
    }
    ensure(genus_ >= 1, ErrorCode::invalid_argument, "the curve must have arithmetic genus at least 1");
}

std::vector<Point> RationalCurve::branch_points() const
{
    std::vector<Point> out;
    for (const auto &s : sing_) {
        out.insert(out.end(), s.locations().begin(), s.locations().end());
    }
    return out;
}

std::optional<std::size_t> RationalCurve::singularity_at(const Point &q) const
{
    for (std::size_t i = 0; i < sing_.size(); ++i) {
        const auto &loc = sing_[i].locations();
        if (std::find(loc.begin(), loc.end(), q) != loc.end()) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<RationalFunction> DualizingBasis::differentials() const
{
    std::vector<RationalFunction> out;
    for (const auto &a : numerators) {
        out.emplace_back(a, denominator);
    }
    return out;
}

RationalFunction DualizingBasis::generator(std::size_t singularity) const
{
    const auto &c = generators.at(singularity);
    ensure(!c.empty(), ErrorCode::generator_not_found, "no generator of the dualizing module in the basis");
    Polynomial a(denominator.characteristic());
    for (std::size_t j = 0; j < c.size(); ++j) {
        a += numerators[j] * c[j];
    }
    return RationalFunction(a, denominator);
}

namespace
{

// sum over the branches of P of Res(b tau) for tau = r dt.
Scalar residue_pairing(const Singularity &s, const BranchTuple &b, const RationalFunction &r)
{
    Scalar acc = Scalar::zero(r.characteristic());
    for (std::size_t k = 0; k < s.locations().size(); ++k) {
        const TruncatedSeries rho = exact::expand_differential(r, s.locations()[k], 0);
        acc += (b[k] * rho).coeff(-1);
    }
    return acc;
}

// Valuation of tau = r dt at a point, in the chart coordinate there.
int differential_valuation(const RationalFunction &r, const Point &q)
{
    const int v = r.valuation(q);
    return q.is_infinite() && v != exact::infinite_valuation ? v - 2 : v;
}

// Coefficients of a in the basis ordered by decreasing pole at q, given as
// polynomials of degree <= top.
std::vector<Scalar> chart_coefficients(const Polynomial &a, const Point &q, int top)
{
    std::vector<Scalar> v;
    if (q.is_infinite()) {
        for (int k = top; k >= 0; --k) {
            v.push_back(a.coeff(static_cast<std::size_t>(k)));
        }
    } else {
        const Polynomial s = a.shift(q.value());
        for (int k = 0; k <= top; ++k) {
            v.push_back(s.coeff(static_cast<std::size_t>(k)));
        }
    }
    return v;
}

Polynomial from_chart_coefficients(const std::vector<Scalar> &v, const Point &q, Characteristic p)
{
    const int top = static_cast<int>(v.size()) - 1;
    if (q.is_infinite()) {
        std::vector<Scalar> c(v.rbegin(), v.rend());
        (void)top;
        return Polynomial(p, std::move(c));
    }
    return Polynomial(p, v).shift(-q.value());
}

bool is_generator(const Singularity &s, const RationalFunction &candidate, const std::vector<RationalFunction> &basis)
{
    const auto &xi = s.ring().conductor();
    for (std::size_t k = 0; k < s.locations().size(); ++k) {
        if (differential_valuation(candidate, s.locations()[k]) != -xi[k]) {
            return false;
        }
    }
    for (const auto &r : basis) {
        const RationalFunction f = r / candidate;
        BranchTuple local;
        for (std::size_t k = 0; k < s.locations().size(); ++k) {
            local.push_back(exact::expand(f, s.locations()[k], xi[k]));
        }
        if (!s.ring().contains(local)) {
            return false;
        }
    }
    return true;
}

void find_generators(const RationalCurve &x, DualizingBasis &basis)
{
    const auto p = x.characteristic();
    const auto diffs = basis.differentials();
    const std::size_t g = diffs.size();
    for (const auto &s : x.singularities()) {
        std::vector<Scalar> coeffs;
        std::optional<std::size_t> index;
        for (std::size_t j = 0; j < g && coeffs.empty(); ++j) {
            if (is_generator(s, diffs[j], diffs)) {
                coeffs.assign(g, Scalar::zero(p));
                coeffs[j] = Scalar::one(p);
                index = j;
            }
        }
        // Two elements with maximal poles on different branches combine to
        // one with maximal poles on both for all but one ratio.
        for (std::size_t i = 0; i < g && coeffs.empty(); ++i) {
            for (std::size_t j = 0; j < g && coeffs.empty(); ++j) {
                if (i == j) {
                    continue;
                }
                for (long long lambda = 1; lambda <= 3 && coeffs.empty(); ++lambda) {
                    const Scalar l = Scalar::from_int(p, lambda);
                    if (l.is_zero()) {
                        continue;
                    }
                    const RationalFunction c = diffs[i] + RationalFunction::constant(l) * diffs[j];
                    if (!c.is_zero() && is_generator(s, c, diffs)) {
                        coeffs.assign(g, Scalar::zero(p));
                        coeffs[i] = Scalar::one(p);
                        coeffs[j] = l;
                    }
                }
            }
        }
        basis.generators.push_back(std::move(coeffs));
        basis.generator_index.push_back(index);
    }
}

} // namespace

DualizingBasis dualizing_basis(const RationalCurve &x)
{
    const auto p = x.characteristic();
    const int g = x.genus();
    Polynomial d = Polynomial::constant(Scalar::one(p));
    int xi_inf = 0;
    for (const auto &s : x.singularities()) {
        for (std::size_t k = 0; k < s.locations().size(); ++k) {
            const Point &q = s.locations()[k];
            const int xi = s.ring().conductor()[k];
            if (q.is_infinite()) {
                xi_inf = xi;
            } else {
                d *= Polynomial::linear_root(q.value()).pow(static_cast<std::size_t>(xi));
            }
        }
    }
    // t^k / D dt for k <= deg D - 2 + xi_inf has poles bounded by the
    // conductor exponents, including the chart at infinity.
    const int top = d.degree() - 2 + xi_inf;
    ensure(top >= 0, ErrorCode::solution_dimension_mismatch, "no differentials with the allowed poles");
    std::vector<RationalFunction> ansatz;
    for (int k = 0; k <= top; ++k) {
        ansatz.emplace_back(Polynomial::monomial(Scalar::one(p), static_cast<std::size_t>(k)), d);
    }
    ScalarMatrix conditions;
    for (const auto &s : x.singularities()) {
        for (const auto &b : s.ring().basis()) {
            std::vector<Scalar> row;
            for (const auto &m : ansatz) {
                row.push_back(residue_pairing(s, b, m));
            }
            conditions.push_back(std::move(row));
        }
    }
    const auto solutions = exact::nullspace(conditions, ansatz.size(), p);
    ensure(static_cast<int>(solutions.size()) == g, ErrorCode::solution_dimension_mismatch,
           "residue conditions leave " + std::to_string(solutions.size()) + " differentials, expected g = "
               + std::to_string(g));

    const Point &q1 = x.singularities().front().locations().front();
    ScalarMatrix echelon;
    for (const auto &v : solutions) {
        echelon.push_back(chart_coefficients(Polynomial(p, v), q1, top));
    }
    exact::rref(echelon);

    DualizingBasis out;
    out.denominator = d;
    for (const auto &row : echelon) {
        out.numerators.push_back(from_chart_coefficients(row, q1, p));
    }
    for (const auto &r : out.differentials()) {
        for (const auto &s : x.singularities()) {
            for (const auto &b : s.ring().basis()) {
                ensure(residue_pairing(s, b, r).is_zero(), ErrorCode::internal,
                       "echelonized differential violates a residue condition");
            }
        }
    }
    find_generators(x, out);
    return out;
}

OrderSequence canonical_orders(const RationalCurve &x, const DualizingBasis &basis)
{
    (void)x;
    return wronski::polynomial_order_sequence(basis.numerators);
}

long long singular_weight(const RationalCurve &x, std::size_t singularity, const DualizingBasis &basis)
{
    const Singularity &s = x.singularities().at(singularity);
    ensure(!basis.generators.at(singularity).empty(), ErrorCode::generator_not_found,
           "no basis element generates the dualizing module at " + s.describe());
    const auto p = x.characteristic();
    const RationalFunction tau = basis.generator(singularity);
    std::vector<RationalFunction> f;
    for (const auto &r : basis.differentials()) {
        f.push_back(r / tau);
    }
    const OrderSequence eps = canonical_orders(x, basis);
    const long long n = eps.sum();
    const int top = eps.terms().back();
    const long long g = x.genus();
    // ord det <= the weight <= the global total.
    const long long cap = 2 * ((2 * g - 2) * (g + n) + top + 16);

    long long total = 2LL * s.delta() * n;
    for (const auto &q : s.locations()) {
        std::optional<int> v;
        for (int t = 16; !v; t *= 2) {
            ensure(t <= cap, ErrorCode::internal, "local wronskian undetermined within the weight bound");
            std::vector<TruncatedSeries> local;
            for (const auto &fj : f) {
                local.push_back(exact::expand(fj, q, t));
                ensure(local.back().valuation() >= 0, ErrorCode::internal, "ratio to the generator is not regular");
            }
            std::vector<std::vector<TruncatedSeries>> m;
            for (int k : eps.terms()) {
                std::vector<TruncatedSeries> row;
                for (const auto &a : local) {
                    row.push_back(a.hasse(static_cast<std::size_t>(k)));
                }
                m.push_back(std::move(row));
            }
            v = exact::determinant_valuation(std::move(m));
        }
        total += *v;
    }
    return total;
}

namespace
{

struct Canonical {
    DualizingBasis basis;
    OrderSequence orders{{0}, 0};
    Polynomial wronskian;
};

Canonical canonical(const RationalCurve &x)
{
    Canonical c;
    c.basis = dualizing_basis(x);
    c.orders = canonical_orders(x, c.basis);
    c.wronskian = wronski::polynomial_wronskian(c.basis.numerators, c.orders);
    ensure(!c.wronskian.is_zero(), ErrorCode::internal, "canonical wronskian vanishes");
    return c;
}

// ord_q of W_t(tau_1, ..., tau_g) = W_t(A) / D^g
long long global_valuation(const Canonical &c, const Point &q, int g)
{
    if (q.is_infinite()) {
        return static_cast<long long>(g) * c.basis.denominator.degree() - c.wronskian.degree();
    }
    return c.wronskian.valuation_at(q.value()) - static_cast<long long>(g) * c.basis.denominator.valuation_at(q.value());
}

long long weight_over(const RationalCurve &x, const Canonical &c, std::size_t i)
{
    const Singularity &s = x.singularities()[i];
    const long long g = x.genus();
    const long long n = c.orders.sum();
    long long w = 0;
    // In the chart at a branch point the generator has a pole of order xi,
    // i.e. ord_t of its coefficient is -xi, or 2 - xi at infinity.
    for (std::size_t k = 0; k < s.locations().size(); ++k) {
        const Point &q = s.locations()[k];
        w += global_valuation(c, q, x.genus()) + (g + n) * (s.ring().conductor()[k] - (q.is_infinite() ? 2 : 0));
    }
    return w;
}

long long smooth_infinity_weight(const RationalCurve &x, const Canonical &c)
{
    const long long g = x.genus();
    return global_valuation(c, Point::infinity(x.characteristic()), x.genus()) - 2 * (g + c.orders.sum());
}

} // namespace

WeightReport weight_report(const RationalCurve &x)
{
    const Canonical c = canonical(x);
    WeightReport r;
    r.genus = x.genus();
    r.characteristic = x.characteristic();
    r.orders = c.orders;
    r.n = c.orders.sum();
    const long long g = x.genus();
    for (std::size_t i = 0; i < x.singularities().size(); ++i) {
        const Singularity &s = x.singularities()[i];
        PointWeight pw;
        pw.singularity = i;
        pw.locations = s.locations();
        pw.delta = s.delta();
        pw.weight = weight_over(x, c, i);
        if (!c.basis.generators[i].empty()) {
            const long long direct = singular_weight(x, i, c.basis);
            ensure(direct == pw.weight, ErrorCode::internal,
                   "weight at " + s.describe() + ": generator route gives " + std::to_string(direct) + ", global wronskian "
                       + std::to_string(pw.weight));
        }
        ensure(pw.weight >= 2LL * s.delta() * r.n, ErrorCode::internal, "singular weight below 2 delta N");
        r.singular.push_back(std::move(pw));
    }

    const auto points = x.branch_points();
    const bool inf_singular = x.singularity_at(Point::infinity(x.characteristic())).has_value();
    const long long w_inf = inf_singular ? 0 : smooth_infinity_weight(x, c);
    ensure(w_inf >= 0, ErrorCode::internal, "negative weight at infinity");
    r.smooth = wronski::zero_divisor(wronski::strip_points(c.wronskian, points), w_inf);

    r.total = r.smooth.total();
    for (const auto &pw : r.singular) {
        r.total += pw.weight;
    }
    r.expected = (2 * g - 2) * (g + r.n);
    ensure(r.total == r.expected, ErrorCode::total_mismatch,
           "weights sum to " + std::to_string(r.total) + ", expected " + std::to_string(r.expected));
    return r;
}

long long point_weight(const RationalCurve &x, const Point &q)
{
    const Canonical c = canonical(x);
    if (const auto i = x.singularity_at(q)) {
        return weight_over(x, c, *i);
    }
    if (q.is_infinite()) {
        return smooth_infinity_weight(x, c);
    }
    return global_valuation(c, q, x.genus());
}

RationalCurve partial_normalization(const RationalCurve &x, std::size_t i)
{
    ensure(i < x.singularities().size(), ErrorCode::invalid_argument, "no such singularity");
    std::vector<Singularity> rest;
    for (std::size_t j = 0; j < x.singularities().size(); ++j) {
        if (j != i) {
            rest.push_back(x.singularities()[j]);
        }
    }
    return RationalCurve(x.characteristic(), std::move(rest));
}

} // namespace weierforge::curve
