#include <weierforge/valsg2/plane_curve.hpp>

#include <algorithm>

#include <weierforge/error.hpp>
#include <weierforge/exact/linalg.hpp>

namespace weierforge::valsg2
{

using exact::Polynomial;
using exact::Scalar;
using exact::ScalarMatrix;
using exact::TruncatedSeries;

namespace
{

Polynomial truncate(const Polynomial &f, int t)
{
    std::vector<Scalar> c;
    for (int i = 0; i < t && i <= f.degree(); ++i) {
        c.push_back(f.coeff(static_cast<std::size_t>(i)));
    }
    return Polynomial(f.characteristic(), std::move(c));
}

// Images of x^a y^b, a + b < t, modulo t^t on one branch.
std::vector<std::vector<Polynomial>> monomial_images(const PlaneBranch &b, int t)
{
    const auto p = b.x.characteristic();
    std::vector<Polynomial> xs{Polynomial::constant(Scalar::one(p))}, ys{Polynomial::constant(Scalar::one(p))};
    for (int k = 1; k < t; ++k) {
        xs.push_back(truncate(xs.back() * b.x, t));
        ys.push_back(truncate(ys.back() * b.y, t));
    }
    std::vector<std::vector<Polynomial>> out(static_cast<std::size_t>(t));
    for (int a = 0; a < t; ++a) {
        for (int c = 0; a + c < t; ++c) {
            out[static_cast<std::size_t>(a)].push_back(
                truncate(xs[static_cast<std::size_t>(a)] * ys[static_cast<std::size_t>(c)], t));
        }
    }
    return out;
}

// First index from which every unit vector of the block lies in the row
// space of the reduced matrix.
int block_conductor(const ScalarMatrix &m, const std::vector<std::size_t> &pivots, int from, int t)
{
    int xi = t;
    for (int i = t - 1; i >= 0; --i) {
        const auto col = static_cast<std::size_t>(from + i);
        const auto it = std::find(pivots.begin(), pivots.end(), col);
        if (it == pivots.end()) {
            break;
        }
        const auto &row = m[static_cast<std::size_t>(it - pivots.begin())];
        bool unit = true;
        for (std::size_t j = 0; j < row.size() && unit; ++j) {
            unit = j == col || row[j].is_zero();
        }
        if (!unit) {
            break;
        }
        xi = i;
    }
    return xi;
}

} // namespace

curve::LocalRing plane_two_branch_ring(const PlaneBranch &first, const PlaneBranch &second)
{
    const auto p = first.x.characteristic();
    for (const auto *b : {&first, &second}) {
        ensure(b->x.characteristic() == p && b->y.characteristic() == p, ErrorCode::characteristic_mismatch,
               "branch characteristics differ");
        ensure(b->x.valuation() >= 1 && b->y.valuation() >= 1, ErrorCode::invalid_argument,
               "branches must pass through the origin");
    }
    for (int t = 16; t <= 128; t *= 2) {
        const auto i1 = monomial_images(first, t);
        const auto i2 = monomial_images(second, t);
        ScalarMatrix m;
        for (std::size_t a = 0; a < i1.size(); ++a) {
            for (std::size_t c = 0; c < i1[a].size(); ++c) {
                std::vector<Scalar> row;
                for (int k = 0; k < t; ++k) {
                    row.push_back(i1[a][c].coeff(static_cast<std::size_t>(k)));
                }
                for (int k = 0; k < t; ++k) {
                    row.push_back(i2[a][c].coeff(static_cast<std::size_t>(k)));
                }
                m.push_back(std::move(row));
            }
        }
        const auto pivots = exact::rref(m);
        m.resize(pivots.size());
        const int xi1 = block_conductor(m, pivots, 0, t);
        const int xi2 = block_conductor(m, pivots, t, t);
        if (2 * xi1 > t || 2 * xi2 > t) {
            continue;
        }
        ScalarMatrix low;
        for (const auto &row : m) {
            std::vector<Scalar> r(row.begin(), row.begin() + xi1);
            r.insert(r.end(), row.begin() + t, row.begin() + t + xi2);
            low.push_back(std::move(r));
        }
        const auto lp = exact::rref(low);
        std::vector<curve::BranchTuple> basis;
        for (std::size_t k = 0; k < lp.size(); ++k) {
            const auto &r = low[k];
            basis.push_back({TruncatedSeries(p, 0, std::vector<Scalar>(r.begin(), r.begin() + xi1), xi1),
                             TruncatedSeries(p, 0, std::vector<Scalar>(r.begin() + xi1, r.end()), xi2)});
        }
        return curve::LocalRing(p, {xi1, xi2}, std::move(basis));
    }
    fail(ErrorCode::invalid_argument, "no conductor found; the branches may share a component");
}

curve::LocalRing random_plane_two_branch_ring(std::mt19937_64 &rng, exact::Characteristic p, int max_delta)
{
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> small(-3, 3);
    const auto branch = [&]() {
        const bool cusp = coin(rng) == 0;
        std::vector<Scalar> y(7, Scalar::zero(p));
        if (cusp) {
            for (int k = 3; k <= 6; ++k) {
                y[static_cast<std::size_t>(k)] = Scalar::from_int(p, small(rng));
            }
            if (y[3].is_zero() && y[5].is_zero()) {
                y[3] = Scalar::one(p);
            }
        } else {
            // Contact order 1, 2 or 3 with the x axis.
            const int order = coin(rng) + 1;
            for (int k = order; k <= 5; ++k) {
                y[static_cast<std::size_t>(k)] = Scalar::from_int(p, small(rng));
            }
        }
        PlaneBranch b{Polynomial::monomial(Scalar::one(p), cusp ? 2 : 1), Polynomial(p, std::move(y))};
        if (coin(rng) == 0) {
            std::swap(b.x, b.y);
        }
        return b;
    };
    // The first branch changed from t^k on, so the two are tangent.
    const auto perturbed = [&](PlaneBranch b) {
        Polynomial &f = b.x.degree() == b.x.valuation() ? b.y : b.x;
        const int from = coin(rng) + 2;
        std::vector<Scalar> c;
        for (int k = 0; k <= 6; ++k) {
            c.push_back(f.coeff(static_cast<std::size_t>(k)));
        }
        c[static_cast<std::size_t>(from)] += Scalar::from_int(p, small(rng) > 0 ? 1 : -1);
        for (int k = from + 1; k <= 6; ++k) {
            c[static_cast<std::size_t>(k)] += Scalar::from_int(p, small(rng));
        }
        f = Polynomial(p, std::move(c));
        return b;
    };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const PlaneBranch a = branch();
        const PlaneBranch b = coin(rng) == 0 ? branch() : perturbed(a);
        try {
            curve::LocalRing r = plane_two_branch_ring(a, b);
            if (r.delta() >= 1 && r.delta() <= max_delta) {
                return r;
            }
        } catch (const Error &e) {
            if (e.code() != ErrorCode::invalid_argument) {
                throw;
            }
        }
    }
    fail(ErrorCode::internal, "random ring search did not terminate");
}

} // namespace weierforge::valsg2
