#include <weierforge/exact/linalg.hpp>

#include <utility>

#include <weierforge/error.hpp>

namespace weierforge::exact
{

namespace
{

std::size_t check_rectangular(const auto &m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t cols = m.front().size();
    for (const auto &row : m) {
        ensure(row.size() == cols, ErrorCode::ragged_matrix, "rows of differing length");
    }
    return cols;
}

} // namespace

std::vector<std::size_t> rref(ScalarMatrix &m)
{
    const std::size_t cols = check_rectangular(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[r], m[piv]);
        const Scalar inv = m[r][c].inverse();
        for (auto &x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) {
                continue;
            }
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!m[r][j].is_zero()) {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(ScalarMatrix m)
{
    return rref(m).size();
}

Scalar determinant(ScalarMatrix m)
{
    const std::size_t n = check_rectangular(m);
    ensure(n == m.size(), ErrorCode::size_mismatch, "determinant of a non-square matrix");
    if (n == 0) {
        fail(ErrorCode::invalid_argument, "determinant of an empty matrix needs a characteristic");
    }
    const auto p = m[0][0].characteristic();
    Scalar det = Scalar::one(p);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return Scalar::zero(p);
        }
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        const Scalar inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) {
                continue;
            }
            const Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m, std::size_t columns, Characteristic p)
{
    if (!m.empty()) {
        ensure(check_rectangular(m) == columns, ErrorCode::size_mismatch, "nullspace column count");
    }
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Scalar> v(columns, Scalar::zero(p));
        v[free] = Scalar::one(p);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix &m, const std::vector<Scalar> &b)
{
    ensure(m.size() == b.size(), ErrorCode::size_mismatch, "right-hand side length");
    const std::size_t cols = check_rectangular(m);
    if (m.empty()) {
        return std::vector<Scalar>{};
    }
    const auto p = b.front().characteristic();
    ScalarMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].push_back(b[i]);
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) {
        return std::nullopt;
    }
    std::vector<Scalar> x(cols, Scalar::zero(p));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

RankDet fraction_free_rank_det(const PolynomialMatrix &input)
{
    const std::size_t cols = check_rectangular(input);
    const std::size_t rows = input.size();
    RankDet out;
    if (rows == 0) {
        return out;
    }
    const auto p = input[0].empty() ? 0 : input[0][0].characteristic();
    PolynomialMatrix m = input;
    Polynomial prev = Polynomial::constant(Scalar::one(p));
    bool negate = false;
    std::size_t k = 0;
    std::size_t last_pivot_col = 0;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t piv = k;
        while (piv < rows && m[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != k) {
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[k][c] * m[i][j] - m[i][c] * m[k][j]).exact_div(prev);
            }
            m[i][c] = Polynomial(p);
        }
        prev = m[k][c];
        last_pivot_col = c;
        ++k;
    }
    out.rank = k;
    if (rows == cols) {
        if (k < rows) {
            out.det = RationalFunction(p);
        } else {
            Polynomial d = m[rows - 1][last_pivot_col];
            out.det = RationalFunction(negate ? -d : d);
        }
    }
    return out;
}

RankDet fraction_free_rank_det(const RationalMatrix &input)
{
    const std::size_t cols = check_rectangular(input);
    if (input.empty()) {
        return {};
    }
    const auto p = cols == 0 ? 0 : input[0][0].characteristic();
    PolynomialMatrix m;
    Polynomial scale = Polynomial::constant(Scalar::one(p));
    for (const auto &row : input) {
        Polynomial l = Polynomial::constant(Scalar::one(p));
        for (const auto &x : row) {
            l = lcm(l, x.denominator());
        }
        std::vector<Polynomial> prow;
        for (const auto &x : row) {
            prow.push_back(x.numerator() * l.exact_div(x.denominator()));
        }
        scale *= l;
        m.push_back(std::move(prow));
    }
    RankDet out = fraction_free_rank_det(m);
    if (out.det) {
        out.det = *out.det / RationalFunction(scale);
    }
    return out;
}

} // namespace weierforge::exact
