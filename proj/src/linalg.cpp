#include "ahh/linalg.hpp"

namespace ahh {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.a[sel][col].is_zero()) ++sel;
        if (sel == m.rows) continue;
        std::swap(m.a[sel], m.a[row]);
        Scalar inv = m.a[row][col].inverse();
        std::vector<std::size_t> nz;
        for (std::size_t j = col; j < m.cols; ++j)
            if (!m.a[row][j].is_zero()) {
                m.a[row][j] *= inv;
                nz.push_back(j);
            }
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.a[r][col].is_zero()) continue;
            Scalar f = m.a[r][col];
            for (std::size_t j : nz) m.a[r][j] -= f * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> nullspace(Matrix m) {
    auto piv = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols, Scalar(m.field));
        v[free] = Scalar(m.field, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.a[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::optional<std::vector<Scalar>>> solve_many(const Matrix& m,
                                                           const std::vector<std::vector<Scalar>>& rhs) {
    Matrix aug(m.field, m.rows, m.cols + rhs.size());
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) aug.a[r][c] = m.a[r][c];
        for (std::size_t k = 0; k < rhs.size(); ++k)
            if (r < rhs[k].size()) aug.a[r][m.cols + k] = rhs[k][r];
    }
    // eliminate only over the coefficient columns
    Matrix& work = aug;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < work.rows; ++col) {
        std::size_t sel = row;
        while (sel < work.rows && work.a[sel][col].is_zero()) ++sel;
        if (sel == work.rows) continue;
        std::swap(work.a[sel], work.a[row]);
        Scalar inv = work.a[row][col].inverse();
        std::vector<std::size_t> nz;
        for (std::size_t j = col; j < work.cols; ++j)
            if (!work.a[row][j].is_zero()) {
                work.a[row][j] *= inv;
                nz.push_back(j);
            }
        for (std::size_t r = 0; r < work.rows; ++r) {
            if (r == row || work.a[r][col].is_zero()) continue;
            Scalar f = work.a[r][col];
            for (std::size_t j : nz) work.a[r][j] -= f * work.a[row][j];
        }
        piv.push_back(col);
        ++row;
    }
    std::vector<std::optional<std::vector<Scalar>>> out;
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        bool ok = true;
        for (std::size_t r = piv.size(); r < work.rows; ++r)
            if (!work.a[r][m.cols + k].is_zero()) ok = false;
        if (!ok) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<Scalar> v(m.cols, Scalar(m.field));
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = work.a[i][m.cols + k];
        out.emplace_back(std::move(v));
    }
    return out;
}

PolyEchelon column_echelon(std::vector<PolyColumn> cols, std::size_t n) {
    PolyEchelon out;
    std::vector<bool> used(cols.size(), false);
    std::vector<std::size_t> pivot_cols;
    for (std::size_t r = 0; r < n; ++r) {
        for (;;) {
            std::size_t best = cols.size();
            std::size_t nonzero = 0;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (used[c] || cols[c][r].is_zero()) continue;
                ++nonzero;
                if (best == cols.size() || cols[c][r].degree() < cols[best][r].degree()) best = c;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                Scalar inv = cols[best][r].lead().inverse();
                for (auto& e : cols[best]) e *= inv;
                // reduce earlier pivot columns at this row
                for (std::size_t pc : pivot_cols) {
                    Poly q = divrem(cols[pc][r], cols[best][r]).first;
                    if (q.is_zero()) continue;
                    for (std::size_t i = 0; i < n; ++i) cols[pc][i] -= q * cols[best][i];
                }
                used[best] = true;
                pivot_cols.push_back(best);
                out.pivot_rows.push_back(r);
                break;
            }
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (used[c] || c == best || cols[c][r].is_zero()) continue;
                Poly q = divrem(cols[c][r], cols[best][r]).first;
                for (std::size_t i = 0; i < n; ++i) cols[c][i] -= q * cols[best][i];
            }
        }
    }
    for (std::size_t pc : pivot_cols) out.basis.push_back(cols[pc]);
    return out;
}

Poly poly_det(std::vector<PolyColumn> cols) {
    std::size_t n = cols.size();
    if (n == 0) return Poly();
    Field f = cols[0][0].field();
    // work on rows: m[i][j] = cols[j][i]
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    Poly prev = Poly::constant(f, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) ++s;
            if (s == n) return Poly(f);
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace ahh
