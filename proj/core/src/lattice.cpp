#include "affdyn/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace affdyn::lattice {

namespace {

// Echelon reduction by integer row operations restricted to the first
// `cols` columns. Rows keep their full width, so an augmented part rides
// along untouched by the pivot logic.
void echelonize(Matrix& rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // gcd-eliminate column c below row r
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[i][c]) < abs(rows[best][c])) {
                    best = i;
                }
            }
            if (best == rows.size()) break;  // column already zero below r
            std::swap(rows[r], rows[best]);
            if (rows[r][c] < 0) {
                for (Int& x : rows[r]) x = -x;
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = floor_div(rows[i][c], rows[r][c]);
                if (q != 0) {
                    for (std::size_t k = 0; k < rows[i].size(); ++k) {
                        rows[i][k] -= q * rows[r][k];
                    }
                }
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
}

std::size_t pivot_column(const Vec& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

}  // namespace

Matrix hnf(Matrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    for (const Vec& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("hnf: ragged matrix");
    }
    echelonize(rows, cols);
    // drop zero rows
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const Vec& row) { return pivot_column(row) == row.size(); }),
               rows.end());
    // reduce entries above each pivot into [0, pivot)
    for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t c = pivot_column(rows[i]);
        for (std::size_t k = 0; k < i; ++k) {
            Int q = floor_div(rows[k][c], rows[i][c]);
            if (q != 0) {
                for (std::size_t j = 0; j < cols; ++j) {
                    rows[k][j] -= q * rows[i][j];
                }
            }
        }
    }
    return rows;
}

Matrix kernel(const Matrix& a) {
    if (a.empty()) return {};
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    // rows of [a^T | I_n]; left part eliminated, right part tracks the
    // unimodular transformation
    Matrix aug(n, Vec(m + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (a[j].size() != n) throw std::invalid_argument("kernel: ragged matrix");
            aug[i][j] = a[j][i];
        }
        aug[i][m + i] = 1;
    }
    echelonize(aug, m);
    Matrix ker;
    for (const Vec& row : aug) {
        bool zero = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (row[j] != 0) {
                zero = false;
                break;
            }
        }
        if (zero) ker.emplace_back(row.begin() + m, row.end());
    }
    return hnf(std::move(ker));
}

bool member(const Matrix& h, Vec v) {
    for (const Vec& row : h) {
        if (v.size() != row.size()) throw std::invalid_argument("member: size mismatch");
        const std::size_t c = pivot_column(row);
        if (c == row.size()) continue;
        if (v[c] % row[c] != 0) return false;
        Int q = v[c] / row[c];
        if (q != 0) {
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
        }
    }
    for (const Int& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace affdyn::lattice
