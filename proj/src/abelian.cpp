#include "drl/abelian.hpp"

#include <algorithm>

namespace drl {

Int AbelianPresentation::order() const {
    Int n = 1;
    for (const auto& d : divisors) n *= d;
    return n;
}

std::vector<Int> AbelianPresentation::canonical(
    const std::vector<Int>& raw) const {
    if (static_cast<int>(raw.size()) != ngens)
        throw validation_error("exponent vector has wrong length");
    std::vector<Int> out;
    for (size_t k = 0; k < divisors.size(); ++k) {
        int j = positions[k];
        Int v = 0;
        for (int i = 0; i < ngens; ++i) v += raw[i] * transform[i][j];
        out.push_back(mod_floor(v, divisors[k]));
    }
    return out;
}

using Mat = std::vector<std::vector<Int>>;

static void row_hermite(Mat& m, int cols) {
    // Reduce to at most `cols` rows spanning the same lattice.
    int rows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd-combine everything in column c below row r into row r
        for (int i = r + 1; i < rows; ++i) {
            while (m[i][c] != 0) {
                if (m[r][c] == 0) {
                    std::swap(m[r], m[i]);
                    continue;
                }
                Int q = floor_div(m[i][c], m[r][c]);
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] != 0) ++r;
    }
    m.resize(r > 0 ? r : 1, std::vector<Int>(cols, 0));
}

AbelianPresentation presentation_from_relations(
    int ngens, const std::vector<std::vector<Int>>& rows) {
    AbelianPresentation P;
    P.ngens = ngens;
    P.transform.assign(ngens, std::vector<Int>(ngens, 0));
    for (int i = 0; i < ngens; ++i) P.transform[i][i] = 1;
    if (ngens == 0) return P;

    Mat m = rows;
    if (m.empty()) m.push_back(std::vector<Int>(ngens, 0));
    for (auto& row : m)
        if (static_cast<int>(row.size()) != ngens)
            throw validation_error("relation row has wrong length");
    row_hermite(m, ngens);

    int r = static_cast<int>(m.size()), c = ngens;
    Mat& V = P.transform;
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (auto& row : m) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
    };
    auto addmul_col = [&](int dst, int src, const Int& q) {
        for (auto& row : m) row[dst] -= q * row[src];
        for (auto& row : V) row[dst] -= q * row[src];
    };

    int k = 0;
    while (k < r && k < c) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = k; i < r; ++i)
            for (int j = k; j < c; ++j)
                if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        swap_cols(k, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (m[i][k] == 0) continue;
                Int q = floor_div(m[i][k], m[k][k]);
                for (int j = 0; j < c; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) {
                    std::swap(m[k], m[i]);
                    clean = false;
                }
            }
            for (int j = k + 1; j < c; ++j) {
                if (m[k][j] == 0) continue;
                Int q = floor_div(m[k][j], m[k][k]);
                addmul_col(j, k, q);
                if (m[k][j] != 0) {
                    swap_cols(k, j);
                    clean = false;
                }
            }
        }
        ++k;
    }
    int rank = k;
    if (rank < ngens)
        throw validation_error("relation lattice does not have full rank");
    for (int i = 0; i < rank; ++i) {
        if (m[i][i] < 0) {
            for (auto& row : m) row[i] = -row[i];
            for (auto& row : V) row[i] = -row[i];
        }
    }
    // Enforce the divisor chain d_i | d_j for i < j.
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            if (divisible(m[j][j], m[i][i])) continue;
            addmul_col(i, j, Int(-1));  // col_i += col_j, giving m[j][i] = d_j
            // Euclid on rows i and j within columns i, j.
            while (m[j][i] != 0) {
                Int q = floor_div(m[i][i], m[j][i]);
                for (int col : {i, j}) m[i][col] -= q * m[j][col];
                std::swap(m[i], m[j]);
            }
            if (m[i][i] < 0)
                for (int col : {i, j}) m[i][col] = -m[i][col];
            if (m[i][j] != 0) {
                Int q = m[i][j] / m[i][i];  // exact by construction
                addmul_col(j, i, q);
            }
            if (m[j][j] < 0) {
                for (auto& row : m) row[j] = -row[j];
                for (auto& row : V) row[j] = -row[j];
            }
        }
    }
    for (int i = 0; i < rank; ++i) {
        if (m[i][i] > 1) {
            P.divisors.push_back(m[i][i]);
            P.positions.push_back(i);
        }
    }
    return P;
}

}  // namespace drl
