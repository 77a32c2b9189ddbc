#include "drl/monoid_table.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace drl {

bool MonoidTable::is_unit(int i) const {
    for (int j = 0; j < n; ++j)
        if (mul(i, j) == id) return true;
    return false;
}

std::vector<int> MonoidTable::units() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (is_unit(i)) out.push_back(i);
    return out;
}

std::vector<int> MonoidTable::idempotents() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mul(i, i) == i) out.push_back(i);
    return out;
}

void MonoidTable::validate() const {
    if (static_cast<int>(tab.size()) != n * n)
        throw validation_error("monoid table has wrong size");
    for (int i = 0; i < n; ++i) {
        if (mul(id, i) != i || mul(i, id) != i)
            throw validation_error("monoid identity fails");
        for (int j = 0; j < n; ++j) {
            if (mul(i, j) < 0 || mul(i, j) >= n)
                throw validation_error("monoid table entry out of range");
            if (mul(i, j) != mul(j, i))
                throw validation_error("monoid not commutative");
            for (int l = 0; l < n; ++l)
                if (mul(mul(i, j), l) != mul(i, mul(j, l)))
                    throw validation_error("monoid not associative");
        }
    }
}

MonoidTable mult_monoid_mod(long m) {
    MonoidTable M;
    M.n = static_cast<int>(m);
    M.id = static_cast<int>(1 % m);
    M.tab.resize(m * m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) M.tab[i * m + j] = static_cast<int>(i * j % m);
    return M;
}

MonoidTable mult_monoid_mod_negation(long m) {
    auto rep = [m](long x) { return std::min(x, (m - x) % m); };
    std::vector<long> elems;
    for (long x = 0; x <= m / 2; ++x) elems.push_back(x);
    MonoidTable M;
    M.n = static_cast<int>(elems.size());
    M.id = static_cast<int>(rep(1 % m));
    M.tab.resize(M.n * M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j)
            M.set(i, j, static_cast<int>(rep(elems[i] * elems[j] % m)));
    return M;
}

/* Invariant fingerprint: unit flag, idempotent flag, index and period of the
 * cyclic subsemigroup, and the size of the principal ideal xM. */
static std::vector<std::tuple<bool, bool, int, int, int>> signatures(
    const MonoidTable& M) {
    std::vector<std::tuple<bool, bool, int, int, int>> out(M.n);
    for (int x = 0; x < M.n; ++x) {
        std::vector<int> seen_at(M.n, -1);
        int cur = x, step = 0;
        while (seen_at[cur] < 0) {
            seen_at[cur] = step++;
            cur = M.mul(cur, x);
        }
        int tail = seen_at[cur];
        int period = step - seen_at[cur];
        std::set<int> image;
        for (int j = 0; j < M.n; ++j) image.insert(M.mul(x, j));
        out[x] = {M.is_unit(x), M.mul(x, x) == x, tail, period,
                  static_cast<int>(image.size())};
    }
    return out;
}

/* Greedy generating sequence: scan elements, keep those outside the closure
 * of the ones already kept. */
static std::vector<int> generating_set(const MonoidTable& M) {
    std::vector<int> gens;
    std::vector<char> closed(M.n, 0);
    auto close = [&]() {
        std::vector<int> frontier;
        for (int i = 0; i < M.n; ++i)
            if (closed[i]) frontier.push_back(i);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int g : gens) {
                    int p = M.mul(a, g);
                    if (!closed[p]) {
                        closed[p] = 1;
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
    };
    closed[M.id] = 1;
    for (int x = 0; x < M.n; ++x) {
        if (closed[x]) continue;
        gens.push_back(x);
        close();
    }
    return gens;
}

/* Extend generator images to a full map by closure; fails on any conflict
 * with the target table or loss of injectivity. */
static bool extend_map(const MonoidTable& A, const MonoidTable& B,
                       const std::vector<int>& gens,
                       const std::vector<int>& images, size_t ngen,
                       std::vector<int>& map) {
    map.assign(A.n, -1);
    std::vector<char> used(B.n, 0);
    map[A.id] = B.id;
    used[B.id] = 1;
    std::vector<int> frontier{A.id};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (size_t gi = 0; gi < ngen; ++gi) {
                int p = A.mul(a, gens[gi]);
                int q = B.mul(map[a], images[gi]);
                if (map[p] >= 0) {
                    if (map[p] != q) return false;
                } else {
                    if (used[q]) return false;
                    map[p] = q;
                    used[q] = 1;
                    next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return true;
}

std::optional<std::vector<int>> monoid_isomorphism(const MonoidTable& A,
                                                   const MonoidTable& B) {
    if (A.n != B.n) return std::nullopt;
    auto sa = signatures(A), sb = signatures(B);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;
    }
    std::vector<int> gens = generating_set(A);
    std::vector<std::vector<int>> candidates;
    for (int g : gens) {
        std::vector<int> c;
        for (int y = 0; y < B.n; ++y)
            if (sb[y] == sa[g]) c.push_back(y);
        if (c.empty()) return std::nullopt;
        candidates.push_back(std::move(c));
    }
    std::vector<int> images(gens.size(), -1), map;
    // DFS with closure consistency at every level.
    std::vector<size_t> pos(gens.size(), 0);
    size_t level = 0;
    while (true) {
        if (level == gens.size()) {
            if (extend_map(A, B, gens, images, gens.size(), map)) {
                bool total = true;
                for (int v : map) total = total && v >= 0;
                if (total) return map;
            }
            if (level == 0) return std::nullopt;
            --level;
            ++pos[level];
            continue;
        }
        if (pos[level] >= candidates[level].size()) {
            if (level == 0) return std::nullopt;
            pos[level] = 0;
            --level;
            ++pos[level];
            continue;
        }
        images[level] = candidates[level][pos[level]];
        if (extend_map(A, B, gens, images, level + 1, map)) {
            ++level;
        } else {
            ++pos[level];
        }
    }
}

std::vector<Int> abelian_invariants(const MonoidTable& g) {
    std::vector<std::vector<Int>> rows;
    std::vector<Int> idrow(g.n, 0);
    idrow[g.id] = 1;
    rows.push_back(idrow);
    for (int i = 0; i < g.n; ++i)
        for (int j = i; j < g.n; ++j) {
            std::vector<Int> r(g.n, 0);
            r[i] += 1;
            r[j] += 1;
            r[g.mul(i, j)] -= 1;
            rows.push_back(std::move(r));
        }
    return presentation_from_relations(g.n, rows).divisors;
}

}  // namespace drl
