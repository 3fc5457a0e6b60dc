#include "syz/koszul/rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace syz::koszul {

SparseMatrix SparseMatrix::from_triplets(
    uint64_t rows, uint64_t cols,
    const std::vector<std::tuple<uint32_t, uint32_t, int32_t>>& ts) {
    auto sorted = ts;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
    });
    SparseMatrixBuilder b(rows, cols, sorted.size());
    std::size_t i = 0;
    for (uint64_t c = 0; c < cols; ++c) {
        for (; i < sorted.size() && std::get<1>(sorted[i]) == c; ++i) {
            if (std::get<0>(sorted[i]) >= rows || std::get<1>(sorted[i]) >= cols)
                throw std::out_of_range("triplet outside matrix");
            b.add(std::get<0>(sorted[i]), std::get<2>(sorted[i]));
        }
        b.finish_column();
    }
    return b.take();
}

namespace {

// Union-find over the rows touched by at least one column.
struct DisjointSet {
    std::vector<uint32_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    uint32_t find(uint32_t x) {
        uint32_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            uint32_t next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

struct Component {
    std::vector<uint32_t> columns;
    std::vector<uint32_t> rows;  // sorted global row ids
};

// Splits into connected components after dropping entries that are zero
// under the given value filter (identity for exact, mod p otherwise).
// Memory is proportional to the surviving entries, not to the row space.
template <typename KeepEntry>
std::vector<Component> split_components(const SparseMatrix& m, KeepEntry keep) {
    std::vector<uint32_t> row_of;  // sorted unique touched rows
    for (std::size_t k = 0; k < m.row_idx.size(); ++k)
        if (keep(m.values[k])) row_of.push_back(m.row_idx[k]);
    std::sort(row_of.begin(), row_of.end());
    row_of.erase(std::unique(row_of.begin(), row_of.end()), row_of.end());
    const auto compact = [&](uint32_t r) {
        return static_cast<uint32_t>(
            std::lower_bound(row_of.begin(), row_of.end(), r) - row_of.begin());
    };
    DisjointSet ds(row_of.size());
    for (uint64_t c = 0; c < m.cols; ++c) {
        uint32_t first = UINT32_MAX;
        for (uint64_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k) {
            if (!keep(m.values[k])) continue;
            const uint32_t rc = compact(m.row_idx[k]);
            if (first == UINT32_MAX)
                first = rc;
            else
                ds.unite(first, rc);
        }
    }
    // Group columns by the component of their first surviving row.
    std::vector<uint32_t> root_order(row_of.size(), UINT32_MAX);
    std::vector<Component> comps;
    for (uint64_t c = 0; c < m.cols; ++c) {
        uint32_t first = UINT32_MAX;
        for (uint64_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k)
            if (keep(m.values[k])) {
                first = compact(m.row_idx[k]);
                break;
            }
        if (first == UINT32_MAX) continue;  // empty column
        const uint32_t root = ds.find(first);
        if (root_order[root] == UINT32_MAX) {
            root_order[root] = static_cast<uint32_t>(comps.size());
            comps.emplace_back();
        }
        comps[root_order[root]].columns.push_back(static_cast<uint32_t>(c));
    }
    for (uint32_t r = 0; r < row_of.size(); ++r) {
        const uint32_t root = ds.find(r);
        if (root_order[root] != UINT32_MAX)
            comps[root_order[root]].rows.push_back(row_of[r]);
    }
    return comps;
}

uint64_t dense_rank_fp(std::vector<uint32_t>& a, std::size_t nrows, std::size_t ncols,
                       uint32_t prime) {
    const uint64_t p = prime;
    auto powmod = [&](uint64_t base, uint64_t exp) {
        uint64_t acc = 1;
        base %= p;
        while (exp) {
            if (exp & 1) acc = acc * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (a[r * ncols + col]) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < ncols; ++j)
                std::swap(a[pivot * ncols + j], a[rank * ncols + j]);
        const uint64_t inv = powmod(a[rank * ncols + col], p - 2);
        for (std::size_t j = col; j < ncols; ++j)
            a[rank * ncols + j] = static_cast<uint32_t>(a[rank * ncols + j] * inv % p);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            const uint64_t f = a[r * ncols + col];
            if (!f) continue;
            const uint64_t neg = p - f;
            for (std::size_t j = col; j < ncols; ++j) {
                a[r * ncols + j] = static_cast<uint32_t>(
                    (a[r * ncols + j] + neg * a[rank * ncols + j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

uint64_t dense_rank_bareiss(std::vector<mpz_class>& a, std::size_t nrows, std::size_t ncols) {
    std::size_t rank = 0;
    mpz_class prev(1);
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (a[r * ncols + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < ncols; ++j)
                std::swap(a[pivot * ncols + j], a[rank * ncols + j]);
        const std::size_t pr = rank * ncols;
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            const std::size_t rr = r * ncols;
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class t = a[pr + col] * a[rr + j] - a[rr + col] * a[pr + j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[rr + j] = std::move(t);
            }
            a[rr + col] = 0;
        }
        prev = a[pr + col];
        ++rank;
    }
    return rank;
}

// The elimination cost is the dense workspace of every component together;
// refusing up front keeps oversize cells from grinding block by block.
void check_workspace_budget(const std::vector<Component>& comps, const RankBudget& budget) {
    uint64_t total = 0;
    for (const auto& comp : comps) {
        const uint64_t w = static_cast<uint64_t>(comp.rows.size()) * comp.columns.size();
        total = (total > UINT64_MAX - w) ? UINT64_MAX : total + w;
        if (w > budget.max_entries || total > budget.max_entries)
            throw BudgetExceeded(std::max(w, total), budget.max_entries,
                                 "total elimination workspace");
    }
}

}  // namespace

uint64_t rank_fp(const SparseMatrix& m, uint32_t prime, const RankBudget& budget) {
    if (prime <= 2 || prime >= (1u << 31))
        throw std::invalid_argument("rank_fp needs an odd prime below 2^31");
    if (m.nnz() > budget.max_entries)
        throw BudgetExceeded(m.nnz(), budget.max_entries, "stored entries");
    const auto keep = [&](int32_t v) { return v % static_cast<int64_t>(prime) != 0; };
    const auto comps = split_components(m, keep);
    check_workspace_budget(comps, budget);
    uint64_t rank = 0;
    for (const auto& comp : comps) {
        const std::size_t nr = comp.rows.size(), nc = comp.columns.size();
        std::vector<uint32_t> dense(nr * nc, 0);
        for (std::size_t j = 0; j < nc; ++j) {
            const uint32_t c = comp.columns[j];
            for (uint64_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k) {
                if (!keep(m.values[k])) continue;
                const auto it = std::lower_bound(comp.rows.begin(), comp.rows.end(), m.row_idx[k]);
                const std::size_t i = static_cast<std::size_t>(it - comp.rows.begin());
                int64_t v = m.values[k] % static_cast<int64_t>(prime);
                if (v < 0) v += prime;
                dense[i * nc + j] = static_cast<uint32_t>((dense[i * nc + j] + v) % prime);
            }
        }
        rank += dense_rank_fp(dense, nr, nc, prime);
    }
    return rank;
}

uint64_t rank_exact(const SparseMatrix& m, const RankBudget& budget) {
    if (m.nnz() > budget.max_entries)
        throw BudgetExceeded(m.nnz(), budget.max_entries, "stored entries");
    const auto keep = [](int32_t v) { return v != 0; };
    const auto comps = split_components(m, keep);
    check_workspace_budget(comps, budget);
    uint64_t rank = 0;
    for (const auto& comp : comps) {
        const std::size_t nr = comp.rows.size(), nc = comp.columns.size();
        std::vector<mpz_class> dense(nr * nc);
        for (std::size_t j = 0; j < nc; ++j) {
            const uint32_t c = comp.columns[j];
            for (uint64_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k) {
                if (!m.values[k]) continue;
                const auto it = std::lower_bound(comp.rows.begin(), comp.rows.end(), m.row_idx[k]);
                const std::size_t i = static_cast<std::size_t>(it - comp.rows.begin());
                dense[i * nc + j] += m.values[k];
            }
        }
        rank += dense_rank_bareiss(dense, nr, nc);
    }
    return rank;
}

uint32_t random_prime31(uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<uint32_t> dist(1u << 30, (1u << 31) - 1);
    for (;;) {
        uint32_t cand = dist(gen) | 1u;
        mpz_class z(cand);
        if (mpz_probab_prime_p(z.get_mpz_t(), 40) != 0) return cand;
    }
}

}  // namespace syz::koszul
