#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "syz/koszul/sparse.hpp"

namespace syz::koszul {

// Cap on the entries a rank computation may touch: the stored sparse
// entries of the matrix, and the dense elimination workspace summed over
// its connected components. Checked before any elimination starts, so an
// oversize cell is refused up front and reported as an explicit hole,
// never silently skipped or ground through block by block.
struct RankBudget {
    uint64_t max_entries = 200'000'000;
};

struct BudgetExceeded : std::runtime_error {
    uint64_t required;
    uint64_t budget;
    BudgetExceeded(uint64_t req, uint64_t bud, const std::string& what)
        : std::runtime_error("cell too large: " + what + " needs " + std::to_string(req) +
                             " entries, budget " + std::to_string(bud)),
          required(req), budget(bud) {}
};

// Rank over F_prime. The matrix is split into connected components (columns
// sharing no rows are independent), each eliminated densely; ranks add.
// Requires an odd prime below 2^31.
uint64_t rank_fp(const SparseMatrix& m, uint32_t prime, const RankBudget& budget = {});

// Rank over the rationals via fraction-free (Bareiss) elimination on the
// integer matrix, same component decomposition.
uint64_t rank_exact(const SparseMatrix& m, const RankBudget& budget = {});

// Uniformly random 31-bit prime (top bit set), deterministic for a fixed seed.
uint32_t random_prime31(uint64_t seed);

}  // namespace syz::koszul
