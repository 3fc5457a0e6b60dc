#pragma once

#include <map>
#include <optional>
#include <string>

#include "syz/koszul/rank.hpp"
#include "syz/koszul/ring.hpp"
#include "syz/rational.hpp"

namespace syz::koszul {

// Coefficient field policy for rank computations.
//
// Ranks over a prime field never exceed the rational rank, so a computed
// graded Betti value is >= the characteristic-zero value: a zero is
// certified for the rationals, a nonzero value is evidence only. The
// default policy uses two independent random 31-bit primes and escalates
// to exact arithmetic when they disagree.
struct FieldStrategy {
    enum class Mode { two_prime, single_prime, exact };
    Mode mode = Mode::two_prime;
    uint32_t prime1 = 0;
    uint32_t prime2 = 0;

    static FieldStrategy two_random_primes(std::optional<uint64_t> seed = std::nullopt);
    static FieldStrategy single(uint32_t prime);
    static FieldStrategy exact() { return {Mode::exact, 0, 0}; }
    static FieldStrategy parse(const std::string& text, std::optional<uint64_t> seed = std::nullopt);

    std::string describe() const;
};

enum class Soundness { certified_zero, probable_value, exact };

std::string soundness_str(Soundness s);

struct KoszulCellDims {
    Int left;    // wedge^{p+1} V (x) R_{q-1}
    Int middle;  // wedge^p V (x) R_q
    Int right;   // wedge^{p-1} V (x) R_{q+1}
};
KoszulCellDims koszul_cell_dims(const GradedRingPresentation& pres, int p, int q);

// The Koszul map wedge^p V (x) R_q -> wedge^{p-1} V (x) R_{q+1},
//   e_{i_1} ^ ... ^ e_{i_p} (x) m  |->
//     sum_j (-1)^{j+1} e_{i_1} ^ ... ^ (omit i_j) ^ ... ^ e_{i_p} (x) v_{i_j} m,
// wedge bases in lexicographic order of index tuples. Entries are exactly
// 0, +1, -1 with p nonzeros per column. Requires 1 <= p <= dim V and
// 0 <= q < q_max.
SparseMatrix koszul_differential(const GradedRingPresentation& pres, int p, int q);

struct CellValue {
    uint64_t value = 0;
    Soundness soundness = Soundness::certified_zero;
};

struct BettiEntry {
    std::optional<CellValue> cell;  // nullopt = hole
    std::string hole_reason;
};

struct BettiStrip {
    int p_max = 0;
    int j_max = 0;
    std::string field;  // descriptor of the strategy actually used
    std::map<std::pair<int, int>, BettiEntry> entries;

    bool has_holes() const;
    const BettiEntry& at(int i, int j) const;
    // Value of a computed cell; throws if it is a hole.
    uint64_t value(int i, int j) const;
};

struct NpVerdict {
    enum class Kind { holds_certified, fails_over_field, undecided };
    Kind kind = Kind::undecided;
    std::optional<std::pair<int, int>> witness;  // failing or blocking cell
    uint64_t witness_value = 0;
    std::string evidence;
};

// Computes graded Betti numbers k_{p,q} of the presented ring as
//   dim(wedge^p V (x) R_q) - rank d_{p,q} - rank d_{p+1,q-1},
// caching differential ranks so adjacent cells share work.
class KoszulEngine {
public:
    KoszulEngine(const GradedRingPresentation& pres, FieldStrategy field,
                 RankBudget budget = {});

    CellValue koszul_dim(int p, int q);  // throws BudgetExceeded on oversize cells
    BettiStrip betti_strip(int p_max, int j_max);

    // Verdict on level p from the rows 2 <= j <= j_cut:
    //   * all cells zero            -> holds_certified,
    //   * a nonzero cell, j < j_cut -> fails_over_field,
    //   * a nonzero cell at j_cut   -> undecided (the row window cannot
    //     distinguish a genuine tail from a truncation artifact),
    //   * an oversize cell          -> undecided with the hole recorded.
    NpVerdict property_np(int p, int j_cut = 3);

    const FieldStrategy& field() const { return field_; }

private:
    uint64_t rank_of(int p, int q, int which);  // which: 0/1 = primes, 2 = exact

    const GradedRingPresentation& pres_;
    FieldStrategy field_;
    RankBudget budget_;
    std::map<std::pair<int, int>, uint64_t> rank_cache_[3];
};

// One-shot conveniences mirroring the engine methods.
CellValue koszul_dim(const GradedRingPresentation& pres, int p, int q,
                     const FieldStrategy& field, const RankBudget& budget = {});
BettiStrip betti_strip(const GradedRingPresentation& pres, int p_max, int j_max,
                       const FieldStrategy& field, const RankBudget& budget = {});
NpVerdict property_np(const GradedRingPresentation& pres, int p,
                      const FieldStrategy& field, const RankBudget& budget = {},
                      int j_cut = 3);

}  // namespace syz::koszul
