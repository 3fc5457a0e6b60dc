#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "syz/certify.hpp"
#include "syz/koszul/koszul.hpp"
#include "syz/rational.hpp"

using namespace syz;
using namespace syz::koszul;

namespace {

FieldStrategy test_field() { return FieldStrategy::two_random_primes(20240601); }

// Determinantal-resolution oracle for varieties of minimal degree:
// k_{i,1} = i * C(deg, i+1), every row j >= 2 empty.
Int minimal_degree_linear_strand(const Int& deg, long i) { return i * binomial(deg, i + 1); }

// Quadric-relation count oracle: independent quadrics on dim-V letters
// minus the dimension of the degree-2 piece.
Int quadric_count(const GradedRingPresentation& pres) {
    return binomial(Int(pres.dim_v()) + 1, 2) - pres.dim(2);
}

// Sparse product of two differentials, for the complex identity.
bool product_is_zero(const SparseMatrix& f, const SparseMatrix& g) {
    // f: middle -> right, g: left -> middle; check f*g = 0
    REQUIRE(f.cols == g.rows);
    for (uint64_t c = 0; c < g.cols; ++c) {
        std::map<uint32_t, long> acc;
        for (uint64_t k = g.col_ptr[c]; k < g.col_ptr[c + 1]; ++k) {
            const uint32_t mid = g.row_idx[k];
            const long gv = g.values[k];
            for (uint64_t t = f.col_ptr[mid]; t < f.col_ptr[mid + 1]; ++t)
                acc[f.row_idx[t]] += gv * f.values[t];
        }
        for (const auto& [row, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

// The section ring of the degree-4 rational curve projected away from one
// coordinate: fails simplicity at (2,2) while staying degree-1 generated.
GradedRingPresentation projected_quartic(int q_max) {
    std::vector<Exponents> v = {{4, 0}, {2, 2}, {1, 3}, {0, 4}};
    std::vector<std::vector<Exponents>> pieces;
    pieces.push_back({{0, 0}});
    pieces.push_back(v);
    for (int q = 2; q <= q_max; ++q) {
        std::vector<Exponents> next;
        for (const auto& a : v)
            for (const auto& m : pieces[q - 1]) {
                Exponents s = {a[0] + m[0], a[1] + m[1]};
                if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(s);
            }
        std::sort(next.begin(), next.end());
        pieces.push_back(std::move(next));
    }
    return GradedRingPresentation::from_pieces(std::move(pieces));
}

}  // namespace

TEST_CASE("cell dimensions") {
    const auto pres = GradedRingPresentation::veronese(1, 2, 3);
    const auto dims = koszul_cell_dims(pres, 1, 1);
    CHECK(dims.left == 3 * 1);    // wedge^2 V (x) R_0
    CHECK(dims.middle == 3 * 3);  // V (x) R_1
    CHECK(dims.right == 1 * 5);   // R_2
}

TEST_CASE("differential shape and the complex identity") {
    for (const auto& pres :
         {GradedRingPresentation::veronese(1, 3, 4), GradedRingPresentation::veronese(2, 2, 4),
          GradedRingPresentation::scroll({1, 2}, 4)}) {
        for (int p = 1; p + 1 <= std::min(pres.dim_v(), 4); ++p) {
            for (int q = 0; q + 2 <= pres.q_max(); ++q) {
                const auto outer = koszul_differential(pres, p, q + 1);
                const auto inner = koszul_differential(pres, p + 1, q);
                REQUIRE(inner.rows == outer.cols);
                CHECK(product_is_zero(outer, inner));
                // exactly p+1 signed unit entries per column of the inner map
                CHECK(inner.nnz() == static_cast<uint64_t>(p + 1) * inner.cols);
            }
        }
    }
}

TEST_CASE("p = 1, q = 0 differential is the inclusion of V") {
    const auto pres = GradedRingPresentation::veronese(2, 2, 3);
    const auto d = koszul_differential(pres, 1, 0);
    CHECK(d.rows == static_cast<uint64_t>(pres.dim_v()));
    CHECK(d.cols == static_cast<uint64_t>(pres.dim_v()));
    CHECK(rank_fp(d, 2147483629u) == static_cast<uint64_t>(pres.dim_v()));
}

TEST_CASE("conic bookkeeping") {
    // one quadric relation on the degree-2 line: frozen rank accounting
    const auto pres = GradedRingPresentation::veronese(1, 2, 3);
    CHECK(quadric_count(pres) == 1);  // oracle: C(4,2) - 5
    CHECK(rank_fp(koszul_differential(pres, 1, 1), 2147483629u) == 5);
    CHECK(rank_fp(koszul_differential(pres, 2, 0), 2147483629u) == 3);
    KoszulEngine engine(pres, test_field());
    const auto k11 = engine.koszul_dim(1, 1);
    CHECK(k11.value == 1);  // 9 - 5 - 3
    CHECK(engine.koszul_dim(0, 0).value == 1);
    CHECK(engine.koszul_dim(0, 1).value == 0);
    CHECK(engine.koszul_dim(0, 2).value == 0);
    for (int i = 1; i <= 3; ++i) CHECK(engine.koszul_dim(i, 0).value == 0);
}

TEST_CASE("rational normal curve strips match the determinantal oracle") {
    for (int d = 2; d <= 4; ++d) {
        const auto pres = GradedRingPresentation::veronese(1, d, 4);
        const auto strip = betti_strip(pres, d, 3, test_field());
        CHECK_FALSE(strip.has_holes());
        for (int i = 1; i <= d; ++i) {
            CHECK(Int(strip.value(i, 1)) == minimal_degree_linear_strand(d, i));
            CHECK(strip.value(i, 2) == 0);
            CHECK(strip.value(i, 3) == 0);
        }
        CHECK(Int(strip.value(1, 1)) == quadric_count(pres));
    }
}

TEST_CASE("veronese surface at full resolution length") {
    const auto pres = GradedRingPresentation::veronese(2, 2, 4);
    CHECK(quadric_count(pres) == 6);  // 21 - 15
    const auto strip = betti_strip(pres, 3, 3, test_field());
    CHECK_FALSE(strip.has_holes());
    CHECK(strip.value(1, 1) == 6);
    CHECK(strip.value(2, 1) == 8);
    CHECK(strip.value(3, 1) == 3);
    for (int i = 0; i <= 3; ++i)
        for (int j = 2; j <= 3; ++j) CHECK(strip.value(i, j) == 0);
    CHECK(property_np(pres, 2, test_field()).kind == NpVerdict::Kind::holds_certified);
}

TEST_CASE("surface scroll strip") {
    const auto pres = GradedRingPresentation::scroll({1, 2}, 4);
    const auto strip = betti_strip(pres, 3, 3, test_field());
    CHECK(strip.value(1, 1) == 3);
    CHECK(strip.value(2, 1) == 2);
    CHECK(strip.value(3, 1) == 0);
    for (int i = 0; i <= 3; ++i)
        for (int j = 2; j <= 3; ++j) CHECK(strip.value(i, j) == 0);

    // the quadric surface in P^3
    const auto quadric = GradedRingPresentation::scroll({1, 1}, 4);
    const auto qs = betti_strip(quadric, 1, 2, test_field());
    CHECK(qs.value(1, 1) == 1);
}

TEST_CASE("multi-summand scrolls carry the determinantal resolution") {
    // a scroll of total degree deg = sum a_i has k_{i,1} = i * C(deg, i+1)
    struct Case {
        std::vector<int> degrees;
        int p_max;
    };
    for (const Case c : {Case{{1, 1, 1}, 2}, Case{{2, 3}, 4}, Case{{1, 2, 1}, 3}}) {
        int deg = 0;
        for (int a : c.degrees) deg += a;
        const auto pres = GradedRingPresentation::scroll(c.degrees, 4);
        const auto strip = betti_strip(pres, c.p_max, 3, test_field());
        for (int i = 1; i <= c.p_max; ++i) {
            CHECK(Int(strip.value(i, 1)) == minimal_degree_linear_strand(deg, i));
            CHECK(strip.value(i, 2) == 0);
            CHECK(strip.value(i, 3) == 0);
        }
    }
}

TEST_CASE("a one-summand scroll is the rational normal curve") {
    for (int d = 2; d <= 4; ++d) {
        const auto s = betti_strip(GradedRingPresentation::scroll({d}, 4), d - 1, 3, test_field());
        const auto v = betti_strip(GradedRingPresentation::veronese(1, d, 4), d - 1, 3, test_field());
        for (const auto& [key, entry] : v.entries) {
            REQUIRE(entry.cell.has_value());
            CHECK(s.value(key.first, key.second) == entry.cell->value);
        }
    }
}

TEST_CASE("strip values are independent of the basis order") {
    const auto base = GradedRingPresentation::veronese(1, 3, 4);
    const auto reference = betti_strip(base, 2, 3, test_field());
    std::mt19937_64 gen(43);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<Exponents>> pieces;
        for (int q = 0; q <= base.q_max(); ++q) {
            pieces.emplace_back();
            for (int i = 0; i < base.dim(q); ++i) pieces[q].push_back(base.monomial(q, i));
            if (q >= 1) std::shuffle(pieces[q].begin(), pieces[q].end(), gen);
        }
        const auto permuted = GradedRingPresentation::from_pieces(std::move(pieces));
        const auto strip = betti_strip(permuted, 2, 3, test_field());
        for (const auto& [key, entry] : reference.entries)
            CHECK(strip.value(key.first, key.second) == entry.cell->value);
    }
}

TEST_CASE("euler characteristic per antidiagonal matches the alternating dims") {
    // On a full strip both computations see every nonzero cell: the
    // alternating sum of k_{p, t-p} must equal the alternating sum of
    // dim(wedge^p V (x) R_{t-p}).
    for (const auto& pres :
         {GradedRingPresentation::veronese(1, 2, 4), GradedRingPresentation::veronese(1, 3, 4),
          GradedRingPresentation::scroll({1, 1}, 4)}) {
        const int v = pres.dim_v();
        KoszulEngine engine(pres, test_field());
        for (int t = 1; t + 1 <= pres.q_max(); ++t) {
            Rat dim_side = 0, k_side = 0;
            for (int p = 0; p <= std::min(v, t); ++p) {
                const int q = t - p;
                const int sign = (p % 2 == 0) ? 1 : -1;
                dim_side += Rat(sign) * Rat(binomial(Int(v), p) * pres.dim(q));
                k_side += Rat(sign) * Rat(Int(engine.koszul_dim(p, q).value));
            }
            CHECK(dim_side == k_side);
        }
    }
}

TEST_CASE("soundness flags") {
    const auto pres = GradedRingPresentation::veronese(1, 3, 4);
    {
        KoszulEngine engine(pres, test_field());
        CHECK(engine.koszul_dim(1, 2).soundness == Soundness::certified_zero);
        CHECK(engine.koszul_dim(1, 1).soundness == Soundness::probable_value);
    }
    {
        KoszulEngine engine(pres, FieldStrategy::exact());
        const auto cell = engine.koszul_dim(1, 1);
        CHECK(cell.soundness == Soundness::exact);
        CHECK(cell.value == 3);
    }
    {
        KoszulEngine engine(pres, FieldStrategy::single(2147483629u));
        CHECK(engine.koszul_dim(1, 1).soundness == Soundness::probable_value);
        CHECK(engine.koszul_dim(1, 2).soundness == Soundness::certified_zero);
    }
}

TEST_CASE("simplicity verdicts on the projected quartic") {
    // k_{1,1} = 2 and k_{2,2} = 1; frozen from an exact prototype run.
    const auto pres = projected_quartic(4);
    KoszulEngine engine(pres, test_field());
    CHECK(engine.koszul_dim(1, 1).value == 2);
    CHECK(engine.koszul_dim(2, 2).value == 1);

    CHECK(engine.property_np(1, 3).kind == NpVerdict::Kind::holds_certified);

    const auto fail = engine.property_np(2, 3);
    CHECK(fail.kind == NpVerdict::Kind::fails_over_field);
    REQUIRE(fail.witness.has_value());
    CHECK(*fail.witness == std::make_pair(2, 2));
    CHECK(fail.witness_value == 1);
    CHECK(fail.evidence == "two-prime evidence");

    // the same nonzero lands on the cutoff row when j_cut = 2: undecided
    const auto boundary = engine.property_np(2, 2);
    CHECK(boundary.kind == NpVerdict::Kind::undecided);

    // exact arithmetic upgrades the evidence
    KoszulEngine exact_engine(pres, FieldStrategy::exact());
    const auto exact_fail = exact_engine.property_np(2, 3);
    CHECK(exact_fail.kind == NpVerdict::Kind::fails_over_field);
    CHECK(exact_fail.evidence == "exact");
}

TEST_CASE("simplicity is monotone down the levels") {
    const auto pres = GradedRingPresentation::veronese(1, 4, 4);
    KoszulEngine engine(pres, test_field());
    int last_holds = -1;
    for (int p = 0; p <= 3; ++p)
        if (engine.property_np(p).kind == NpVerdict::Kind::holds_certified) last_holds = p;
    CHECK(last_holds == 3);
    for (int p = 0; p <= last_holds; ++p)
        CHECK(engine.property_np(p).kind == NpVerdict::Kind::holds_certified);
}

TEST_CASE("engine verdicts agree with the veronese knowledge base at desk scale") {
    struct Case {
        int n, d, p_hi;
    };
    for (const Case c : {Case{1, 2, 2}, Case{1, 3, 2}, Case{1, 4, 3}, Case{2, 2, 3}}) {
        const auto pres = GradedRingPresentation::veronese(c.n, c.d, 4);
        KoszulEngine engine(pres, test_field());
        for (int p = 0; p <= c.p_hi; ++p) {
            const auto verdict = engine.property_np(p);
            const auto kb = veronese_status(c.n, c.d, p);
            if (verdict.kind == NpVerdict::Kind::holds_certified)
                CHECK(kb == NpStatus::holds);
            if (verdict.kind == NpVerdict::Kind::fails_over_field)
                CHECK(kb == NpStatus::fails);
        }
    }
}

TEST_CASE("prime-field values dominate the exact values") {
    // k over F_ell can only exceed k over the rationals; equal on these rings.
    for (const auto& pres :
         {GradedRingPresentation::veronese(1, 3, 4), GradedRingPresentation::veronese(2, 2, 4),
          GradedRingPresentation::scroll({1, 2}, 4)}) {
        KoszulEngine modular(pres, test_field());
        KoszulEngine exact(pres, FieldStrategy::exact());
        for (int i = 0; i <= std::min(3, pres.dim_v() - 1); ++i)
            for (int j = 1; j <= 3; ++j) {
                const auto kp = modular.koszul_dim(i, j);
                const auto kq = exact.koszul_dim(i, j);
                CHECK(kp.value >= kq.value);
                CHECK(kp.value == kq.value);
            }
    }
}

TEST_CASE("budget holes are explicit") {
    const auto pres = GradedRingPresentation::veronese(2, 2, 4);
    RankBudget tiny;
    tiny.max_entries = 50;
    const auto strip = betti_strip(pres, 3, 3, test_field(), tiny);
    CHECK(strip.has_holes());
    bool saw_hole = false, saw_value = false;
    for (const auto& [key, entry] : strip.entries) {
        if (entry.cell)
            saw_value = true;
        else {
            saw_hole = true;
            CHECK(entry.hole_reason.find("cell too large") != std::string::npos);
        }
    }
    CHECK(saw_hole);
    CHECK(saw_value);

    KoszulEngine engine(pres, test_field(), tiny);
    CHECK(engine.property_np(3, 3).kind == NpVerdict::Kind::undecided);
    CHECK_THROWS_AS(engine.koszul_dim(3, 3), BudgetExceeded);
}

TEST_CASE("two primes that disagree escalate to exact") {
    // A matrix with determinant divisible by exactly one of the two chosen
    // primes: the cell value must come from the exact path. Cooked through
    // the public interface with a tiny prime pair is impractical, so this
    // exercises the rank layer contract instead: F_p rank can only drop.
    std::vector<std::tuple<uint32_t, uint32_t, int32_t>> ts = {{0, 0, 3}, {1, 1, 5}};
    const auto m = SparseMatrix::from_triplets(2, 2, ts);
    CHECK(rank_fp(m, 3, RankBudget{}) == 1);
    CHECK(rank_fp(m, 5, RankBudget{}) == 1);
    CHECK(rank_exact(m) == 2);
}

TEST_CASE("engine rejects out-of-range requests") {
    const auto pres = GradedRingPresentation::veronese(1, 2, 3);
    KoszulEngine engine(pres, test_field());
    CHECK_THROWS_AS(engine.koszul_dim(1, 3), std::out_of_range);  // needs R_4
    CHECK_THROWS_AS(koszul_differential(pres, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(koszul_differential(pres, 4, 0), std::out_of_range);
    CHECK_THROWS_AS(koszul_differential(pres, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(betti_strip(pres, 9, 3, test_field()), std::invalid_argument);
    CHECK_THROWS_AS(betti_strip(pres, 1, 3, test_field()), std::invalid_argument);  // q_max too small
}
