// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "syz/certify.hpp"
#include "syz/koszul/koszul.hpp"
#include "syz/report.hpp"

using namespace syz;
using namespace syz::koszul;

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::fprintf(stderr, "    check failed: %s\n", what.c_str());
        ++checks_failed;
    }
}

FieldStrategy acceptance_field() { return FieldStrategy::two_random_primes(); }

// ---- criterion 1: corollary threshold tables ------------------------------

void corollary_thresholds() {
    // quadratic thresholds: strict 2+p for genus 1, then 5+p, 7+p, 9+p, 11+p
    // within the stated p ranges
    struct Row {
        int g;
        long offset;
        long p_max;
    };
    const std::vector<Row> rows = {{2, 5, 6}, {3, 7, 4}, {4, 9, 2}, {5, 11, 2}};
    for (long p = 0; p <= 6; ++p) {
        // genus 1: the bound is strict: exactly 2+p fails, anything above works
        const Rat at = Rat(2 + p);
        if (at > 2) {
            const auto on_boundary = quadratic_p_max(at, 1);
            expect(!on_boundary || *on_boundary < p, "g=1 boundary 2+p must not certify p");
        }
        const auto above = quadratic_p_max(at + Rat(1) / 1000000, 1);
        expect(above && *above >= p, "g=1 certifies just above 2+p");
        expect(quadratic_threshold(1, p) == 3 + p, "g=1 integer threshold");
    }
    for (const auto& row : rows) {
        for (long p = 0; p <= row.p_max; ++p) {
            expect(quadratic_threshold(row.g, p) == row.offset + p,
                   "genus " + std::to_string(row.g) + " threshold at p=" + std::to_string(p));
            if (row.offset + p - 1 > 2 * row.g) {
                const auto below = quadratic_p_max(Rat(Int(row.offset + p - 1)), row.g);
                expect(!below || *below < p, "threshold minimality");
            }
        }
    }
    // normal generation / presentation via the Butler rule: 2g+1 and 2g+2
    for (int g = 1; g <= 5; ++g) {
        EmbeddingSpec s;
        s.genus = g;
        s.n = 1;
        s.a = 2;
        s.bundle = FormalBundle::make_semistable(2, 0);
        s.b = 2 * g + 1;
        auto t = certify_butler(s);
        expect(t.outcome == RuleTrace::Outcome::certifies && t.certified.value == 0,
               "N_0 at 2g+1");
        s.b = 2 * g;
        expect(certify_butler(s).outcome == RuleTrace::Outcome::inapplicable,
               "no Butler level below 2g+1");
        s.b = 2 * g + 2;
        t = certify_butler(s);
        expect(t.certified.value >= 1, "N_1 at 2g+2");
    }
}

// ---- criterion 2: closed form vs brute-force scan --------------------------

void quadratic_oracle() {
    std::mt19937_64 gen(0xACCE57);
    std::uniform_int_distribution<long> gd(0, 20), den(1, 12);
    for (int t = 0; t < 10000; ++t) {
        const int g = static_cast<int>(gd(gen));
        const long d = den(gen);
        // keep nu - 2g below 900 so the scan window covers the answer
        std::uniform_int_distribution<long> num(1, 900 * d);
        const Rat nu = Rat(2 * g) + Rat(num(gen)) / d;
        std::optional<Int> scanned;
        for (int p = 0; p <= 1000; ++p) {
            const Rat lhs = nu * nu - (3 * g - 1 + p) * nu + (Int(2) * g * g - 2 * g);
            if (lhs > 0)
                scanned = Int(p);
            else
                break;
        }
        const auto closed = quadratic_p_max(nu, g);
        expect(closed.has_value() == scanned.has_value(), "presence agrees");
        if (closed && scanned) expect(*closed == *scanned, "value agrees at nu=" + rat_str(nu));
    }
}

// ---- criteria 3, 4, 7: reference strips ------------------------------------

void rational_normal_curves() {
    for (int d = 2; d <= 6; ++d) {
        const auto pres = GradedRingPresentation::veronese(1, d, 4);
        const auto strip = betti_strip(pres, d, 3, acceptance_field());
        expect(!strip.has_holes(), "no holes at degree " + std::to_string(d));
        for (int i = 1; i <= d; ++i) {
            expect(Int(strip.value(i, 1)) == i * binomial(d, i + 1),
                   "linear strand at i=" + std::to_string(i) + ", d=" + std::to_string(d));
            expect(strip.value(i, 2) == 0 && strip.value(i, 3) == 0, "rows above are empty");
        }
    }
}

void veronese_surface() {
    const auto pres = GradedRingPresentation::veronese(2, 2, 4);
    const auto strip = betti_strip(pres, 3, 3, acceptance_field());
    expect(strip.value(1, 1) == 6, "six quadrics");
    for (int i = 0; i <= 3; ++i)
        for (int j = 2; j <= 3; ++j)
            expect(strip.value(i, j) == 0, "row j>=2 vanishes at full length");
}

void scroll_sanity() {
    const auto pres = GradedRingPresentation::scroll({1, 2}, 4);
    const auto strip = betti_strip(pres, 3, 3, acceptance_field());
    expect(strip.value(1, 1) == 3, "k_{1,1} = 3");
    expect(strip.value(2, 1) == 2, "k_{2,1} = 2");
    for (int i = 0; i <= 3; ++i)
        for (int j = 2; j <= 3; ++j) expect(strip.value(i, j) == 0, "rows j>=2 vanish");
}

// ---- criteria 5, 6: the two Veronese boundaries ----------------------------

void quadric_threefold_boundary() {
    const auto pres = GradedRingPresentation::veronese(3, 2, 4);
    KoszulEngine engine(pres, acceptance_field());
    expect(engine.property_np(5).kind == NpVerdict::Kind::holds_certified,
           "level 5 certified");
    const auto cell = engine.koszul_dim(6, 2);
    expect(cell.value != 0, "k_{6,2} nonzero");
    expect(cell.soundness == Soundness::probable_value || cell.soundness == Soundness::exact,
           "evidence beyond a single prime");
}

void cubic_surface_boundary() {
    const auto pres = GradedRingPresentation::veronese(2, 3, 4);
    KoszulEngine engine(pres, acceptance_field());
    expect(engine.property_np(6).kind == NpVerdict::Kind::holds_certified,
           "level 6 certified");
    const auto cell = engine.koszul_dim(7, 2);
    expect(cell.value != 0, "k_{7,2} nonzero");
    expect(cell.soundness == Soundness::probable_value || cell.soundness == Soundness::exact,
           "evidence beyond a single prime");
}

// ---- criterion 8: randomized certificate sweep ------------------------------

void certificate_sweep() {
    std::mt19937_64 gen(0x5EED5);
    std::uniform_int_distribution<long> gd(0, 6), nd(1, 5), ad(1, 5), degd(-8, 8), bd(-20, 40),
        slack(0, 4), ed(0, 3);
    std::bernoulli_distribution ss(0.5), with_e(0.3);
    for (int t = 0; t < 10000; ++t) {
        EmbeddingSpec s;
        s.genus = static_cast<int>(gd(gen));
        s.n = static_cast<int>(nd(gen));
        s.a = ad(gen);
        s.b = bd(gen);
        const long r = s.n + 1;
        const Int d = degd(gen);
        if (ss(gen))
            s.bundle = FormalBundle::make_semistable(r, d);
        else
            s.bundle = FormalBundle::with_bounds(r, d, Rat(d) / r - slack(gen));
        if (s.genus == 0 && s.n == 1 && with_e(gen)) {
            const Int e = ed(gen);
            s.surface_e = e;
            // keep mu_minus consistent with the normalized shape
            s.bundle = FormalBundle::with_bounds(2, -e, Rat(-e), Rat(0));
        }
        const Certificate c = best_certificate(s);  // invariants assert internally
        if (c.p_certified.is_finite() && c.p_known_fail)
            expect(c.p_certified.value < *c.p_known_fail, "certified below known failure");
        if (c.p_certified.is_infinite())
            expect(!c.p_known_fail.has_value(), "no failure beside infinite certification");

        // Twist monotonicity of the slope-driven rules. The rational-ruled-
        // surface classification is excluded: it is exact, and its all-p
        // answer for b = 1 on the trivial bundle genuinely drops to a finite
        // one at b = 2.
        if (!s.surface_e) {
            EmbeddingSpec s2 = s;
            s2.b = s.b + 1;
            const Certificate c2 = best_certificate(s2);
            const bool was_none = c.p_certified.is_none();
            const bool now_none = c2.p_certified.is_none();
            if (!was_none) {
                expect(!now_none, "certified level does not disappear as b grows");
                if (c.p_certified.is_finite() && c2.p_certified.is_finite())
                    expect(c2.p_certified.value >= c.p_certified.value, "monotone in the twist");
                if (c.p_certified.is_infinite())
                    expect(c2.p_certified.is_infinite(), "infinite stays infinite as b grows");
            }
        }
    }
}

// ---- criterion 9: Mukai checker grid ----------------------------------------

void mukai_grid() {
    for (int g = 0; g <= 10; ++g)
        for (long r = 1; r <= 10; ++r)
            for (long tau = 1; tau <= 5; ++tau)
                for (long p = 0; p <= 10; ++p) {
                    const Int threshold = mukai_threshold(g, r, tau, p);
                    // the check is the strict inequality against tau*(g+1+p)
                    for (Int q = r + 1; q <= threshold + 3; ++q)
                        expect(mukai_check(g, r, tau, q, p) == (q >= threshold),
                               "threshold is exact");
                    if (tau == 1) {
                        expect(threshold == std::max(Int(r + 1), Int(g + 2 + p)),
                               "integral-slope threshold max{rank+1, g+2+p}");
                        if (g == 0)
                            expect(threshold == std::max(Int(r + 1), Int(2 + p)),
                                   "genus-0 threshold max{rank+1, 2+p}");
                    }
                }
}

// ---- criterion 10: field soundness across the reference strips --------------

void field_soundness() {
    const auto fs = FieldStrategy::two_random_primes();
    const uint32_t p1 = fs.prime1, p2 = fs.prime2;
    std::vector<GradedRingPresentation> rings;
    for (int d = 2; d <= 6; ++d) rings.push_back(GradedRingPresentation::veronese(1, d, 4));
    rings.push_back(GradedRingPresentation::veronese(2, 2, 4));
    rings.push_back(GradedRingPresentation::scroll({1, 2}, 4));
    for (const auto& pres : rings) {
        for (int p = 1; p <= pres.dim_v(); ++p) {
            for (int q = 0; q + 1 <= pres.q_max(); ++q) {
                const auto d = koszul_differential(pres, p, q);
                const uint64_t exact = rank_exact(d);
                expect(rank_fp(d, p1) == exact, "prime 1 rank equals exact");
                expect(rank_fp(d, p2) == exact, "prime 2 rank equals exact");
            }
        }
    }
}

struct Criterion {
    std::string name;
    std::function<void()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. corollary-threshold-tables", corollary_thresholds},
        {"2. quadratic-closed-form-vs-scan", quadratic_oracle},
        {"3. rational-normal-curve-strips", rational_normal_curves},
        {"4. veronese-surface-strip", veronese_surface},
        {"5. quadric-threefold-boundary", quadric_threefold_boundary},
        {"6. cubic-surface-boundary", cubic_surface_boundary},
        {"7. scroll-strip", scroll_sanity},
        {"8. certificate-consistency-sweep", certificate_sweep},
        {"9. mukai-threshold-grid", mukai_grid},
        {"10. prime-vs-exact-rank", field_soundness},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        checks_failed = 0;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "    exception: %s\n", e.what());
            ++checks_failed;
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%s] %s (%lld ms)\n", checks_failed ? "FAIL" : "PASS", c.name.c_str(),
                    static_cast<long long>(ms));
        std::fflush(stdout);
        if (checks_failed) ++failed;
    }
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
