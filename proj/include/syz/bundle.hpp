#pragma once

#include <optional>

#include "syz/rational.hpp"

namespace syz {

// Base curve data.
struct CurveContext {
    int genus = 0;

    explicit CurveContext(int g) : genus(g) {
        if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    }
};

// A vector bundle on a curve known only through exact numeric invariants.
//
// mu_minus is a certified lower bound for the minimal slope (over quotient
// bundles), mu_plus a certified upper bound for the maximal slope (over
// subbundles). mu_plus may be absent: no upper bound has been certified.
// The semistable flag asserts that all three slopes coincide.
//
// Invariants, enforced on construction and after every operation:
//   mu_minus <= degree/rank <= mu_plus (when present)
//   semistable  =>  mu_minus = degree/rank = mu_plus
//   rank = 1    =>  mu_minus = mu_plus = degree
struct FormalBundle {
    Int rank;
    Int degree;
    Rat mu_minus;
    std::optional<Rat> mu_plus;
    bool semistable = false;

    // Line bundle of the given degree.
    static FormalBundle line(Int degree);
    // Semistable bundle: both slope bounds equal degree/rank.
    static FormalBundle make_semistable(Int rank, Int degree);
    // General constructor; validates all invariants.
    static FormalBundle with_bounds(Int rank, Int degree, Rat mu_minus,
                                    std::optional<Rat> mu_plus = std::nullopt,
                                    bool semistable = false);

    // True when mu_minus is the exact minimal slope, not merely a bound.
    bool mu_minus_exact() const { return semistable || rank == 1; }

    void validate() const;
};

// deg(F)/rank(F) as an exact rational.
Rat slope(const FormalBundle& f);

// Slope bounds add under tensor product; semistability is preserved exactly
// when both factors are semistable.
FormalBundle tensor(const FormalBundle& e, const FormalBundle& f);

// ell-th symmetric power. Slope bounds scale linearly (exact equalities);
// the degree comes from the splitting-principle identity
//   deg S^ell(E) = C(r+ell-1, ell-1) * deg E.
// A non-integral derived degree is rejected as inconsistent input.
FormalBundle sym_power(const FormalBundle& e, long ell);

// ell-th exterior power, 1 <= ell <= rank. The stored mu_minus is only a
// certified lower bound (ell * mu_minus(E)); degree is C(r-1, ell-1) * deg E.
FormalBundle wedge_power(const FormalBundle& e, long ell);

// Sufficient criteria. "false" means not certified, not disproved.
bool h1_vanishes(const FormalBundle& f, const CurveContext& ctx);         // mu_minus > 2g-2
bool globally_generated(const FormalBundle& f, const CurveContext& ctx);  // mu_minus > 2g-1
bool taut_very_ample(const FormalBundle& f, const CurveContext& ctx);     // mu_minus > 2g

// Certified lower bound -mu/(mu-g) for the minimal slope of the dual span
// bundle of F, where mu = mu_minus(F). Requires mu_minus >= 2g, and rejects
// the degenerate g = 0, mu_minus = 0 case (zero denominator).
Rat butler_dual_span_bound(const FormalBundle& f, const CurveContext& ctx);

// The class aH + pi^*B on P_C(E), with b = deg(B).
struct LineBundleClass {
    Int a;
    Int b;
};

enum class Ampleness { ample, not_ample, undetermined };

// Exact ampleness test: a >= 1 and a*mu_minus(E) + b > 0. A positive answer
// is always certified (mu_minus is a lower bound). A negative answer is
// certified only when mu_minus is exact; otherwise undetermined.
Ampleness miyaoka_ample(const FormalBundle& e, const LineBundleClass& l);

// pi_*(aH + pi^*B) = S^a(E) (x) B as a formal bundle, for rank(E) = n+1:
//   rank = C(n+a, a),  degree = C(n+a, a-1) deg E + C(n+a, a) b,
//   mu_minus = a mu_minus(E) + b,  mu_plus = a mu_plus(E) + b.
// Requires a >= 1.
FormalBundle pushforward(const FormalBundle& e, const LineBundleClass& l, int fiber_dim);

// Rank of the pushforward of the twisted j-forms along a P^n-bundle:
// C(k+n-j, k) * C(k-1, j) for 1 <= j <= n, k >= 1 (zero when k <= j).
Int bott_rank(int fiber_dim, int form_degree, long twist);

// Riemann-Roch lower bound floor(rank * (mu_minus - g + 1)) for h^0,
// valid when mu_minus > 2g - 2.
Int h0_lower_bound(const FormalBundle& f, const CurveContext& ctx);

}  // namespace syz
