#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syz/bundle.hpp"

namespace syz {

// A syzygy-simplicity level: none certified, a finite level, or all levels.
struct PLevel {
    enum class Kind { none, finite, infinite };
    Kind kind = Kind::none;
    Int value;  // meaningful only when finite

    static PLevel none() { return {}; }
    static PLevel finite(Int p) { return {Kind::finite, std::move(p)}; }
    static PLevel infinite() { return {Kind::infinite, Int(0)}; }

    bool is_none() const { return kind == Kind::none; }
    bool is_finite() const { return kind == Kind::finite; }
    bool is_infinite() const { return kind == Kind::infinite; }

    // Order: none < any finite < infinite; finite compared by value.
    bool operator<(const PLevel& o) const;
    std::string str() const;
};

// One audited inequality inside a rule: text plus exact operand renderings.
struct HypothesisCheck {
    std::string text;
    std::string lhs;
    std::string rhs;
    bool passed = false;
};

struct RuleTrace {
    enum class Outcome { certifies, fails_from, informational, inapplicable };

    std::string rule;
    std::vector<HypothesisCheck> hypotheses;
    Outcome outcome = Outcome::inapplicable;
    PLevel certified;                  // when outcome == certifies
    std::optional<Int> fails_from_p;   // when outcome == fails_from
    std::string conclusion;

    bool applicable() const;  // every hypothesis passed
};

enum class TriState { certified, not_certified, known_false };

struct Certificate {
    TriState very_ample = TriState::not_certified;
    PLevel p_certified;
    std::optional<Int> p_known_fail;
    std::vector<RuleTrace> rules;

    // p_certified < p_known_fail when both finite; infinite excludes failures.
    void check_invariants() const;
};

// The input: L = aH + pi^*B on X = P_C(E), rank E = n+1, deg B = b.
// surface_e is the classical invariant e = -deg(wedge^2 E) for normalized
// rank-2 bundles; it unlocks the rational-ruled-surface knowledge base.
struct EmbeddingSpec {
    int genus = 0;
    int n = 1;
    Int a = 1;
    Int b = 0;
    FormalBundle bundle = FormalBundle::line(0);
    std::optional<Int> surface_e;

    void validate() const;
    // mu_minus of the pushforward: a*mu_minus(E) + b. Drives every rule.
    Rat nu() const;
    FormalBundle pushed() const;
};

// Largest p >= 0 with nu^2 - (3g-1+p) nu + 2g^2-2g > 0, or nullopt if even
// p = 0 fails. Requires nu > 2g.
std::optional<Int> quadratic_p_max(const Rat& nu, int genus);

// The individual certification rules. Hypothesis failures are reported in
// the trace, never raised; only malformed specs throw.
RuleTrace certify_scroll(const EmbeddingSpec& spec);              // a = 1
RuleTrace certify_ruled_surface(const EmbeddingSpec& spec);       // n = 1
RuleTrace certify_veronese_fibration(const EmbeddingSpec& spec);  // n = 2, a = 2
RuleTrace certify_general(const EmbeddingSpec& spec);             // p <= a-1 cap
RuleTrace certify_butler(const EmbeddingSpec& spec);
RuleTrace failure_bound(const EmbeddingSpec& spec);

enum class NpStatus { holds, fails, open };

// Knowledge base for the Veronese (P^n, O(d)) at level p.
NpStatus veronese_status(int n, int d, const Int& p);

struct VeroneseBoundary {
    PLevel max_holds;                          // largest p known to hold
    std::optional<Int> min_fails;              // smallest p known to fail
    std::optional<std::pair<Int, Int>> open_range;  // inclusive, if any
};
VeroneseBoundary veronese_boundaries(int n, int d);

// Knowledge base for P(O + O(-e)) over P^1, L in class aC0 + bf.
// Requires a >= 1, e >= 0 and very ampleness (b - ae >= 1).
NpStatus rational_ruled_surface_status(const Int& e, const Int& a, const Int& b,
                                       const Int& p);

// Mukai-type check for K_X + A_1 + ... + A_q with q ample summands and
// mu_minus(E) = nu/tau in lowest terms: true iff q > tau*(g+1+p).
// Requires q >= rank+1 and tau >= 1.
bool mukai_check(int genus, const Int& rank, const Int& tau, const Int& q,
                 const Int& p);

// The numeric chain of the sharpness construction: a tower of degree-1
// semistable bundles E_2, ..., E_n with mu_minus(E_i) = 1/i, each
// tautological class ample, and the restriction to the distinguished
// section of degree 2g+1+p. Conclusion: K + (n+2+p)H on the top stage fails
// level p+1 while p is the Mukai prediction. Requires n >= 2 and g >= 2
// (a hyperelliptic curve of that genus).
struct WitnessStep {
    Int rank;
    Int degree;
    Rat mu_minus;
    Ampleness taut_ample = Ampleness::undetermined;
};
struct WitnessReport {
    int n = 2;
    int genus = 2;
    Int p = 0;
    std::vector<WitnessStep> chain;
    Int restricted_degree;   // 2g+1+p
    Int mukai_predicted_p;   // = p
    Int fails_p;             // = p+1
};
WitnessReport optimality_witness(int n, int genus, const Int& p);

// Runs every applicable rule, takes the strongest certified level and the
// weakest known failure, and returns the audited certificate.
Certificate best_certificate(const EmbeddingSpec& spec);

}  // namespace syz
