#include "syz/certify.hpp"

#include <algorithm>

namespace syz {

bool PLevel::operator<(const PLevel& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (kind == Kind::finite) return value < o.value;
    return false;
}

std::string PLevel::str() const {
    switch (kind) {
        case Kind::none: return "none";
        case Kind::finite: return value.get_str();
        case Kind::infinite: return "infinite";
    }
    return "none";
}

bool RuleTrace::applicable() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const HypothesisCheck& h) { return h.passed; });
}

void Certificate::check_invariants() const {
    if (p_certified.is_finite() && p_known_fail && !(p_certified.value < *p_known_fail))
        throw std::logic_error("certificate contradiction: certified level reaches a known failure");
    if (p_certified.is_infinite() && p_known_fail)
        throw std::logic_error("certificate contradiction: infinite certification with a known failure");
}

void EmbeddingSpec::validate() const {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (n < 1) throw std::invalid_argument("fiber dimension must be >= 1");
    if (a < 1) throw std::invalid_argument("coefficient a must be >= 1");
    if (bundle.rank != n + 1)
        throw std::invalid_argument("bundle rank must equal n+1");
    if (surface_e && *surface_e < 0)
        throw std::invalid_argument("surface invariant e must be >= 0");
    bundle.validate();
}

Rat EmbeddingSpec::nu() const { return Rat(a) * bundle.mu_minus + Rat(b); }

FormalBundle EmbeddingSpec::pushed() const { return pushforward(bundle, {a, b}, n); }

std::optional<Int> quadratic_p_max(const Rat& nu, int genus) {
    if (!(nu > 2 * genus))
        throw std::invalid_argument("quadratic_p_max requires nu > 2g");
    // nu^2 - (3g-1+p) nu + 2g^2-2g > 0  <=>  p < nu - (3g-1) + (2g^2-2g)/nu.
    const Rat q = nu - (3 * genus - 1) + Rat(Int(2) * genus * genus - 2 * genus) / nu;
    const Int p_max = rat_ceil(q) - 1;
    if (p_max < 0) return std::nullopt;
    return p_max;
}

namespace {

HypothesisCheck check(std::string text, std::string lhs, std::string rhs, bool passed) {
    return {std::move(text), std::move(lhs), std::move(rhs), passed};
}

HypothesisCheck check_nu_gate(const EmbeddingSpec& spec) {
    const Rat nu = spec.nu();
    return check("mu_minus(pi_* L) > 2g", rat_str(nu), int_str(Int(2 * spec.genus)),
                 nu > 2 * spec.genus);
}

RuleTrace not_applicable(RuleTrace t) {
    t.outcome = RuleTrace::Outcome::inapplicable;
    if (t.conclusion.empty()) t.conclusion = "hypotheses not satisfied";
    return t;
}

RuleTrace certify_finite(RuleTrace t, Int p, const std::string& how) {
    t.outcome = RuleTrace::Outcome::certifies;
    t.certified = PLevel::finite(p);
    t.conclusion = "certifies level " + t.certified.str() + " (" + how + ")";
    return t;
}

}  // namespace

RuleTrace certify_scroll(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "scroll";
    t.hypotheses.push_back(check("a = 1", int_str(spec.a), "1", spec.a == 1));
    t.hypotheses.push_back(check_nu_gate(spec));
    if (!t.applicable()) return not_applicable(std::move(t));
    if (spec.genus == 0) {
        t.outcome = RuleTrace::Outcome::certifies;
        t.certified = PLevel::infinite();
        t.conclusion = "rational normal scroll: every level certified";
        return t;
    }
    auto p = quadratic_p_max(spec.nu(), spec.genus);
    if (!p) return not_applicable(std::move(t));
    return certify_finite(std::move(t), *p, "quadratic slope bound");
}

RuleTrace certify_ruled_surface(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "ruled-surface";
    t.hypotheses.push_back(check("n = 1", std::to_string(spec.n), "1", spec.n == 1));
    t.hypotheses.push_back(check_nu_gate(spec));
    if (!t.applicable()) return not_applicable(std::move(t));
    auto p = quadratic_p_max(spec.nu(), spec.genus);
    if (!p) return not_applicable(std::move(t));
    return certify_finite(std::move(t), *p, "quadratic slope bound, no cap in a");
}

RuleTrace certify_veronese_fibration(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "veronese-surface-fibration";
    t.hypotheses.push_back(check("n = 2", std::to_string(spec.n), "2", spec.n == 2));
    t.hypotheses.push_back(check("a = 2", int_str(spec.a), "2", spec.a == 2));
    t.hypotheses.push_back(check_nu_gate(spec));
    if (!t.applicable()) return not_applicable(std::move(t));

    const FormalBundle f = spec.pushed();
    if (spec.bundle.semistable) {
        // The slope-spread condition holds automatically for semistable E.
        t.hypotheses.push_back(check("7 mu(pi_* L) >= mu_plus(pi_* L) (semistable: automatic)",
                                     rat_str(7 * slope(f)), rat_str(*f.mu_plus), true));
    } else if (!f.mu_plus) {
        t.hypotheses.push_back(check("7 mu(pi_* L) >= mu_plus(pi_* L)",
                                     rat_str(7 * slope(f)), "unavailable", false));
        t.conclusion = "no certified upper slope bound for pi_* L";
        return not_applicable(std::move(t));
    } else {
        // Checking against the certified upper bound is conservative: a pass
        // implies the condition for the true maximal slope.
        const bool ok = 7 * slope(f) >= *f.mu_plus;
        t.hypotheses.push_back(check("7 mu(pi_* L) >= mu_plus(pi_* L)",
                                     rat_str(7 * slope(f)), rat_str(*f.mu_plus), ok));
        if (!ok) return not_applicable(std::move(t));
    }
    auto p = quadratic_p_max(spec.nu(), spec.genus);
    if (!p) return not_applicable(std::move(t));
    return certify_finite(std::move(t), *p, "slope spread + quadratic bound");
}

RuleTrace certify_general(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "general-fiber";
    t.hypotheses.push_back(check_nu_gate(spec));
    if (!t.applicable()) return not_applicable(std::move(t));
    auto q = quadratic_p_max(spec.nu(), spec.genus);
    if (!q) return not_applicable(std::move(t));
    const Int cap = spec.a - 1;
    const Int p = std::min(*q, cap);
    t.hypotheses.push_back(check("p <= a-1", int_str(p), int_str(cap), true));
    return certify_finite(std::move(t), p, "quadratic bound capped at a-1");
}

RuleTrace certify_butler(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "butler";
    const Rat nu = spec.nu();
    const int g = spec.genus;
    const bool n0 = nu >= 2 * g + 1;
    t.hypotheses.push_back(check("mu_minus(pi_* L) >= 2g+1", rat_str(nu),
                                 int_str(Int(2 * g + 1)), n0));
    // mu_minus(pi_* L) >= 2g+2p with 1 <= p <= a-1.
    const Int p_slope = rat_floor((nu - 2 * g) / 2);
    const Int cap = spec.a - 1;
    const Int p2 = std::min(p_slope, cap);
    const bool higher = p2 >= 1;
    t.hypotheses.push_back(check("min(floor((nu-2g)/2), a-1) >= 1", int_str(p2), "1", higher));
    if (higher) return certify_finite(std::move(t), p2, "slope threshold 2g+2p");
    if (n0) {
        // Keep only the hypothesis that actually fired.
        t.hypotheses.pop_back();
        return certify_finite(std::move(t), Int(0), "normal generation threshold 2g+1");
    }
    t.conclusion = "no threshold met";
    return not_applicable(std::move(t));
}

RuleTrace failure_bound(const EmbeddingSpec& spec) {
    spec.validate();
    RuleTrace t;
    t.rule = "multisecant-failure";
    // Very ampleness of the relinearized tautological class, checked through
    // the sufficient-condition gate mu_minus(pi_* L) > 2g.
    auto gate = check_nu_gate(spec);
    gate.text += " (sufficient-condition gate)";
    t.hypotheses.push_back(gate);
    const bool quad_fiber = spec.n >= 3 && spec.a == 2;
    const bool cubic_fiber = spec.n >= 2 && spec.a >= 3;
    t.hypotheses.push_back(check("(n >= 3 and a = 2) or (n >= 2 and a >= 3)",
                                 "(" + std::to_string(spec.n) + ", " + int_str(spec.a) + ")",
                                 "(>=3, 2) | (>=2, >=3)", quad_fiber || cubic_fiber));
    if (!t.applicable()) return not_applicable(std::move(t));
    t.outcome = RuleTrace::Outcome::fails_from;
    t.fails_from_p = quad_fiber ? Int(6) : Int(3) * spec.a - 2;
    t.conclusion = "fails level " + t.fails_from_p->get_str() + " (fiberwise multisecant plane)";
    return t;
}

NpStatus veronese_status(int n, int d, const Int& p) {
    if (n < 1 || d < 1 || p < 0)
        throw std::invalid_argument("veronese_status requires n >= 1, d >= 1, p >= 0");
    if (n == 1 || d == 1 || (n == 2 && d == 2)) return NpStatus::holds;
    if (d == 2) return p <= 5 ? NpStatus::holds : NpStatus::fails;  // n >= 3
    if (n == 2) return p <= 3 * d - 3 ? NpStatus::holds : NpStatus::fails;
    if (n == 3 && d == 3) return p <= 6 ? NpStatus::holds : NpStatus::fails;
    // Remaining: n >= 3, d >= 3, beyond the settled boundary cases.
    if (p <= d) return NpStatus::holds;
    if (d == 3 && p <= 4) return NpStatus::holds;
    if (p >= 3 * d - 2) return NpStatus::fails;
    return NpStatus::open;
}

VeroneseBoundary veronese_boundaries(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("veronese_boundaries requires n >= 1, d >= 1");
    VeroneseBoundary b;
    if (n == 1 || d == 1 || (n == 2 && d == 2)) {
        b.max_holds = PLevel::infinite();
        return b;
    }
    auto closed = [&](long bound) {
        b.max_holds = PLevel::finite(bound);
        b.min_fails = Int(bound + 1);
    };
    if (d == 2) { closed(5); return b; }
    if (n == 2) { closed(3L * d - 3); return b; }
    if (n == 3 && d == 3) { closed(6); return b; }
    const long holds_to = (d == 3) ? 4 : d;
    b.max_holds = PLevel::finite(holds_to);
    b.min_fails = Int(3L * d - 2);
    b.open_range = std::make_pair(Int(holds_to + 1), Int(3L * d - 3));
    return b;
}

NpStatus rational_ruled_surface_status(const Int& e, const Int& a, const Int& b,
                                       const Int& p) {
    if (e < 0) throw std::invalid_argument("requires normalized e >= 0");
    if (p < 0) throw std::invalid_argument("requires p >= 0");
    if (a < 1 || b - a * e < 1)
        throw std::invalid_argument("not very ample: need a >= 1 and b - ae >= 1");
    if (a == 1) return NpStatus::holds;
    if (e == 0 && b == 1) return NpStatus::holds;
    return 2 * a + 2 * b - a * e >= 3 + p ? NpStatus::holds : NpStatus::fails;
}

bool mukai_check(int genus, const Int& rank, const Int& tau, const Int& q, const Int& p) {
    if (genus < 0 || rank < 1 || p < 0)
        throw std::invalid_argument("mukai_check: bad genus/rank/p");
    if (tau < 1) throw std::invalid_argument("mukai_check requires tau >= 1");
    if (q < rank + 1) throw std::invalid_argument("mukai_check requires q >= rank+1");
    return q > tau * (genus + 1 + p);
}

WitnessReport optimality_witness(int n, int genus, const Int& p) {
    if (genus < 2)
        throw std::invalid_argument(
            "optimality_witness requires genus >= 2 (a hyperelliptic curve of that genus)");
    if (n < 2) throw std::invalid_argument("optimality_witness requires n >= 2");
    if (p < 0) throw std::invalid_argument("optimality_witness requires p >= 0");
    WitnessReport w;
    w.n = n;
    w.genus = genus;
    w.p = p;
    for (int i = 2; i <= n; ++i) {
        const FormalBundle ei = FormalBundle::make_semistable(i, 1);
        w.chain.push_back({ei.rank, ei.degree, ei.mu_minus, miyaoka_ample(ei, {Int(1), Int(0)})});
    }
    w.restricted_degree = Int(2 * genus + 1) + p;
    w.mukai_predicted_p = p;
    w.fails_p = p + 1;
    return w;
}

Certificate best_certificate(const EmbeddingSpec& spec) {
    spec.validate();
    Certificate cert;
    cert.rules.push_back(certify_scroll(spec));
    cert.rules.push_back(certify_ruled_surface(spec));
    cert.rules.push_back(certify_veronese_fibration(spec));
    cert.rules.push_back(certify_general(spec));
    cert.rules.push_back(certify_butler(spec));
    cert.rules.push_back(failure_bound(spec));

    // Fiber knowledge base, recorded for the audit trail.
    if (mpz_fits_sint_p(spec.a.get_mpz_t())) {
        const auto fb = veronese_boundaries(spec.n, static_cast<int>(spec.a.get_si()));
        RuleTrace t;
        t.rule = "fiber-veronese-status";
        t.outcome = RuleTrace::Outcome::informational;
        t.conclusion = "fiber holds up to " + fb.max_holds.str();
        if (fb.min_fails) t.conclusion += ", fails from " + fb.min_fails->get_str();
        if (fb.open_range)
            t.conclusion += ", open in [" + fb.open_range->first.get_str() + ", " +
                            fb.open_range->second.get_str() + "]";
        cert.rules.push_back(std::move(t));
    }

    bool va_iff_false = false;
    if (spec.genus == 0 && spec.n == 1 && spec.surface_e) {
        // Over P^1 a normalized rank-2 bundle is O + O(-e); the classification
        // of its very ample classes is an if-and-only-if knowledge base.
        const Int& e = *spec.surface_e;
        const bool very_ample = spec.a >= 1 && spec.b - spec.a * e >= 1;
        RuleTrace t;
        t.rule = "rational-ruled-surface-kb";
        t.hypotheses.push_back(check("a >= 1 and b - ae >= 1 (very ample, iff)",
                                     "(" + int_str(spec.a) + ", " + int_str(spec.b - spec.a * e) + ")",
                                     "(>=1, >=1)", very_ample));
        if (!very_ample) {
            t.conclusion = "not very ample (exact classification)";
            cert.rules.push_back(not_applicable(std::move(t)));
            va_iff_false = true;
        } else if (spec.a == 1 || (e == 0 && spec.b == 1)) {
            t.outcome = RuleTrace::Outcome::certifies;
            t.certified = PLevel::infinite();
            t.conclusion = "classification: every level certified";
            cert.rules.push_back(std::move(t));
        } else {
            const Int threshold = 2 * spec.a + 2 * spec.b - spec.a * e;
            RuleTrace f = t;
            cert.rules.push_back(
                certify_finite(std::move(t), threshold - 3, "2a+2b-ae >= 3+p, exact classification"));
            f.rule += " (converse)";
            f.outcome = RuleTrace::Outcome::fails_from;
            f.fails_from_p = threshold - 2;
            f.conclusion = "fails level " + f.fails_from_p->get_str() + " (exact classification)";
            cert.rules.push_back(std::move(f));
        }
    }

    if (va_iff_false)
        cert.very_ample = TriState::known_false;
    else if (spec.nu() > 2 * spec.genus ||
             (spec.genus == 0 && spec.n == 1 && spec.surface_e))
        cert.very_ample = TriState::certified;
    else
        cert.very_ample = TriState::not_certified;

    for (const auto& r : cert.rules) {
        if (r.outcome == RuleTrace::Outcome::certifies && cert.p_certified < r.certified)
            cert.p_certified = r.certified;
        if (r.outcome == RuleTrace::Outcome::fails_from &&
            (!cert.p_known_fail || *r.fails_from_p < *cert.p_known_fail))
            cert.p_known_fail = r.fails_from_p;
    }
    cert.check_invariants();
    return cert;
}

}  // namespace syz
