#include "syz/bundle.hpp"

namespace syz {

FormalBundle FormalBundle::line(Int degree) {
    FormalBundle f;
    f.rank = 1;
    f.degree = degree;
    f.mu_minus = Rat(degree);
    f.mu_plus = Rat(degree);
    f.semistable = true;
    f.validate();
    return f;
}

FormalBundle FormalBundle::make_semistable(Int rank, Int degree) {
    FormalBundle f;
    f.rank = std::move(rank);
    f.degree = std::move(degree);
    Rat mu(f.degree, f.rank);
    mu.canonicalize();
    f.mu_minus = mu;
    f.mu_plus = mu;
    f.semistable = true;
    f.validate();
    return f;
}

FormalBundle FormalBundle::with_bounds(Int rank, Int degree, Rat mu_minus,
                                       std::optional<Rat> mu_plus, bool semistable) {
    FormalBundle f;
    f.rank = std::move(rank);
    f.degree = std::move(degree);
    f.mu_minus = std::move(mu_minus);
    f.mu_plus = std::move(mu_plus);
    f.semistable = semistable;
    if (f.rank == 1 && !f.mu_plus) f.mu_plus = Rat(f.degree);
    f.validate();
    return f;
}

void FormalBundle::validate() const {
    if (rank < 1) throw std::invalid_argument("bundle rank must be positive");
    Rat mu(degree, rank);
    mu.canonicalize();
    if (mu_minus > mu) throw std::invalid_argument("mu_minus exceeds degree/rank");
    if (mu_plus && *mu_plus < mu) throw std::invalid_argument("mu_plus below degree/rank");
    if (semistable) {
        if (mu_minus != mu || !mu_plus || *mu_plus != mu)
            throw std::invalid_argument("semistable bundle requires mu_minus = degree/rank = mu_plus");
    }
    if (rank == 1) {
        if (mu_minus != mu || !mu_plus || *mu_plus != mu)
            throw std::invalid_argument("line bundle requires mu_minus = mu_plus = degree");
    }
}

Rat slope(const FormalBundle& f) {
    Rat mu(f.degree, f.rank);
    mu.canonicalize();
    return mu;
}

FormalBundle tensor(const FormalBundle& e, const FormalBundle& f) {
    std::optional<Rat> plus;
    if (e.mu_plus && f.mu_plus) plus = *e.mu_plus + *f.mu_plus;
    return FormalBundle::with_bounds(e.rank * f.rank,
                                     e.rank * f.degree + f.rank * e.degree,
                                     e.mu_minus + f.mu_minus, plus,
                                     e.semistable && f.semistable);
}

FormalBundle sym_power(const FormalBundle& e, long ell) {
    if (ell < 1) throw std::invalid_argument("sym_power requires ell >= 1");
    const Int out_rank = binomial(e.rank + ell - 1, ell);
    // ell * rank' * mu(E); equals C(r+ell-1, ell-1) * deg E, always integral.
    Rat deg = Rat(ell) * Rat(out_rank) * slope(e);
    if (!is_integer(deg))
        throw std::invalid_argument("sym_power: derived degree is not an integer");
    std::optional<Rat> plus;
    if (e.mu_plus) plus = Rat(ell) * *e.mu_plus;
    return FormalBundle::with_bounds(out_rank, deg.get_num(), Rat(ell) * e.mu_minus,
                                     plus, e.semistable);
}

FormalBundle wedge_power(const FormalBundle& e, long ell) {
    if (ell < 1 || ell > e.rank)
        throw std::invalid_argument("wedge_power requires 1 <= ell <= rank");
    const Int out_rank = binomial(e.rank, ell);
    const Int out_deg = binomial(e.rank - 1, ell - 1) * e.degree;
    // Top power: the determinant line bundle, with exact slope data.
    if (out_rank == 1) return FormalBundle::line(out_deg);
    std::optional<Rat> plus;
    if (e.mu_plus) plus = Rat(ell) * *e.mu_plus;
    return FormalBundle::with_bounds(out_rank, out_deg, Rat(ell) * e.mu_minus,
                                     plus, e.semistable);
}

bool h1_vanishes(const FormalBundle& f, const CurveContext& ctx) {
    return f.mu_minus > 2 * ctx.genus - 2;
}

bool globally_generated(const FormalBundle& f, const CurveContext& ctx) {
    return f.mu_minus > 2 * ctx.genus - 1;
}

bool taut_very_ample(const FormalBundle& f, const CurveContext& ctx) {
    return f.mu_minus > 2 * ctx.genus;
}

Rat butler_dual_span_bound(const FormalBundle& f, const CurveContext& ctx) {
    if (f.mu_minus < 2 * ctx.genus)
        throw std::invalid_argument("butler_dual_span_bound requires mu_minus >= 2g");
    const Rat den = f.mu_minus - ctx.genus;
    if (den == 0)
        throw std::invalid_argument("butler_dual_span_bound: mu_minus equals genus (zero denominator)");
    return -f.mu_minus / den;
}

Ampleness miyaoka_ample(const FormalBundle& e, const LineBundleClass& l) {
    if (l.a < 1) return Ampleness::not_ample;
    if (Rat(l.a) * e.mu_minus + Rat(l.b) > 0) return Ampleness::ample;
    // The criterion failed against a lower bound; only exact mu_minus
    // turns that into a certified negative.
    return e.mu_minus_exact() ? Ampleness::not_ample : Ampleness::undetermined;
}

FormalBundle pushforward(const FormalBundle& e, const LineBundleClass& l, int fiber_dim) {
    if (l.a < 1) throw std::invalid_argument("pushforward requires a >= 1");
    if (fiber_dim < 1 || e.rank != fiber_dim + 1)
        throw std::invalid_argument("pushforward requires rank(E) = n+1");
    if (mpz_fits_slong_p(l.a.get_mpz_t()) == 0)
        throw std::invalid_argument("pushforward: a out of range");
    const long a = l.a.get_si();
    const Int out_rank = binomial(fiber_dim + a, a);
    const Int out_deg = binomial(fiber_dim + a, a - 1) * e.degree + out_rank * l.b;
    std::optional<Rat> plus;
    if (e.mu_plus) plus = Rat(l.a) * *e.mu_plus + Rat(l.b);
    return FormalBundle::with_bounds(out_rank, out_deg,
                                     Rat(l.a) * e.mu_minus + Rat(l.b), plus,
                                     e.semistable);
}

Int bott_rank(int fiber_dim, int form_degree, long twist) {
    if (form_degree < 1 || form_degree > fiber_dim)
        throw std::invalid_argument("bott_rank requires 1 <= j <= n");
    if (twist < 1) throw std::invalid_argument("bott_rank requires k >= 1");
    // C(k-1, j) vanishes for k <= j, which is exactly the vanishing range.
    return binomial(Int(twist) + fiber_dim - form_degree, twist) *
           binomial(Int(twist) - 1, form_degree);
}

Int h0_lower_bound(const FormalBundle& f, const CurveContext& ctx) {
    if (!(f.mu_minus > 2 * ctx.genus - 2))
        throw std::invalid_argument("h0_lower_bound requires mu_minus > 2g-2");
    return rat_floor(Rat(f.rank) * (f.mu_minus - ctx.genus + 1));
}

}  // namespace syz
