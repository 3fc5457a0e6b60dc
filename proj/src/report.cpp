#include "syz/report.hpp"

#include <sstream>

#include "syz/certify.hpp"

namespace syz {

Int quadratic_threshold(int genus, const Int& p) {
    Int nu = 2 * genus + 1;
    for (;;) {
        const auto got = quadratic_p_max(Rat(nu), genus);
        if (got && *got >= p) return nu;
        ++nu;
    }
}

Int mukai_threshold(int genus, const Int& rank, const Int& tau, const Int& p) {
    Int q = rank + 1;
    while (!mukai_check(genus, rank, tau, q, p)) ++q;
    return q;
}

namespace {

// Smallest integer nu certifying level p through the Butler rule, by scan.
Int butler_threshold(int genus, const Int& p) {
    for (Int nu = 1;; ++nu) {
        EmbeddingSpec spec;
        spec.genus = genus;
        spec.n = 1;
        spec.a = p + 1 > 1 ? p + 1 : Int(2);  // keep the a-1 cap out of the way
        spec.b = nu;
        spec.bundle = FormalBundle::make_semistable(2, 0);
        const RuleTrace t = certify_butler(spec);
        if (t.outcome == RuleTrace::Outcome::certifies && !(t.certified.value < p)) return nu;
    }
}

std::string plevel_cell(const VeroneseBoundary& b) {
    if (b.max_holds.is_infinite()) return "all p";
    std::string s = "p <= " + b.max_holds.str();
    if (b.open_range)
        s += " (open through " + b.open_range->second.get_str() + ")";
    return s;
}

}  // namespace

std::string generate_reference_tables() {
    std::ostringstream os;
    os << "# Reference tables\n";
    os << "\n## Veronese (P^n, O(d)) status\n\n";
    os << "| d \\ n |";
    const int n_hi = 5, d_hi = 6;
    for (int n = 1; n <= n_hi; ++n) os << " " << n << " |";
    os << "\n|---|";
    for (int n = 1; n <= n_hi; ++n) os << "---|";
    os << "\n";
    for (int d = 1; d <= d_hi; ++d) {
        os << "| " << d << " |";
        for (int n = 1; n <= n_hi; ++n)
            os << " " << plevel_cell(veronese_boundaries(n, d)) << " |";
        os << "\n";
    }

    os << "\n## Minimal nu certifying level p (quadratic rule)\n\n";
    os << "| g \\ p |";
    const int g_hi = 5, p_hi = 6;
    for (int p = 0; p <= p_hi; ++p) os << " " << p << " |";
    os << "\n|---|";
    for (int p = 0; p <= p_hi; ++p) os << "---|";
    os << "\n";
    for (int g = 1; g <= g_hi; ++g) {
        os << "| " << g << " |";
        for (int p = 0; p <= p_hi; ++p)
            os << " " << quadratic_threshold(g, p).get_str() << " |";
        os << "\n";
    }

    os << "\n## Normal generation and presentation thresholds (Butler rule)\n\n";
    os << "| g | N_0 | N_1 |\n|---|---|---|\n";
    for (int g = 1; g <= g_hi; ++g)
        os << "| " << g << " | " << butler_threshold(g, 0).get_str() << " | "
           << butler_threshold(g, 1).get_str() << " |\n";

    os << "\n## Minimal ample-summand count q for level p (Mukai-type rule)\n\n";
    os << "integral minimal slope (tau = 1), bundle rank 3:\n\n";
    os << "| g \\ p |";
    for (int p = 0; p <= p_hi; ++p) os << " " << p << " |";
    os << "\n|---|";
    for (int p = 0; p <= p_hi; ++p) os << "---|";
    os << "\n";
    for (int g = 0; g <= g_hi; ++g) {
        os << "| " << g << " |";
        for (int p = 0; p <= p_hi; ++p)
            os << " " << mukai_threshold(g, 3, 1, p).get_str() << " |";
        os << "\n";
    }
    os << "\ngenus 0, tau = 1, by bundle rank:\n\n";
    os << "| rank \\ p |";
    for (int p = 0; p <= p_hi; ++p) os << " " << p << " |";
    os << "\n|---|";
    for (int p = 0; p <= p_hi; ++p) os << "---|";
    os << "\n";
    for (int r = 1; r <= n_hi; ++r) {
        os << "| " << r << " |";
        for (int p = 0; p <= p_hi; ++p)
            os << " " << mukai_threshold(0, r, 1, p).get_str() << " |";
        os << "\n";
    }
    return os.str();
}

}  // namespace syz
