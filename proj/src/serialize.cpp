#include "syz/serialize.hpp"

#include <sstream>

namespace syz {

namespace {

json int_to_json(const Int& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return json(v.get_si());
    return json(v.get_str());  // beyond int64: decimal string
}

json plevel_to_json(const PLevel& p) {
    switch (p.kind) {
        case PLevel::Kind::none: return json(nullptr);
        case PLevel::Kind::finite: return int_to_json(p.value);
        case PLevel::Kind::infinite: return json("infinite");
    }
    return json(nullptr);
}

const char* tri_str(TriState t) {
    switch (t) {
        case TriState::certified: return "certified";
        case TriState::not_certified: return "not-certified";
        case TriState::known_false: return "known-false";
    }
    return "not-certified";
}

const char* outcome_str(RuleTrace::Outcome o) {
    switch (o) {
        case RuleTrace::Outcome::certifies: return "certifies";
        case RuleTrace::Outcome::fails_from: return "fails-from";
        case RuleTrace::Outcome::informational: return "informational";
        case RuleTrace::Outcome::inapplicable: return "inapplicable";
    }
    return "inapplicable";
}

const char* ampleness_str(Ampleness a) {
    switch (a) {
        case Ampleness::ample: return "ample";
        case Ampleness::not_ample: return "not-ample";
        case Ampleness::undetermined: return "undetermined";
    }
    return "undetermined";
}

json bundle_to_json(const FormalBundle& f) {
    json j;
    j["rank"] = int_to_json(f.rank);
    j["degree"] = int_to_json(f.degree);
    j["mu_minus"] = rat_str(f.mu_minus);
    j["mu_plus"] = f.mu_plus ? json(rat_str(*f.mu_plus)) : json(nullptr);
    j["semistable"] = f.semistable;
    return j;
}

}  // namespace

std::string np_status_str(NpStatus s) {
    switch (s) {
        case NpStatus::holds: return "holds";
        case NpStatus::fails: return "fails";
        case NpStatus::open: return "open";
    }
    return "open";
}

json certificate_to_json(const EmbeddingSpec& spec, const Certificate& cert) {
    json input;
    input["genus"] = spec.genus;
    input["n"] = spec.n;
    input["a"] = int_to_json(spec.a);
    input["b"] = int_to_json(spec.b);
    input["bundle"] = bundle_to_json(spec.bundle);
    if (spec.surface_e) input["e"] = int_to_json(*spec.surface_e);

    json rules = json::array();
    for (const auto& r : cert.rules) {
        json hyps = json::array();
        for (const auto& h : r.hypotheses)
            hyps.push_back({{"text", h.text}, {"lhs", h.lhs}, {"rhs", h.rhs}, {"passed", h.passed}});
        json jr;
        jr["name"] = r.rule;
        jr["hypotheses"] = std::move(hyps);
        json conclusion;
        conclusion["outcome"] = outcome_str(r.outcome);
        if (r.outcome == RuleTrace::Outcome::certifies)
            conclusion["p"] = plevel_to_json(r.certified);
        if (r.outcome == RuleTrace::Outcome::fails_from)
            conclusion["p"] = int_to_json(*r.fails_from_p);
        conclusion["text"] = r.conclusion;
        jr["conclusion"] = std::move(conclusion);
        rules.push_back(std::move(jr));
    }

    json j;
    j["input"] = std::move(input);
    j["very_ample"] = tri_str(cert.very_ample);
    j["p_certified"] = plevel_to_json(cert.p_certified);
    j["p_known_fail"] = cert.p_known_fail ? int_to_json(*cert.p_known_fail) : json(nullptr);
    j["rules"] = std::move(rules);
    return j;
}

std::string certificate_to_markdown(const EmbeddingSpec& spec, const Certificate& cert) {
    std::ostringstream os;
    os << "# Certificate\n\n";
    os << "Input: g = " << spec.genus << ", n = " << spec.n << ", L = " << spec.a.get_str()
       << "H + pi^*B with deg B = " << spec.b.get_str() << ", mu_minus(E) = "
       << rat_str(spec.bundle.mu_minus);
    if (spec.bundle.semistable) os << " (semistable)";
    os << "\n\n";
    os << "- very ample: " << tri_str(cert.very_ample) << "\n";
    os << "- certified level: " << cert.p_certified.str() << "\n";
    os << "- known failure: "
       << (cert.p_known_fail ? cert.p_known_fail->get_str() : std::string("none")) << "\n\n";
    os << "| rule | outcome | hypotheses |\n|---|---|---|\n";
    for (const auto& r : cert.rules) {
        os << "| " << r.rule << " | " << outcome_str(r.outcome);
        if (r.outcome == RuleTrace::Outcome::certifies) os << " p=" << r.certified.str();
        if (r.outcome == RuleTrace::Outcome::fails_from) os << " p=" << r.fails_from_p->get_str();
        if (r.outcome == RuleTrace::Outcome::informational) os << ": " << r.conclusion;
        os << " | ";
        for (std::size_t i = 0; i < r.hypotheses.size(); ++i) {
            const auto& h = r.hypotheses[i];
            if (i) os << "; ";
            os << h.text << " [" << h.lhs << " vs " << h.rhs << ": "
               << (h.passed ? "ok" : "no") << "]";
        }
        os << " |\n";
    }
    return os.str();
}

json witness_to_json(const WitnessReport& w) {
    json chain = json::array();
    for (const auto& s : w.chain) {
        chain.push_back({{"rank", int_to_json(s.rank)},
                         {"degree", int_to_json(s.degree)},
                         {"mu_minus", rat_str(s.mu_minus)},
                         {"taut_ample", ampleness_str(s.taut_ample)}});
    }
    json j;
    j["n"] = w.n;
    j["genus"] = w.genus;
    j["p"] = int_to_json(w.p);
    j["chain"] = std::move(chain);
    j["line_bundle"] = "K + " + Int(w.p + w.n + 2).get_str() + "H";
    j["restricted_degree"] = int_to_json(w.restricted_degree);
    j["mukai_predicted_p"] = int_to_json(w.mukai_predicted_p);
    j["fails_p"] = int_to_json(w.fails_p);
    return j;
}

std::string witness_to_markdown(const WitnessReport& w) {
    std::ostringstream os;
    os << "# Sharpness witness (n = " << w.n << ", g = " << w.genus << ", p = "
       << w.p.get_str() << ")\n\n";
    os << "Tower of semistable bundles over a hyperelliptic curve of genus " << w.genus
       << ":\n\n";
    os << "| rank | degree | mu_minus | tautological class |\n|---|---|---|---|\n";
    for (const auto& s : w.chain)
        os << "| " << s.rank.get_str() << " | " << s.degree.get_str() << " | "
           << rat_str(s.mu_minus) << " | " << ampleness_str(s.taut_ample) << " |\n";
    os << "\nLine bundle K + " << Int(w.p + w.n + 2).get_str()
       << "H; restriction to the distinguished curve section has degree "
       << w.restricted_degree.get_str() << ".\n";
    os << "Level " << w.mukai_predicted_p.get_str()
       << " is the Mukai prediction; level " << w.fails_p.get_str() << " fails.\n";
    return os.str();
}

json veronese_query_to_json(int n, int d, std::optional<Int> p) {
    json j;
    j["n"] = n;
    j["d"] = d;
    if (p) {
        j["p"] = int_to_json(*p);
        j["status"] = np_status_str(veronese_status(n, d, *p));
        return j;
    }
    const auto b = veronese_boundaries(n, d);
    j["max_holds"] = plevel_to_json(b.max_holds);
    j["min_fails"] = b.min_fails ? int_to_json(*b.min_fails) : json(nullptr);
    if (b.open_range)
        j["open_range"] = {int_to_json(b.open_range->first), int_to_json(b.open_range->second)};
    else
        j["open_range"] = json(nullptr);
    return j;
}

std::string veronese_query_to_markdown(int n, int d, std::optional<Int> p) {
    std::ostringstream os;
    if (p) {
        os << "(P^" << n << ", O(" << d << ")) at level " << p->get_str() << ": "
           << np_status_str(veronese_status(n, d, *p)) << "\n";
        return os.str();
    }
    const auto b = veronese_boundaries(n, d);
    os << "(P^" << n << ", O(" << d << ")): holds up to " << b.max_holds.str();
    if (b.min_fails) os << ", fails from " << b.min_fails->get_str();
    if (b.open_range)
        os << ", open in [" << b.open_range->first.get_str() << ", "
           << b.open_range->second.get_str() << "]";
    os << "\n";
    return os.str();
}

json strip_to_json(const koszul::BettiStrip& strip) {
    json entries = json::array();
    for (const auto& [key, e] : strip.entries) {
        json je;
        je["i"] = key.first;
        je["j"] = key.second;
        if (e.cell) {
            je["value"] = e.cell->value;
            je["soundness"] = koszul::soundness_str(e.cell->soundness);
        } else {
            je["hole"] = e.hole_reason;
        }
        entries.push_back(std::move(je));
    }
    json j;
    j["field"] = strip.field;
    j["p_max"] = strip.p_max;
    j["j_max"] = strip.j_max;
    j["entries"] = std::move(entries);
    return j;
}

std::string strip_to_tsv(const koszul::BettiStrip& strip) {
    std::ostringstream os;
    os << "i\\j";
    for (int j = 1; j <= strip.j_max; ++j) os << "\t" << j;
    os << "\n";
    for (int i = 0; i <= strip.p_max; ++i) {
        os << i;
        for (int j = 1; j <= strip.j_max; ++j) {
            const auto& e = strip.at(i, j);
            os << "\t";
            if (e.cell)
                os << e.cell->value;
            else
                os << "?";
        }
        os << "\n";
    }
    return os.str();
}

std::string strip_to_markdown(const koszul::BettiStrip& strip) {
    std::ostringstream os;
    os << "Field: " << strip.field << "\n\n| i\\j |";
    for (int j = 1; j <= strip.j_max; ++j) os << " " << j << " |";
    os << "\n|---|";
    for (int j = 1; j <= strip.j_max; ++j) os << "---|";
    os << "\n";
    for (int i = 0; i <= strip.p_max; ++i) {
        os << "| " << i << " |";
        for (int j = 1; j <= strip.j_max; ++j) {
            const auto& e = strip.at(i, j);
            if (e.cell)
                os << " " << e.cell->value << " |";
            else
                os << " ? |";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace syz
