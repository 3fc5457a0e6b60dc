#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "syz/report.hpp"
#include "syz/serialize.hpp"

namespace {

using namespace syz;

struct GlobalOpts {
    std::string format = "json";
    std::string field_text;
    uint64_t budget = koszul::RankBudget{}.max_entries;
    std::optional<uint64_t> seed;
};

koszul::FieldStrategy make_field(const GlobalOpts& g) {
    return koszul::FieldStrategy::parse(g.field_text, g.seed);
}

void emit(const GlobalOpts& g, const json& as_json, const std::string& as_markdown) {
    if (g.format == "json")
        std::cout << as_json.dump(2) << "\n";
    else if (g.format == "markdown")
        std::cout << as_markdown;
    else
        throw std::invalid_argument("format '" + g.format + "' not supported for this command");
}

koszul::GradedRingPresentation parse_ring(const std::string& spec, int q_max) {
    const auto parse_ints = [](const std::string& s) {
        std::vector<int> out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (spec.rfind("veronese:", 0) == 0) {
        const auto v = parse_ints(spec.substr(9));
        if (v.size() != 2) throw std::invalid_argument("expected veronese:n,d");
        return koszul::GradedRingPresentation::veronese(v[0], v[1], q_max);
    }
    if (spec.rfind("scroll:", 0) == 0)
        return koszul::GradedRingPresentation::scroll(parse_ints(spec.substr(7)), q_max);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open ring file '" + spec + "'");
    return koszul::GradedRingPresentation::parse(in);
}

int run_certify(const GlobalOpts& g, int genus, int n, long a, long b,
                const std::string& mu_minus, const std::string& mu_plus,
                const std::string& degree, bool semistable,
                const std::optional<long>& e) {
    EmbeddingSpec spec;
    spec.genus = genus;
    spec.n = n;
    spec.a = Int(a);
    spec.b = Int(b);
    if (e) spec.surface_e = Int(*e);

    const Rat mu = parse_rat(mu_minus);
    const Int rank = Int(n) + 1;
    if (semistable) {
        const Rat deg = mu * rank;
        if (!is_integer(deg))
            throw std::invalid_argument("semistable bundle needs integral rank * mu-minus");
        if (!degree.empty() && Int(degree) != deg.get_num())
            throw std::invalid_argument("--degree contradicts --semistable with this mu-minus");
        if (!mu_plus.empty() && parse_rat(mu_plus) != mu)
            throw std::invalid_argument("--mu-plus contradicts --semistable");
        spec.bundle = FormalBundle::make_semistable(rank, deg.get_num());
    } else if (!degree.empty()) {
        std::optional<Rat> plus;
        if (!mu_plus.empty()) plus = parse_rat(mu_plus);
        spec.bundle = FormalBundle::with_bounds(rank, Int(degree), mu, plus);
    } else {
        if (!mu_plus.empty())
            throw std::invalid_argument("--mu-plus without --semistable requires --degree");
        // Only the lower slope bound is known; pick the smallest consistent
        // degree. No rule consumes the slope without an upper bound.
        spec.bundle = FormalBundle::with_bounds(rank, rat_ceil(mu * rank), mu);
    }

    const Certificate cert = best_certificate(spec);
    emit(g, certificate_to_json(spec, cert), certificate_to_markdown(spec, cert));
    return cert.p_certified.is_none() ? 2 : 0;
}

int run_betti(const GlobalOpts& g, const std::string& ring, int p_max, int j_max) {
    const auto pres = parse_ring(ring, j_max + 1);
    const auto strip = koszul::betti_strip(pres, p_max, j_max, make_field(g),
                                           koszul::RankBudget{g.budget});
    if (g.format == "tsv")
        std::cout << strip_to_tsv(strip);
    else if (g.format == "json")
        std::cout << strip_to_json(strip).dump(2) << "\n";
    else if (g.format == "markdown")
        std::cout << strip_to_markdown(strip);
    else
        throw std::invalid_argument("format '" + g.format + "' not supported for betti");
    return strip.has_holes() ? 3 : 0;
}

int run_paper_tables(const std::string& golden_path) {
    const std::string tables = generate_reference_tables();
    std::cout << tables;
    if (golden_path.empty()) return 0;
    std::ifstream in(golden_path);
    if (!in) throw std::invalid_argument("cannot open golden file '" + golden_path + "'");
    std::ostringstream want;
    want << in.rdbuf();
    if (want.str() != tables) {
        std::cerr << "paper-tables: regenerated output differs from " << golden_path << "\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syz: syzygy-level certification for line bundles on ruled varieties,\n"
                 "with a Koszul-cohomology verifier for monomial coordinate rings"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "json, markdown, or tsv (betti only)")
        ->check(CLI::IsMember({"json", "markdown", "tsv"}))
        ->capture_default_str();
    app.add_option("--field", g.field_text,
                   "field strategy: twoprime, exact, prime:P, primes:P1,P2")
        ->envname("SYZ_FIELD");
    app.add_option("--budget", g.budget, "max matrix entries per cell")
        ->envname("SYZ_BUDGET")
        ->capture_default_str();
    std::optional<uint64_t> seed;
    app.add_option("--seed", seed, "seed for random prime selection")->envname("SYZ_SEED");

    // certify
    auto* certify = app.add_subcommand("certify", "compute the best certificate for aH + pi^*B");
    int genus = 0, n = 1;
    long a = 1, b = 0;
    std::string mu_minus, mu_plus, degree;
    bool semistable = false;
    std::optional<long> surface_e;
    certify->add_option("--genus", genus, "genus of the base curve")->required();
    certify->add_option("--n", n, "fiber dimension (rank E = n+1)")->required();
    certify->add_option("--a", a, "coefficient of the tautological class")->required();
    certify->add_option("--b", b, "degree of the twist from the curve")->required();
    certify->add_option("--mu-minus", mu_minus, "certified lower slope bound, num/den")->required();
    certify->add_option("--mu-plus", mu_plus, "certified upper slope bound, num/den");
    certify->add_option("--degree", degree, "degree of E (integer)");
    certify->add_flag("--semistable", semistable, "E is semistable");
    certify->add_option("--e", surface_e, "normalized surface invariant e = -deg(wedge^2 E)");

    // veronese
    auto* veronese = app.add_subcommand("veronese", "query the Veronese knowledge base");
    int vn = 1, vd = 1;
    std::optional<long> vp;
    veronese->add_option("--n", vn, "projective space dimension")->required();
    veronese->add_option("--d", vd, "embedding degree")->required();
    veronese->add_option("--p", vp, "level to query (omit for the boundary values)");

    // betti
    auto* betti = app.add_subcommand("betti", "compute a graded Betti strip");
    std::string ring;
    int p_max = 1, j_max = 3;
    betti->add_option("--ring", ring, "veronese:n,d | scroll:a1,a2,... | file path")->required();
    betti->add_option("--p-max", p_max, "largest homological index")->required();
    betti->add_option("--j-max", j_max, "largest internal row")->capture_default_str();

    // paper-tables
    auto* tables = app.add_subcommand("paper-tables", "regenerate the reference tables");
    std::string golden;
    tables->add_option("--golden", golden, "golden file to diff against");

    // optimality
    auto* optimality =
        app.add_subcommand("optimality", "numeric chain of the sharpness construction");
    int on = 2, og = 2;
    long op = 0;
    optimality->add_option("--n", on, "dimension of the constructed variety")->required();
    optimality->add_option("--g", og, "genus (>= 2, hyperelliptic witness)")->required();
    optimality->add_option("--p", op, "level whose successor fails")->required();

    try {
        app.parse(argc, argv);
        g.seed = seed;
        if (certify->parsed())
            return run_certify(g, genus, n, a, b, mu_minus, mu_plus, degree, semistable,
                               surface_e);
        if (veronese->parsed()) {
            std::optional<Int> p;
            if (vp) p = Int(*vp);
            emit(g, veronese_query_to_json(vn, vd, p), veronese_query_to_markdown(vn, vd, p));
            return 0;
        }
        if (betti->parsed()) return run_betti(g, ring, p_max, j_max);
        if (tables->parsed()) return run_paper_tables(golden);
        if (optimality->parsed()) {
            const WitnessReport w = optimality_witness(on, og, Int(op));
            emit(g, witness_to_json(w), witness_to_markdown(w));
            return 0;
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
