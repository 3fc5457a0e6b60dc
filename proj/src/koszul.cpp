#include "syz/koszul/koszul.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace syz::koszul {

FieldStrategy FieldStrategy::two_random_primes(std::optional<uint64_t> seed) {
    uint64_t s;
    if (seed) {
        s = *seed;
    } else {
        std::random_device rd;
        s = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    }
    FieldStrategy f;
    f.mode = Mode::two_prime;
    f.prime1 = random_prime31(s);
    uint64_t bump = 0x9e3779b97f4a7c15ull;
    do {
        f.prime2 = random_prime31(s ^ bump);
        bump += 0x9e3779b97f4a7c15ull;
    } while (f.prime2 == f.prime1);
    return f;
}

FieldStrategy FieldStrategy::single(uint32_t prime) {
    mpz_class z(prime);
    if (prime <= 2 || prime >= (1u << 31) || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("field prime must be an odd prime below 2^31");
    return {Mode::single_prime, prime, 0};
}

FieldStrategy FieldStrategy::parse(const std::string& text, std::optional<uint64_t> seed) {
    if (text.empty() || text == "twoprime" || text == "two-prime")
        return two_random_primes(seed);
    if (text == "exact" || text == "qq" || text == "QQ") return exact();
    const auto parse_u32 = [](const std::string& t) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(t, &pos);
        if (pos != t.size() || v >= (1ul << 31)) throw std::invalid_argument("bad prime");
        return static_cast<uint32_t>(v);
    };
    if (text.rfind("prime:", 0) == 0) return single(parse_u32(text.substr(6)));
    if (text.rfind("primes:", 0) == 0) {
        const auto rest = text.substr(7);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("primes:P1,P2 expects two primes");
        FieldStrategy f1 = single(parse_u32(rest.substr(0, comma)));
        FieldStrategy f2 = single(parse_u32(rest.substr(comma + 1)));
        if (f1.prime1 == f2.prime1)
            throw std::invalid_argument("primes:P1,P2 expects distinct primes");
        return {Mode::two_prime, f1.prime1, f2.prime1};
    }
    throw std::invalid_argument("unknown field strategy: '" + text +
                                "' (use twoprime, exact, prime:P or primes:P1,P2)");
}

std::string FieldStrategy::describe() const {
    std::ostringstream os;
    switch (mode) {
        case Mode::two_prime:
            os << "F_" << prime1 << " x F_" << prime2 << " (two-prime)";
            break;
        case Mode::single_prime:
            os << "F_" << prime1;
            break;
        case Mode::exact:
            os << "QQ (exact)";
            break;
    }
    return os.str();
}

std::string soundness_str(Soundness s) {
    switch (s) {
        case Soundness::certified_zero: return "certified-zero";
        case Soundness::probable_value: return "probable-value";
        case Soundness::exact: return "exact";
    }
    return "?";
}

namespace {

Int wedge_dim(int v, int p) {
    if (p < 0 || p > v) return 0;
    return binomial(Int(v), p);
}

Int piece_dim(const GradedRingPresentation& pres, int q) {
    if (q < 0) return 0;
    return Int(pres.dim(q));
}

}  // namespace

KoszulCellDims koszul_cell_dims(const GradedRingPresentation& pres, int p, int q) {
    const int v = pres.dim_v();
    return {wedge_dim(v, p + 1) * piece_dim(pres, q - 1),
            wedge_dim(v, p) * piece_dim(pres, q),
            wedge_dim(v, p - 1) * piece_dim(pres, q + 1)};
}

SparseMatrix koszul_differential(const GradedRingPresentation& pres, int p, int q) {
    const int v = pres.dim_v();
    if (p < 1 || p > v) throw std::out_of_range("koszul_differential: p outside 1..dim V");
    if (q < 0 || q + 1 > pres.q_max())
        throw std::out_of_range("koszul_differential: q outside 0..q_max-1");

    const Int cols_z = wedge_dim(v, p) * piece_dim(pres, q);
    const Int rows_z = wedge_dim(v, p - 1) * piece_dim(pres, q + 1);
    if (rows_z >= Int(1) << 32 || cols_z >= Int(1) << 32)
        throw BudgetExceeded(UINT64_MAX, (uint64_t(1) << 32) - 1, "index space");
    const uint64_t cols = cols_z.get_ui();
    const uint64_t rows = rows_z.get_ui();
    const int dim_rq = pres.dim(q);
    const uint64_t dim_rq1 = static_cast<uint64_t>(pres.dim(q + 1));

    // Lexicographic ranks of (p-1)-subsets via the standard combinatorial
    // number system; the binomial table fits uint64 once the index-space
    // check above has passed.
    std::vector<std::vector<uint64_t>> binom(v + 1, std::vector<uint64_t>(v + 1, 0));
    for (int i = 0; i <= v; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    const auto lex_rank = [&](const std::vector<int>& comb) {
        const int k = static_cast<int>(comb.size());
        uint64_t r = 0;
        int prev = -1;
        for (int i = 0; i < k; ++i) {
            for (int x = prev + 1; x < comb[i]; ++x) r += binom[v - 1 - x][k - 1 - i];
            prev = comb[i];
        }
        return r;
    };

    SparseMatrixBuilder builder(rows, cols, static_cast<uint64_t>(p) * cols);
    std::vector<int> subset(p);
    for (int i = 0; i < p; ++i) subset[i] = i;
    std::vector<uint64_t> face_base(p);
    std::vector<int> face(p - 1);
    for (;;) {
        for (int j = 0; j < p; ++j) {
            face.clear();
            for (int t = 0; t < p; ++t)
                if (t != j) face.push_back(subset[t]);
            face_base[j] = lex_rank(face) * dim_rq1;
        }
        for (int ri = 0; ri < dim_rq; ++ri) {
            for (int j = 0; j < p; ++j) {
                const uint32_t row = static_cast<uint32_t>(
                    face_base[j] + static_cast<uint64_t>(pres.mult(subset[j], q, ri)));
                builder.add(row, (j % 2 == 0) ? 1 : -1);  // (-1)^{j+1}, j 1-based
            }
            builder.finish_column();
        }
        // next p-subset in lex order
        int i = p - 1;
        while (i >= 0 && subset[i] == v - p + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int t = i + 1; t < p; ++t) subset[t] = subset[t - 1] + 1;
    }
    return builder.take();
}

KoszulEngine::KoszulEngine(const GradedRingPresentation& pres, FieldStrategy field,
                           RankBudget budget)
    : pres_(pres), field_(std::move(field)), budget_(budget) {
    if (field_.mode != FieldStrategy::Mode::exact && field_.prime1 == 0)
        field_ = FieldStrategy::two_random_primes();
}

uint64_t KoszulEngine::rank_of(int p, int q, int which) {
    const int v = pres_.dim_v();
    if (p < 1 || p > v || q < 0) return 0;
    auto& cache = rank_cache_[which];
    const auto key = std::make_pair(p, q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // Closed-form entry count gate, checked before any allocation.
    const Int nnz = Int(p) * wedge_dim(v, p) * piece_dim(pres_, q);
    if (nnz > budget_.max_entries)
        throw BudgetExceeded(nnz.fits_ulong_p() ? nnz.get_ui() : UINT64_MAX,
                             budget_.max_entries, "differential entries");

    const SparseMatrix d = koszul_differential(pres_, p, q);
    const uint64_t r = (which == 2) ? rank_exact(d, budget_)
                                    : rank_fp(d, which == 0 ? field_.prime1 : field_.prime2,
                                              budget_);
    cache[key] = r;
    return r;
}

CellValue KoszulEngine::koszul_dim(int p, int q) {
    if (p < 0 || q < 0) throw std::out_of_range("koszul_dim: negative index");
    if (q + 1 > pres_.q_max())
        throw std::out_of_range("koszul_dim: needs graded pieces through q+1");
    const Int middle = wedge_dim(pres_.dim_v(), p) * piece_dim(pres_, q);

    const auto value_over = [&](int which) -> Int {
        return middle - Int(rank_of(p, q, which)) - Int(rank_of(p + 1, q - 1, which));
    };

    if (field_.mode == FieldStrategy::Mode::exact) {
        const Int k = value_over(2);
        if (k < 0) throw std::logic_error("negative Betti value (exact)");
        return {k.get_ui(), Soundness::exact};
    }
    const Int k1 = value_over(0);
    if (k1 < 0) throw std::logic_error("negative Betti value (prime 1)");
    if (k1 == 0) return {0, Soundness::certified_zero};
    if (field_.mode == FieldStrategy::Mode::single_prime)
        return {k1.get_ui(), Soundness::probable_value};
    const Int k2 = value_over(1);
    if (k2 < 0) throw std::logic_error("negative Betti value (prime 2)");
    if (k2 == 0) return {0, Soundness::certified_zero};
    if (k1 == k2) return {k1.get_ui(), Soundness::probable_value};
    // The primes disagree; settle the cell exactly.
    const Int k = value_over(2);
    if (k < 0) throw std::logic_error("negative Betti value (exact escalation)");
    return {k.get_ui(), Soundness::exact};
}

bool BettiStrip::has_holes() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const auto& kv) { return !kv.second.cell.has_value(); });
}

const BettiEntry& BettiStrip::at(int i, int j) const {
    return entries.at(std::make_pair(i, j));
}

uint64_t BettiStrip::value(int i, int j) const {
    const auto& e = at(i, j);
    if (!e.cell) throw std::runtime_error("betti strip hole at requested cell");
    return e.cell->value;
}

BettiStrip KoszulEngine::betti_strip(int p_max, int j_max) {
    if (p_max < 0 || p_max > pres_.dim_v() - 1)
        throw std::invalid_argument("betti_strip requires 0 <= p_max <= dim V - 1");
    if (j_max < 2) throw std::invalid_argument("betti_strip requires j_max >= 2");
    if (j_max + 1 > pres_.q_max())
        throw std::invalid_argument("betti_strip needs graded pieces through j_max+1");
    BettiStrip strip;
    strip.p_max = p_max;
    strip.j_max = j_max;
    strip.field = field_.describe();
    for (int i = 0; i <= p_max; ++i) {
        for (int j = 1; j <= j_max; ++j) {
            BettiEntry entry;
            try {
                entry.cell = koszul_dim(i, j);
            } catch (const BudgetExceeded& e) {
                entry.hole_reason = e.what();
            }
            strip.entries[{i, j}] = std::move(entry);
        }
    }
    return strip;
}

NpVerdict KoszulEngine::property_np(int p, int j_cut) {
    if (p < 0) throw std::invalid_argument("property_np requires p >= 0");
    if (j_cut < 2) throw std::invalid_argument("property_np requires j_cut >= 2");
    if (j_cut + 1 > pres_.q_max())
        throw std::invalid_argument("property_np needs graded pieces through j_cut+1");

    NpVerdict undecided;
    undecided.kind = NpVerdict::Kind::undecided;
    bool clean = true;
    for (int i = 0; i <= p; ++i) {
        for (int j = 2; j <= j_cut; ++j) {
            CellValue cell;
            try {
                cell = koszul_dim(i, j);
            } catch (const BudgetExceeded& e) {
                if (clean || !undecided.witness) {
                    undecided.witness = {i, j};
                    undecided.evidence = e.what();
                }
                clean = false;
                continue;
            }
            if (cell.value == 0) continue;
            const bool confirmed = cell.soundness != Soundness::probable_value ||
                                   field_.mode == FieldStrategy::Mode::two_prime;
            if (j < j_cut && confirmed) {
                NpVerdict v;
                v.kind = NpVerdict::Kind::fails_over_field;
                v.witness = {i, j};
                v.witness_value = cell.value;
                v.evidence = cell.soundness == Soundness::exact
                                 ? "exact"
                                 : "two-prime evidence";
                return v;
            }
            if (clean) {
                undecided.witness = {i, j};
                undecided.witness_value = cell.value;
                undecided.evidence = j == j_cut
                                         ? "nonzero at the j-cutoff row; widen j_cut to decide"
                                         : "single-prime value, not confirmed";
            }
            clean = false;
        }
    }
    if (clean) {
        NpVerdict v;
        v.kind = NpVerdict::Kind::holds_certified;
        v.evidence = "all cells certified zero for rows 2.." + std::to_string(j_cut);
        return v;
    }
    return undecided;
}

CellValue koszul_dim(const GradedRingPresentation& pres, int p, int q,
                     const FieldStrategy& field, const RankBudget& budget) {
    KoszulEngine engine(pres, field, budget);
    return engine.koszul_dim(p, q);
}

BettiStrip betti_strip(const GradedRingPresentation& pres, int p_max, int j_max,
                       const FieldStrategy& field, const RankBudget& budget) {
    KoszulEngine engine(pres, field, budget);
    return engine.betti_strip(p_max, j_max);
}

NpVerdict property_np(const GradedRingPresentation& pres, int p,
                      const FieldStrategy& field, const RankBudget& budget, int j_cut) {
    KoszulEngine engine(pres, field, budget);
    return engine.property_np(p, j_cut);
}

}  // namespace syz::koszul
