#include "syz/koszul/ring.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace syz::koszul {

namespace {

struct ExpHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : e) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// All monomials of the given total degree in nvars variables, in
// lexicographic order of exponent vectors (first variable most significant).
void enumerate_monomials(int nvars, int degree, std::vector<Exponents>& out) {
    Exponents cur(nvars, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == nvars - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (nvars == 0) throw std::invalid_argument("no variables");
    rec(rec, 0, degree);
}

}  // namespace

GradedRingPresentation GradedRingPresentation::veronese(int n, int d, int q_max) {
    if (n < 1 || d < 1) throw std::invalid_argument("veronese requires n >= 1, d >= 1");
    if (q_max < 2) throw std::invalid_argument("veronese requires q_max >= 2");
    GradedRingPresentation pres;
    pres.num_vars_ = n + 1;
    pres.pieces_.resize(q_max + 1);
    for (int q = 0; q <= q_max; ++q)
        enumerate_monomials(n + 1, d * q, pres.pieces_[q]);
    pres.build_tables();
    return pres;
}

GradedRingPresentation GradedRingPresentation::scroll(const std::vector<int>& degrees,
                                                      int q_max) {
    if (degrees.empty()) throw std::invalid_argument("scroll requires at least one summand");
    if (q_max < 2) throw std::invalid_argument("scroll requires q_max >= 2");
    int max_deg = 0;
    for (int a : degrees) {
        if (a < 0) throw std::invalid_argument("scroll degrees must be nonnegative");
        max_deg = std::max(max_deg, a);
    }
    if (max_deg < 1) throw std::invalid_argument("scroll requires some a_i >= 1");
    // Variables: one fiber coordinate z_i per summand plus the base
    // coordinate t. A basis element of R_q is z^m t^s with |m| = q and
    // 0 <= s <= sum m_i a_i.
    const int k = static_cast<int>(degrees.size());
    GradedRingPresentation pres;
    pres.num_vars_ = k + 1;
    pres.pieces_.resize(q_max + 1);
    for (int q = 0; q <= q_max; ++q) {
        std::vector<Exponents> zparts;
        enumerate_monomials(k, q, zparts);
        for (const auto& m : zparts) {
            long smax = 0;
            for (int i = 0; i < k; ++i) smax += static_cast<long>(m[i]) * degrees[i];
            for (long s = 0; s <= smax; ++s) {
                Exponents e = m;
                e.push_back(static_cast<int>(s));
                pres.pieces_[q].push_back(std::move(e));
            }
        }
    }
    pres.build_tables();
    return pres;
}

GradedRingPresentation GradedRingPresentation::from_pieces(
    std::vector<std::vector<Exponents>> pieces) {
    if (pieces.size() < 3)
        throw std::invalid_argument("presentation needs pieces for q = 0, 1, 2 at least");
    GradedRingPresentation pres;
    pres.pieces_ = std::move(pieces);
    if (pres.pieces_[0].empty() || pres.pieces_[0][0].empty())
        throw std::invalid_argument("empty presentation");
    pres.num_vars_ = static_cast<int>(pres.pieces_[0][0].size());
    pres.build_tables();
    return pres;
}

void GradedRingPresentation::build_tables() {
    if (pieces_[0].size() != 1)
        throw std::invalid_argument("R_0 must be one-dimensional");
    for (const auto& piece : pieces_) {
        if (piece.empty()) throw std::invalid_argument("empty graded piece");
        for (const auto& m : piece)
            if (static_cast<int>(m.size()) != num_vars_)
                throw std::invalid_argument("inconsistent monomial width");
    }
    if (pieces_[1].empty()) throw std::invalid_argument("degree-one space is empty");

    const auto& unit = pieces_[0][0];
    if (std::any_of(unit.begin(), unit.end(), [](int e) { return e != 0; }))
        throw std::invalid_argument("the unit of R_0 must be the zero exponent vector");
    const int v = dim_v();
    mult_.assign(q_max(), {});
    for (int q = 0; q + 1 <= q_max(); ++q) {
        std::unordered_map<Exponents, int, ExpHash> index;
        index.reserve(pieces_[q + 1].size() * 2);
        for (int i = 0; i < dim(q + 1); ++i) {
            if (!index.emplace(pieces_[q + 1][i], i).second)
                throw std::invalid_argument("duplicate monomial in graded piece");
        }
        auto& table = mult_[q];
        table.assign(static_cast<std::size_t>(v) * dim(q), -1);
        std::vector<char> hit(dim(q + 1), 0);
        Exponents prod(num_vars_);
        for (int vi = 0; vi < v; ++vi) {
            const auto& ve = pieces_[1][vi];
            for (int ri = 0; ri < dim(q); ++ri) {
                const auto& re = pieces_[q][ri];
                for (int t = 0; t < num_vars_; ++t) prod[t] = ve[t] + re[t];
                auto it = index.find(prod);
                if (it == index.end())
                    throw std::invalid_argument("presentation not multiplicatively closed at degree " +
                                                std::to_string(q));
                table[static_cast<std::size_t>(vi) * dim(q) + ri] = it->second;
                hit[it->second] = 1;
            }
        }
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            throw std::invalid_argument("presentation not generated in degree 1 at degree " +
                                        std::to_string(q + 1));
    }
}

int GradedRingPresentation::dim(int q) const {
    if (q < 0) return 0;
    if (q > q_max()) throw std::out_of_range("graded piece beyond q_max");
    return static_cast<int>(pieces_[q].size());
}

int GradedRingPresentation::mult(int v_index, int q, int r_index) const {
    return mult_[q][static_cast<std::size_t>(v_index) * dim(q) + r_index];
}

GradedRingPresentation GradedRingPresentation::parse(std::istream& in) {
    std::vector<std::vector<Exponents>> pieces;
    std::string line;
    int current = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream hs(line.substr(first + 1));
            std::string kw;
            int q = -1;
            if (!(hs >> kw >> q) || kw != "degree" || q != current + 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected '#degree " + std::to_string(current + 1) + "'");
            current = q;
            pieces.emplace_back();
            continue;
        }
        if (current < 0)
            throw std::invalid_argument("monomial before any '#degree' header");
        std::istringstream ls(line);
        Exponents e;
        long x;
        while (ls >> x) e.push_back(static_cast<int>(x));
        if (!ls.eof())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad exponent");
        pieces.back().push_back(std::move(e));
    }
    return from_pieces(std::move(pieces));
}

std::string GradedRingPresentation::to_text() const {
    std::ostringstream os;
    for (int q = 0; q <= q_max(); ++q) {
        os << "#degree " << q << "\n";
        for (const auto& m : pieces_[q]) {
            for (std::size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace syz::koszul
