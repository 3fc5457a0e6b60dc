#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace syz::koszul {

// A monomial as an exponent vector. Multiplication is componentwise
// addition; the grading is the section index q, not the exponent sum, so
// arbitrary integer multigradings are supported.
using Exponents = std::vector<int>;

// A graded ring presented by monomial bases: pieces[q] is the ordered basis
// of R_q, pieces[1] the degree-one space V that generates. The full
// multiplication table V (x) R_q -> R_{q+1} is resolved and checked at
// construction:
//   * R_0 is one-dimensional,
//   * every product v * m lands in the next piece (closure),
//   * every basis element of R_{q+1} is such a product (degree-1 generation).
class GradedRingPresentation {
public:
    static GradedRingPresentation veronese(int n, int d, int q_max);
    // P(O(a_1) + ... + O(a_k)) over P^1 embedded by the tautological class.
    // Degrees are nonnegative with at least one a_i >= 1.
    static GradedRingPresentation scroll(const std::vector<int>& degrees, int q_max);
    static GradedRingPresentation from_pieces(std::vector<std::vector<Exponents>> pieces);

    // Plain-text exchange format: exponent vectors one per line, sections
    // introduced by "#degree q" headers in increasing q.
    static GradedRingPresentation parse(std::istream& in);
    std::string to_text() const;

    int q_max() const { return static_cast<int>(pieces_.size()) - 1; }
    int dim(int q) const;
    int dim_v() const { return dim(1); }
    int num_vars() const { return num_vars_; }
    const Exponents& monomial(int q, int i) const { return pieces_[q][i]; }

    // Index of v_i * m_j in the basis of R_{q+1}.
    int mult(int v_index, int q, int r_index) const;

private:
    GradedRingPresentation() = default;
    void build_tables();

    int num_vars_ = 0;
    std::vector<std::vector<Exponents>> pieces_;
    // mult_[q][v * dim(q) + r] = index in R_{q+1}, for 0 <= q < q_max.
    std::vector<std::vector<int32_t>> mult_;
};

}  // namespace syz::koszul
