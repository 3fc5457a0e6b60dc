#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace syz::koszul {

// Column-compressed integer sparse matrix. Koszul differentials store
// exactly p entries of value +-1 per column; the rank kernels accept any
// small integer entries.
struct SparseMatrix {
    uint64_t rows = 0;
    uint64_t cols = 0;
    std::vector<uint64_t> col_ptr;  // size cols+1
    std::vector<uint32_t> row_idx;
    std::vector<int32_t> values;

    SparseMatrix() : col_ptr(1, 0) {}
    SparseMatrix(uint64_t r, uint64_t c) : rows(r), cols(c), col_ptr(c + 1, 0) {}

    uint64_t nnz() const { return row_idx.size(); }

    static SparseMatrix from_triplets(uint64_t rows, uint64_t cols,
                                      const std::vector<std::tuple<uint32_t, uint32_t, int32_t>>& ts);
};

// Column-by-column builder; columns must be appended in order.
class SparseMatrixBuilder {
public:
    SparseMatrixBuilder(uint64_t rows, uint64_t cols, uint64_t nnz_hint = 0) : m_(rows, cols) {
        m_.col_ptr.clear();
        m_.col_ptr.reserve(cols + 1);
        m_.col_ptr.push_back(0);
        if (nnz_hint) {
            m_.row_idx.reserve(nnz_hint);
            m_.values.reserve(nnz_hint);
        }
    }

    void add(uint32_t row, int32_t value) {
        m_.row_idx.push_back(row);
        m_.values.push_back(value);
    }

    void finish_column() { m_.col_ptr.push_back(m_.row_idx.size()); }

    SparseMatrix take() {
        if (m_.col_ptr.size() != m_.cols + 1)
            throw std::logic_error("sparse builder: wrong number of columns");
        return std::move(m_);
    }

private:
    SparseMatrix m_;
};

}  // namespace syz::koszul
