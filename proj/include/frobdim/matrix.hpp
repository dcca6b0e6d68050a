#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobdim/module_element.hpp"

namespace frobdim {

// Dense matrix of polynomials; a map S^cols -> S^rows via its columns.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static PolyMatrix from_strings(const RingPtr& ring,
                                   const std::vector<std::vector<std::string>>& rows);
    static PolyMatrix from_columns(RingPtr ring, std::size_t rows,
                                   const std::vector<ModuleElement>& cols);
    static PolyMatrix identity(const RingPtr& ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Polynomial& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    ModuleElement column(std::size_t c) const;
    std::vector<ModuleElement> columns() const;

    PolyMatrix transpose() const;
    // drop a row / column (used by resolution minimalization)
    PolyMatrix without_row(std::size_t r) const;
    PolyMatrix without_col(std::size_t c) const;

    bool is_zero() const;

    template <typename Fn>
    PolyMatrix map(Fn&& fn) const {
        PolyMatrix out(ring_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fn(a_[i]);
        return out;
    }

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

PolyMatrix operator*(const PolyMatrix& A, const PolyMatrix& B);
ModuleElement apply(const PolyMatrix& A, const ModuleElement& v);

std::vector<std::vector<std::string>> to_strings(const PolyMatrix& A);

}  // namespace frobdim
