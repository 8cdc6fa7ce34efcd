#ifndef RIGIDITY_MATRIX_HPP
#define RIGIDITY_MATRIX_HPP

#include <cstddef>

#include "rigidity/rational.hpp"

namespace rigidity {

// Dense row-major rational matrix. Dimensions stay tiny (<= ~15) so
// everything is exact Gaussian elimination without pivot heuristics.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Mat& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

Mat mat_mul(const Mat& lhs, const Mat& rhs);
Vec mat_apply(const Mat& m, const Vec& x);

// exact inverse; throws SingularMatrix when det = 0
Mat mat_inverse(const Mat& m);

// unique solution of m x = rhs; throws SingularMatrix
Vec solve_linear(const Mat& m, const Vec& rhs);

Rat determinant(const Mat& m);

// leading principal minors alternate: (-1)^k det_k > 0
bool is_negative_definite(const Mat& m);

std::string mat_str(const Mat& m);

// Symmetric bilinear form given by its Gram matrix.
class SymmetricForm {
public:
    SymmetricForm() = default;
    explicit SymmetricForm(Mat gram);

    std::size_t dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }

    // u^T gram v; throws DimensionMismatch
    Rat pair(const Vec& u, const Vec& v) const;

private:
    Mat gram_;
};

}  // namespace rigidity

#endif
