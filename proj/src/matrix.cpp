#include "rigidity/matrix.hpp"

#include <utility>

#include "rigidity/errors.hpp"

namespace rigidity {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& lhs, const Mat& rhs) {
    if (lhs.cols() != rhs.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    Mat out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rat& l = lhs.at(i, k);
            if (l == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out.at(i, j) += l * rhs.at(k, j);
        }
    return out;
}

Vec mat_apply(const Mat& m, const Vec& x) {
    if (m.cols() != x.size()) throw DimensionMismatch("mat_apply: size mismatch");
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
    return out;
}

namespace {

// Gauss-Jordan on [m | aug]; returns false when m is singular.
bool eliminate(Mat& m, Mat& aug) {
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(pivot, j), aug.at(col, j));
        }
        const Rat inv = Rat(1) / m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) m.at(col, j) *= inv;
        for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(col, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m.at(r, col) == 0) continue;
            const Rat factor = m.at(r, col);
            for (std::size_t j = 0; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
            for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(r, j) -= factor * aug.at(col, j);
        }
    }
    return true;
}

}  // namespace

Mat mat_inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("mat_inverse: matrix not square");
    Mat work = m;
    Mat aug = Mat::identity(m.rows());
    if (!eliminate(work, aug)) throw SingularMatrix("mat_inverse: determinant is 0");
    return aug;
}

Vec solve_linear(const Mat& m, const Vec& rhs) {
    if (m.rows() != m.cols()) throw DimensionMismatch("solve_linear: matrix not square");
    if (m.rows() != rhs.size()) throw DimensionMismatch("solve_linear: rhs length mismatch");
    Mat work = m;
    Mat aug(m.rows(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) aug.at(i, 0) = rhs[i];
    if (!eliminate(work, aug)) throw SingularMatrix("solve_linear: singular system");
    Vec x(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) x[i] = aug.at(i, 0);
    return x;
}

Rat determinant(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix not square");
    Mat work = m;
    const std::size_t n = work.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        const Rat inv = Rat(1) / work.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work.at(r, col) == 0) continue;
            const Rat factor = work.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) work.at(r, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

bool is_negative_definite(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("is_negative_definite: matrix not square");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Mat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
        const Rat minor = determinant(lead);
        if (k % 2 == 1 ? minor >= 0 : minor <= 0) return false;
    }
    return true;
}

std::string mat_str(const Mat& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += rat_str(m.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

SymmetricForm::SymmetricForm(Mat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionMismatch("SymmetricForm: gram not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_.at(i, j) != gram_.at(j, i)) throw DimensionMismatch("SymmetricForm: gram not symmetric");
}

Rat SymmetricForm::pair(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("pair: vector length != dim");
    Rat out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) out += u[i] * gram_.at(i, j) * v[j];
    }
    return out;
}

}  // namespace rigidity
