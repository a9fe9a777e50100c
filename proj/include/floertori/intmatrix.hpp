#pragma once

#include <cstddef>
#include <vector>

#include "floertori/errors.hpp"

namespace floertori {

// Dense square integer matrix, row-major, exact arithmetic.
// Products and determinants accumulate in 128 bits and throw OverflowError
// rather than wrap. Sizes here are tiny (2g x 2g for fiber genus g).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    explicit IntMatrix(const std::vector<std::vector<long long>>& rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix block_diag(const IntMatrix& top, const IntMatrix& bottom);

    std::size_t dim() const { return n_; }

    long long& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    long long at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix pow(unsigned long long k) const;
    std::vector<long long> apply(const std::vector<long long>& v) const;

    bool is_identity() const;

    // Exact determinant (fraction-free Bareiss elimination).
    long long det() const;

    // Monic characteristic polynomial det(tI - M), coefficients ascending:
    // result[k] is the coefficient of t^k, result[n] = 1.
    std::vector<long long> char_poly() const;

    std::vector<std::vector<long long>> rows() const;

private:
    std::size_t n_ = 0;
    std::vector<long long> a_;
};

}  // namespace floertori
