#include "floertori/intmatrix.hpp"

#include <limits>

namespace floertori {

namespace {

using int128 = __int128;

long long narrow(int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw OverflowError(std::string("matrix ") + what + " leaves the 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    n_ = rows.size();
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DomainError("matrix rows must all have length n");
        for (long long v : row) a_.push_back(v);
    }
}

IntMatrix::IntMatrix(const std::vector<std::vector<long long>>& rows) {
    n_ = rows.size();
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DomainError("matrix rows must all have length n");
        for (long long v : row) a_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& top, const IntMatrix& bottom) {
    IntMatrix m(top.n_ + bottom.n_);
    for (std::size_t i = 0; i < top.n_; ++i)
        for (std::size_t j = 0; j < top.n_; ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.n_; ++i)
        for (std::size_t j = 0; j < bottom.n_; ++j)
            m.at(top.n_ + i, top.n_ + j) = bottom.at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw DomainError("matrix product dimension mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            int128 acc = 0;
            for (std::size_t k = 0; k < n_; ++k) acc += int128(at(i, k)) * o.at(k, j);
            out.at(i, j) = narrow(acc, "product entry");
        }
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::pow(unsigned long long k) const {
    IntMatrix acc = identity(n_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
    if (v.size() != n_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<long long> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        int128 acc = 0;
        for (std::size_t j = 0; j < n_; ++j) acc += int128(at(i, j)) * v[j];
        out[i] = narrow(acc, "vector entry");
    }
    return out;
}

bool IntMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

long long IntMatrix::det() const {
    if (n_ == 0) return 1;
    // Bareiss: every division below is exact.
    std::vector<int128> w(a_.begin(), a_.end());
    auto e = [&](std::size_t i, std::size_t j) -> int128& { return w[i * n_ + j]; };
    int sign = 1;
    int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (e(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n_ && e(p, k) == 0) ++p;
            if (p == n_) return 0;
            for (std::size_t j = 0; j < n_; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return narrow(sign * e(n_ - 1, n_ - 1), "determinant");
}

std::vector<long long> IntMatrix::char_poly() const {
    // Faddeev-LeVerrier; the division by k is exact for integer input.
    const std::size_t n = n_;
    std::vector<long long> coeff(n + 1, 0);
    coeff[n] = 1;
    if (n == 0) return coeff;
    IntMatrix m = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = *this * m;
        int128 tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        if (tr % int128(k) != 0) throw DomainError("characteristic polynomial trace not divisible");
        long long c = narrow(-tr / int128(k), "characteristic coefficient");
        coeff[n - k] = c;
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m.at(i, i) = narrow(int128(m.at(i, i)) + c, "entry");
        }
    }
    return coeff;
}

std::vector<std::vector<long long>> IntMatrix::rows() const {
    std::vector<std::vector<long long>> out(n_, std::vector<long long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
}

}  // namespace floertori
