#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace penner {

template <class T>
struct ZeroTraits {
    static bool is_zero(const T& x) { return x == 0; }
    static T zero() { return T(0); }
    static T one() { return T(1); }
};

/// Dense square matrix, row-major.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, ZeroTraits<T>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ZeroTraits<T>::one();
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && data_ == o.data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
        Matrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (ZeroTraits<T>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) {
                    const T& bkj = b(k, j);
                    if (ZeroTraits<T>::is_zero(bkj)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) out(r, c) = f((*this)(r, c));
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Exact power by repeated squaring.
template <class T>
Matrix<T> power(const Matrix<T>& base, unsigned long m) {
    Matrix<T> result = Matrix<T>::identity(base.size());
    Matrix<T> square = base;
    while (m > 0) {
        if (m & 1UL) result = result * square;
        m >>= 1;
        if (m > 0) square = square * square;
    }
    return result;
}

}  // namespace penner
