#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace trapion::testing {

using C = std::complex<double>;

// Dense square matrix for brute-force checks.
struct Dense {
    std::size_t n = 0;
    std::vector<C> a;

    explicit Dense(std::size_t dim) : n(dim), a(dim * dim) {}
    static Dense eye(std::size_t dim) {
        Dense m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
    C& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    Dense operator*(const Dense& b) const {
        Dense out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const C x = (*this)(i, k);
                if (x == C{}) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += x * b(k, j);
            }
        return out;
    }
    Dense scaled(C s) const {
        Dense out = *this;
        for (auto& x : out.a) x *= s;
        return out;
    }
    Dense operator+(const Dense& b) const {
        Dense out = *this;
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += b.a[i];
        return out;
    }
    std::vector<C> apply(const std::vector<C>& v) const {
        std::vector<C> out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    double norm1() const {
        double best = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += std::abs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }
};

// exp(M) by scaling and squaring with a 30-term Taylor series.
inline Dense expm(const Dense& m) {
    int squarings = 0;
    double norm = m.norm1();
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    const Dense x = m.scaled(std::ldexp(1.0, -squarings));
    Dense result = Dense::eye(m.n);
    Dense term = Dense::eye(m.n);
    for (int k = 1; k <= 30; ++k) {
        term = (term * x).scaled(1.0 / k);
        result = result + term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace trapion::testing
