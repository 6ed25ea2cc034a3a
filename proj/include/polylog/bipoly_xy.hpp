#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polylog/errors.hpp"
#include "polylog/poly.hpp"

namespace polylog {

/// Dense bivariate polynomial in the main variables X and Y over an abstract
/// coefficient field K, stored as a (degX+1) x (degY+1) matrix indexed by
/// (exponent of X, exponent of Y).
template <class K>
class BiPolyXY {
public:
    BiPolyXY() = default;

    BiPolyXY(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny), m_(nx * ny) {}

    static BiPolyXY constant(K c) {
        BiPolyXY out(1, 1);
        out.m_[0] = std::move(c);
        return out;
    }

    static BiPolyXY from_poly_in_x(const Poly<K>& f) {
        if (f.is_zero()) return BiPolyXY();
        BiPolyXY out(f.coeffs().size(), 1);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) out.m_[i] = f.coeffs()[i];
        return out;
    }

    static BiPolyXY from_poly_in_y(const Poly<K>& f) {
        if (f.is_zero()) return BiPolyXY();
        BiPolyXY out(1, f.coeffs().size());
        for (std::size_t j = 0; j < f.coeffs().size(); ++j) out.m_[j] = f.coeffs()[j];
        return out;
    }

    /// f(X+Y) for univariate f of degree < p, expanded with binomial
    /// coefficients taken mod p.
    static BiPolyXY from_x_plus_y(const Poly<K>& f, std::uint32_t p) {
        if (f.is_zero()) return BiPolyXY();
        std::size_t n = f.coeffs().size();
        // Pascal's triangle mod p; degrees stay below p so Lucas is not needed.
        std::vector<std::vector<std::uint32_t>> binom(n);
        for (std::size_t k = 0; k < n; ++k) {
            binom[k].assign(k + 1, 1);
            for (std::size_t i = 1; i < k; ++i)
                binom[k][i] = (binom[k - 1][i - 1] + binom[k - 1][i]) % p;
        }
        K unit = f.leading().one();
        BiPolyXY out(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const K& c = f.coeffs()[k];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i <= k; ++i) {
                K scaled = c * unit.from_int(binom[k][i]);
                out.add_at(i, k - i, scaled);
            }
        }
        out.shrink();
        return out;
    }

    bool is_zero() const {
        for (const K& c : m_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::size_t x_size() const noexcept { return nx_; }
    std::size_t y_size() const noexcept { return ny_; }

    K coeff(std::size_t i, std::size_t j) const {
        return (i < nx_ && j < ny_) ? m_[i * ny_ + j] : K();
    }

    void set(std::size_t i, std::size_t j, K c) {
        grow(i + 1, j + 1);
        m_[i * ny_ + j] = std::move(c);
    }

    void add_at(std::size_t i, std::size_t j, const K& c) {
        grow(i + 1, j + 1);
        m_[i * ny_ + j] = m_[i * ny_ + j] + c;
    }

    friend BiPolyXY operator+(const BiPolyXY& a, const BiPolyXY& b) {
        BiPolyXY out(std::max(a.nx_, b.nx_), std::max(a.ny_, b.ny_));
        for (std::size_t i = 0; i < out.nx_; ++i)
            for (std::size_t j = 0; j < out.ny_; ++j)
                out.m_[i * out.ny_ + j] = a.coeff(i, j) + b.coeff(i, j);
        out.shrink();
        return out;
    }

    friend BiPolyXY operator-(const BiPolyXY& a, const BiPolyXY& b) { return a + (-b); }

    BiPolyXY operator-() const {
        BiPolyXY out = *this;
        for (K& c : out.m_) c = -c;
        return out;
    }

    friend BiPolyXY operator*(const BiPolyXY& a, const BiPolyXY& b) {
        if (a.m_.empty() || b.m_.empty()) return BiPolyXY();
        BiPolyXY out(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
        for (std::size_t i = 0; i < a.nx_; ++i)
            for (std::size_t j = 0; j < a.ny_; ++j) {
                const K& c = a.m_[i * a.ny_ + j];
                if (c.is_zero()) continue;
                for (std::size_t k = 0; k < b.nx_; ++k)
                    for (std::size_t l = 0; l < b.ny_; ++l) {
                        const K& d = b.m_[k * b.ny_ + l];
                        if (d.is_zero()) continue;
                        std::size_t idx = (i + k) * out.ny_ + (j + l);
                        out.m_[idx] = out.m_[idx] + c * d;
                    }
            }
        out.shrink();
        return out;
    }

    BiPolyXY scaled(const K& s) const {
        BiPolyXY out = *this;
        for (K& c : out.m_) c = c * s;
        out.shrink();
        return out;
    }

    friend bool operator==(const BiPolyXY& a, const BiPolyXY& b) { return (a - b).is_zero(); }
    friend bool operator!=(const BiPolyXY& a, const BiPolyXY& b) { return !(a == b); }

    /// Apply X^p -> u and Y^p -> v. The two substitutions commute since each
    /// modulus is monic in its own variable with a tail free of both.
    BiPolyXY reduced(const K& u, const K& v, std::uint32_t p) const {
        BiPolyXY out = *this;
        for (std::size_t i = out.nx_; i-- > p;)
            for (std::size_t j = 0; j < out.ny_; ++j) {
                K& src = out.m_[i * out.ny_ + j];
                if (src.is_zero()) continue;
                std::size_t dst = (i - p) * out.ny_ + j;
                out.m_[dst] = out.m_[dst] + src * u;
                src = K();
            }
        for (std::size_t j = out.ny_; j-- > p;)
            for (std::size_t i = 0; i < out.nx_; ++i) {
                K& src = out.m_[i * out.ny_ + j];
                if (src.is_zero()) continue;
                std::size_t dst = i * out.ny_ + (j - p);
                out.m_[dst] = out.m_[dst] + src * v;
                src = K();
            }
        out.shrink();
        return out;
    }

private:
    void grow(std::size_t nx, std::size_t ny) {
        if (nx <= nx_ && ny <= ny_) return;
        std::size_t new_nx = std::max(nx, nx_), new_ny = std::max(ny, ny_);
        std::vector<K> m(new_nx * new_ny);
        for (std::size_t i = 0; i < nx_; ++i)
            for (std::size_t j = 0; j < ny_; ++j) m[i * new_ny + j] = std::move(m_[i * ny_ + j]);
        m_ = std::move(m);
        nx_ = new_nx;
        ny_ = new_ny;
    }

    void shrink() {
        std::size_t nx = 0, ny = 0;
        for (std::size_t i = 0; i < nx_; ++i)
            for (std::size_t j = 0; j < ny_; ++j)
                if (!m_[i * ny_ + j].is_zero()) {
                    nx = std::max(nx, i + 1);
                    ny = std::max(ny, j + 1);
                }
        if (nx == nx_ && ny == ny_) return;
        std::vector<K> m(nx * ny);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) m[i * ny + j] = std::move(m_[i * ny_ + j]);
        m_ = std::move(m);
        nx_ = nx;
        ny_ = ny;
    }

    std::size_t nx_ = 0, ny_ = 0;
    std::vector<K> m_;
};

}  // namespace polylog
