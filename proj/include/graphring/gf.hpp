#pragma once

#include <graphring/error.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace graphring {

/// Finite field GF(q) for q in {2, 3, 4} with precomputed operation tables. Elements are
/// 0..q-1. GF(4) elements are polynomials a0 + a1 x over GF(2) encoded as a0 | a1 << 1,
/// reduced modulo x^2 + x + 1.
class GaloisField {
public:
    explicit GaloisField(unsigned q) : _q(q)
    {
        if (q != 2 && q != 3 && q != 4)
            throw Error(ErrorKind::InvalidParameter, "supported fields are GF(2), GF(3) and GF(4), got q = " + std::to_string(q));
        _add.assign(q * q, 0);
        _mul.assign(q * q, 0);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                if (q == 4) {
                    _add[a * q + b] = static_cast<std::uint8_t>(a ^ b);
                    _mul[a * q + b] = static_cast<std::uint8_t>(poly_mul(a, b));
                }
                else {
                    _add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
                    _mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
                }
            }
        _neg.assign(q, 0);
        _inv.assign(q, 0);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                if (add(a, b) == 0)
                    _neg[a] = static_cast<std::uint8_t>(b);
                if (mul(a, b) == 1)
                    _inv[a] = static_cast<std::uint8_t>(b);
            }
    }

    [[nodiscard]] auto order() const noexcept -> unsigned { return _q; }
    [[nodiscard]] auto add(unsigned a, unsigned b) const -> unsigned { return _add[a * _q + b]; }
    [[nodiscard]] auto mul(unsigned a, unsigned b) const -> unsigned { return _mul[a * _q + b]; }
    [[nodiscard]] auto neg(unsigned a) const -> unsigned { return _neg[a]; }
    /// Multiplicative inverse; inv(0) is reported as 0.
    [[nodiscard]] auto inv(unsigned a) const -> unsigned { return _inv[a]; }

    /// Vector with index `code` in base-q, first coordinate most significant.
    [[nodiscard]] auto decode(std::size_t code, std::size_t dim) const -> std::vector<std::uint8_t>
    {
        std::vector<std::uint8_t> v(dim);
        for (std::size_t i = dim; i-- > 0;) {
            v[i] = static_cast<std::uint8_t>(code % _q);
            code /= _q;
        }
        return v;
    }

    [[nodiscard]] auto dot(const std::vector<std::uint8_t> & x, const std::vector<std::uint8_t> & y) const -> unsigned
    {
        unsigned s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s = add(s, mul(x[i], y[i]));
        return s;
    }

    /// q^dim, the number of vectors in GF(q)^dim.
    [[nodiscard]] auto space_size(std::size_t dim) const -> std::size_t
    {
        std::size_t s = 1;
        for (std::size_t i = 0; i < dim; ++i)
            s *= _q;
        return s;
    }

private:
    static auto poly_mul(unsigned a, unsigned b) -> unsigned
    {
        unsigned r = 0;
        for (unsigned i = 0; i < 2; ++i)
            if (b >> i & 1)
                r ^= a << i;
        if (r & 4)
            r ^= 0b111;
        return r;
    }

    unsigned _q;
    std::vector<std::uint8_t> _add, _mul, _neg, _inv;
};

} // namespace graphring
