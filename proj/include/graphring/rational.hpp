#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace graphring {

/// Exact arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : _q(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : _q(n, d)
    {
        if (d == 0)
            throw std::domain_error("zero denominator");
        _q.canonicalize();
    }
    explicit Rational(mpq_class q) : _q(std::move(q)) { _q.canonicalize(); }

    static auto from_size(std::size_t n) -> Rational { return Rational(mpq_class(mpz_class(std::to_string(n)))); }

    [[nodiscard]] auto numerator() const -> std::string { return _q.get_num().get_str(); }
    [[nodiscard]] auto denominator() const -> std::string { return _q.get_den().get_str(); }
    [[nodiscard]] auto is_zero() const -> bool { return sgn(_q) == 0; }
    [[nodiscard]] auto sign() const -> int { return sgn(_q); }
    [[nodiscard]] auto to_double() const -> double { return _q.get_d(); }
    [[nodiscard]] auto raw() const -> const mpq_class & { return _q; }

    /// "p/q", with "/q" omitted when q = 1.
    [[nodiscard]] auto to_string() const -> std::string
    {
        if (_q.get_den() == 1)
            return _q.get_num().get_str();
        return _q.get_num().get_str() + "/" + _q.get_den().get_str();
    }

    auto operator+=(const Rational & o) -> Rational & { _q += o._q; return *this; }
    auto operator-=(const Rational & o) -> Rational & { _q -= o._q; return *this; }
    auto operator*=(const Rational & o) -> Rational & { _q *= o._q; return *this; }
    auto operator/=(const Rational & o) -> Rational &
    {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        _q /= o._q;
        return *this;
    }
    auto operator-() const -> Rational { return Rational(mpq_class(-_q)); }

    friend auto operator+(Rational a, const Rational & b) -> Rational { return a += b; }
    friend auto operator-(Rational a, const Rational & b) -> Rational { return a -= b; }
    friend auto operator*(Rational a, const Rational & b) -> Rational { return a *= b; }
    friend auto operator/(Rational a, const Rational & b) -> Rational { return a /= b; }

    friend auto operator==(const Rational & a, const Rational & b) -> bool { return a._q == b._q; }
    friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
    {
        auto c = cmp(a._q, b._q);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend auto operator<<(std::ostream & os, const Rational & r) -> std::ostream & { return os << r.to_string(); }

private:
    mpq_class _q;
};

} // namespace graphring
