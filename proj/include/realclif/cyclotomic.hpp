#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace realclif {

using Rational = mpq_class;

/// Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/4).
///
/// Elements are stored as c0 + c1*z + c2*z^2 + c3*z^3 with rational
/// coefficients, reduced by z^4 = -1.  The field contains i = z^2 and
/// sqrt(2) = z - z^3; its real subfield Q(sqrt 2) is the fixed field of
/// conjugation z -> z^-1.
class Cyc8 {
public:
    Cyc8() : c_{} {}
    Cyc8(long n) : c_{Rational(n), Rational(), Rational(), Rational()} {}
    Cyc8(const Rational& r) : c_{r, Rational(), Rational(), Rational()} {}
    Cyc8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    /// z^k for any integer k (k may be negative).
    static Cyc8 zeta(int k = 1) {
        int e = ((k % 8) + 8) % 8;
        Cyc8 r;
        r.c_[e % 4] = (e < 4) ? 1 : -1;
        return r;
    }
    static Cyc8 i() { return zeta(2); }
    static Cyc8 sqrt2() { return zeta(1) - zeta(3); }

    const Rational& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    Cyc8 operator-() const { return Cyc8(-c_[0], -c_[1], -c_[2], -c_[3]); }

    Cyc8& operator+=(const Cyc8& o) {
        for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
        return *this;
    }
    Cyc8& operator-=(const Cyc8& o) {
        for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
        return *this;
    }
    Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }

    friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
    friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }

    // Negacyclic convolution of length 4: z^4 = -1.
    friend Cyc8 operator*(const Cyc8& a, const Cyc8& b) {
        Cyc8 r;
        for (int m = 0; m < 4; ++m) {
            if (a.c_[m] == 0) continue;
            for (int n = 0; n < 4; ++n) {
                if (b.c_[n] == 0) continue;
                Rational t = a.c_[m] * b.c_[n];
                int e = m + n;
                if (e >= 4) r.c_[e - 4] -= t;
                else r.c_[e] += t;
            }
        }
        return r;
    }

    friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc8& a, const Cyc8& b) { return !(a == b); }

    /// Galois action z -> z^k for odd k; the four automorphisms are k = 1,3,5,7.
    Cyc8 galois(int k) const {
        if (k % 2 == 0) throw std::invalid_argument("Cyc8::galois: k must be odd");
        Cyc8 r(c_[0]);
        for (int j = 1; j < 4; ++j) {
            if (c_[j] == 0) continue;
            r += Cyc8(c_[j]) * zeta(j * k);
        }
        return r;
    }

    /// Complex conjugation z -> z^-1; fixes the real subfield Q(sqrt 2).
    Cyc8 conjugate() const { return galois(7); }

    bool is_real() const { return c_[2] == 0 && c_[1] == -c_[3]; }

    /// a * conj(a); always real, zero iff a = 0.
    Cyc8 norm_squared() const { return *this * conjugate(); }

    Cyc8 inverse() const {
        if (is_zero()) throw std::domain_error("Cyc8: division by zero");
        // Product of the other three Galois conjugates; a * b is the field
        // norm, a nonzero rational.
        Cyc8 b = galois(3) * galois(5) * galois(7);
        Cyc8 n = *this * b;
        if (!n.is_rational() || n.c_[0] == 0)
            throw std::logic_error("Cyc8: field norm must be a nonzero rational");
        Rational inv = 1 / n.c_[0];
        return Cyc8(b.c_[0] * inv, b.c_[1] * inv, b.c_[2] * inv, b.c_[3] * inv);
    }

    friend Cyc8 operator/(const Cyc8& a, const Cyc8& b) { return a * b.inverse(); }

    /// Exponent t with *this == z^t, if this is an 8th root of unity.
    std::optional<int> mu8_exponent() const {
        for (int t = 0; t < 8; ++t)
            if (*this == zeta(t)) return t;
        return std::nullopt;
    }

private:
    std::array<Rational, 4> c_;
};

} // namespace realclif
