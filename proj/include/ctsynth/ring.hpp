#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ctsynth
{

    using Integer = mpz_class;

    /**
     * ZOmega: elements a*w^3 + b*w^2 + c*w + d of Z[w], w = exp(i*pi/4).
     * Every 4-tuple is a valid element; products reduce with w^4 = -1.
     */
    class ZOmega
    {
    public:
        ZOmega() = default;
        ZOmega(Integer a, Integer b, Integer c, Integer d)
            : _a(std::move(a)), _b(std::move(b)), _c(std::move(c)), _d(std::move(d))
        {
        }

        static ZOmega from_int(const Integer &n) { return ZOmega(0, 0, 0, n); }
        /// w^p for any integer p.
        static ZOmega omega_power(int p);
        /// delta = 1 + w
        static ZOmega delta() { return ZOmega(0, 0, 1, 1); }

        const Integer &a() const noexcept { return _a; }
        const Integer &b() const noexcept { return _b; }
        const Integer &c() const noexcept { return _c; }
        const Integer &d() const noexcept { return _d; }

        bool is_zero() const noexcept;

        ZOmega operator+(const ZOmega &other) const;
        ZOmega operator-(const ZOmega &other) const;
        ZOmega operator-() const;
        ZOmega operator*(const ZOmega &other) const;
        ZOmega &operator+=(const ZOmega &other);
        ZOmega &operator-=(const ZOmega &other);

        /// this * w^p; a signed rotation of the coefficients.
        ZOmega mul_omega(int p) const;
        /// this * delta^n
        ZOmega mul_delta(int n = 1) const;

        bool operator==(const ZOmega &other) const = default;

        /// "a,b,c,d"
        std::string to_string() const;

    private:
        Integer _a, _b, _c, _d;
    };

    ZOmega zw_add(const ZOmega &x, const ZOmega &y);
    ZOmega zw_mul(const ZOmega &x, const ZOmega &y);

    /// Complex conjugation: i -> -i, sqrt2 -> sqrt2.
    ZOmega conj_dagger(const ZOmega &x);
    /// sqrt2-conjugation: i -> i, sqrt2 -> -sqrt2.
    ZOmega conj_bullet(const ZOmega &x);

    /// x * x^dagger * x^bullet * x^dagger-bullet, a rational integer.
    Integer norm(const ZOmega &x);

    /// Parity test for delta | x (rho_1(x) == 0).
    bool delta_divides(const ZOmega &x);

    /// x / delta when delta divides x.
    std::optional<ZOmega> div_delta(const ZOmega &x);

    /**
     * DOmega: num / delta^dexp, always stored canonically
     * (dexp == 0 or delta does not divide num; zero has dexp 0).
     */
    class DOmega
    {
    public:
        DOmega() = default;
        DOmega(ZOmega num, int dexp);

        static DOmega from_int(long n) { return DOmega(ZOmega::from_int(n), 0); }
        static DOmega omega_power(int p) { return DOmega(ZOmega::omega_power(p), 0); }
        static DOmega inv_sqrt2();

        const ZOmega &num() const noexcept { return _num; }
        int dexp() const noexcept { return _dexp; }
        bool is_zero() const noexcept { return _num.is_zero(); }

        /// Numerator rescaled to denominator delta^k; requires k >= dexp().
        ZOmega scaled(int k) const;

        DOmega operator+(const DOmega &other) const;
        DOmega operator-(const DOmega &other) const;
        DOmega operator-() const;
        DOmega operator*(const DOmega &other) const;

        DOmega mul_omega(int p) const;
        DOmega div_sqrt2() const;

        bool operator==(const DOmega &other) const = default;

        /// "a,b,c,d/k"
        std::string to_string() const;

    private:
        ZOmega _num;
        int _dexp = 0;
    };

    /// Divides out delta while possible; result satisfies the canonical-form invariant.
    DOmega canonicalize(ZOmega num, int dexp);

    DOmega conj_dagger(const DOmega &x);

    int least_delta_exponent(const DOmega &x);

    /// (a + b*sqrt2 + i*(c + d*sqrt2)) / sqrt2^m
    struct Sqrt2Form
    {
        Integer a, b, c, d;
        int m = 0;

        bool operator==(const Sqrt2Form &) const = default;
    };

    DOmega from_sqrt2_form(const Sqrt2Form &form);
    /// Inverse of from_sqrt2_form with the least possible m.
    Sqrt2Form to_sqrt2_form(const DOmega &x);

    /// Element of Z[w]/(delta^n), n in {1,2,3}, written x0 + x1*delta + x2*delta^2.
    class ResidueClass
    {
    public:
        ResidueClass() = default;
        ResidueClass(int modulus_exp, int x0, int x1 = 0, int x2 = 0);

        int modulus_exp() const noexcept { return _n; }
        int x0() const noexcept { return _x[0]; }
        int x1() const noexcept { return _x[1]; }
        int x2() const noexcept { return _x[2]; }

        bool is_zero() const noexcept { return _x == std::array<std::uint8_t, 3>{0, 0, 0}; }
        /// Units are exactly the classes with x0 == 1.
        bool is_unit() const noexcept { return _x[0] == 1; }

        /// For a unit class modulo delta^3, the s in w^s (mod 4).
        int omega_exponent() const;

        /// Representative x0 + x1*delta + x2*delta^2.
        ZOmega lift() const;

        ResidueClass operator+(const ResidueClass &other) const;
        ResidueClass operator*(const ResidueClass &other) const;

        bool operator==(const ResidueClass &) const = default;

        /// e.g. "1+1δ+0δ²"
        std::string to_string() const;

        /// All 2^n classes, ordered by (x2, x1, x0) bits.
        static std::vector<ResidueClass> all(int modulus_exp);

    private:
        int _n = 1;
        std::array<std::uint8_t, 3> _x{0, 0, 0};
    };

    ResidueClass rho(const ZOmega &x, int n);

    /// rho_n(delta^k * x); requires k >= least_delta_exponent(x).
    ResidueClass rho_k(const DOmega &x, int n, int k);

} // namespace ctsynth
