#include "ctsynth/ring.hpp"

#include <cassert>

#include "ctsynth/error.hpp"

namespace ctsynth
{

    namespace
    {
        int odd(const Integer &n) { return mpz_odd_p(n.get_mpz_t()) ? 1 : 0; }

        int mod8(int p) { return ((p % 8) + 8) % 8; }

        // Coefficients indexed by power of w: [d, c, b, a].
        std::array<Integer, 4> by_power(const ZOmega &x) { return {x.d(), x.c(), x.b(), x.a()}; }

        ZOmega from_power(std::array<Integer, 4> &&v)
        {
            return ZOmega(std::move(v[3]), std::move(v[2]), std::move(v[1]), std::move(v[0]));
        }

        // 2/delta = delta^dagger * delta^bullet * delta^dagger-bullet
        const ZOmega &delta_cofactor()
        {
            static const ZOmega k = [] {
                const ZOmega d = ZOmega::delta();
                return conj_dagger(d) * conj_bullet(d) * conj_bullet(conj_dagger(d));
            }();
            return k;
        }

        // w * (1 + sqrt2); 1/sqrt2 = this / delta^2
        const ZOmega &inv_sqrt2_num()
        {
            static const ZOmega k(0, 1, 1, 1);
            return k;
        }
    } // namespace

    const char *error_kind_name(ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DeltaExponentTooSmall: return "DeltaExponentTooSmall";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotMonomial: return "NotMonomial";
        case ErrorKind::UnreachablePattern: return "UnreachablePattern";
        case ErrorKind::NoOffset: return "NoOffset";
        case ErrorKind::KEqualsOne: return "KEqualsOne";
        case ErrorKind::ImpossibleBranch: return "ImpossibleBranch";
        case ErrorKind::NoProgress: return "NoProgress";
        case ErrorKind::UnsupportedDim: return "UnsupportedDim";
        case ErrorKind::TemplateVerificationFailed: return "TemplateVerificationFailed";
        case ErrorKind::Parse: return "ParseError";
        }
        return "Unknown";
    }

    // ---------------------------------------------------------------- ZOmega

    ZOmega ZOmega::omega_power(int p) { return ZOmega(0, 0, 0, 1).mul_omega(p); }

    bool ZOmega::is_zero() const noexcept { return _a == 0 && _b == 0 && _c == 0 && _d == 0; }

    ZOmega ZOmega::operator+(const ZOmega &o) const
    {
        return ZOmega(_a + o._a, _b + o._b, _c + o._c, _d + o._d);
    }

    ZOmega ZOmega::operator-(const ZOmega &o) const
    {
        return ZOmega(_a - o._a, _b - o._b, _c - o._c, _d - o._d);
    }

    ZOmega ZOmega::operator-() const { return ZOmega(-_a, -_b, -_c, -_d); }

    ZOmega &ZOmega::operator+=(const ZOmega &o)
    {
        _a += o._a;
        _b += o._b;
        _c += o._c;
        _d += o._d;
        return *this;
    }

    ZOmega &ZOmega::operator-=(const ZOmega &o)
    {
        _a -= o._a;
        _b -= o._b;
        _c -= o._c;
        _d -= o._d;
        return *this;
    }

    ZOmega ZOmega::operator*(const ZOmega &o) const
    {
        const auto x = by_power(*this);
        const auto y = by_power(o);
        std::array<Integer, 4> r;
        for (int i = 0; i < 4; ++i)
        {
            for (int j = 0; j < 4; ++j)
            {
                // w^(i+j), folding w^4 = -1
                if (i + j < 4)
                    r[i + j] += x[i] * y[j];
                else
                    r[i + j - 4] -= x[i] * y[j];
            }
        }
        return from_power(std::move(r));
    }

    ZOmega ZOmega::mul_omega(int p) const
    {
        p = mod8(p);
        if (p == 0)
            return *this;
        const auto x = by_power(*this);
        std::array<Integer, 4> r;
        for (int i = 0; i < 4; ++i)
        {
            int pos = i + p;
            bool negate = false;
            while (pos >= 4)
            {
                pos -= 4;
                negate = !negate;
            }
            r[pos] = negate ? Integer(-x[i]) : x[i];
        }
        return from_power(std::move(r));
    }

    ZOmega ZOmega::mul_delta(int n) const
    {
        assert(n >= 0);
        ZOmega r = *this;
        for (int i = 0; i < n; ++i)
            r += r.mul_omega(1);
        return r;
    }

    std::string ZOmega::to_string() const
    {
        return _a.get_str() + "," + _b.get_str() + "," + _c.get_str() + "," + _d.get_str();
    }

    ZOmega zw_add(const ZOmega &x, const ZOmega &y) { return x + y; }
    ZOmega zw_mul(const ZOmega &x, const ZOmega &y) { return x * y; }

    ZOmega conj_dagger(const ZOmega &x) { return ZOmega(-x.c(), -x.b(), -x.a(), x.d()); }

    ZOmega conj_bullet(const ZOmega &x) { return ZOmega(-x.a(), x.b(), -x.c(), x.d()); }

    Integer norm(const ZOmega &x)
    {
        const Integer &a = x.a(), &b = x.b(), &c = x.c(), &d = x.d();
        Integer s = a * a + b * b + c * c + d * d;
        Integer t = c * d + b * c + a * b - d * a;
        return s * s - 2 * t * t;
    }

    bool delta_divides(const ZOmega &x)
    {
        return ((odd(x.a()) + odd(x.b()) + odd(x.c()) + odd(x.d())) & 1) == 0;
    }

    std::optional<ZOmega> div_delta(const ZOmega &x)
    {
        // norm(delta) = 2: delta | x iff x * (2/delta) has even coefficients.
        ZOmega y = x * delta_cofactor();
        if (odd(y.a()) || odd(y.b()) || odd(y.c()) || odd(y.d()))
            return std::nullopt;
        Integer a = y.a() / 2, b = y.b() / 2, c = y.c() / 2, d = y.d() / 2;
        return ZOmega(std::move(a), std::move(b), std::move(c), std::move(d));
    }

    // ---------------------------------------------------------------- DOmega

    DOmega canonicalize(ZOmega num, int dexp) { return DOmega(std::move(num), dexp); }

    DOmega::DOmega(ZOmega num, int dexp) : _num(std::move(num)), _dexp(dexp)
    {
        if (_dexp < 0)
            throw Error(ErrorKind::DeltaExponentTooSmall, "negative delta exponent");
        if (_num.is_zero())
            _dexp = 0;
        while (_dexp > 0 && delta_divides(_num))
        {
            _num = *div_delta(_num);
            --_dexp;
        }
    }

    DOmega DOmega::inv_sqrt2() { return DOmega(inv_sqrt2_num(), 2); }

    ZOmega DOmega::scaled(int k) const
    {
        if (k < _dexp)
            throw Error(ErrorKind::DeltaExponentTooSmall,
                        "k=" + std::to_string(k) + " below least delta exponent " + std::to_string(_dexp));
        return _num.mul_delta(k - _dexp);
    }

    DOmega DOmega::operator+(const DOmega &o) const
    {
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        const int k = std::max(_dexp, o._dexp);
        return DOmega(scaled(k) + o.scaled(k), k);
    }

    DOmega DOmega::operator-(const DOmega &o) const { return *this + (-o); }

    DOmega DOmega::operator-() const
    {
        DOmega r = *this;
        r._num = -r._num;
        return r;
    }

    DOmega DOmega::operator*(const DOmega &o) const
    {
        if (is_zero() || o.is_zero())
            return DOmega();
        return DOmega(_num * o._num, _dexp + o._dexp);
    }

    DOmega DOmega::mul_omega(int p) const
    {
        DOmega r = *this;
        r._num = r._num.mul_omega(p);
        return r;
    }

    DOmega DOmega::div_sqrt2() const
    {
        if (is_zero())
            return *this;
        return DOmega(_num * inv_sqrt2_num(), _dexp + 2);
    }

    std::string DOmega::to_string() const { return _num.to_string() + "/" + std::to_string(_dexp); }

    DOmega conj_dagger(const DOmega &x)
    {
        // delta^dagger = w^-1 * delta
        return DOmega(conj_dagger(x.num()).mul_omega(x.dexp()), x.dexp());
    }

    int least_delta_exponent(const DOmega &x) { return x.dexp(); }

    DOmega from_sqrt2_form(const Sqrt2Form &f)
    {
        if (f.m < 0)
            throw Error(ErrorKind::DeltaExponentTooSmall, "negative sqrt2 exponent");
        // sqrt2 = w - w^3, i = w^2, i*sqrt2 = w^3 + w
        ZOmega num(f.d - f.b, f.c, f.b + f.d, f.a);
        for (int i = 0; i < f.m; ++i)
            num = num * inv_sqrt2_num();
        return DOmega(std::move(num), 2 * f.m);
    }

    Sqrt2Form to_sqrt2_form(const DOmega &x)
    {
        if (x.is_zero())
            return Sqrt2Form{0, 0, 0, 0, 0};
        // 1/delta = delta^dagger * (sqrt2 - 1) / sqrt2
        static const ZOmega step = ZOmega(-1, 0, 0, 1) * ZOmega(-1, 0, 1, -1);
        ZOmega num = x.num();
        for (int i = 0; i < x.dexp(); ++i)
            num = num * step;
        // A w^3 + B w^2 + C w + D = ((C - A) + D sqrt2 + i((A + C) + B sqrt2)) / sqrt2
        Sqrt2Form f{num.c() - num.a(), num.d(), num.a() + num.c(), num.b(), x.dexp() + 1};
        while (f.m > 0 && !odd(f.a) && !odd(f.c))
        {
            Integer a = f.b, b = f.a / 2, c = f.d, d = f.c / 2;
            f = Sqrt2Form{std::move(a), std::move(b), std::move(c), std::move(d), f.m - 1};
        }
        return f;
    }

    // ---------------------------------------------------------- ResidueClass

    ResidueClass::ResidueClass(int modulus_exp, int x0, int x1, int x2) : _n(modulus_exp)
    {
        if (_n < 1 || _n > 3)
            throw Error(ErrorKind::IndexOutOfRange, "residue modulus exponent must be 1..3");
        _x[0] = static_cast<std::uint8_t>(x0 & 1);
        _x[1] = static_cast<std::uint8_t>(_n >= 2 ? (x1 & 1) : 0);
        _x[2] = static_cast<std::uint8_t>(_n >= 3 ? (x2 & 1) : 0);
    }

    int ResidueClass::omega_exponent() const
    {
        if (_n != 3 || !is_unit())
            throw Error(ErrorKind::NoOffset, "omega exponent needs a unit residue modulo delta^3");
        return _x[1] + 2 * _x[2];
    }

    ZOmega ResidueClass::lift() const
    {
        const ZOmega d = ZOmega::delta();
        ZOmega r = ZOmega::from_int(_x[0]);
        if (_x[1])
            r += d;
        if (_x[2])
            r += d * d;
        return r;
    }

    ResidueClass ResidueClass::operator+(const ResidueClass &o) const
    {
        if (_n != o._n)
            throw Error(ErrorKind::DimensionMismatch, "residue classes of different moduli");
        return rho(lift() + o.lift(), _n);
    }

    ResidueClass ResidueClass::operator*(const ResidueClass &o) const
    {
        if (_n != o._n)
            throw Error(ErrorKind::DimensionMismatch, "residue classes of different moduli");
        return rho(lift() * o.lift(), _n);
    }

    std::string ResidueClass::to_string() const
    {
        std::string s = std::to_string(_x[0]);
        if (_n >= 2)
            s += "+" + std::to_string(_x[1]) + "δ";
        if (_n >= 3)
            s += "+" + std::to_string(_x[2]) + "δ²";
        return s;
    }

    std::vector<ResidueClass> ResidueClass::all(int modulus_exp)
    {
        std::vector<ResidueClass> out;
        for (int i = 0; i < (1 << modulus_exp); ++i)
            out.emplace_back(modulus_exp, i & 1, (i >> 1) & 1, (i >> 2) & 1);
        return out;
    }

    ResidueClass rho(const ZOmega &x, int n)
    {
        const int a = odd(x.a()), b = odd(x.b()), c = odd(x.c()), d = odd(x.d());
        return ResidueClass(n, a ^ b ^ c ^ d, a ^ c, a ^ b);
    }

    ResidueClass rho_k(const DOmega &x, int n, int k)
    {
        if (k < x.dexp())
            throw Error(ErrorKind::DeltaExponentTooSmall,
                        "k=" + std::to_string(k) + " is not a delta exponent");
        const int shift = k - x.dexp();
        if (shift >= n)
            return ResidueClass(n, 0);
        return rho(x.num().mul_delta(shift), n);
    }

} // namespace ctsynth
