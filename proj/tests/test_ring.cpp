#include "ctsynth/ring.hpp"

#include <set>

#include <gtest/gtest.h>

#include "ctsynth/error.hpp"
#include "numeric_oracle.hpp"

using namespace ctsynth;

namespace
{

    const ZOmega w(0, 0, 1, 0);
    const ZOmega delta(0, 0, 1, 1);

    ZOmega zi(long d) { return ZOmega(0, 0, 0, d); }

    // Schoolbook product modulo x^4 + 1, written out independently of the library.
    ZOmega poly_mul(const ZOmega &x, const ZOmega &y)
    {
        const Integer p[4] = {x.d(), x.c(), x.b(), x.a()};
        const Integer q[4] = {y.d(), y.c(), y.b(), y.a()};
        Integer r[7];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r[i + j] += p[i] * q[j];
        return ZOmega(r[3], r[2] - r[6], r[1] - r[5], r[0] - r[4]);
    }

    class RingProperties : public ::testing::Test
    {
    protected:
        std::mt19937_64 rng{20240611};
    };

} // namespace

TEST(ZOmega, AddExamples)
{
    EXPECT_EQ(zw_add(delta, delta), ZOmega(0, 0, 2, 2));
    const ZOmega x(3, -1, 4, 1);
    EXPECT_EQ(zw_add(x, ZOmega()), x);
    EXPECT_EQ(zw_add(delta, ZOmega(0, 0, -1, -1)), ZOmega());
}

TEST(ZOmega, MulExamples)
{
    EXPECT_EQ(zw_mul(delta, delta), ZOmega(0, 1, 2, 1));
    EXPECT_EQ(zw_mul(w, ZOmega(1, 0, 0, 0)), ZOmega(0, 0, 0, -1));
    const ZOmega x(3, -1, 4, 1);
    EXPECT_EQ(zw_mul(x, zi(1)), x);
}

TEST(ZOmega, ConjugationExamples)
{
    EXPECT_EQ(conj_dagger(w), ZOmega(-1, 0, 0, 0));
    EXPECT_EQ(conj_dagger(zi(5)), zi(5));
    EXPECT_EQ(conj_bullet(delta), ZOmega(0, 0, -1, 1));
    EXPECT_EQ(conj_bullet(ZOmega(0, 1, 0, 0)), ZOmega(0, 1, 0, 0));
    // i -> -i under complex conjugation
    EXPECT_EQ(conj_dagger(ZOmega(0, 1, 0, 0)), ZOmega(0, -1, 0, 0));
}

TEST(ZOmega, NormExamples)
{
    EXPECT_EQ(norm(delta), 2);
    EXPECT_EQ(norm(w), 1);
    EXPECT_EQ(norm(ZOmega()), 0);
}

TEST(ZOmega, DivDeltaExamples)
{
    EXPECT_EQ(div_delta(zw_mul(delta, delta)), delta);
    EXPECT_FALSE(div_delta(zi(1)).has_value());
    EXPECT_EQ(div_delta(ZOmega()), ZOmega());
}

TEST(ZOmega, TextRendering) { EXPECT_EQ(ZOmega(1, -2, 3, 0).to_string(), "1,-2,3,0"); }

TEST_F(RingProperties, MultiplicationMatchesSchoolbookAndComplexValue)
{
    for (int t = 0; t < 500; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng), y = oracle::random_zomega(rng);
        EXPECT_EQ(x * y, poly_mul(x, y));
        EXPECT_TRUE(oracle::near(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y)));
        EXPECT_TRUE(oracle::near(oracle::embed(x + y), oracle::embed(x) + oracle::embed(y)));
    }
}

TEST_F(RingProperties, RingLaws)
{
    for (int t = 0; t < 300; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng), y = oracle::random_zomega(rng), z = oracle::random_zomega(rng);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x - x, ZOmega());
    }
}

TEST_F(RingProperties, ConjugationsAreCommutingInvolutiveAutomorphisms)
{
    for (int t = 0; t < 300; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng), y = oracle::random_zomega(rng);
        EXPECT_EQ(conj_dagger(x * y), conj_dagger(x) * conj_dagger(y));
        EXPECT_EQ(conj_bullet(x * y), conj_bullet(x) * conj_bullet(y));
        EXPECT_EQ(conj_dagger(x + y), conj_dagger(x) + conj_dagger(y));
        EXPECT_EQ(conj_bullet(x + y), conj_bullet(x) + conj_bullet(y));
        EXPECT_EQ(conj_dagger(conj_dagger(x)), x);
        EXPECT_EQ(conj_bullet(conj_bullet(x)), x);
        EXPECT_EQ(conj_dagger(conj_bullet(x)), conj_bullet(conj_dagger(x)));
        // dagger is complex conjugation; bullet is the embedding w -> w^5
        EXPECT_TRUE(oracle::near(oracle::embed(conj_dagger(x)), std::conj(oracle::embed(x))));
        EXPECT_TRUE(oracle::near(oracle::embed(conj_bullet(x)), oracle::embed(x, 5)));
    }
}

TEST_F(RingProperties, NormIsProductOfConjugatesAndMultiplicative)
{
    for (int t = 0; t < 300; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng), y = oracle::random_zomega(rng);
        const ZOmega p = x * conj_dagger(x) * conj_bullet(x) * conj_bullet(conj_dagger(x));
        EXPECT_EQ(p, ZOmega::from_int(norm(x)));
        EXPECT_EQ(norm(x * y), norm(x) * norm(y));
        EXPECT_GE(norm(x), 0);
    }
}

TEST_F(RingProperties, DivDeltaAgreesWithGaloisOracle)
{
    for (int t = 0; t < 500; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng);
        const auto q = div_delta(x);
        EXPECT_EQ(q.has_value(), oracle::delta_power_divides(x, 1));
        EXPECT_EQ(q.has_value(), delta_divides(x));
        if (q)
        {
            EXPECT_EQ(*q * delta, x);
        }
        EXPECT_EQ(div_delta(x * delta), x);
    }
}

TEST(Residue, ReducibilityEquivalence)
{
    std::mt19937_64 rng(7);
    const std::set<std::string> reducible_mod3 = {rho(ZOmega(), 3).to_string(),
                                                  rho(zi(1) + ZOmega::omega_power(1), 3).to_string(),
                                                  rho(zi(1) + ZOmega::omega_power(2), 3).to_string(),
                                                  rho(zi(1) + ZOmega::omega_power(3), 3).to_string()};
    for (int t = 0; t < 500; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng);
        const bool divisible = delta_divides(x);
        EXPECT_EQ(rho(x, 1).is_zero(), divisible);
        EXPECT_EQ(reducible_mod3.count(rho(x, 3).to_string()) == 1, divisible);
    }
}

TEST(Residue, ClosedFormIsAResidue)
{
    // x - lift(rho(x, n)) must be divisible by delta^n.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng);
        for (int n = 1; n <= 3; ++n)
            EXPECT_TRUE(oracle::delta_power_divides(x - rho(x, n).lift(), n)) << x.to_string() << " n=" << n;
    }
}

TEST(Residue, BasisTableListing)
{
    // Representative -> x0 + x1 d + x2 d^2, as listed modulo delta^3.
    const std::pair<ZOmega, const char *> rows[] = {
        {ZOmega(), "0+0δ+0δ²"},
        {zi(1) + ZOmega::omega_power(1), "0+1δ+0δ²"},
        {zi(1) + ZOmega::omega_power(2), "0+0δ+1δ²"},
        {zi(1) + ZOmega::omega_power(3), "0+1δ+1δ²"},
        {zi(1), "1+0δ+0δ²"},
        {ZOmega::omega_power(1), "1+1δ+0δ²"},
        {ZOmega::omega_power(2), "1+0δ+1δ²"},
        {ZOmega::omega_power(3), "1+1δ+1δ²"},
    };
    for (const auto &[x, text] : rows)
        EXPECT_EQ(rho(x, 3).to_string(), text) << x.to_string();
    EXPECT_EQ(rho(w, 3), ResidueClass(3, 1, 1, 0));
    EXPECT_EQ(rho(ZOmega::omega_power(3), 3), ResidueClass(3, 1, 1, 1));
    EXPECT_TRUE(rho(delta, 1).is_zero());
}

TEST(Residue, QuotientSizes)
{
    const ZOmega reps[] = {ZOmega(),
                           zi(1),
                           ZOmega::omega_power(1),
                           ZOmega::omega_power(2),
                           ZOmega::omega_power(3),
                           zi(1) + ZOmega::omega_power(1),
                           zi(1) + ZOmega::omega_power(2),
                           zi(1) + ZOmega::omega_power(3)};
    for (int n = 1; n <= 3; ++n)
    {
        std::set<std::string> classes;
        for (const auto &r : reps)
            classes.insert(rho(r, n).to_string());
        EXPECT_EQ(classes.size(), std::size_t{1} << n);
        EXPECT_EQ(ResidueClass::all(n).size(), std::size_t{1} << n);
    }
}

TEST(Residue, Congruences)
{
    EXPECT_TRUE(rho(zi(2), 3).is_zero());
    EXPECT_EQ(rho(zi(-1), 3), rho(zi(1), 3));
    EXPECT_EQ(rho(ZOmega::omega_power(4), 3), rho(zi(1), 3));
    for (int p = 0; p < 8; ++p)
        EXPECT_EQ(rho(ZOmega::omega_power(p), 3).omega_exponent(), p % 4);
}

TEST(Residue, ArithmeticIsWellDefined)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng), y = oracle::random_zomega(rng);
        for (int n = 1; n <= 3; ++n)
        {
            EXPECT_EQ(rho(x, n) + rho(y, n), rho(x + y, n));
            EXPECT_EQ(rho(x, n) * rho(y, n), rho(x * y, n));
        }
    }
}

TEST(Residue, OmegaExponentNeedsUnitModDeltaCubed)
{
    EXPECT_THROW(ResidueClass(3, 0, 1, 0).omega_exponent(), Error);
    EXPECT_THROW(ResidueClass(2, 1, 1, 0).omega_exponent(), Error);
    EXPECT_THROW(ResidueClass(4, 1), Error);
}

TEST(DOmega, LeastDeltaExponentExamples)
{
    const DOmega h = DOmega::inv_sqrt2();
    EXPECT_EQ(least_delta_exponent(h), 2);
    // delta * h = num / delta is not in Z[w]; delta^2 * h = num is.
    EXPECT_FALSE(oracle::delta_power_divides(h.num(), 1));
    EXPECT_TRUE(oracle::delta_power_divides(h.num(), 0));
    EXPECT_TRUE(oracle::near(oracle::embed(h), 1 / std::sqrt(2.0)));
    EXPECT_EQ(least_delta_exponent(DOmega(ZOmega(3, 0, 1, 1), 0)), 0);
    EXPECT_EQ(least_delta_exponent(DOmega(w, 3)), 3);
}

TEST(DOmega, CanonicalizeExamples)
{
    EXPECT_EQ(canonicalize(delta * delta, 2), DOmega::from_int(1));
    const DOmega x = canonicalize(w, 3);
    EXPECT_EQ(x.num(), w);
    EXPECT_EQ(x.dexp(), 3);
    const DOmega z = canonicalize(ZOmega(), 5);
    EXPECT_EQ(z.dexp(), 0);
    EXPECT_TRUE(z.is_zero());
}

TEST(DOmega, ScaledRejectsSmallExponent)
{
    EXPECT_THROW(DOmega(w, 3).scaled(2), Error);
    EXPECT_EQ(DOmega(w, 3).scaled(4), w * delta);
}

TEST(DOmega, ArithmeticMatchesComplexValue)
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t)
    {
        const DOmega x = oracle::random_domega(rng), y = oracle::random_domega(rng);
        EXPECT_TRUE(oracle::near(oracle::embed(x + y), oracle::embed(x) + oracle::embed(y), 1e-7));
        EXPECT_TRUE(oracle::near(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y), 1e-7));
        EXPECT_TRUE(oracle::near(oracle::embed(conj_dagger(x)), std::conj(oracle::embed(x)), 1e-7));
        EXPECT_TRUE(oracle::near(oracle::embed(x.div_sqrt2()), oracle::embed(x) / std::sqrt(2.0), 1e-7));
        // canonical: dexp is 0 or delta does not divide the numerator
        EXPECT_TRUE(x.dexp() == 0 || !delta_divides(x.num()));
        EXPECT_EQ(x - x, DOmega());
    }
}

TEST(Sqrt2Form, Examples)
{
    const DOmega one = from_sqrt2_form({1, 0, 0, 0, 0});
    EXPECT_EQ(one.num(), zi(1));
    EXPECT_EQ(one.dexp(), 0);
    const DOmega i = from_sqrt2_form({0, 0, 1, 0, 0});
    EXPECT_EQ(i.num(), ZOmega(0, 1, 0, 0));
    EXPECT_EQ(i.dexp(), 0);
    EXPECT_EQ(from_sqrt2_form({1, 0, 0, 0, 1}).dexp(), 2);
    EXPECT_EQ(from_sqrt2_form({1, 0, 0, 0, 1}), DOmega::inv_sqrt2());
}

TEST(Sqrt2Form, RoundTripsWithLeastExponent)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t)
    {
        const DOmega x = oracle::random_domega(rng, 20, 9);
        const Sqrt2Form f = to_sqrt2_form(x);
        EXPECT_EQ(from_sqrt2_form(f), x);
        const double r2 = std::sqrt(2.0);
        const oracle::cd value((f.a.get_d() + f.b.get_d() * r2), (f.c.get_d() + f.d.get_d() * r2));
        EXPECT_TRUE(oracle::near(value / std::pow(r2, f.m), oracle::embed(x), 1e-7));
        if (f.m > 0)
        {
            // not reducible: a and c cannot both be even
            EXPECT_TRUE(mpz_odd_p(f.a.get_mpz_t()) || mpz_odd_p(f.c.get_mpz_t()));
        }
    }
}
