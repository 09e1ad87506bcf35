#include "ctsynth/oracle.hpp"

#include <gtest/gtest.h>

#include "ctsynth/error.hpp"
#include "ctsynth/synthesis.hpp"
#include "numeric_oracle.hpp"

using namespace ctsynth;

TEST(RandomInstance, Deterministic)
{
    const InstanceSpec spec{2, 50, 1234};
    const Instance a = random_instance(spec), b = random_instance(spec);
    EXPECT_EQ(a.matrix, b.matrix);
    EXPECT_EQ(a.word, b.word);
    EXPECT_EQ(a.word.size(), 50u);
    EXPECT_EQ(random_unitary(spec), a.matrix);
    EXPECT_NE(random_unitary({2, 50, 1235}), a.matrix);
}

TEST(RandomInstance, ZeroBudgetIsIdentity)
{
    EXPECT_EQ(random_unitary({1, 0, 99}), ExactMatrix::identity(2));
    EXPECT_EQ(random_unitary({2, 0, 99}), ExactMatrix::identity(4));
}

TEST(RandomInstance, MatrixIsTheProductOfTheWord)
{
    for (int q : {1, 2})
        for (std::uint64_t seed = 0; seed < 20; ++seed)
        {
            const Instance inst = random_instance({q, 25, seed});
            EXPECT_EQ(inst.matrix, gate_list_matrix(inst.word, q));
            for (const Gate &g : inst.word)
            {
                const auto alphabet = generator_alphabet(q);
                EXPECT_NE(std::find(alphabet.begin(), alphabet.end(), g), alphabet.end());
            }
        }
}

TEST(RandomInstance, SingleHadamardHasExponentTwo)
{
    // First seed whose one draw picks H (index 0 of the one-qubit alphabet).
    std::uint64_t seed = 0;
    while (std::mt19937_64(seed)() % generator_alphabet(1).size() != 0)
        ++seed;
    const Instance inst = random_instance({1, 1, seed});
    ASSERT_EQ(inst.word, std::vector{Gate::single(GateKind::H, 0)});
    EXPECT_EQ(matrix_delta_exponent(inst.matrix), 2);
}

TEST(RandomInstance, UnitaryAndNeverExponentOne)
{
    for (int q : {1, 2})
        for (int budget : {1, 5, 30, 120})
            for (std::uint64_t t = 0; t < 20; ++t)
            {
                const ExactMatrix u = random_unitary({q, budget, derive_seed(3, budget, t)});
                EXPECT_TRUE(is_unitary(u));
                EXPECT_NE(matrix_delta_exponent(u), 1);
            }
    EXPECT_THROW(random_unitary({3, 5, 0}), Error);
    EXPECT_THROW(random_unitary({0, 5, 0}), Error);
}

TEST(DeriveSeed, DistinctPerIndex)
{
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

TEST(BruteForce, ShortWords)
{
    const auto words = brute_force_words(2, 1);
    const ExactMatrix id = ExactMatrix::identity(2);
    ASSERT_TRUE(words.count(id.key()));
    EXPECT_TRUE(words.at(id.key()).word.empty());
    const ExactMatrix h = elementary_to_matrix(ElementaryOp::hadamard(0, 1), 2);
    ASSERT_TRUE(words.count(h.key()));
    EXPECT_EQ(words.at(h.key()).word.size(), 1u);
    const ExactMatrix t = elementary_to_matrix(ElementaryOp::omega_phase(1, 1), 2);
    ASSERT_TRUE(words.count(t.key()));
    EXPECT_EQ(words.at(t.key()).word.size(), 1u);
    for (const auto &[key, entry] : words)
        EXPECT_EQ(word_product(entry.word, 2), entry.matrix);
    EXPECT_THROW(brute_force_words(2, 4), Error);
}

TEST(BruteForce, SynthesisAgreesOnEveryShortWord)
{
    for (int dim : {2, 3})
    {
        for (const auto &[key, entry] : brute_force_words(dim, 2))
        {
            const Decomposition d = synthesize(entry.matrix);
            EXPECT_EQ(word_product(d.word, dim), entry.matrix) << key;
        }
    }
}

TEST(SearchTemplate, FindsShortestWords)
{
    const Gate cnot[] = {Gate::cnot(0, 1)};
    const auto one = search_template(gate_list_matrix(cnot, 2), 4);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one->size(), 1u);

    const auto ix = search_template(find_template(TemplateName::LambdaIX).target, 4);
    ASSERT_TRUE(ix.has_value());
    EXPECT_EQ(ix->size(), 2u);
    EXPECT_EQ(gate_list_matrix(*ix, 2), find_template(TemplateName::LambdaIX).target);

    EXPECT_FALSE(search_template(find_template(TemplateName::LambdaH).target, 2).has_value());
}

TEST(SearchTemplate, ControlledHadamardNeedsNoMoreThanTheStoredBody)
{
    const GateTemplate &t = find_template(TemplateName::LambdaH);
    const auto found = search_template(t.target, static_cast<int>(t.body.size()));
    ASSERT_TRUE(found.has_value());
    EXPECT_LE(found->size(), t.body.size());
    EXPECT_EQ(gate_list_matrix(*found, 2), t.target);
}

TEST(NumericOracle, GaloisCoefficientsRecoverElements)
{
    std::mt19937_64 rng(9);
    const int ms[] = {1, 3, 5, 7};
    for (int t = 0; t < 100; ++t)
    {
        const ZOmega x = oracle::random_zomega(rng);
        std::array<oracle::cd, 4> images;
        for (int i = 0; i < 4; ++i)
            images[i] = oracle::embed(x, ms[i]);
        const auto c = oracle::coefficients(images);
        EXPECT_NEAR(c[0], x.d().get_d(), 1e-6);
        EXPECT_NEAR(c[1], x.c().get_d(), 1e-6);
        EXPECT_NEAR(c[2], x.b().get_d(), 1e-6);
        EXPECT_NEAR(c[3], x.a().get_d(), 1e-6);
    }
}
