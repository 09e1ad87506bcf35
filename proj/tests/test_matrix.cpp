#include "ctsynth/matrix.hpp"

#include <gtest/gtest.h>

#include "ctsynth/error.hpp"
#include "numeric_oracle.hpp"

using namespace ctsynth;

namespace
{

    ExactMatrix h_exact()
    {
        const DOmega h = DOmega::inv_sqrt2();
        ExactMatrix m(2);
        m(0, 0) = h;
        m(0, 1) = h;
        m(1, 0) = h;
        m(1, 1) = -h;
        return m;
    }

    ExactMatrix t_matrix()
    {
        ExactMatrix m = ExactMatrix::identity(2);
        m(1, 1) = DOmega::omega_power(1);
        return m;
    }

    ElementaryOp random_op(std::mt19937_64 &rng, int dim, Side side)
    {
        const int j = static_cast<int>(rng() % dim);
        int m = static_cast<int>(rng() % dim);
        if (m == j)
            m = (j + 1) % dim;
        switch (rng() % 3)
        {
        case 0: return ElementaryOp::omega_phase(j, static_cast<int>(rng() % 8), side);
        case 1: return ElementaryOp::hadamard(j, m, side);
        default: return ElementaryOp::swap(j, m, side);
        }
    }

} // namespace

TEST(ExactMatrix, MulExamples)
{
    EXPECT_EQ(mat_mul(h_exact(), h_exact()), ExactMatrix::identity(2));
    const ExactMatrix x = elementary_to_matrix(ElementaryOp::swap(0, 1), 2);
    EXPECT_EQ(mat_mul(x, x), ExactMatrix::identity(2));
    EXPECT_EQ(mat_mul(t_matrix(), ExactMatrix::identity(2)), t_matrix());
    EXPECT_THROW(mat_mul(ExactMatrix(2), ExactMatrix(3)), Error);
}

TEST(ExactMatrix, AdjointExamples)
{
    EXPECT_EQ(adjoint(ExactMatrix::identity(3)), ExactMatrix::identity(3));
    ExactMatrix expected = ExactMatrix::identity(2);
    expected(1, 1) = DOmega(ZOmega(-1, 0, 0, 0), 0);
    EXPECT_EQ(adjoint(t_matrix()), expected);
    std::mt19937_64 rng(1);
    const ExactMatrix u = oracle::random_elementary_product(rng, 4, 30);
    EXPECT_EQ(adjoint(adjoint(u)), u);
}

TEST(ExactMatrix, UnitarityExamples)
{
    EXPECT_TRUE(is_unitary(h_exact()));
    ExactMatrix two = ExactMatrix::identity(2);
    two(0, 0) = DOmega::from_int(2);
    EXPECT_FALSE(is_unitary(two));
    std::mt19937_64 rng(2);
    for (int dim = 1; dim <= 4; ++dim)
        EXPECT_TRUE(is_unitary(oracle::random_elementary_product(rng, dim, 40)));
}

TEST(ExactMatrix, DeltaExponentExamples)
{
    EXPECT_EQ(matrix_delta_exponent(ExactMatrix::identity(4)), 0);
    EXPECT_EQ(matrix_delta_exponent(h_exact()), 2);
    EXPECT_EQ(matrix_delta_exponent(t_matrix()), 0);
}

TEST(ExactMatrix, ResidueMatrixExamples)
{
    const ResidueMatrix r1 = residue_matrix(h_exact(), 1, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            EXPECT_EQ(r1.ones().bits[i][j], 1);

    const ResidueMatrix id = residue_matrix(ExactMatrix::identity(3), 1, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_EQ(id.ones().bits[i][j], i == j ? 1 : 0);

    const ResidueMatrix r3 = residue_matrix(h_exact(), 3, 2);
    const ResidueClass w3 = rho(ZOmega::omega_power(3), 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            EXPECT_EQ(r3(i, j), w3);

    EXPECT_THROW(residue_matrix(h_exact(), 1, 1), Error);
}

TEST(ExactMatrix, ResidueMatrixIgnoresRepresentation)
{
    // Same k, entries stored with a larger exponent: identical residues.
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t)
    {
        const ExactMatrix u = oracle::random_elementary_product(rng, 4, 25);
        const int k = matrix_delta_exponent(u);
        for (int extra = 0; extra < 3; ++extra)
        {
            for (int n = 1; n <= 3; ++n)
            {
                const ResidueMatrix a = residue_matrix(u, n, k + extra);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        EXPECT_EQ(a(i, j), rho(u(i, j).scaled(k + extra), n));
            }
        }
    }
}

TEST(Elementary, ToMatrixExamples)
{
    EXPECT_EQ(elementary_to_matrix(ElementaryOp::hadamard(0, 1), 2), h_exact());
    EXPECT_EQ(elementary_to_matrix(ElementaryOp::omega_phase(1, 1), 2), t_matrix());
    const ExactMatrix x = elementary_to_matrix(ElementaryOp::swap(2, 3), 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
        {
            const int image = i == 2 ? 3 : i == 3 ? 2 : i;
            EXPECT_EQ(x(i, j), DOmega::from_int(j == image ? 1 : 0));
        }
}

TEST(Elementary, ApplyExamples)
{
    // H on a column (a, b)
    ExactMatrix col(2);
    const DOmega a = DOmega(ZOmega(1, 2, 0, 3), 0), b = DOmega(ZOmega(0, -1, 5, 1), 1);
    col(0, 0) = a;
    col(1, 0) = b;
    const ExactMatrix out = apply_elementary(ElementaryOp::hadamard(0, 1), col);
    EXPECT_EQ(out(0, 0), (a + b).div_sqrt2());
    EXPECT_EQ(out(1, 0), (a - b).div_sqrt2());

    EXPECT_EQ(apply_elementary(ElementaryOp::swap(0, 1), ExactMatrix::identity(2)),
              elementary_to_matrix(ElementaryOp::swap(0, 1), 2));
    EXPECT_EQ(apply_elementary(ElementaryOp::omega_phase(0, 8), t_matrix()), t_matrix());
    EXPECT_THROW(apply_elementary(ElementaryOp::hadamard(1, 4), ExactMatrix::identity(4)), Error);
    EXPECT_THROW(ElementaryOp::swap(2, 2), Error);
}

TEST(Elementary, ApplyMatchesFullProduct)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t)
    {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const ExactMatrix u = oracle::random_elementary_product(rng, dim, 10);
        const Side side = rng() % 2 ? Side::Left : Side::Right;
        const ElementaryOp op = random_op(rng, dim, side);
        const ExactMatrix e = elementary_to_matrix(op, dim);
        const ExactMatrix expected = side == Side::Left ? mat_mul(e, u) : mat_mul(u, e);
        EXPECT_EQ(apply_elementary(op, u), expected) << op.to_string();
        EXPECT_TRUE(oracle::near(oracle::to_numeric(expected),
                                 side == Side::Left ? oracle::mul(oracle::to_numeric(e), oracle::to_numeric(u))
                                                    : oracle::mul(oracle::to_numeric(u), oracle::to_numeric(e))));
    }
}

TEST(Elementary, InverseExamples)
{
    EXPECT_EQ(invert_elementary(ElementaryOp::hadamard(0, 1)), std::vector{ElementaryOp::hadamard(0, 1)});
    EXPECT_EQ(invert_elementary(ElementaryOp::omega_phase(0, 3)), std::vector{ElementaryOp::omega_phase(0, 5)});
    EXPECT_EQ(invert_elementary(ElementaryOp::swap(1, 2)), std::vector{ElementaryOp::swap(1, 2)});
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t)
    {
        const ElementaryOp op = random_op(rng, 4, Side::Left);
        const auto inv = invert_elementary(op);
        EXPECT_EQ(mat_mul(elementary_to_matrix(op, 4), word_product(inv, 4)), ExactMatrix::identity(4));
    }
}

TEST(Elementary, TextIsOneBased)
{
    EXPECT_EQ(ElementaryOp::omega_phase(0, 3).to_string(), "w[1]^3");
    EXPECT_EQ(ElementaryOp::hadamard(1, 0).to_string(), "H[1,2]");
    EXPECT_EQ(ElementaryOp::swap(2, 3).to_string(), "X[3,4]");
    EXPECT_EQ(ElementaryOp::omega_phase(0, -1).power, 7);
}

TEST(Elementary, WordProductOrder)
{
    const ElementaryOp w[] = {ElementaryOp::hadamard(0, 1), ElementaryOp::omega_phase(1, 1)};
    EXPECT_EQ(word_product(w, 2), mat_mul(h_exact(), t_matrix()));
    EXPECT_EQ(word_product({}, 3), ExactMatrix::identity(3));
}

// Parity conditions on rho_1^k of unitaries.
TEST(UnitaryParity, RowsColumnsAndOverlapsAreEven)
{
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int t = 0; t < 400; ++t)
    {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const ExactMatrix u = oracle::random_elementary_product(rng, dim, 1 + static_cast<int>(rng() % 60));
        const int k = matrix_delta_exponent(u);
        ASSERT_NE(k, 1);
        if (k == 0)
            continue;
        ++checked;
        const BitMatrix p = residue_matrix(u, 1, k).ones();
        for (int i = 0; i < dim; ++i)
        {
            int row = 0, col = 0;
            for (int j = 0; j < dim; ++j)
            {
                row += p(i, j);
                col += p(j, i);
            }
            EXPECT_EQ(row % 2, 0);
            EXPECT_EQ(col % 2, 0);
            for (int r = i + 1; r < dim; ++r)
            {
                int common = 0;
                for (int j = 0; j < dim; ++j)
                    common += p(i, j) & p(r, j);
                EXPECT_EQ(common % 2, 0);
            }
        }
    }
    EXPECT_GT(checked, 300);
}
