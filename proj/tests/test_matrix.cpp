#include <doctest.h>

#include "twistkit/matrix.hpp"

using namespace twistkit;

namespace {
const Field Q{};
const Field F7{7};

Matrix from_rows(std::vector<std::vector<long>> rows, Field f) {
    Matrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Scalar::of(rows[i][j], f);
    return m;
}
} // namespace

TEST_CASE("scalar arithmetic is exact") {
    Scalar a = Scalar::parse("2/3", Q);
    Scalar b = Scalar::parse("-1/6", Q);
    CHECK((a + b).str() == "1/2");
    CHECK((a * b).str() == "-1/9");
    CHECK((a / b).str() == "-4");
    CHECK(Scalar::parse("4/2", Q).str() == "2");
}

TEST_CASE("prime field reduces and inverts") {
    Scalar a = Scalar::of(10, F7);
    CHECK(a.str() == "3");
    Scalar inv = Scalar::one(F7) / a;
    CHECK((inv * a) == Scalar::one(F7));
    CHECK(Scalar::parse("1/2", F7).str() == "4");
}

TEST_CASE("rank, kernel, solve, inverse, determinant") {
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, Q);
    CHECK(m.rank() == 2);
    Matrix k = m.kernel_basis();
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    Matrix inv_target = from_rows({{2, 1}, {1, 1}}, Q);
    auto inv = inv_target.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * inv_target) == Matrix::identity(2, Q));
    CHECK(inv_target.determinant() == Scalar::of(1, Q));
    CHECK(from_rows({{0, 1}, {1, 0}}, Q).determinant() == Scalar::of(-1, Q));

    Matrix rhs(3, 1, Q);
    rhs.at(0, 0) = Scalar::of(6, Q);
    rhs.at(1, 0) = Scalar::of(12, Q);
    rhs.at(2, 0) = Scalar::of(2, Q);
    auto sol = m.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK((m * *sol) == rhs);

    Matrix bad_rhs(3, 1, Q);
    bad_rhs.at(0, 0) = Scalar::of(1, Q);
    CHECK_FALSE(m.solve(bad_rhs).has_value());
}

TEST_CASE("prime-field linear algebra") {
    Matrix m = from_rows({{1, 2}, {3, 4}}, F7);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == Matrix::identity(2, F7));
}

TEST_CASE("empty shapes behave") {
    Matrix a(0, 3, Q), b(3, 0, Q);
    CHECK(a.rank() == 0);
    CHECK(a.kernel_basis().cols() == 3);
    CHECK((b * a) == Matrix::zero(3, 3, Q));
    CHECK(Matrix::zero(0, 0, Q).determinant() == Scalar::one(Q));
}
