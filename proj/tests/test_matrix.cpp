#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <equivalg/matrix.hpp>

using namespace equivalg;

namespace {

Matrix from_ints(const FieldPtr& f, std::vector<std::vector<long>> rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Scalar::from_int(f, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("solve: identity and zero cases") {
    auto f = Field::prime(13);
    Matrix id = Matrix::identity(f, 3);
    std::vector<Scalar> e2{Scalar::zero(f), Scalar::one(f), Scalar::zero(f)};
    auto x = id.solve(e2);
    REQUIRE(x);
    CHECK(*x == e2);
    CHECK(id.kernel().rows() == 0);

    Matrix z(f, 2, 2);
    CHECK(z.kernel().rows() == 2);
}

TEST_CASE("solve over F_13: frozen instance") {
    auto f = Field::prime(13);
    Matrix a = from_ints(f, {{1, 1}, {1, 12}});
    std::vector<Scalar> b{Scalar::from_int(f, 2), Scalar::zero(f)};
    auto x = a.solve(b);
    REQUIRE(x);
    CHECK((*x)[0].residue() == 1);
    CHECK((*x)[1].residue() == 1);
    CHECK(a.kernel().rows() == 0);
}

TEST_CASE("solver exactness on random systems") {
    auto f = Field::prime(13);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
        Matrix a(f, n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a.at(i, j) = Scalar::from_int(f, static_cast<long>(rng() % 13));
        // b in the column space by construction
        std::vector<Scalar> y;
        for (std::size_t j = 0; j < m; ++j) y.push_back(Scalar::from_int(f, static_cast<long>(rng() % 13)));
        std::vector<Scalar> b(n, Scalar::zero(f));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) b[i] = b[i] + a.at(i, j) * y[j];
        auto x = a.solve(b);
        REQUIRE(x);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t j = 0; j < m; ++j) acc = acc + a.at(i, j) * (*x)[j];
            CHECK(acc == b[i]);
        }
        Matrix ker = a.kernel();
        for (std::size_t r = 0; r < ker.rows(); ++r)
            for (std::size_t i = 0; i < n; ++i) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t j = 0; j < m; ++j) acc = acc + a.at(i, j) * ker.at(r, j);
                CHECK(acc.is_zero());
            }
        CHECK(ker.rows() + a.rank() == m);
    }
}

TEST_CASE("inverse") {
    auto f = Field::prime(5);
    Matrix a = from_ints(f, {{1, 2}, {3, 4}});
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());
    Matrix sing = from_ints(f, {{1, 2}, {2, 4}});
    CHECK(!sing.inverse());
}

TEST_CASE("rank factorization") {
    auto f = Field::prime(13);
    Matrix e = from_ints(f, {{1, 0, 1}, {0, 0, 0}, {0, 0, 0}});
    auto [c, r] = e.rank_factorization();
    CHECK(c * r == e);
    CHECK(c.cols() == 1);
    CHECK(r.rows() == 1);
    // for idempotent e, R*C = identity
    Matrix idem = from_ints(f, {{1, 0}, {0, 0}});
    auto [c2, r2] = idem.rank_factorization();
    CHECK((r2 * c2).is_identity());
}

TEST_CASE("intertwiner space: commutant of a diagonal pair") {
    auto f = Field::prime(13);
    Matrix d = from_ints(f, {{1, 0}, {0, 2}});
    auto sols = intertwiner_space(f, {d}, {d}, 2, 2);
    CHECK(sols.size() == 2);
    for (const auto& s : sols) CHECK(d * s == s * d);
    // swap intertwiners: d X = X d' with d' the swapped diagonal
    Matrix d2 = from_ints(f, {{2, 0}, {0, 1}});
    auto sols2 = intertwiner_space(f, {d}, {d2}, 2, 2);
    CHECK(sols2.size() == 2);
    for (const auto& s : sols2) CHECK(d * s == s * d2);
}
