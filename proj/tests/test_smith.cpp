#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <equivalg/smith.hpp>

using namespace equivalg;

namespace {

bool is_unimodular(const ZMat& m) {
    // integer determinant by fraction-free expansion (sizes here are tiny)
    std::size_t n = m.size();
    if (n == 0) return true;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    mpz_class det = 0;
    std::sort(idx.begin(), idx.end());
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (idx[i] > idx[j]) sign = -sign;
        mpz_class term = sign;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][idx[i]];
        det += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("smith normal form: known instances") {
    {
        ZMat a{{2, 0}, {0, 3}};
        auto s = smith_normal_form(a);
        CHECK(s.D[0][0] == 1);
        CHECK(s.D[1][1] == 6);
    }
    {
        ZMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
        auto s = smith_normal_form(a);
        CHECK(s.D[0][0] == 2);
        CHECK(s.D[1][1] == 2);
        CHECK(s.D[2][2] == 156);
    }
}

TEST_CASE("smith normal form: transforms and divisibility on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        ZMat a(rows, std::vector<mpz_class>(cols));
        for (auto& r : a)
            for (auto& x : r) x = static_cast<long>(rng() % 21) - 10;
        auto s = smith_normal_form(a);
        ZMat lhs = z_mul(z_mul(s.U, a), s.V);
        CHECK(lhs == s.D);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.D[i][j] == 0);
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            if (s.D[i][i] != 0 && s.D[i + 1][i + 1] != 0)
                CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
            if (s.D[i][i] == 0) CHECK(s.D[i + 1][i + 1] == 0);
            CHECK(s.D[i][i] >= 0);
        }
    }
}

TEST_CASE("modular linear solve") {
    // 2x = 4 (mod 6): x = 2 works
    {
        ZMat a{{2}};
        auto x = solve_mod(a, {mpz_class(4)}, mpz_class(6));
        REQUIRE(x);
        CHECK(((*x)[0] * 2 - 4) % 6 == 0);
    }
    // 2x = 3 (mod 6): no solution
    {
        ZMat a{{2}};
        CHECK(!solve_mod(a, {mpz_class(3)}, mpz_class(6)));
    }
    // random consistent systems
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        mpz_class M = 2 + static_cast<long>(rng() % 30);
        ZMat a(rows, std::vector<mpz_class>(cols));
        for (auto& r : a)
            for (auto& x : r) x = static_cast<long>(rng() % 15) - 7;
        std::vector<mpz_class> y(cols);
        for (auto& v : y) v = static_cast<long>(rng() % 15);
        std::vector<mpz_class> b(rows, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * y[j];
        auto x = solve_mod(a, b, M);
        REQUIRE(x);
        for (std::size_t i = 0; i < rows; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * (*x)[j];
            CHECK((acc - b[i]) % M == 0);
        }
    }
}
