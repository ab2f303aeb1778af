#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "thetakit/coeffs.hpp"
#include "thetakit/matrix.hpp"

using namespace thetakit;

namespace {

// reference rank: plain Gaussian elimination over the rationals, no
// fraction-free tricks, shares nothing with the library routine
int reference_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("binomial agrees with an independent Pascal table") {
    std::vector<std::vector<BigInt>> pascal(63);
    for (int n = 0; n <= 62; ++n) {
        pascal[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 62; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(3, -2), std::invalid_argument);
}

TEST_CASE("primality and modular powers") {
    const std::vector<long long> primes = {2, 3, 5, 7, 11, 13, 61};
    for (long long p : primes) CHECK(is_prime(p));
    for (long long q : {-3LL, 0LL, 1LL, 4LL, 9LL, 15LL, 49LL}) CHECK_FALSE(is_prime(q));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const long long base = rng() % 97;
        const long long exp = rng() % 12;
        long long slow = 1 % 97;
        for (int i = 0; i < exp; ++i) slow = slow * base % 97;
        CHECK(pow_mod(base, exp, 97) == slow);
    }
}

TEST_CASE("matrix construction and accessors") {
    ExactMatrix m = ExactMatrix::modular(5, 2, 2);
    m.set(0, 0, -1);  // reduces into [0,p)
    m.set(0, 1, 7);
    CHECK(m.residue(0, 0) == 4);
    CHECK(m.residue(0, 1) == 2);
    CHECK_THROWS_AS(ExactMatrix::modular(4, 1, 1), std::invalid_argument);

    ExactMatrix r = ExactMatrix::rationals(2, 2);
    r.set(0, 0, Rational(1, 2));
    r.set(0, 1, Rational(1, 3));
    r.set(1, 0, Rational(1, 4));
    r.set(1, 1, Rational(1, 6));
    CHECK(r.rank() == 1);  // rows are proportional
}

TEST_CASE("rational rank matches a reference elimination on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        ExactMatrix m = ExactMatrix::rationals(rows, cols);
        std::vector<std::vector<Rational>> ref(rows, std::vector<Rational>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const long long num = static_cast<long long>(rng() % 7) - 3;
                const long long den = 1 + static_cast<long long>(rng() % 4);
                const Rational v(num, den);
                m.set(i, j, v);
                ref[i][j] = v;
            }
        CHECK(m.rank() == reference_rank(ref));
    }
}

TEST_CASE("modular rank matches the rational rank when the modulus is large") {
    // entries in {-1,0,1} and dimension <= 4 keep every minor below 101 in
    // absolute value, so reduction mod 101 cannot drop the rank
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        ExactMatrix q = ExactMatrix::rationals(n, n);
        ExactMatrix m = ExactMatrix::modular(101, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const long long v = static_cast<long long>(rng() % 3) - 1;
                q.set(i, j, v);
                m.set(i, j, v);
            }
        CHECK(q.rank() == m.rank());
    }
}

TEST_CASE("multiplication, transpose, scaling, reduction") {
    ExactMatrix a = ExactMatrix::rationals(2, 2);
    a.set(0, 0, 1); a.set(0, 1, 2); a.set(1, 0, 3); a.set(1, 1, 4);
    ExactMatrix b = ExactMatrix::rationals(2, 2);
    b.set(0, 0, 5); b.set(0, 1, 6); b.set(1, 0, 7); b.set(1, 1, 8);
    const ExactMatrix ab = a.multiplied(b);
    CHECK(ab.rat(0, 0) == 19);
    CHECK(ab.rat(0, 1) == 22);
    CHECK(ab.rat(1, 0) == 43);
    CHECK(ab.rat(1, 1) == 50);

    const ExactMatrix abm = a.reduced_mod(7).multiplied(b.reduced_mod(7));
    CHECK(abm.residue(0, 0) == 19 % 7);
    CHECK(abm.residue(1, 1) == 50 % 7);
    CHECK(ab.reduced_mod(7) == abm);

    const ExactMatrix at = a.transposed();
    CHECK(at.rat(0, 1) == 3);
    const ExactMatrix half = a.scaled(Rational(1, 2));
    CHECK(half.rat(1, 1) == 2);

    ExactMatrix frac = ExactMatrix::rationals(1, 1);
    frac.set(0, 0, Rational(1, 2));
    CHECK_THROWS_AS(frac.reduced_mod(5), std::invalid_argument);
}

TEST_CASE("matrix text form") {
    ExactMatrix m = ExactMatrix::modular(3, 2, 3);
    m.set(0, 0, 1); m.set(0, 2, 2); m.set(1, 1, 1);
    CHECK(m.to_text() == "gf 3\n2 3\n1 0 2\n0 1 0\n");
    ExactMatrix r = ExactMatrix::rationals(1, 2);
    r.set(0, 0, Rational(1, 2));
    CHECK(r.to_text() == "rational\n1 2\n1/2 0\n");
}

TEST_CASE("binomial-basis coefficients reproduce the product form everywhere") {
    // product route evaluated directly vs the coefficient route, for every
    // prime and a spread of residue sets
    const std::vector<std::pair<long long, std::vector<long long>>> cases = {
        {2, {1}}, {2, {0}}, {2, {0, 1}}, {3, {1, 2}}, {3, {0, 2}},
        {5, {1, 2, 3}}, {5, {0, 4}}, {7, {1, 2, 4, 6}},
    };
    for (const auto& [p, R] : cases) {
        const CoeffVector cv = binomial_basis_coeffs(R, p);
        CHECK(cv.degree() == static_cast<int>(R.size()));
        for (long long x = 0; x <= 4 * p; ++x) {
            long long direct = 1;
            for (long long r : R) direct = direct * (((x - r) % p + p) % p) % p;
            BigInt viacoeff = 0;
            for (std::size_t t = 0; t < cv.values.size(); ++t)
                viacoeff += BigInt(cv.values[t]) * binomial(x, static_cast<long long>(t));
            CHECK(static_cast<long long>(viacoeff % p) == direct);
        }
    }
    CHECK(binomial_basis_coeffs({1}, 2).values == std::vector<long long>{1, 1});
    CHECK_THROWS_AS(binomial_basis_coeffs({1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(binomial_basis_coeffs({5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(binomial_basis_coeffs({}, 3), std::invalid_argument);
}

TEST_CASE("Fermat coefficients reproduce the residue indicator everywhere") {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        for (long long r = 0; r < p; ++r) {
            const CoeffVector cv = fermat_basis_coeffs(r, p);
            CHECK(cv.degree() == static_cast<int>(p - 1));
            for (long long x = 0; x <= 4 * p; ++x) {
                const long long want = (x % p == r) ? 1 : 0;
                BigInt viacoeff = 0;
                for (std::size_t t = 0; t < cv.values.size(); ++t)
                    viacoeff += BigInt(cv.values[t]) * binomial(x, static_cast<long long>(t));
                CHECK(static_cast<long long>(((viacoeff % p) + p) % p) == want);
            }
        }
    }
}
