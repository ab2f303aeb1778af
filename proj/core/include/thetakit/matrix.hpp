#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace thetakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when 0 <= n < k; throws on negative arguments.
BigInt binomial(long long n, long long k);
bool is_prime(long long p);
long long pow_mod(long long base, long long exp, long long mod);

// Dense exact matrix over GF(p) or arbitrary-precision rationals.
class ExactMatrix {
public:
    enum class Field { Rationals, Modular };

    static ExactMatrix rationals(int rows, int cols);
    static ExactMatrix modular(long long p, int rows, int cols);

    Field field() const { return field_; }
    long long modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void set(int r, int c, const BigInt& v);
    void set(int r, int c, long long v);
    const Rational& rat(int r, int c) const;
    long long residue(int r, int c) const;

    // Exact rank: Bareiss fraction-free elimination over the rationals,
    // modular Gaussian elimination over GF(p).
    int rank() const;

    ExactMatrix transposed() const;
    ExactMatrix multiplied(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Rational& factor) const;
    // Entrywise reduction of an integer rational matrix into GF(p).
    ExactMatrix reduced_mod(long long p) const;

    bool operator==(const ExactMatrix& other) const;

    // Field tag line ("gf <p>" or "rational"), dims line, then the grid.
    std::string to_text() const;

private:
    ExactMatrix(Field f, long long p, int rows, int cols);

    Field field_;
    long long p_;
    int rows_, cols_;
    std::vector<Rational> rat_entries_;
    std::vector<long long> mod_entries_;
};

}  // namespace thetakit
