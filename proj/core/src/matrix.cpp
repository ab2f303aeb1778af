#include "thetakit/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace thetakit {

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial needs non-negative arguments");
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod needs a positive modulus");
    if (exp < 0) throw std::invalid_argument("pow_mod needs a non-negative exponent");
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<long long>((__int128)result * base % mod);
        base = static_cast<long long>((__int128)base * base % mod);
        exp >>= 1;
    }
    return result;
}

ExactMatrix::ExactMatrix(Field f, long long p, int rows, int cols)
    : field_(f), p_(p), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (f == Field::Rationals)
        rat_entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
    else
        mod_entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

ExactMatrix ExactMatrix::rationals(int rows, int cols) {
    return ExactMatrix(Field::Rationals, 0, rows, cols);
}

ExactMatrix ExactMatrix::modular(long long p, int rows, int cols) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    return ExactMatrix(Field::Modular, p, rows, cols);
}

void ExactMatrix::set(int r, int c, const Rational& v) {
    if (field_ != Field::Rationals)
        throw std::invalid_argument("rational entry in a modular matrix");
    rat_entries_[static_cast<std::size_t>(r) * cols_ + c] = v;
}

void ExactMatrix::set(int r, int c, const BigInt& v) {
    if (field_ == Field::Rationals) {
        rat_entries_[static_cast<std::size_t>(r) * cols_ + c] = Rational(v);
    } else {
        BigInt m = v % p_;
        if (m < 0) m += p_;
        mod_entries_[static_cast<std::size_t>(r) * cols_ + c] = m.convert_to<long long>();
    }
}

void ExactMatrix::set(int r, int c, long long v) {
    if (field_ == Field::Rationals) {
        rat_entries_[static_cast<std::size_t>(r) * cols_ + c] = Rational(v);
    } else {
        long long m = v % p_;
        if (m < 0) m += p_;
        mod_entries_[static_cast<std::size_t>(r) * cols_ + c] = m;
    }
}

const Rational& ExactMatrix::rat(int r, int c) const {
    if (field_ != Field::Rationals) throw std::logic_error("not a rational matrix");
    return rat_entries_[static_cast<std::size_t>(r) * cols_ + c];
}

long long ExactMatrix::residue(int r, int c) const {
    if (field_ != Field::Modular) throw std::logic_error("not a modular matrix");
    return mod_entries_[static_cast<std::size_t>(r) * cols_ + c];
}

namespace {

int modular_rank(std::vector<long long> m, int rows, int cols, long long p) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r) * cols + c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(m[static_cast<std::size_t>(rank) * cols + j],
                      m[static_cast<std::size_t>(pivot) * cols + j]);
        const long long inv = pow_mod(m[static_cast<std::size_t>(rank) * cols + c], p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            const long long lead = m[static_cast<std::size_t>(r) * cols + c];
            if (lead == 0) continue;
            const long long f = static_cast<long long>((__int128)lead * inv % p);
            for (int j = c; j < cols; ++j) {
                const long long sub = static_cast<long long>(
                    (__int128)f * m[static_cast<std::size_t>(rank) * cols + j] % p);
                long long& cell = m[static_cast<std::size_t>(r) * cols + j];
                cell = (cell - sub) % p;
                if (cell < 0) cell += p;
            }
        }
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination on an integer matrix; divisions are exact.
int bareiss_rank(std::vector<BigInt> m, int rows, int cols) {
    int rank = 0;
    BigInt prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r) * cols + c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j)
                std::swap(m[static_cast<std::size_t>(rank) * cols + j],
                          m[static_cast<std::size_t>(pivot) * cols + j]);
        const BigInt lead = m[static_cast<std::size_t>(rank) * cols + c];
        for (int r = rank + 1; r < rows; ++r) {
            const BigInt head = m[static_cast<std::size_t>(r) * cols + c];
            for (int j = c + 1; j < cols; ++j) {
                BigInt& cell = m[static_cast<std::size_t>(r) * cols + j];
                cell = (lead * cell - head * m[static_cast<std::size_t>(rank) * cols + j]) / prev;
            }
            m[static_cast<std::size_t>(r) * cols + c] = 0;
        }
        prev = lead;
        ++rank;
    }
    return rank;
}

}  // namespace

int ExactMatrix::rank() const {
    if (field_ == Field::Modular) return modular_rank(mod_entries_, rows_, cols_, p_);

    // Clear denominators row by row, then run Bareiss on the integer matrix.
    std::vector<BigInt> ints(static_cast<std::size_t>(rows_) * cols_);
    for (int r = 0; r < rows_; ++r) {
        BigInt lcm = 1;
        for (int c = 0; c < cols_; ++c) {
            const BigInt den = denominator(rat(r, c));
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int c = 0; c < cols_; ++c) {
            const Rational scaled = rat(r, c) * Rational(lcm);
            ints[static_cast<std::size_t>(r) * cols_ + c] = numerator(scaled);
        }
    }
    return bareiss_rank(std::move(ints), rows_, cols_);
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(field_, p_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (field_ == Field::Rationals)
                out.rat_entries_[static_cast<std::size_t>(c) * rows_ + r] = rat(r, c);
            else
                out.mod_entries_[static_cast<std::size_t>(c) * rows_ + r] = residue(r, c);
        }
    return out;
}

ExactMatrix ExactMatrix::multiplied(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in multiply");
    if (field_ != rhs.field_ || (field_ == Field::Modular && p_ != rhs.p_))
        throw std::invalid_argument("field mismatch in multiply");
    ExactMatrix out(field_, p_, rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < rhs.cols_; ++c) {
            if (field_ == Field::Rationals) {
                Rational acc = 0;
                for (int k = 0; k < cols_; ++k) acc += rat(r, k) * rhs.rat(k, c);
                out.set(r, c, acc);
            } else {
                long long acc = 0;
                for (int k = 0; k < cols_; ++k)
                    acc = static_cast<long long>(
                        (acc + (__int128)residue(r, k) * rhs.residue(k, c)) % p_);
                out.set(r, c, acc);
            }
        }
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
    if (field_ != Field::Rationals) throw std::invalid_argument("scaled needs a rational matrix");
    ExactMatrix out(field_, p_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, Rational(rat(r, c) * factor));
    return out;
}

ExactMatrix ExactMatrix::reduced_mod(long long p) const {
    if (field_ != Field::Rationals)
        throw std::invalid_argument("reduced_mod needs a rational matrix");
    ExactMatrix out = modular(p, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const Rational& v = rat(r, c);
            if (denominator(v) != 1)
                throw std::invalid_argument("reduced_mod needs integer entries");
            out.set(r, c, numerator(v));
        }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return field_ == other.field_ && p_ == other.p_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && rat_entries_ == other.rat_entries_ &&
           mod_entries_ == other.mod_entries_;
}

std::string ExactMatrix::to_text() const {
    std::ostringstream out;
    if (field_ == Field::Modular)
        out << "gf " << p_ << '\n';
    else
        out << "rational\n";
    out << rows_ << ' ' << cols_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            if (field_ == Field::Modular)
                out << residue(r, c);
            else
                out << rat(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace thetakit
