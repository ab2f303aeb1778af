#include "thetakit/coeffs.hpp"

#include <algorithm>
#include <stdexcept>

#include "thetakit/matrix.hpp"

namespace thetakit {

namespace {

// Finite-difference extraction: for an integer-valued polynomial f of degree
// d, f(x) = sum_{t=0}^{d} (Delta^t f)(0) C(x,t) holds exactly over Z, with
// (Delta^t f)(0) = sum_j (-1)^{t-j} C(t,j) f(j). Reducing mod p yields
// coefficients valid for every non-negative x.
std::vector<long long> finite_difference_coeffs(const std::vector<BigInt>& f_values,
                                                long long p) {
    const int d = static_cast<int>(f_values.size()) - 1;
    std::vector<long long> out(d + 1);
    for (int t = 0; t <= d; ++t) {
        BigInt acc = 0;
        for (int j = 0; j <= t; ++j) {
            const BigInt term = binomial(t, j) * f_values[j];
            acc += ((t - j) % 2 == 0) ? term : -term;
        }
        BigInt m = acc % p;
        if (m < 0) m += p;
        out[t] = m.convert_to<long long>();
    }
    return out;
}

void validate(long long p, const std::vector<long long>& residues) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    for (long long r : residues)
        if (r < 0 || r >= p) throw std::invalid_argument("residues must lie in 0..p-1");
}

}  // namespace

CoeffVector binomial_basis_coeffs(const std::vector<long long>& R, long long p) {
    validate(p, R);
    std::vector<long long> residues = R;
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    if (residues.empty()) throw std::invalid_argument("R must be nonempty");

    const int s = static_cast<int>(residues.size());
    std::vector<BigInt> values(s + 1);
    for (int x = 0; x <= s; ++x) {
        BigInt prod = 1;
        for (long long r : residues) prod *= BigInt(x) - r;
        values[x] = prod;
    }
    return CoeffVector{p, finite_difference_coeffs(values, p)};
}

CoeffVector fermat_basis_coeffs(long long r, long long p) {
    validate(p, {r});
    std::vector<BigInt> values(p);
    for (long long x = 0; x <= p - 1; ++x) {
        BigInt diff = BigInt(x) - r;
        BigInt power = 1;
        for (long long e = 0; e < p - 1; ++e) power *= diff;
        values[x] = 1 - power;
    }
    return CoeffVector{p, finite_difference_coeffs(values, p)};
}

}  // namespace thetakit
