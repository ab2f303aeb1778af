#pragma once

#include <vector>

namespace thetakit {

struct CoeffVector {
    long long p = 0;
    std::vector<long long> values;  // coefficients of C(x,0), C(x,1), ...

    int degree() const { return static_cast<int>(values.size()) - 1; }
};

// Coefficients a_0..a_s with prod_{r in R} (x - r) == sum_t a_t C(x,t)
// (mod p) for every non-negative integer x.
CoeffVector binomial_basis_coeffs(const std::vector<long long>& R, long long p);

// Coefficients b_0..b_{p-1} with 1 - (x - r)^(p-1) == sum_t b_t C(x,t)
// (mod p); the left side is the mod-p indicator of x == r.
CoeffVector fermat_basis_coeffs(long long r, long long p);

}  // namespace thetakit
