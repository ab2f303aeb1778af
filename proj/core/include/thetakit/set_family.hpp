#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetakit/matrix.hpp"

namespace thetakit {

// Ordered family of subsets of {1..ground}; bit i-1 of a mask is element i.
struct SetFamily {
    int ground = 0;
    std::vector<std::uint64_t> sets;

    int size() const { return static_cast<int>(sets.size()); }
    int set_size(int i) const;
    bool is_uniform(int k) const;
};

// Text form: header "l n", then n lines of space-separated elements,
// "-" for the empty set.
SetFamily parse_set_family(const std::string& text);
std::string to_text(const SetFamily& fam);

// All t-subsets of {1..l} as bitmasks, in lexicographic order of the sorted
// element lists.
std::vector<std::uint64_t> subsets_of_size(int l, int t);

// I(F,T): entry (i,j) = 1 iff T_j is a subset of F_i. Rational field.
ExactMatrix inclusion_matrix(const SetFamily& F, const SetFamily& T);
// I(F,t): columns are all t-subsets of the ground set in lex order.
ExactMatrix t_inclusion_matrix(const SetFamily& F, int t);
// I(i,t) over ground set {1..l}: rows all i-subsets, columns all t-subsets.
ExactMatrix complete_inclusion_matrix(int l, int i, int t);
// A_t(F,T): entry (i,j) = C(|F_i intersect T_j|, t).
ExactMatrix t_intersection_matrix(const SetFamily& F, const SetFamily& T, int t);

// Exact integer identity I(F,i) x I(i,t) = C(k-t, i-t) I(F,t) for a
// k-uniform family F.
bool check_inclusion_identity(const SetFamily& F, int k, int i, int t);

enum class WitnessVariant { Product, Fermat };

// GF(p) matrix whose (u,v) entry is, for x = |F_u intersect T_v|:
//   Product: prod_{r in R} (x - r) mod p   (zero iff x mod p in R)
//   Fermat:  sum_{r in R} 1 - (x - r)^(p-1) mod p   (zero iff x mod p not in R)
ExactMatrix witness_matrix_modular(const SetFamily& F, const SetFamily& T,
                                   const std::vector<long long>& R, long long p,
                                   WitnessVariant variant);

}  // namespace thetakit
