#include "thetakit/set_family.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "thetakit/coeffs.hpp"

namespace thetakit {

int SetFamily::set_size(int i) const { return std::popcount(sets[i]); }

bool SetFamily::is_uniform(int k) const {
    for (int i = 0; i < size(); ++i)
        if (set_size(i) != k) return false;
    return true;
}

SetFamily parse_set_family(const std::string& text) {
    std::istringstream in(text);
    int l, n;
    if (!(in >> l >> n)) throw std::invalid_argument("set family header must be 'l n'");
    if (l < 0 || l > 62 || n < 0) throw std::invalid_argument("set family header out of range");
    std::string rest;
    std::getline(in, rest);

    SetFamily fam;
    fam.ground = l;
    for (int i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("set family is missing row " + std::to_string(i));
        std::istringstream row(line);
        std::uint64_t mask = 0;
        std::string token;
        bool empty_marker = false;
        while (row >> token) {
            if (token == "-") { empty_marker = true; continue; }
            std::size_t used = 0;
            const int e = std::stoi(token, &used);
            if (used != token.size() || e < 1 || e > l)
                throw std::invalid_argument("set element out of range in row " +
                                            std::to_string(i));
            mask |= std::uint64_t{1} << (e - 1);
        }
        if (empty_marker && mask != 0)
            throw std::invalid_argument("'-' mixed with elements in row " + std::to_string(i));
        fam.sets.push_back(mask);
    }
    return fam;
}

std::string to_text(const SetFamily& fam) {
    std::ostringstream out;
    out << fam.ground << ' ' << fam.size() << '\n';
    for (int i = 0; i < fam.size(); ++i) {
        if (fam.sets[i] == 0) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int e = 1; e <= fam.ground; ++e)
            if ((fam.sets[i] >> (e - 1)) & 1u) {
                if (!first) out << ' ';
                out << e;
                first = false;
            }
        out << '\n';
    }
    return out.str();
}

std::vector<std::uint64_t> subsets_of_size(int l, int t) {
    if (t < 0 || t > l) throw std::invalid_argument("subset size out of range");
    std::vector<std::uint64_t> out;
    std::vector<int> pick(t);
    // lexicographic order of sorted element lists
    auto rec = [&](auto&& self, int depth, int next) -> void {
        if (depth == t) {
            std::uint64_t mask = 0;
            for (int e : pick) mask |= std::uint64_t{1} << (e - 1);
            out.push_back(mask);
            return;
        }
        for (int e = next; e <= l - (t - depth - 1); ++e) {
            pick[depth] = e;
            self(self, depth + 1, e + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

namespace {

void require_same_ground(const SetFamily& F, const SetFamily& T) {
    if (F.ground != T.ground) throw std::invalid_argument("ground set mismatch");
}

ExactMatrix inclusion_from_masks(const std::vector<std::uint64_t>& rows,
                                 const std::vector<std::uint64_t>& cols) {
    ExactMatrix m = ExactMatrix::rationals(static_cast<int>(rows.size()),
                                           static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if ((rows[i] & cols[j]) == cols[j])
                m.set(static_cast<int>(i), static_cast<int>(j), 1LL);
    return m;
}

}  // namespace

ExactMatrix inclusion_matrix(const SetFamily& F, const SetFamily& T) {
    require_same_ground(F, T);
    return inclusion_from_masks(F.sets, T.sets);
}

ExactMatrix t_inclusion_matrix(const SetFamily& F, int t) {
    if (t < 0 || t > F.ground) throw std::invalid_argument("t out of range");
    return inclusion_from_masks(F.sets, subsets_of_size(F.ground, t));
}

ExactMatrix complete_inclusion_matrix(int l, int i, int t) {
    if (i < 0 || i > l || t < 0 || t > l) throw std::invalid_argument("subset size out of range");
    return inclusion_from_masks(subsets_of_size(l, i), subsets_of_size(l, t));
}

ExactMatrix t_intersection_matrix(const SetFamily& F, const SetFamily& T, int t) {
    require_same_ground(F, T);
    if (t < 0 || t > F.ground) throw std::invalid_argument("t out of range");
    ExactMatrix m = ExactMatrix::rationals(F.size(), T.size());
    for (int i = 0; i < F.size(); ++i)
        for (int j = 0; j < T.size(); ++j)
            m.set(i, j, binomial(std::popcount(F.sets[i] & T.sets[j]), t));
    return m;
}

bool check_inclusion_identity(const SetFamily& F, int k, int i, int t) {
    if (!F.is_uniform(k)) throw std::invalid_argument("family is not k-uniform");
    if (!(0 <= t && t <= i && i <= k && k <= F.ground))
        throw std::invalid_argument("need 0 <= t <= i <= k <= l");

    // Entries are small non-negative integers, so 64-bit arithmetic is exact:
    // row sums of the product are at most C(l,i) and the scalar is C(k-t,i-t).
    const std::vector<std::uint64_t> icols = subsets_of_size(F.ground, i);
    const std::vector<std::uint64_t> tcols = subsets_of_size(F.ground, t);
    const long long scalar = binomial(k - t, i - t).convert_to<long long>();
    for (const std::uint64_t f : F.sets) {
        for (const std::uint64_t tc : tcols) {
            long long acc = 0;
            for (const std::uint64_t ic : icols)
                if ((f & ic) == ic && (ic & tc) == tc) ++acc;
            const long long expected = ((f & tc) == tc) ? scalar : 0;
            if (acc != expected) return false;
        }
    }
    return true;
}

ExactMatrix witness_matrix_modular(const SetFamily& F, const SetFamily& T,
                                   const std::vector<long long>& R, long long p,
                                   WitnessVariant variant) {
    require_same_ground(F, T);
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (R.empty()) throw std::invalid_argument("R must be nonempty");
    for (long long r : R)
        if (r < 0 || r >= p) throw std::invalid_argument("residues must lie in 0..p-1");

    ExactMatrix m = ExactMatrix::modular(p, F.size(), T.size());
    for (int u = 0; u < F.size(); ++u)
        for (int v = 0; v < T.size(); ++v) {
            const long long x = std::popcount(F.sets[u] & T.sets[v]);
            long long entry = 0;
            if (variant == WitnessVariant::Product) {
                entry = 1 % p;
                for (long long r : R)
                    entry = static_cast<long long>((__int128)entry * (((x - r) % p + p) % p) % p);
            } else {
                for (long long r : R) {
                    const long long ind = (1 - pow_mod(x - r, p - 1, p)) % p;
                    entry = ((entry + ind) % p + p) % p;
                }
            }
            m.set(u, v, entry);
        }
    return m;
}

}  // namespace thetakit
