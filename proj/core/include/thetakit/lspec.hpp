#pragma once

#include <string>
#include <vector>

namespace thetakit {

// The set L of admissible intersection sizes, in one of four closed forms.
class LSpec {
public:
    enum class Kind { Finite, Modular, Threshold, CofiniteComplement };

    static LSpec finite(std::vector<long long> values);
    static LSpec modular(long long p, std::vector<long long> residues);
    static LSpec threshold();
    static LSpec cofinite_excluding(std::vector<long long> excluded);

    Kind kind() const { return kind_; }
    long long p() const { return p_; }
    // Finite: members; Modular: residue set R; CofiniteComplement: excluded.
    const std::vector<long long>& values() const { return values_; }
    // |R| for modular, |values| for finite.
    int s() const { return static_cast<int>(values_.size()); }

    bool member(long long x) const;

    // Descriptors: "finite:1,2", "mod:3:1,2", "threshold", "cofinite-excl:0".
    std::string to_string() const;
    static LSpec parse(const std::string& text);

    bool operator==(const LSpec& other) const = default;

private:
    LSpec(Kind kind, long long p, std::vector<long long> values);

    Kind kind_;
    long long p_;
    std::vector<long long> values_;
};

}  // namespace thetakit
