#include "thetakit/lspec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "thetakit/matrix.hpp"

namespace thetakit {

namespace {

std::vector<long long> sorted_unique(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<long long> parse_list(const std::string& text) {
    std::vector<long long> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty element in list '" + text + "'");
        std::size_t used = 0;
        out.push_back(std::stoll(token, &used));
        if (used != token.size())
            throw std::invalid_argument("bad integer '" + token + "' in list");
    }
    return out;
}

std::string join(const std::vector<long long>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    return out.str();
}

}  // namespace

LSpec::LSpec(Kind kind, long long p, std::vector<long long> values)
    : kind_(kind), p_(p), values_(std::move(values)) {}

LSpec LSpec::finite(std::vector<long long> values) {
    values = sorted_unique(std::move(values));
    if (values.empty()) throw std::invalid_argument("finite L must be nonempty");
    if (values.front() < 0) throw std::invalid_argument("finite L members must be >= 0");
    return LSpec(Kind::Finite, 0, std::move(values));
}

LSpec LSpec::modular(long long p, std::vector<long long> residues) {
    if (!is_prime(p)) throw std::invalid_argument("modular L needs a prime p");
    residues = sorted_unique(std::move(residues));
    if (residues.empty()) throw std::invalid_argument("residue set must be nonempty");
    if (residues.front() < 0 || residues.back() >= p)
        throw std::invalid_argument("residues must lie in 0..p-1");
    return LSpec(Kind::Modular, p, std::move(residues));
}

LSpec LSpec::threshold() { return LSpec(Kind::Threshold, 0, {}); }

LSpec LSpec::cofinite_excluding(std::vector<long long> excluded) {
    excluded = sorted_unique(std::move(excluded));
    if (!excluded.empty() && excluded.front() < 0)
        throw std::invalid_argument("excluded values must be >= 0");
    return LSpec(Kind::CofiniteComplement, 0, std::move(excluded));
}

bool LSpec::member(long long x) const {
    if (x < 0) throw std::invalid_argument("membership is defined for x >= 0");
    switch (kind_) {
        case Kind::Finite:
            return std::binary_search(values_.begin(), values_.end(), x);
        case Kind::Modular:
            return std::binary_search(values_.begin(), values_.end(), x % p_);
        case Kind::Threshold:
            return x >= 1;
        case Kind::CofiniteComplement:
            return !std::binary_search(values_.begin(), values_.end(), x);
    }
    return false;
}

std::string LSpec::to_string() const {
    switch (kind_) {
        case Kind::Finite:
            return "finite:" + join(values_);
        case Kind::Modular:
            return "mod:" + std::to_string(p_) + ":" + join(values_);
        case Kind::Threshold:
            return "threshold";
        case Kind::CofiniteComplement:
            return "cofinite-excl:" + join(values_);
    }
    return {};
}

LSpec LSpec::parse(const std::string& text) {
    if (text == "threshold") return threshold();
    if (text.rfind("finite:", 0) == 0) return finite(parse_list(text.substr(7)));
    if (text.rfind("cofinite-excl:", 0) == 0) {
        const std::string rest = text.substr(14);
        return cofinite_excluding(rest.empty() ? std::vector<long long>{} : parse_list(rest));
    }
    if (text.rfind("mod:", 0) == 0) {
        const std::string rest = text.substr(4);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("modular descriptor needs 'mod:p:residues'");
        std::size_t used = 0;
        const long long p = std::stoll(rest.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("bad modulus in '" + text + "'");
        return modular(p, parse_list(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("unrecognized L descriptor '" + text + "'");
}

}  // namespace thetakit
