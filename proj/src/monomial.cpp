#include "milnor/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>

#include "milnor/error.hpp"

namespace milnor {

std::size_t binomial(int top, int bottom) {
    if (bottom < 0 || top < 0 || bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    std::size_t result = 1;
    for (int i = 1; i <= bottom; ++i) {
        // exact at every step: result * (top-bottom+i) is divisible by i
        result = result * static_cast<std::size_t>(top - bottom + i) / static_cast<std::size_t>(i);
    }
    return result;
}

std::size_t graded_dim(int n, int k) {
    if (k < 0) return 0;
    return binomial(n + k, n);
}

ExponentVector::ExponentVector(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw InputError("exponent vector needs at least one variable");
    for (int e : exps_) {
        if (e < 0) throw InputError("negative exponent");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

ExponentVector ExponentVector::unit(int n, int i, int power) {
    if (i < 0 || i > n) throw InputError("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(i)] = power;
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (exps_.size() != other.exps_.size()) throw InputError("variable count mismatch");
    ExponentVector out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    out.degree_ += other.degree_;
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    ExponentVector out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
    out.degree_ -= other.degree_;
    return out;
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (exps_.size() != other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

std::uint64_t ExponentVector::factorial() const {
    std::uint64_t out = 1;
    for (int e : exps_) {
        for (int j = 2; j <= e; ++j) out *= static_cast<std::uint64_t>(j);
    }
    return out;
}

bool GrlexBefore::operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

void enumerate(int n, int var, int remaining, std::vector<int>& current,
               std::vector<ExponentVector>& out) {
    if (var == n) {
        current[static_cast<std::size_t>(var)] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[static_cast<std::size_t>(var)] = e;
        enumerate(n, var + 1, remaining - e, current, out);
    }
}

}  // namespace

const std::vector<ExponentVector>& mono_basis(int n, int k) {
    if (n < 0 || k < 0) throw InputError("mono_basis needs n >= 0 and k >= 0");
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, std::vector<ExponentVector>> cache;
    const auto key = std::make_pair(n, k);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::vector<ExponentVector> basis;
    basis.reserve(graded_dim(n, k));
    std::vector<int> current(static_cast<std::size_t>(n + 1), 0);
    enumerate(n, 0, k, current, basis);

    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(basis));
    return it->second;
}

std::size_t monomial_rank(const ExponentVector& e) {
    // Monomials preceding e share a prefix and have a larger exponent at the
    // first differing position; count them block by block.
    const int n = e.n();
    std::size_t rank = 0;
    int remaining = e.degree();
    for (int i = 0; i < n; ++i) {
        const int ei = e[static_cast<std::size_t>(i)];
        const int later_vars = n - i;
        if (remaining > ei) rank += binomial(remaining - ei - 1 + later_vars, later_vars);
        remaining -= ei;
    }
    return rank;
}

}  // namespace milnor
