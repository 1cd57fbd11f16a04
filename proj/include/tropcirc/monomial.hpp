#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tropcirc/errors.hpp"

namespace tropcirc {

using var_t = std::uint32_t;
using exp_t = std::uint32_t;

/// A power product x_{i1}^{a1} ... x_{ik}^{ak}, stored as a sparse exponent
/// vector sorted by variable index. Zero exponents are never stored; the
/// empty monomial is the constant 1.
class monomial {
  public:
    monomial() = default;

    /// From (variable, exponent) pairs; merges duplicates, drops zeros.
    explicit monomial(std::vector<std::pair<var_t, exp_t>> entries);

    static monomial var(var_t i) { return monomial({{i, 1}}); }
    static monomial one() { return monomial(); }

    const std::vector<std::pair<var_t, exp_t>>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    /// Sum of exponents.
    std::uint64_t degree() const;
    /// Number of distinct variables.
    std::size_t length() const { return entries_.size(); }
    exp_t exponent(var_t i) const;
    bool is_multilinear() const;

    monomial times(const monomial& o) const;
    /// Removes one full occurrence block of x_i; precondition: exponent(i) > 0.
    monomial without_var(var_t i) const;
    /// True iff this = q * q' for some monomial q' (exponent-wise >=).
    bool contains(const monomial& q) const;

    /// All factors (divisors) of total degree r, in canonical order.
    std::vector<monomial> degree_r_factors(exp_t r) const;

    var_t max_var() const;  // precondition: !is_one()

    /// Canonical order: by degree, then lexicographically on the dense
    /// exponent vector.
    friend bool operator<(const monomial& a, const monomial& b);
    friend bool operator==(const monomial& a, const monomial& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const monomial& a, const monomial& b) { return !(a == b); }

    std::size_t hash() const;
    std::string str() const;

  private:
    std::vector<std::pair<var_t, exp_t>> entries_;
};

struct monomial_hash {
    std::size_t operator()(const monomial& m) const { return m.hash(); }
};

}  // namespace tropcirc
