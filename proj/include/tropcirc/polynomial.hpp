#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropcirc/monomial.hpp"
#include "tropcirc/semiring.hpp"

namespace tropcirc {

using coeff_t = std::uint64_t;

inline constexpr std::size_t default_term_cap = 1'000'000;
inline constexpr std::uint64_t default_density_work_cap = 10'000'000;

/// A formal sum of monomials with positive integer coefficients over a fixed
/// variable universe {x_0, ..., x_{n_vars-1}}.
///
/// Terms are kept in canonical (degree, lexicographic) order, so iteration
/// and serialization are deterministic. Two notions of equality are exposed:
/// set_equal (same monomials) and exact_equal (same monomials with the same
/// coefficients). Coefficient arithmetic is checked, never wrapping.
class polynomial {
  public:
    using term_map = std::map<monomial, coeff_t>;

    explicit polynomial(std::uint32_t n_vars = 0) : n_vars_(n_vars) {}
    polynomial(std::uint32_t n_vars, std::vector<std::pair<monomial, coeff_t>> terms);

    static polynomial zero(std::uint32_t n_vars) { return polynomial(n_vars); }
    static polynomial unit(std::uint32_t n_vars);                  // the constant 1
    static polynomial variable(std::uint32_t n_vars, var_t i);

    std::uint32_t n_vars() const { return n_vars_; }
    const term_map& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }  // |f|
    bool empty() const { return terms_.empty(); }

    bool has_monomial(const monomial& m) const { return terms_.count(m) > 0; }
    coeff_t coeff(const monomial& m) const;
    std::vector<monomial> monomials() const;

    void add_term(const monomial& m, coeff_t c);  // checked accumulate

    // --- syntactic operations -------------------------------------------

    polynomial plus(const polynomial& o) const;
    polynomial times(const polynomial& o, std::size_t term_cap = default_term_cap) const;

    /// Minimum/maximum monomial degree; +inf resp. -inf on the empty polynomial.
    ext_int min_degree() const;
    ext_int max_degree() const;
    /// Minimum/maximum monomial length (number of distinct variables).
    ext_int min_length() const;

    bool is_multilinear() const;
    bool is_homogeneous() const;

    /// Containment-minimal / containment-maximal monomials (antichains under
    /// the factor order). Coefficients are preserved from this polynomial.
    polynomial lmin_set() const;
    polynomial lmax_set() const;

    /// Sub-polynomial of all monomials of minimum (resp. maximum) degree.
    polynomial lower_envelope() const;
    polynomial higher_envelope() const;

    /// d(f, r): the largest number of monomials sharing a fixed degree-r
    /// factor, by exhaustive factor enumeration (work-capped).
    std::uint64_t factor_density(exp_t r,
                                 std::uint64_t work_cap = default_density_work_cap) const;

    /// Monomials containing x_i, with x_i removed. Precondition: multilinear.
    polynomial partial_derivative(var_t i) const;

    /// Adds the n degree-1 monomials (resp. the full degree-n monomial).
    /// Precondition: multilinear and homogeneous.
    polynomial saturate_low() const;
    polynomial saturate_high() const;

    /// Replaces x_k by x_i + x_j (sum mode, binomial expansion) or by
    /// x_i * x_j (product mode). Preconditions: k not in {i, j}; x_k occurs.
    enum class enrich_mode { sum, product };
    polynomial enrich(var_t k, var_t i, var_t j, enrich_mode mode) const;

    /// Clamps every exponent to 1 and merges coefficients.
    polynomial bool_multilinearize() const;

    /// Function value over the given semiring (degrees act as tropical
    /// scalar multipliers; coefficients only matter over nat-arith).
    ext_int evaluate(semiring_id id, const std::vector<ext_int>& assignment) const;

    /// Variables occurring with non-zero degree in some monomial.
    std::set<var_t> support() const;

    // --- comparisons ------------------------------------------------------

    /// Same monomial sets ("=").
    bool set_equal(const polynomial& o) const;
    /// Same monomials with the same coefficients.
    bool exact_equal(const polynomial& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }
    /// Every monomial of this polynomial is a monomial of o.
    bool subset_of(const polynomial& o) const;

    /// Drops coefficients to 1.
    polynomial with_unit_coeffs() const;

    /// Order-independent digest of the monomial set (coefficients ignored).
    std::uint64_t set_hash() const;

  private:
    void check_universe(const polynomial& o) const;

    std::uint32_t n_vars_;
    term_map terms_;
};

/// n-choose-k with checked 64-bit arithmetic.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace tropcirc
