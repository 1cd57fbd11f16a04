#pragma once

#include <optional>
#include <vector>

#include "tropcirc/polynomial.hpp"

namespace tropcirc {

/// Outcome of a semantic-equivalence decision. `undecided` is a first-class
/// answer: outside the multilinear cases the canonicalization lemmas do not
/// apply, and random testing is never extrapolated into an equivalence claim.
enum class verdict { equivalent, inequivalent, undecided };

struct equiv_result {
    verdict v;
    /// A distinguishing assignment when v == inequivalent.
    std::optional<std::vector<ext_int>> witness;
};

/// Functional equality over nat-arith is exactly coefficient equality.
bool equivalent_arith(const polynomial& f, const polynomial& h);

/// Over min-plus on naturals: when either side is multilinear, equivalence
/// is exactly equality of the containment-minimal sets.
equiv_result equivalent_min_nat(const polynomial& f, const polynomial& h);

/// Over max-plus on naturals: when either side is multilinear, the other
/// must be multilinear too and the containment-maximal sets must agree.
equiv_result equivalent_max_nat(const polynomial& f, const polynomial& h);

/// Over min-plus or max-plus on integers: when either side is multilinear,
/// equivalence forces equality of the monomial sets.
equiv_result equal_tropical_int(const polynomial& f, const polynomial& h);

/// Boolean equivalence, decided completely via multilinearization and
/// minimal monomials (the unique shortest monotone normal form).
bool equivalent_bool(const polynomial& f, const polynomial& h);

/// Uniform front end; verdicts may be undecided for the tropical semirings.
equiv_result decide_equivalence(const polynomial& f, const polynomial& h, semiring_id id);

/// Grid used by exhaustive checks and as the default for random testing,
/// built from the distinguishing assignments of the canonicalization proofs
/// plus a margin value.
std::vector<ext_int> default_domain(semiring_id id);

/// Evaluates f and h on every point of domain^n; returns a witness on the
/// first disagreement. This is a refutation procedure, not a decision one.
std::optional<std::vector<ext_int>> exhaustive_witness(const polynomial& f, const polynomial& h,
                                                       semiring_id id,
                                                       const std::vector<ext_int>& domain);

enum class random_verdict { falsified, no_witness_found };

struct random_test_result {
    random_verdict v;
    std::optional<std::vector<ext_int>> witness;
    std::size_t trials_run;
};

/// Evaluates both polynomials on seeded random assignments. Trials use
/// independent per-index streams, so results do not depend on scheduling.
random_test_result random_equivalence_test(const polynomial& f, const polynomial& h,
                                           semiring_id id, const std::vector<ext_int>& domain,
                                           std::size_t trials, std::uint64_t seed);

/// A canonical representative of the equivalence class of f over the given
/// semiring, where the structure lemmas provide one:
///   nat-arith: f itself (coefficients matter);
///   bool:      minimal monomials of the multilinearization;
///   min-nat:   the containment-minimal set, when it is multilinear;
///   max-nat:   the containment-maximal set, for multilinear f;
///   min-int/max-int: the monomial set, for multilinear f.
/// Coefficients are dropped wherever they cannot influence the function.
polynomial canonical_form(const polynomial& f, semiring_id id);

}  // namespace tropcirc
