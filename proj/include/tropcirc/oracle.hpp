#pragma once

#include <optional>

#include "tropcirc/bounds.hpp"
#include "tropcirc/circuit.hpp"

namespace tropcirc {
namespace oracle {

struct options {
    std::size_t max_size = 7;
    exec ex = default_exec();
};

/// Exact minimum number of gates in a circuit producing f (monomial-set
/// equality), by exhaustive enumeration of fanin-2 DAGs with shared gates.
/// Precondition: n_vars <= 4 and max_size <= 7.
struct produce_size_result {
    bool found = false;       // false: every circuit up to max_size fails
    std::size_t size = 0;     // valid when found
    std::uint64_t states = 0; // DFS states explored
};
produce_size_result min_produce_size(const polynomial& f, const options& opt = {});

/// Domain grids used for compute-mode agreement, derived from the
/// distinguishing assignments of the structure lemmas.
std::vector<ext_int> oracle_domain(semiring_id id);

/// Exact minimum number of gates in a circuit over the semiring whose
/// evaluation agrees with f on the full domain^n grid. Where a complete
/// canonical form exists (multilinear targets), the found circuit's produced
/// polynomial is canonicalized and cross-checked, and the result is exact;
/// otherwise `domain_relative` flags the grid caveat.
struct compute_size_result {
    bool found = false;
    std::size_t size = 0;
    bool domain_relative = true;
    /// Equal to `size` when the canonical route confirms it.
    std::optional<std::size_t> canonical_size;
    std::uint64_t states = 0;
};
compute_size_result min_compute_size(const polynomial& f, semiring_id id,
                                     const std::vector<ext_int>& domain, const options& opt = {},
                                     bool restrict_multilinear = false);
compute_size_result min_compute_size(const polynomial& f, semiring_id id,
                                     const options& opt = {});

/// Compares a certificate against the exact oracle value for its measure.
struct verify_report {
    bool checkable = false;
    bool ok = false;
    std::uint64_t oracle_value = 0;
    std::uint64_t cert_value = 0;
    std::int64_t slack = 0;  // oracle - certificate
    std::string note;
};
verify_report verify_certificate(const polynomial& f, const certificate& cert,
                                 const options& opt = {});

}  // namespace oracle
}  // namespace tropcirc
