#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcirc/generators.hpp"
#include "tropcirc/maxclique.hpp"
#include "tropcirc/polynomial.hpp"

namespace tropcirc {

/// Complexity measures a certificate can apply to.
enum class measure {
    produce_size,    // minimum size of a circuit producing f (semiring-free)
    min_size,        // minimum size over the min-plus semiring, computing f
    max_size,        // minimum size over the max-plus semiring, computing f
    mult_bool_size,  // minimum size of a multilinear boolean circuit
    depth,           // minimum depth of a circuit producing f
};

std::string measure_name(measure m);
measure measure_from_name(const std::string& s);

/// Inequalities a transfer step may cite.
///   idempotent-compute-le-produce : computing is no harder than producing
///                                   over an additively idempotent semiring,
///                                   so compute-size bounds lift to produce-size
///   envelope-route                : a produce-size bound on the lower (higher)
///                                   envelope bounds min-size (max-size) of a
///                                   multilinear polynomial
///   homogeneous-equality          : for homogeneous multilinear f the four
///                                   measures coincide
///   boolean-floor                 : boolean compute-size bounds any
///                                   zero-characteristic semiring's compute-size
struct chain_step {
    measure from;
    measure to;
    std::string rule;
};

/// A machine-checkable lower bound: `value` is a lower bound on `applies_to`
/// for the polynomial identified by target_hash/target_terms. The witness
/// carries enough data for independent re-verification.
struct certificate {
    static constexpr int schema_version = 1;

    std::string kind;  // schnorr | kl-free | rectangle | expander | depth | transfer
    std::uint64_t value = 0;
    measure applies_to = measure::produce_size;
    std::uint64_t target_hash = 0;
    std::uint64_t target_terms = 0;
    nlohmann::json witness;
    std::vector<chain_step> chain;
};

nlohmann::json to_json(const certificate& c);
certificate certificate_from_json(const nlohmann::json& j);

enum class exec { serial, openmp };
/// openmp when compiled with OpenMP support, serial otherwise.
exec default_exec();

// --- separatedness and the progress measure -------------------------------

/// True iff for every pair p != q in P, the product pq contains no monomial
/// of f other than p and q. Precondition: P is a subset of f's monomials.
bool separated_check(const polynomial& f, const std::vector<monomial>& P);

enum class search_mode { exact, greedy };

/// The largest separated subset of f minus one, as a produce-size bound.
/// Exact mode runs a branch-and-bound clique search (|f| <= 64); greedy mode
/// returns a valid, possibly smaller, certificate.
certificate max_separated(const polynomial& f, search_mode mode = search_mode::exact);

/// Numeric value only.
std::uint64_t separation_measure(const polynomial& f, search_mode mode = search_mode::exact);

struct progress_report {
    std::size_t steps = 0;
    std::size_t sum_violations = 0;
    std::size_t product_violations = 0;
    std::vector<std::string> details;
};

/// Randomly enriches g (replacing a variable by a sum or product of two
/// others) and checks that the separation measure grows by at most one per
/// sum step and never grows on product steps.
progress_report progress_measure_suite(const polynomial& g, std::size_t samples,
                                       std::uint64_t seed);

// --- (k,l)-freeness --------------------------------------------------------

struct kl_witness {
    polynomial a;
    polynomial b;
};

struct kl_result {
    bool free;
    std::optional<kl_witness> violation;  // set when !free
};

/// Searches all variable bipartitions for a (k+1) x (l+1) product rectangle
/// inside f. Precondition: f multilinear, |f| <= 4096, support <= 24 vars.
kl_result kl_free_check(const polynomial& f, std::uint64_t k, std::uint64_t l);

/// ceil(|f| / (2 k l^2)) as a produce-size bound; requires kl_free_check.
certificate kl_bound(const polynomial& f, std::uint64_t k, std::uint64_t l);

// --- rectangle (factor density) bound --------------------------------------

enum class balance_measure { degree, length };

/// min over r in [ceil(m/3), floor(2m/3)] of ceil(|f| / (d(f,r) d(f,m-r))),
/// where m is f's minimum degree (or minimum length). The minimum over the
/// whole window is what makes the certificate sound: only the existence of
/// some good r is guaranteed. Precondition: m >= 3.
certificate rectangle_bound(const polynomial& f,
                            balance_measure bm = balance_measure::degree);

// --- expander machinery -----------------------------------------------------

struct matching_result {
    std::uint32_t value;
    std::vector<std::uint32_t> partition_side;                    // the minimizing S
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matching;  // its induced matching
};

/// min over balanced partitions (n/3 <= |S| <= 2n/3) of the largest induced
/// matching formed by crossing edges. Precondition: n <= 14.
matching_result matching_number(const graph& g, exec ex = default_exec());

/// 2^(m(G)-2) as a produce-size bound for the odd-induced-subgraph
/// polynomial of g. Precondition: g has at least one edge.
certificate expander_bound(const graph& g, exec ex = default_exec());

/// Every two disjoint s-element node subsets are joined by an edge.
bool mixedness_check(const graph& g, std::uint32_t s);

struct rectangle_search_result {
    std::uint64_t max_product_terms;  // largest |A*B| over balanced variable splits
    std::vector<var_t> side;          // the Y side achieving it
    std::uint64_t rows, cols;         // |A|, |B|
};

/// Exhaustive search for the largest product sub-polynomial A(Y)*B(Z) of a
/// multilinear f over balanced variable bipartitions. Precondition:
/// n_vars <= 9.
rectangle_search_result max_balanced_rectangle(const polynomial& f, exec ex = default_exec());

// --- depth bounds -----------------------------------------------------------

struct rational64 {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};
rational64 make_rational(std::uint64_t num, std::uint64_t den);
rational64 rat_mul(const rational64& a, const rational64& b);
/// Smallest k with value <= 2^k (may be negative).
std::int64_t ceil_log2(const rational64& r);

/// N(f; r, s) = d(f, d-r) / (d(f, d-s) d(f, d-r+s)) for f of minimum degree
/// d and 1 <= s < r <= d, as an exact rational.
rational64 depth_decrease(const polynomial& f, std::uint32_t r, std::uint32_t s);

/// Depth bound: minimum over admissible degree sequences
/// d = r_0 > r_1 > ... > r_m = 1 (with r_{i+1} >= r_i / 2 and
/// m = ceil(log2 d)) of m + log2 of the product of step decreases, rounded
/// up. Precondition: minimum degree >= 2.
certificate depth_lower_bound(const polynomial& f);

// --- measure transfer -------------------------------------------------------

/// Re-targets a certificate to another measure along licensed inequalities;
/// side conditions (homogeneity, multilinearity, the envelope relation) are
/// verified against f. errc::precondition when no rule applies.
certificate transfer(const certificate& cert, const polynomial& f, measure target);

// --- witness re-verification -------------------------------------------------

struct verification_report {
    bool ok = true;
    std::vector<std::string> findings;
};

/// Recomputes a certificate's witness from scratch against f (and, for
/// expander certificates, the graph).
verification_report verify_certificate_witness(const certificate& cert, const polynomial& f);
verification_report verify_certificate_witness(const certificate& cert, const polynomial& f,
                                               const graph& g);

}  // namespace tropcirc
