#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tropcirc/errors.hpp"

namespace tropcirc {

/// An integer extended with the two signed infinities.
///
/// Arithmetic is exact and checked: finite overflow raises errc::cap, and
/// +inf + -inf is rejected as errc::domain (it never arises inside a single
/// carrier, where at most one infinity exists).
class ext_int {
  public:
    constexpr ext_int() : v_(0), state_(state::finite) {}
    constexpr ext_int(std::int64_t v) : v_(v), state_(state::finite) {}

    static constexpr ext_int pos_inf() { return ext_int(state::pos_inf); }
    static constexpr ext_int neg_inf() { return ext_int(state::neg_inf); }

    constexpr bool is_finite() const { return state_ == state::finite; }
    constexpr bool is_pos_inf() const { return state_ == state::pos_inf; }
    constexpr bool is_neg_inf() const { return state_ == state::neg_inf; }

    /// Finite payload; precondition: is_finite().
    std::int64_t value() const {
        require(is_finite(), errc::internal, "ext_int: value() on an infinity");
        return v_;
    }

    friend constexpr bool operator==(const ext_int& a, const ext_int& b) {
        if (a.state_ != b.state_) return false;
        return a.state_ != state::finite || a.v_ == b.v_;
    }
    friend constexpr bool operator!=(const ext_int& a, const ext_int& b) { return !(a == b); }

    // Order with -inf < finite < +inf.
    friend constexpr bool operator<(const ext_int& a, const ext_int& b) {
        if (a.state_ == b.state_)
            return a.state_ == state::finite && a.v_ < b.v_;
        if (a.state_ == state::neg_inf) return true;
        if (b.state_ == state::neg_inf) return false;
        return b.state_ == state::pos_inf;
    }
    friend constexpr bool operator<=(const ext_int& a, const ext_int& b) { return a < b || a == b; }
    friend constexpr bool operator>(const ext_int& a, const ext_int& b) { return b < a; }
    friend constexpr bool operator>=(const ext_int& a, const ext_int& b) { return b <= a; }

    /// Numeric addition with absorbing infinities.
    ext_int checked_plus(const ext_int& o) const;
    /// Scalar multiple k*x for k >= 1 (tropical exponentiation).
    ext_int checked_scale(std::uint64_t k) const;

    std::string str() const;

  private:
    enum class state : std::uint8_t { finite, pos_inf, neg_inf };
    constexpr explicit ext_int(state s) : v_(0), state_(s) {}

    std::int64_t v_;
    state state_;
};

std::ostream& operator<<(std::ostream& os, const ext_int& x);

inline ext_int min(const ext_int& a, const ext_int& b) { return a < b ? a : b; }
inline ext_int max(const ext_int& a, const ext_int& b) { return a < b ? b : a; }

/// The six concrete semirings.
enum class semiring_id {
    nat_arith,  // (N, +, *, 0, 1)
    boolean,    // ({0,1}, or, and, 0, 1)
    min_nat,    // (N u {+inf}, min, +, +inf, 0)
    min_int,    // (Z u {+inf}, min, +, +inf, 0)
    max_nat,    // (N u {-inf}, max, +, -inf, 0)
    max_int,    // (Z u {-inf}, max, +, -inf, 0)
};

constexpr semiring_id all_semirings[] = {
    semiring_id::nat_arith, semiring_id::boolean, semiring_id::min_nat,
    semiring_id::min_int,   semiring_id::max_nat, semiring_id::max_int,
};

struct semiring_flags {
    bool additively_idempotent;
    bool multiplicatively_idempotent;
    bool zero_characteristic;
};

/// CLI/JSON name ("nat-arith", "bool", "min-nat", "min-int", "max-nat", "max-int").
std::string semiring_name(semiring_id id);
semiring_id semiring_from_name(const std::string& name);

semiring_flags flags(semiring_id id);
bool is_tropical(semiring_id id);

/// True iff x lies in the carrier of the semiring.
bool in_carrier(semiring_id id, const ext_int& x);
void require_carrier(semiring_id id, const ext_int& x);

struct semiring_constants {
    ext_int zero;
    ext_int one;
};
semiring_constants sr_constants(semiring_id id);

ext_int sr_add(semiring_id id, const ext_int& a, const ext_int& b);
ext_int sr_mul(semiring_id id, const ext_int& a, const ext_int& b);

/// Result of running the axiom checks over all triples of a sample set.
struct axiom_report {
    bool passed = true;
    std::string first_violation;  // empty when passed
    bool additive_idempotence_observed = true;
    bool multiplicative_idempotence_observed = true;
    std::uint64_t triples_checked = 0;
};

/// Checks associativity, commutativity, identities, distributivity and
/// annihilation on every triple drawn from `samples`.
axiom_report axiom_suite(semiring_id id, const std::vector<ext_int>& samples);

}  // namespace tropcirc
