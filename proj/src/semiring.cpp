#include "tropcirc/semiring.hpp"

#include <ostream>
#include <sstream>

namespace tropcirc {

ext_int ext_int::checked_plus(const ext_int& o) const {
    if (is_pos_inf() || o.is_pos_inf()) {
        require(!is_neg_inf() && !o.is_neg_inf(), errc::domain, "ext_int: +inf + -inf");
        return pos_inf();
    }
    if (is_neg_inf() || o.is_neg_inf()) return neg_inf();
    std::int64_t r;
    require(!__builtin_add_overflow(v_, o.v_, &r), errc::cap, "ext_int: addition overflow");
    return ext_int(r);
}

ext_int ext_int::checked_scale(std::uint64_t k) const {
    require(k >= 1, errc::internal, "ext_int: scale by 0");
    if (!is_finite()) return *this;
    require(k <= static_cast<std::uint64_t>(INT64_MAX), errc::cap, "ext_int: scale overflow");
    std::int64_t r;
    require(!__builtin_mul_overflow(v_, static_cast<std::int64_t>(k), &r), errc::cap,
            "ext_int: scale overflow");
    return ext_int(r);
}

std::string ext_int::str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
}

std::ostream& operator<<(std::ostream& os, const ext_int& x) { return os << x.str(); }

std::string semiring_name(semiring_id id) {
    switch (id) {
        case semiring_id::nat_arith: return "nat-arith";
        case semiring_id::boolean: return "bool";
        case semiring_id::min_nat: return "min-nat";
        case semiring_id::min_int: return "min-int";
        case semiring_id::max_nat: return "max-nat";
        case semiring_id::max_int: return "max-int";
    }
    fail(errc::internal, "semiring_name: bad id");
}

semiring_id semiring_from_name(const std::string& name) {
    for (semiring_id id : all_semirings)
        if (semiring_name(id) == name) return id;
    fail(errc::usage, "unknown semiring '" + name + "'");
}

semiring_flags flags(semiring_id id) {
    return semiring_flags{
        /*additively_idempotent=*/id != semiring_id::nat_arith,
        /*multiplicatively_idempotent=*/id == semiring_id::boolean,
        /*zero_characteristic=*/true,
    };
}

bool is_tropical(semiring_id id) {
    return id == semiring_id::min_nat || id == semiring_id::min_int ||
           id == semiring_id::max_nat || id == semiring_id::max_int;
}

bool in_carrier(semiring_id id, const ext_int& x) {
    switch (id) {
        case semiring_id::nat_arith: return x.is_finite() && x.value() >= 0;
        case semiring_id::boolean: return x == ext_int(0) || x == ext_int(1);
        case semiring_id::min_nat: return x.is_pos_inf() || (x.is_finite() && x.value() >= 0);
        case semiring_id::min_int: return x.is_pos_inf() || x.is_finite();
        case semiring_id::max_nat: return x.is_neg_inf() || (x.is_finite() && x.value() >= 0);
        case semiring_id::max_int: return x.is_neg_inf() || x.is_finite();
    }
    return false;
}

void require_carrier(semiring_id id, const ext_int& x) {
    require(in_carrier(id, x), errc::domain,
            x.str() + " is not in the carrier of " + semiring_name(id));
}

semiring_constants sr_constants(semiring_id id) {
    switch (id) {
        case semiring_id::nat_arith:
        case semiring_id::boolean: return {ext_int(0), ext_int(1)};
        case semiring_id::min_nat:
        case semiring_id::min_int: return {ext_int::pos_inf(), ext_int(0)};
        case semiring_id::max_nat:
        case semiring_id::max_int: return {ext_int::neg_inf(), ext_int(0)};
    }
    fail(errc::internal, "sr_constants: bad id");
}

ext_int sr_add(semiring_id id, const ext_int& a, const ext_int& b) {
    require_carrier(id, a);
    require_carrier(id, b);
    switch (id) {
        case semiring_id::nat_arith: return a.checked_plus(b);
        case semiring_id::boolean: return ext_int(a.value() | b.value());
        case semiring_id::min_nat:
        case semiring_id::min_int: return min(a, b);
        case semiring_id::max_nat:
        case semiring_id::max_int: return max(a, b);
    }
    fail(errc::internal, "sr_add: bad id");
}

ext_int sr_mul(semiring_id id, const ext_int& a, const ext_int& b) {
    require_carrier(id, a);
    require_carrier(id, b);
    switch (id) {
        case semiring_id::nat_arith: {
            std::int64_t r;
            require(!__builtin_mul_overflow(a.value(), b.value(), &r), errc::cap,
                    "nat-arith: multiplication overflow");
            return ext_int(r);
        }
        case semiring_id::boolean: return ext_int(a.value() & b.value());
        case semiring_id::min_nat:
        case semiring_id::min_int:
        case semiring_id::max_nat:
        case semiring_id::max_int: return a.checked_plus(b);
    }
    fail(errc::internal, "sr_mul: bad id");
}

axiom_report axiom_suite(semiring_id id, const std::vector<ext_int>& samples) {
    axiom_report rep;
    for (const ext_int& x : samples) require_carrier(id, x);
    const auto [zero, one] = sr_constants(id);

    auto violate = [&](const std::string& what) {
        if (rep.passed) {
            rep.passed = false;
            rep.first_violation = what;
        }
    };

    for (const ext_int& a : samples) {
        if (sr_add(id, a, zero) != a) violate("additive identity fails at a=" + a.str());
        if (sr_mul(id, a, one) != a) violate("multiplicative identity fails at a=" + a.str());
        if (sr_mul(id, a, zero) != zero) violate("annihilation fails at a=" + a.str());
        if (sr_add(id, a, a) != a) rep.additive_idempotence_observed = false;
        if (sr_mul(id, a, a) != a) rep.multiplicative_idempotence_observed = false;
        for (const ext_int& b : samples) {
            if (sr_add(id, a, b) != sr_add(id, b, a)) violate("addition not commutative");
            if (sr_mul(id, a, b) != sr_mul(id, b, a)) violate("multiplication not commutative");
            for (const ext_int& c : samples) {
                rep.triples_checked++;
                if (sr_add(id, sr_add(id, a, b), c) != sr_add(id, a, sr_add(id, b, c)))
                    violate("addition not associative");
                if (sr_mul(id, sr_mul(id, a, b), c) != sr_mul(id, a, sr_mul(id, b, c)))
                    violate("multiplication not associative");
                if (sr_mul(id, a, sr_add(id, b, c)) !=
                    sr_add(id, sr_mul(id, a, b), sr_mul(id, a, c)))
                    violate("distributivity fails at a=" + a.str() + " b=" + b.str() +
                            " c=" + c.str());
            }
        }
    }
    return rep;
}

}  // namespace tropcirc
