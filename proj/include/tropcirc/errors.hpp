#pragma once

#include <stdexcept>
#include <string>

namespace tropcirc {

/// Error categories, mapped to distinct process exit codes by the CLI.
enum class errc {
    usage,         // bad command line / malformed input file
    range,         // argument outside the supported desk-scale range
    cap,           // work or size cap exceeded
    domain,        // value outside a semiring carrier
    precondition,  // mathematical precondition failed
    internal,      // invariant violation (never expected)
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace tropcirc
