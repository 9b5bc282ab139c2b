#pragma once

#include <stdexcept>
#include <string>

namespace lext {

/// Binary operation on cyclotomic values of different orders. There is no
/// implicit coercion into a common field; callers fix one order per session.
struct order_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A quantity that must reduce to a (nonnegative) rational integer failed to
/// do so, or two routes that provably agree disagreed. Never a valid state;
/// always an arithmetic bug.
struct internal_inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// An explicit cross-verification between independent pipelines failed.
struct verification_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lext
