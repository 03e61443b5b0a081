#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dualcx {

/** Base class of every exception thrown by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** An argument violates a documented precondition, or an input file is malformed. */
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/** A cone that must be pointed contains a line. */
class NotPointed : public Error {
public:
    NotPointed() : Error("cone not pointed") {}
};

/**
 * The first Varchenko subdivision has a ray on the boundary of the
 * positive orthant that is not a coordinate ray.
 */
class PropertyRViolation : public Error {
public:
    explicit PropertyRViolation(std::vector<mpz_class> witness)
        : Error("property (R) violated"), witness_(std::move(witness)) {}

    const std::vector<mpz_class>& witness() const { return witness_; }

private:
    std::vector<mpz_class> witness_;
};

/** An internal consistency check failed; indicates a bug rather than bad input. */
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace dualcx
