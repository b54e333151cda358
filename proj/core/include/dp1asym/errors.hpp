#pragma once

#include <stdexcept>
#include <string>

namespace dp1 {

// Degenerate linear system while solving for the coefficient pair at one
// order (parameter degeneracies such as the variant's gamma = 1).
class SingularOrderError : public std::domain_error {
public:
    SingularOrderError(long order, const std::string& what)
        : std::domain_error(what), order_(order) {}
    long order() const noexcept { return order_; }

private:
    long order_;
};

// A limit estimate failed its convergence checks.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A linear solve was too ill-conditioned to trust; report, do not guess.
class IllConditionedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// epsilon is not small against |chi|, so truncating "at the least term"
// is meaningless.
class AsymptoticRegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation point sits on the branch cut (negative real axis) or at 0.
class BranchCutError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A table does not hold enough orders for the requested operation.
class TableTooShortError : public std::length_error {
public:
    using std::length_error::length_error;
};

// File-system level failure writing or reading an artifact.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dp1
