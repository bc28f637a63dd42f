#pragma once

#include <stdexcept>
#include <string>

namespace starrad {

/// Input lies outside an operation's admissible domain: an evaluation point
/// past the |z| cap, a disk center outside a lemma interval, a malformed
/// radius or tolerance.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A sampled-boundary query landed too close to the boundary polygon to
/// decide membership reliably.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

/// A bracketing scan never found the required sign change.
class NoSignChangeError : public std::runtime_error {
public:
    explicit NoSignChangeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace starrad
