#pragma once

#include <stdexcept>
#include <string>

namespace floertori {

// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Fiber genus below 1; the construction needs a nontrivially fibered link.
class GenusTooSmall : public Error {
public:
    explicit GenusTooSmall(const std::string& what) : Error(what) {}
};

// Operands belong to different surface models (dimension disagreement).
class ModelMismatch : public Error {
public:
    explicit ModelMismatch(const std::string& what) : Error(what) {}
};

// A matrix fails the intersection-form preservation check M^T J M = J.
class NotSymplectic : public Error {
public:
    explicit NotSymplectic(const std::string& what) : Error(what) {}
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// An operation that needs a fiber-sum ambient was run on an interior-only
// configuration, or vice versa.
class AmbientMismatch : public Error {
public:
    explicit AmbientMismatch(const std::string& what) : Error(what) {}
};

// The two curve classes do not intersect cleanly (transverse single point
// or equal up to sign are the supported cases).
class NotCleanlyIntersecting : public Error {
public:
    explicit NotCleanlyIntersecting(const std::string& what) : Error(what) {}
};

// An operation requiring nonempty input got an empty one.
class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

// The two framed discs do not span H_1 of the torus (their boundary labels
// do not cover both generator directions).
class BasisNotSpanning : public Error {
public:
    explicit BasisNotSpanning(const std::string& what) : Error(what) {}
};

// A value violates a domain invariant (nonpositive filtration scale,
// negative rank, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace floertori
