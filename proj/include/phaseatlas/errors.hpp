#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaseatlas {

// Base of all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent inputs (files, parameters, shapes).  CLI exit 1.
struct InputError : Error {
    using Error::Error;
};

// A numerical precondition failed during a computation.  CLI exit 2.
struct PreconditionError : Error {
    using Error::Error;
};

struct DimensionMismatch : InputError {
    using InputError::InputError;
};

struct PointOutsideGrid : InputError {
    using InputError::InputError;
};

struct IndexOutOfRange : InputError {
    using InputError::InputError;
};

struct GridMismatch : InputError {
    using InputError::InputError;
};

struct NotCoprime : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    ParseError(std::size_t line, const std::string& msg)
        : InputError("parse error at line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

struct NotHermitian : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NoConvergence : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DegenerateGroundState : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct GapClosure : PreconditionError {
    GapClosure(const std::vector<std::size_t>& k, double gap);
    std::vector<std::size_t> point;
    double gap;
};

struct NonAdmissibleStep : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct InconsistentWinding : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct VanishingLink : PreconditionError {
    VanishingLink(const std::vector<std::size_t>& k, std::size_t direction, double mag);
    std::vector<std::size_t> point;
    std::size_t direction;
};

struct SliceDisagreement : PreconditionError {
    SliceDisagreement(std::size_t i, std::size_t j);
    std::size_t i, j;
};

struct MidpointDegeneracy : PreconditionError {
    MidpointDegeneracy(const std::vector<std::size_t>& k, double t, double gap);
    std::vector<std::size_t> point;
    double t;
};

struct NotLocalizable : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct GridTooCoarse : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct CochainViolation : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DegreeOutOfRange : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DimensionTooHigh : PreconditionError {
    explicit DimensionTooHigh(std::size_t dim);
    std::size_t dim;
};

std::string format_point(const std::vector<std::size_t>& k);

}  // namespace phaseatlas
