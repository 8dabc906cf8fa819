#pragma once

#include <stdexcept>
#include <string>

namespace cranio {

/// Base class of all craniocut errors. The three branches below map onto the
/// CLI exit statuses: ConfigError -> 2, DataError -> 3, NumericalError -> 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed or unusable input data (files, meshes, point sets).
class DataError : public Error {
public:
    using Error::Error;
};

/// A solver or geometric construction failed on otherwise well-formed data.
class NumericalError : public Error {
public:
    using Error::Error;
};

// -- data errors ------------------------------------------------------------

class ParseError : public DataError {
public:
    using DataError::DataError;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

class EmptyMesh : public DataError {
public:
    using DataError::DataError;
};

class NonManifold : public DataError {
public:
    using DataError::DataError;
};

class EmptyResult : public DataError {
public:
    using DataError::DataError;
};

class EmptySelection : public DataError {
public:
    using DataError::DataError;
};

class CountMismatch : public DataError {
public:
    using DataError::DataError;
};

class FrameMismatch : public DataError {
public:
    using DataError::DataError;
};

class NoCorrespondences : public DataError {
public:
    using DataError::DataError;
};

class NoBoundary : public DataError {
public:
    using DataError::DataError;
};

class AmbiguousLoops : public DataError {
public:
    using DataError::DataError;
};

class OpenToolpath : public DataError {
public:
    using DataError::DataError;
};

class TooFewPoints : public DataError {
public:
    using DataError::DataError;
};

class InvalidParams : public DataError {
public:
    using DataError::DataError;
};

// -- numerical errors --------------------------------------------------------

class DegenerateConfiguration : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RankDeficient : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InsufficientCoverage : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InsufficientDiversity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DivergedInit : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ProjectionMiss : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateTangent : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class CenterOnCurve : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OriginCoincidence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace cranio
