#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(const std::string& msg) : Error(msg) {}
};

class NonFiniteInput : public Error {
public:
    explicit NonFiniteInput(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Integration produced a state with an eigenvalue below -psd_tol; the
/// step size is too large for the scenario's rates.
class PositivityLost : public Error {
public:
    PositivityLost(const std::string& msg, double t) : Error(msg), time(t) {}
    double time;
};

/// A forward jump term has finite weight while the reverse weight is zero,
/// so the entropy production rate is genuinely infinite at this state.
class DivergentEntropyProduction : public Error {
public:
    explicit DivergentEntropyProduction(const std::string& msg) : Error(msg) {}
};

class NotDissipationless : public Error {
public:
    explicit NotDissipationless(const std::string& msg) : Error(msg) {}
};

class DegenerateSpectrum : public Error {
public:
    explicit DegenerateSpectrum(const std::string& msg) : Error(msg) {}
};

class NotClassical : public Error {
public:
    explicit NotClassical(const std::string& msg) : Error(msg) {}
};

class EmptyTrajectory : public Error {
public:
    explicit EmptyTrajectory(const std::string& msg) : Error(msg) {}
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

class UnknownParam : public Error {
public:
    explicit UnknownParam(const std::string& msg) : Error(msg) {}
};

} // namespace qsl
