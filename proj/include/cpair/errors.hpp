#pragma once

#include <stdexcept>
#include <string>

namespace cpair {

/// Base class for all engine errors.  Every error carries a stable `code()`
/// string so that reports and tests can match on the kind without parsing
/// the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define CPAIR_DEFINE_ERROR(NAME)                                       \
    class NAME : public Error {                                        \
    public:                                                            \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

CPAIR_DEFINE_ERROR(NotStandardCoefficient);
CPAIR_DEFINE_ERROR(UnknownPrime);
CPAIR_DEFINE_ERROR(ChartMismatch);
CPAIR_DEFINE_ERROR(AxisOutOfRange);
CPAIR_DEFINE_ERROR(DegreeOutOfRange);
CPAIR_DEFINE_ERROR(InconsistentOrbit);
CPAIR_DEFINE_ERROR(FactorizationMismatch);
CPAIR_DEFINE_ERROR(NonIntegralGenus);
CPAIR_DEFINE_ERROR(NotAdapted);
CPAIR_DEFINE_ERROR(TensorBudgetExceeded);
CPAIR_DEFINE_ERROR(InvalidDivisor);
CPAIR_DEFINE_ERROR(InvalidMorphism);
CPAIR_DEFINE_ERROR(MissingCanonicalData);
CPAIR_DEFINE_ERROR(UndefinedArithmetic);

#undef CPAIR_DEFINE_ERROR

/// Parse errors carry a 1-based source location.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("ParseError",
                "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace cpair
