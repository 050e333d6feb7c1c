#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewlab {

// Exit-code classes used by the CLI: input errors map to 2, resource
// exhaustion to 3, mathematical negatives to 1.
enum class ErrorClass { Input, Resource, Math };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what = "division by zero")
        : Error(ErrorClass::Input, what) {}
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what = "operands belong to different rings")
        : Error(ErrorClass::Input, what) {}
};

class InvalidAutomorphismError : public Error {
public:
    explicit InvalidAutomorphismError(const std::string& what)
        : Error(ErrorClass::Input, what) {}
};

class UnsupportedAutomorphismError : public Error {
public:
    explicit UnsupportedAutomorphismError(const std::string& what)
        : Error(ErrorClass::Input, what) {}
};

class DegreeOverflowError : public Error {
public:
    explicit DegreeOverflowError(const std::string& what = "degree cap exceeded")
        : Error(ErrorClass::Resource, what) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what = "matrix is singular")
        : Error(ErrorClass::Math, what) {}
};

// Carries the interval [lower, upper] for the inner rank established before
// the budget ran out.
class SearchBudgetExceededError : public Error {
public:
    SearchBudgetExceededError(int lower, int upper, std::uint64_t used, const std::string& what)
        : Error(ErrorClass::Resource, what), lower_(lower), upper_(upper), used_(used) {}
    int lower() const { return lower_; }
    int upper() const { return upper_; }
    std::uint64_t budget_used() const { return used_; }

private:
    int lower_;
    int upper_;
    std::uint64_t used_;
};

class NotStabilizedError : public Error {
public:
    explicit NotStabilizedError(int s_max)
        : Error(ErrorClass::Resource,
                "stable rank sequence still decreasing at s_max = " + std::to_string(s_max)),
          s_max_(s_max) {}
    int s_max() const { return s_max_; }

private:
    int s_max_;
};

class NotAnnihilatingError : public Error {
public:
    explicit NotAnnihilatingError(const std::string& what = "A*B != 0")
        : Error(ErrorClass::Input, what) {}
};

class FrontierTooTightError : public Error {
public:
    explicit FrontierTooTightError(const std::string& what = "series frontier too tight")
        : Error(ErrorClass::Resource, what) {}
};

class ZeroSeriesError : public Error {
public:
    explicit ZeroSeriesError(const std::string& what = "series is zero")
        : Error(ErrorClass::Input, what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string& what)
        : Error(ErrorClass::Input, what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(const std::string& sym)
        : Error(ErrorClass::Input, "unknown symbol '" + sym + "'") {}
};

}  // namespace skewlab
