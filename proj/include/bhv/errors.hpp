#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhv {

// Base class for every error the library raises on bad input.
// Internal logic bugs use assertions / std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class RingMismatchError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

class NotUnivariateError : public Error {
public:
    using Error::Error;
};

// Window exhausted or too small for a constraint's support.
class WindowError : public Error {
public:
    using Error::Error;
};

// No constraint fits the window at all; distinct from a pass.
class VacuousWindowError : public Error {
public:
    using Error::Error;
};

// A tower-subspace family whose restricted transition fails surjectivity.
class TowerCompatibilityError : public Error {
public:
    TowerCompatibilityError(const std::string& msg, int level)
        : Error(msg), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

// Text-input error carrying a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

}  // namespace bhv
