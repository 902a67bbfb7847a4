#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace blochlab {

/// Expression syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Evaluation produced a non-finite value; carries the offending point.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& msg, std::complex<double> where)
        : std::runtime_error(msg + " at z = (" + std::to_string(where.real()) +
                             ", " + std::to_string(where.imag()) + ")"),
          where_(where) {}

    std::complex<double> where() const noexcept { return where_; }

private:
    std::complex<double> where_;
};

/// phi failed the self-map check; carries the witness point and |phi| there.
class SelfMapError : public std::runtime_error {
public:
    SelfMapError(const std::string& msg, std::complex<double> witness, double modulus)
        : std::runtime_error(msg + " (witness z = (" + std::to_string(witness.real()) +
                             ", " + std::to_string(witness.imag()) +
                             "), |phi| = " + std::to_string(modulus) + ")"),
          witness_(witness), modulus_(modulus) {}

    std::complex<double> witness() const noexcept { return witness_; }
    double modulus() const noexcept { return modulus_; }

private:
    std::complex<double> witness_;
    double modulus_;
};

/// A requested quantity is undefined for the given symbols
/// (e.g. an essential-norm band for a divergent pair).
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace blochlab
