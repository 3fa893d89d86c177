#ifndef RESLAB_ERRORS_HPP
#define RESLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reslab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or out-of-domain input.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// File-format problem; carries the offending line when known (1-based, 0 = n/a).
class ParseError : public Error {
public:
    ParseError(const std::string& path, long line, const std::string& msg)
        : Error(line > 0 ? path + ":" + std::to_string(line) + ": " + msg
                         : path + ": " + msg),
          path_(path), line_(line) {}

    const std::string& path() const { return path_; }
    long line() const { return line_; }

private:
    std::string path_;
    long line_;
};

// A fit could not be carried out or did not converge.
class FitError : public Error {
public:
    explicit FitError(const std::string& msg) : Error(msg) {}
};

// Fitted q_loaded >= q_ext: Q_int would be non-positive, which signals a bad fit.
class NonPhysicalFitError : public FitError {
public:
    explicit NonPhysicalFitError(const std::string& msg) : FitError(msg) {}
};

// No resonance dip discernible above the noise floor.
class NoDipError : public FitError {
public:
    explicit NoDipError(const std::string& msg) : FitError(msg) {}
};

} // namespace reslab

#endif // RESLAB_ERRORS_HPP
