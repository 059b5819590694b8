#pragma once

#include <stdexcept>
#include <string>

namespace wpq {

/// Error taxonomy shared with the C API and the CLI exit codes:
/// domain -> 2, accuracy -> 3, infeasible -> 4.
class Error : public std::runtime_error {
public:
    enum class Kind { Domain = 2, Accuracy = 3, Infeasible = 4, Internal = 1 };
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(Kind::Domain, msg) {}
};

class AccuracyError : public Error {
public:
    explicit AccuracyError(const std::string& msg) : Error(Kind::Accuracy, msg) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error(Kind::Infeasible, msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(Kind::Internal, msg) {}
};

}  // namespace wpq
