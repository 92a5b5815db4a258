#ifndef JFLOW_ERRORS_HPP
#define JFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jflow {

// Scenario / input validation problems. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Time step too large for the selected CFL condition. CLI exit code 2.
class CflError : public std::runtime_error {
public:
    CflError(const std::string& what, std::string binding_branch)
        : std::runtime_error(what), binding_branch_(std::move(binding_branch)) {}
    const std::string& binding_branch() const { return binding_branch_; }

private:
    std::string binding_branch_;
};

// A provable runtime estimate failed (gradient bounds, time-derivative
// monotonicity, junction identification, conservation). CLI exit code 3.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jflow

#endif
