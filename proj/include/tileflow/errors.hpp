#pragma once

#include <stdexcept>
#include <string>

namespace tileflow {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory : int {
    Validation = 2,
    Privacy = 3,
    Scheduling = 4,
    Simulation = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}
    ErrorCategory category() const noexcept { return cat_; }
    int exit_code() const noexcept { return static_cast<int>(cat_); }

private:
    ErrorCategory cat_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(ErrorCategory::Validation, m) {}
};
struct PrivacyError : Error {
    explicit PrivacyError(const std::string& m) : Error(ErrorCategory::Privacy, m) {}
};
struct SchedulingError : Error {
    explicit SchedulingError(const std::string& m) : Error(ErrorCategory::Scheduling, m) {}
};
struct SimulationError : Error {
    explicit SimulationError(const std::string& m) : Error(ErrorCategory::Simulation, m) {}
};

}  // namespace tileflow
