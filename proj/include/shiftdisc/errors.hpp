#ifndef SHIFTDISC_ERRORS_HPP
#define SHIFTDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shiftdisc {

// Exit codes used by the CLI: 2 validation, 3 budget, 4 internal consistency.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg, int exit_code)
        : std::runtime_error(msg), code_(std::move(code)), exit_code_(exit_code) {}
    const std::string& code() const noexcept { return code_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string code_;
    int exit_code_;
};

class validation_error : public error {
public:
    explicit validation_error(const std::string& msg,
                              std::string code = "invalid-argument")
        : error(std::move(code), msg, 2) {}
};

class budget_error : public error {
public:
    // `required` is the enumeration count that exceeded the budget, as a
    // decimal string (it may not fit in 64 bits).
    budget_error(const std::string& msg, std::string required)
        : error("budget-error", msg, 3), required_(std::move(required)) {}
    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

// A lemma-contradiction detector fired; this signals a bug, not bad input.
class consistency_error : public error {
public:
    explicit consistency_error(const std::string& msg)
        : error("internal-consistency-error", msg, 4) {}
};

} // namespace shiftdisc

#endif
