#pragma once

#include <stdexcept>
#include <string>

namespace qp {

// Exit classes shared by the CLI and the HTTP service.
enum class ErrorClass { invalid_input = 2, algorithmic = 3, budget = 4 };

class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorClass cls, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)), cls_(cls) {}

    const std::string& code() const noexcept { return code_; }
    ErrorClass error_class() const noexcept { return cls_; }
    int exit_code() const noexcept { return static_cast<int>(cls_); }

private:
    std::string code_;
    ErrorClass cls_;
};

inline Error invalid(std::string code, const std::string& detail)
{
    return Error(std::move(code), ErrorClass::invalid_input, detail);
}

inline Error algorithmic(std::string code, const std::string& detail)
{
    return Error(std::move(code), ErrorClass::algorithmic, detail);
}

inline Error budget_exceeded(const std::string& detail)
{
    return Error("BudgetExceeded", ErrorClass::budget, detail);
}

} // namespace qp
