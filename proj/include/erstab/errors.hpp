#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace erstab {

// Raised when an exact procedure would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Construction or procedure preconditions that cannot be met for the given parameters.
class Infeasible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed graph6 input. offset is the byte position of the first bad byte.
class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at byte " + std::to_string(offset)), reason_(what), offset_(offset) {}

    const std::string& reason() const noexcept { return reason_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string reason_;
    std::size_t offset_;
};

} // namespace erstab
