#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincodes {

enum class ErrorKind {
    NotPrimePower,
    DivisionByZero,
    DimensionMismatch,
    SpecMismatch,
    RankDeficient,
    BudgetExceeded,
    TrivialDual,
    NotInCode,
    BadParams,
    PreconditionFailed,
    ZeroColumn,
    Unauthorized,
    InconsistentShares,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::TrivialDual: return "TrivialDual";
        case ErrorKind::NotInCode: return "NotInCode";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ZeroColumn: return "ZeroColumn";
        case ErrorKind::Unauthorized: return "Unauthorized";
        case ErrorKind::InconsistentShares: return "InconsistentShares";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library. `kind()` is the stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mincodes
