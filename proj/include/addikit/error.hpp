#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addikit {

enum class ErrorCode {
    NonPrimeCharacteristic,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    NotASubfield,
    ResultNotInSubfield,
    DimensionMismatch,
    SingularMatrix,
    BudgetExceeded,
    InvalidDimension,
    InvalidParams,
    ZeroColumn,
    RankDeficientCode,
    DependentLambdas,
    SingularMoore,
    RankDeficientMember,
    IndexOutOfRange,
    InternalInconsistency,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotASubfield: return "NotASubfield";
        case ErrorCode::ResultNotInSubfield: return "ResultNotInSubfield";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::RankDeficientCode: return "RankDeficientCode";
        case ErrorCode::DependentLambdas: return "DependentLambdas";
        case ErrorCode::SingularMoore: return "SingularMoore";
        case ErrorCode::RankDeficientMember: return "RankDeficientMember";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code identifies the failure class,
/// the message carries the offending values.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace addikit
