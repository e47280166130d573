#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace addikit {

/// Hard caps on exhaustive work. Exceeding a cap raises BudgetExceeded, never a silent truncation.
struct Budget {
    static constexpr std::uint64_t kDefaultEnumeration = std::uint64_t{1} << 26;

    /// Maximum number of vectors, subspaces or subsets visited by one enumeration.
    std::uint64_t max_enumeration = kDefaultEnumeration;

    /// Reads ADDIKIT_BUDGET (a positive integer) when set.
    static Budget from_env() {
        Budget b;
        if (const char* env = std::getenv("ADDIKIT_BUDGET"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0' || v == 0) {
                raise(ErrorCode::InvalidParams, "ADDIKIT_BUDGET must be a positive integer, got '" + std::string(env) + "'");
            }
            b.max_enumeration = v;
        }
        return b;
    }

    void check(std::uint64_t count, const std::string& what) const {
        if (count > max_enumeration) {
            raise(ErrorCode::BudgetExceeded, what + " needs " + std::to_string(count) + " steps, cap is " +
                                                 std::to_string(max_enumeration));
        }
    }
};

}  // namespace addikit
