#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wienerlab {

// Exact index arithmetic. Values such as W(P_n) grow like n^3/6 and products
// inside Sz/Gut like n^4, so a 64-bit accumulator is fine at desk scale, but
// all public index values use 128 bits so no caller ever has to think about it.
using index_t = __int128;
using uindex_t = unsigned __int128;

std::string to_string(index_t v);
std::string to_string_u(uindex_t v);

// Narrow to int64 or die; used at JSON boundaries.
long long to_int64_checked(index_t v);

inline index_t binom2(index_t n) { return n * (n - 1) / 2; }
inline index_t binom3(index_t n) { return n * (n - 1) * (n - 2) / 6; }
inline index_t binom4(index_t n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("graph is not connected") {}
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct BadParamsError : std::runtime_error {
    explicit BadParamsError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wienerlab
