#include "wienerlab/common.hpp"

#include <limits>

namespace wienerlab {

std::string to_string_u(uindex_t v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

std::string to_string(index_t v) {
    if (v < 0) return "-" + to_string_u(static_cast<uindex_t>(-v));
    return to_string_u(static_cast<uindex_t>(v));
}

long long to_int64_checked(index_t v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("index value does not fit in 64 bits: " + to_string(v));
    return static_cast<long long>(v);
}

} // namespace wienerlab
