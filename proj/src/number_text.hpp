#pragma once

#include <array>
#include <charconv>
#include <string>

namespace screening::detail {

// Locale-independent shortest decimal at `digits` significant digits.
inline std::string number_text(double value, int digits = 12) {
    if (value == 0.0) return "0";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, digits);
    return std::string(buf.data(), res.ptr);
}

}  // namespace screening::detail
