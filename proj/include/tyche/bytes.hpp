#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tyche {

using Bytes = std::vector<std::uint8_t>;

inline Bytes ascii(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline Bytes be32(std::uint32_t v) {
    return Bytes{static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
                 static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

inline Bytes be64(std::uint64_t v) {
    Bytes out(8);
    for (int i = 7; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

inline void append(Bytes& out, const Bytes& b) {
    out.insert(out.end(), b.begin(), b.end());
}

std::string to_hex(const Bytes& data);
Bytes from_hex(const std::string& hex);

} // namespace tyche
