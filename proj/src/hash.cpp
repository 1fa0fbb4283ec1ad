#include "tyche/hash.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace tyche {

namespace {

void ensure_sodium() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    });
}

} // namespace

Bytes sha256(const Bytes& data) {
    ensure_sodium();
    Bytes out(crypto_hash_sha256_BYTES);
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Bytes framed(std::initializer_list<const Bytes*> fields) {
    std::size_t total = 0;
    for (const Bytes* f : fields) total += 4 + f->size();
    Bytes out;
    out.reserve(total);
    for (const Bytes* f : fields) {
        append(out, be32(static_cast<std::uint32_t>(f->size())));
        append(out, *f);
    }
    return out;
}

Bytes hash_fields(std::initializer_list<const Bytes*> fields) {
    return sha256(framed(fields));
}

std::string to_hex(const Bytes& data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string with odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid hex digit");
    };
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    }
    return out;
}

} // namespace tyche
