#pragma once

#include "tyche/bytes.hpp"

#include <initializer_list>

namespace tyche {

inline constexpr std::size_t kHashBytes = 32;
inline constexpr unsigned kHashOutputBits = 256;

Bytes sha256(const Bytes& data);

// Unambiguous field concatenation: every field is preceded by its 4-byte
// big-endian length. Variable-length inputs cannot collide by re-bracketing.
Bytes framed(std::initializer_list<const Bytes*> fields);

// sha256 over the framed concatenation of the fields.
Bytes hash_fields(std::initializer_list<const Bytes*> fields);

} // namespace tyche
