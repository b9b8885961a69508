#ifndef VANETSIG_BYTES_HPP_
#define VANETSIG_BYTES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vanetsig {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline Bytes as_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string as_string(BytesView b) {
    return std::string(b.begin(), b.end());
}

inline void append(Bytes& out, BytesView more) {
    out.insert(out.end(), more.begin(), more.end());
}

inline void append(Bytes& out, std::string_view more) {
    out.insert(out.end(), more.begin(), more.end());
}

inline void append_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void append_u32_be(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

// Length-prefixed framing used by every element/scalar encoding:
// 4-byte big-endian length followed by the payload.
inline void append_framed(Bytes& out, BytesView payload) {
    append_u32_be(out, static_cast<std::uint32_t>(payload.size()));
    append(out, payload);
}

// Reads one frame starting at `pos`, advances `pos` past it.
// Throws std::invalid_argument on truncated input.
Bytes read_frame(BytesView in, std::size_t& pos);

std::string to_hex(BytesView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument

Bytes sha256(BytesView data);

}  // namespace vanetsig

#endif  // VANETSIG_BYTES_HPP_
