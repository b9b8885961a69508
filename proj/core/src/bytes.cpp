#include "vanetsig/bytes.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace vanetsig {

Bytes read_frame(BytesView in, std::size_t& pos) {
    if (pos + 4 > in.size()) throw std::invalid_argument("truncated frame header");
    std::uint32_t len = (std::uint32_t(in[pos]) << 24) | (std::uint32_t(in[pos + 1]) << 16) |
                        (std::uint32_t(in[pos + 2]) << 8) | std::uint32_t(in[pos + 3]);
    pos += 4;
    if (pos + len > in.size()) throw std::invalid_argument("truncated frame payload");
    Bytes out(in.begin() + pos, in.begin() + pos + len);
    pos += len;
    return out;
}

std::string to_hex(BytesView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(hex_nibble(hex[i]) * 16 + hex_nibble(hex[i + 1])));
    return out;
}

Bytes sha256(BytesView data) {
    Bytes out(32);
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
              EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok || len != 32) throw std::runtime_error("SHA-256 computation failed");
    return out;
}

}  // namespace vanetsig
