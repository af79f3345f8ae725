#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace orbits {

// Minimal SHA-256 (FIPS 180-4), used for row-cache checksums.
class Sha256 {
public:
    Sha256() { reset(); }
    void reset();
    void update(const void* data, std::size_t len);
    std::string hex_digest();  // finalizes; call reset() to reuse

    static std::string hex(std::string_view data);

private:
    void process_block(const std::uint8_t* block);

    std::uint32_t state_[8];
    std::uint64_t bit_count_ = 0;
    std::uint8_t buffer_[64];
    std::size_t buffer_len_ = 0;
};

}  // namespace orbits
