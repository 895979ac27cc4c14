#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <span>
#include <stdexcept>
#include <vector>

#include "habfuse/error.hpp"

namespace habfuse::binio {

inline void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xffu));
}

inline void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xffu));
}

inline void put_f32(std::vector<unsigned char>& out, float v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }
inline void put_f64(std::vector<unsigned char>& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

inline std::uint32_t get_u32(std::span<const unsigned char> in, std::size_t offset) {
    if (offset + 4 > in.size()) throw FormatError("truncated payload");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[offset + i]) << (8 * i);
    return v;
}

inline std::uint64_t get_u64(std::span<const unsigned char> in, std::size_t offset) {
    if (offset + 8 > in.size()) throw FormatError("truncated payload");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[offset + i]) << (8 * i);
    return v;
}

inline float get_f32(std::span<const unsigned char> in, std::size_t offset) {
    return std::bit_cast<float>(get_u32(in, offset));
}
inline double get_f64(std::span<const unsigned char> in, std::size_t offset) {
    return std::bit_cast<double>(get_u64(in, offset));
}

std::vector<unsigned char> read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames, so readers never see a partial file.
void write_file(const std::filesystem::path& path, std::span<const unsigned char> bytes);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace habfuse::binio
