#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace harmo {

// Binary selector over parameter coordinates. One instance per task (or per
// group), identified by `owner`.
struct BitMask {
  std::string owner;
  std::vector<std::uint8_t> bits;

  BitMask() = default;
  BitMask(std::string owner_id, std::size_t n, std::uint8_t fill = 1)
      : owner(std::move(owner_id)), bits(n, fill) {}

  std::size_t size() const { return bits.size(); }
  std::size_t popcount() const;

  static BitMask all_ones(std::string owner_id, std::size_t n) {
    return BitMask(std::move(owner_id), n, 1);
  }
};

// Run-length encoding with a JSON header; round-trips bit-exactly.
void save_mask(const BitMask& mask, double sparsity, const std::filesystem::path& path);
BitMask load_mask(const std::filesystem::path& path);

}  // namespace harmo
