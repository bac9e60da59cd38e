#include "harmo/mask.hpp"

#include <json.hpp>

#include "harmo/common.hpp"

namespace harmo {

using nlohmann::json;

std::size_t BitMask::popcount() const {
  std::size_t n = 0;
  for (auto b : bits) n += b;
  return n;
}

void save_mask(const BitMask& mask, double sparsity, const std::filesystem::path& path) {
  // runs alternate starting from a run of `first`; empty mask -> empty runs
  std::vector<std::size_t> runs;
  int first = mask.bits.empty() ? 0 : mask.bits[0];
  std::size_t run = 0;
  std::uint8_t cur = static_cast<std::uint8_t>(first);
  for (auto b : mask.bits) {
    if (b == cur) {
      ++run;
    } else {
      runs.push_back(run);
      cur = b;
      run = 1;
    }
  }
  if (run > 0) runs.push_back(run);

  json j;
  j["owner"] = mask.owner;
  j["sparsity"] = sparsity;
  j["popcount"] = mask.popcount();
  j["total"] = mask.size();
  j["first"] = first;
  j["runs"] = runs;
  atomic_write_text(path, j.dump(2) + "\n");
}

BitMask load_mask(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw DataError("malformed mask file " + path.string() + ": " + e.what());
  }
  BitMask mask;
  try {
    mask.owner = j.at("owner").get<std::string>();
    const auto total = j.at("total").get<std::size_t>();
    const auto first = j.at("first").get<int>();
    const auto runs = j.at("runs").get<std::vector<std::size_t>>();
    mask.bits.reserve(total);
    std::uint8_t cur = static_cast<std::uint8_t>(first);
    for (auto r : runs) {
      mask.bits.insert(mask.bits.end(), r, cur);
      cur = static_cast<std::uint8_t>(1 - cur);
    }
    if (mask.bits.size() != total)
      throw DataError("mask run lengths sum to " + std::to_string(mask.bits.size()) +
                      ", header says " + std::to_string(total) + " in " + path.string());
    if (mask.popcount() != j.at("popcount").get<std::size_t>())
      throw DataError("mask popcount mismatch in " + path.string());
  } catch (const json::exception& e) {
    throw DataError("malformed mask file " + path.string() + ": " + e.what());
  }
  return mask;
}

}  // namespace harmo
