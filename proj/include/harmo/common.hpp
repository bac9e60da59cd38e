#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmo {

// Error taxonomy used across the library.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic, implementation-pinned RNG. std::mt19937_64 state transitions
// are standardized, but the <random> distributions are not; all sampling here
// is built from raw 64-bit draws so results are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // splitmix64 warmup decorrelates nearby seeds
    next_u64();
    next_u64();
  }

  // Derives an independent stream, e.g. Rng(seed).fork("dropout", step).
  Rng fork(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

  // Standard normal via Box-Muller (no cached spare, keeps the stream simple).
  double normal();

  // k distinct indices from [0, n), ascending.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::uint64_t state_;
};

// FNV-1a over raw bytes; used for dataset integrity checks.
std::uint64_t fnv1a64(const void* data, std::size_t n_bytes);
std::string fnv1a64_hex(const void* data, std::size_t n_bytes);

// Little-endian raw array files. f32 payloads are converted to/from double
// at the boundary; f64 payloads round-trip bit-exactly.
void write_f32_file(const std::filesystem::path& path, const std::vector<double>& values);
std::vector<double> read_f32_file(const std::filesystem::path& path, std::size_t expected_count);
void write_f64_file(const std::filesystem::path& path, const std::vector<double>& values);
std::vector<double> read_f64_file(const std::filesystem::path& path, std::size_t expected_count);

// Write-to-temp-then-rename, so readers never see partial files.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// llround with range check; the single rounding rule for sparsity budgets.
std::size_t round_count(double x);

}  // namespace harmo
