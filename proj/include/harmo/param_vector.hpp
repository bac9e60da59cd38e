#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "harmo/mask.hpp"

namespace harmo {

enum class SegmentKind { LinearWeight, Bias, Embedding, NormScale };

std::string_view segment_kind_name(SegmentKind kind);
SegmentKind parse_segment_kind(std::string_view name);

// One named contiguous slice of the flat parameter vector. Linear weights are
// stored row-major as fan_in x fan_out; embeddings as rows x cols with
// fan_in = rows, fan_out = cols.
struct LayerSegment {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
  std::size_t fan_in = 1;
  std::size_t fan_out = 1;
  SegmentKind kind = SegmentKind::Bias;
};

// Immutable segment map. Segments are contiguous, non-overlapping, and cover
// the whole vector.
class ParamLayout {
 public:
  ParamLayout() = default;

  // Appends a segment; returns its index. offset is assigned automatically.
  std::size_t add(std::string name, SegmentKind kind, std::size_t fan_in, std::size_t fan_out);

  std::size_t total_size() const { return total_; }
  const std::vector<LayerSegment>& segments() const { return segments_; }
  const LayerSegment& segment(std::string_view name) const;
  bool has_segment(std::string_view name) const;

 private:
  std::vector<LayerSegment> segments_;
  std::size_t total_ = 0;
};

// Flat trainable vector plus its layout. Length is fixed at construction.
struct ParamVector {
  std::shared_ptr<const ParamLayout> layout;
  std::vector<double> values;

  ParamVector() = default;
  explicit ParamVector(std::shared_ptr<const ParamLayout> lay)
      : layout(std::move(lay)), values(layout->total_size(), 0.0) {}

  std::size_t size() const { return values.size(); }
};

using GradVector = std::vector<double>;

// In-place masked SGD step: params_j -= lr * grad_j * mask_j. Coordinates with
// a zero mask bit are left bit-identical.
void apply_masked_step(ParamVector& params, const GradVector& grad, const BitMask& mask,
                       double lr);

// Checkpoint = key-value manifest + raw little-endian f64 array; bit-exact
// round trip. `extra` keys are preserved verbatim.
void save_checkpoint(const ParamVector& params, const std::filesystem::path& dir,
                     const std::map<std::string, std::string>& extra = {});
ParamVector load_checkpoint(const std::filesystem::path& dir,
                            std::map<std::string, std::string>* extra = nullptr);

}  // namespace harmo
