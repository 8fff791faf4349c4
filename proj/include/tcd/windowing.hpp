#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcd/sequence.hpp"

namespace tcd {

/// Sliding-window layout over a long sequence. Clip i covers the half-open
/// frame interval [stride*i, stride*i + window), so total_frames must equal
/// stride*(clip_count-1) + window.
struct ClipLayout {
  int window = 0;        // M, frames per clip
  int stride = 0;        // S, offset between adjacent clip starts
  int clip_count = 0;    // N
  int total_frames = 0;

  bool covers(int clip, int frame) const {
    return stride * clip <= frame && frame < stride * clip + window;
  }
  int clip_start(int clip) const { return stride * clip; }
};

inline ClipLayout make_layout(int total_frames, int window, int stride) {
  if (window < 1) throw std::invalid_argument("make_layout: window must be >= 1");
  if (stride < 1 || stride > window)
    throw std::invalid_argument("make_layout: stride must satisfy 1 <= stride <= window");
  if (total_frames < window)
    throw std::invalid_argument("make_layout: total_frames must be >= window");
  if ((total_frames - window) % stride != 0)
    throw std::invalid_argument(
        "make_layout: total_frames - window not divisible by stride; pad or trim the sequence");
  ClipLayout lo;
  lo.window = window;
  lo.stride = stride;
  lo.clip_count = (total_frames - window) / stride + 1;
  lo.total_frames = total_frames;
  return lo;
}

/// Per-frame list of (clip index, local frame index) pairs: frame j is
/// covered by clip i at local offset j - stride*i. Clip order is ascending,
/// which fixes the merge summation order.
struct CoverageIndex {
  struct Entry {
    int clip;
    int local;
  };
  std::vector<std::vector<Entry>> per_frame;

  explicit CoverageIndex(const ClipLayout& lo) : per_frame(lo.total_frames) {
    for (int i = 0; i < lo.clip_count; ++i)
      for (int j = 0; j < lo.window; ++j)
        per_frame[lo.clip_start(i) + j].push_back({i, j});
  }
};

/// Merge weights W_i. Per-frame tables hold one scalar per local frame;
/// per-pixel tables hold window*frame_size entries (local frame major).
struct WeightScheme {
  enum class Kind { uniform, tent, custom };

  Kind kind = Kind::uniform;
  std::vector<std::vector<double>> tables;  // one table per clip

  static WeightScheme uniform(const ClipLayout& lo) {
    WeightScheme w;
    w.kind = Kind::uniform;
    w.tables.assign(lo.clip_count, std::vector<double>(lo.window, 1.0));
    return w;
  }

  /// Rises linearly from the clip edges to the center; edge weight stays > 0.
  static WeightScheme tent(const ClipLayout& lo) {
    WeightScheme w;
    w.kind = Kind::tent;
    const int m = lo.window;
    const double denom = (m - 1) / 2 + 1;
    std::vector<double> table(m);
    for (int j = 0; j < m; ++j) table[j] = (std::min(j, m - 1 - j) + 1) / denom;
    w.tables.assign(lo.clip_count, table);
    return w;
  }

  static WeightScheme custom(const ClipLayout& lo, std::vector<std::vector<double>> tables) {
    if (static_cast<int>(tables.size()) != lo.clip_count)
      throw std::invalid_argument("WeightScheme: need one table per clip");
    for (const auto& t : tables) {
      if (t.size() % static_cast<std::size_t>(lo.window) != 0)
        throw std::invalid_argument("WeightScheme: table length must be window or window*frame_size");
      for (double v : t)
        if (!(v >= 0.0)) throw std::invalid_argument("WeightScheme: weights must be nonnegative");
    }
    WeightScheme w;
    w.kind = Kind::custom;
    w.tables = std::move(tables);
    return w;
  }

  /// Weight of (clip, local frame, element).
  double at(int clip, int local, std::size_t elem, std::size_t frame_size) const {
    const auto& t = tables[clip];
    if (t.size() * 1 == 0) return 1.0;
    if (t.size() == static_cast<std::size_t>(tables_window(frame_size)))
      return t[local];  // per-frame scalar
    return t[local * frame_size + elem];  // per-pixel
  }

  bool per_pixel(std::size_t frame_size) const {
    return !tables.empty() && tables[0].size() != static_cast<std::size_t>(tables_window(frame_size));
  }

 private:
  int tables_window(std::size_t frame_size) const {
    // tables are sized window or window*frame_size; recover window
    if (tables.empty()) return 0;
    const std::size_t n = tables[0].size();
    return n % frame_size == 0 && n / frame_size > 0 && n != frame_size ? 0 : 0;
  }
};

namespace detail {
inline void check_sequence_layout(const LongSequence& v, const ClipLayout& lo, const char* op) {
  if (static_cast<int>(v.frame_count()) != lo.total_frames)
    throw std::invalid_argument(std::string(op) + ": sequence frame count does not match layout");
}
}  // namespace detail

/// F_i: copy out the N overlapping windows of v.
inline std::vector<Clip> split(const LongSequence& v, const ClipLayout& lo) {
  detail::check_sequence_layout(v, lo, "split");
  const std::size_t fs = v.frame_size();
  std::vector<Clip> clips;
  clips.reserve(lo.clip_count);
  std::vector<std::size_t> clip_shape{static_cast<std::size_t>(lo.window)};
  auto frame_dims = v.frame_shape();
  clip_shape.insert(clip_shape.end(), frame_dims.begin(), frame_dims.end());
  for (int i = 0; i < lo.clip_count; ++i) {
    Clip c;
    c.frames = Tensor(clip_shape);
    c.clip_index = i;
    const double* src = v.frame(lo.clip_start(i));
    std::copy(src, src + static_cast<std::size_t>(lo.window) * fs, c.frames.data.begin());
    clips.push_back(std::move(c));
  }
  return clips;
}

}  // namespace tcd
