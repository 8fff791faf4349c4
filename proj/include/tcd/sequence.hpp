#pragma once

#include <cstddef>
#include <vector>

#include "tcd/tensor.hpp"

namespace tcd {

/// A long video: frames-first tensor [total_frames x frame_shape...].
struct LongSequence {
  Tensor frames;           // shape = {total_frames, frame dims...}
  double frame_rate = 0.0; // informational only

  std::size_t frame_count() const { return frames.shape.empty() ? 0 : frames.shape[0]; }
  std::size_t frame_size() const {
    return frame_count() ? frames.size() / frame_count() : 0;
  }
  double* frame(std::size_t j) { return frames.data.data() + j * frame_size(); }
  const double* frame(std::size_t j) const { return frames.data.data() + j * frame_size(); }

  std::vector<std::size_t> frame_shape() const {
    return {frames.shape.begin() + 1, frames.shape.end()};
  }

  static LongSequence zeros(std::size_t total_frames, const std::vector<std::size_t>& frame_shape) {
    std::vector<std::size_t> s{total_frames};
    s.insert(s.end(), frame_shape.begin(), frame_shape.end());
    return LongSequence{Tensor(s), 0.0};
  }
};

/// One windowed view of a LongSequence: M frames starting at stride*index.
struct Clip {
  Tensor frames;        // shape = {window, frame dims...}
  int clip_index = 0;   // i
  int time_step = 0;    // t, set by the samplers while denoising

  std::size_t frame_count() const { return frames.shape.empty() ? 0 : frames.shape[0]; }
  std::size_t frame_size() const {
    return frame_count() ? frames.size() / frame_count() : 0;
  }
  double* frame(std::size_t j) { return frames.data.data() + j * frame_size(); }
  const double* frame(std::size_t j) const { return frames.data.data() + j * frame_size(); }
};

}  // namespace tcd
