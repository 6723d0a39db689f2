#pragma once

#include <torch/torch.h>

#include "genviews/image.hpp"

namespace genviews {

inline constexpr float kMissingPixelFill = 0.5f;

// Integer translation that centres an object, plus the validity mask of the
// translated image ([1, H, W], 0 exactly on pixels introduced by the shift).
struct AlignmentTransform {
  int dx = 0;
  int dy = 0;
  torch::Tensor mask;
};

struct AlignedImage {
  torch::Tensor image;
  AlignmentTransform transform;
};

// Shift that moves the bbox centre onto the image centre (rounded to whole
// pixels, halves rounded up).
AlignmentTransform alignment_for(const BoundingBox& bbox, int width, int height);

// Moves the bbox centre to the image centre; introduced pixels are filled
// with mid-gray and masked out.
AlignedImage align_and_mask(const torch::Tensor& image, const BoundingBox& bbox);

// Undoes the translation of an aligned image (pixels that left the frame are
// filled with mid-gray).
torch::Tensor unalign(const torch::Tensor& aligned, const AlignmentTransform& t);

}  // namespace genviews
