#pragma once

#include <cstdint>
#include <filesystem>

#include <torch/torch.h>

namespace genviews {

// Images are float32 CPU tensors shaped [channels, height, width] with values
// in [0, 1]; batches add a leading dimension.

// Axis-aligned pixel box: columns [x, x + w), rows [y, y + h).
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool empty() const { return w <= 0 || h <= 0; }
  bool contains(int px, int py) const { return px >= x && px < x + w && py >= y && py < y + h; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Translates the image content by (dx, dy) pixels; uncovered pixels get `fill`.
torch::Tensor shift_image(const torch::Tensor& image, int dx, int dy, float fill);
// Same translation, uncovered pixels copy the nearest edge pixel.
torch::Tensor shift_image_replicate(const torch::Tensor& image, int dx, int dy);

// Rounds every value to the nearest multiple of 1/255.
torch::Tensor quantize_8bit(const torch::Tensor& image);

// Binary PPM (3 channels) or PGM (1 channel), 8 bits per sample.
void write_pnm(const std::filesystem::path& path, const torch::Tensor& image);
torch::Tensor read_pnm(const std::filesystem::path& path);

// Tiles a batch [n, C, H, W] into a grid image for inspection.
torch::Tensor tile_images(const torch::Tensor& batch, int columns);

}  // namespace genviews
