#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "genviews/digest.hpp"
#include "genviews/image.hpp"

namespace genviews {

enum class ShapeClass { Circle, Square, Triangle };
std::string_view to_string(ShapeClass c);
ShapeClass parse_shape(std::string_view name);

enum class Split { Train, Val, Test };
std::string_view to_string(Split s);
Split parse_split(std::string_view name);

struct ShapeSample {
  std::string id;
  torch::Tensor image;  // [C, R, R], multiples of 1/255
  ShapeClass shape = ShapeClass::Circle;
  bool bright_foreground = false;
  bool large = false;
  BoundingBox bbox;
  Split split = Split::Train;
};

struct DatasetSpec {
  std::int64_t train = 2000;
  std::int64_t val = 500;
  std::int64_t test = 500;
  std::int64_t resolution = 32;
  std::int64_t channels = 3;
  std::uint64_t seed = 0;
  double position_jitter = 1.0;  // fraction of the free room the center may move through
  std::array<double, 2> small_size{0.30, 0.42};  // shape extent as a fraction of R
  std::array<double, 2> large_size{0.52, 0.66};
  double hue_jitter = 1.0;  // fraction of the hue circle

  void validate() const;
  Digest digest() const;
};

// Which label a classifier is trained on.
enum class LabelTask { Shape, Bright, Large };
std::string_view to_string(LabelTask t);
LabelTask parse_task(std::string_view name);
std::int64_t task_classes(LabelTask t);

struct Dataset {
  DatasetSpec spec;
  std::vector<ShapeSample> samples;

  std::vector<const ShapeSample*> split(Split s) const;
  static std::int64_t label_of(const ShapeSample& s, LabelTask t);
};

// Sample i of a split depends only on (seed, split, i); class = i mod 3.
ShapeSample generate_sample(const DatasetSpec& spec, Split split, std::int64_t index);
Dataset generate_dataset(const DatasetSpec& spec);

// images/<id>.ppm (or .pgm) plus manifest.csv with columns
// id,filename,shape_class,bright_foreground,large,bbox_x,bbox_y,bbox_w,bbox_h,split
void save_dataset(const Dataset& d, const std::filesystem::path& dir);
std::string manifest_csv(const Dataset& d);
// Throws MissingInputs naming every missing image and CorruptFile listing
// unreadable ones.
Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace genviews
