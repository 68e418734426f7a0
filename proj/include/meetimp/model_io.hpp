#pragma once

#include "meetimp/model.hpp"
#include "meetimp/poset.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace meetimp {

// JSON model format:
//   {"n": int,
//    "points": [{"id": int, "colour": "bitstring, p1 leftmost"}, ...],
//    "covers": [[lower_id, upper_id], ...]}
// The loader closes the covers transitively and validates every model
// invariant. Ids may be arbitrary distinct integers; they are kept for
// output. Frames are the same format with "n" and colours omitted.

struct LoadedModel {
  ColouredModel model;
  std::vector<int> ids;  // point index -> external id
};

struct LoadedFrame {
  Poset poset;
  std::vector<int> ids;
};

LoadedModel load_model(const std::string& json_text, const std::string& origin = "<input>");
LoadedFrame load_frame(const std::string& json_text, const std::string& origin = "<input>");
LoadedModel load_model_file(const std::string& path);
LoadedFrame load_frame_file(const std::string& path);

std::string model_to_json(const ColouredModel& m, const std::vector<int>* ids = nullptr);

// One node per point labelled "id:colour", edges = covers, drawn upward.
// Points of equal depth share a rank.
std::string model_to_dot(const ColouredModel& m, const std::vector<int>* ids = nullptr);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace meetimp
