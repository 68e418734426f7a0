#include "meetimp/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace meetimp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
}

struct RawPoints {
  std::vector<int> ids;
  std::map<int, int> index_of;
  std::vector<std::pair<int, int>> covers;  // as indices
  std::vector<std::string> colour_strings;  // empty string when absent
};

RawPoints read_points(const json& j, const std::string& origin) {
  RawPoints out;
  if (!j.contains("points") || !j["points"].is_array())
    throw std::runtime_error(origin + ": missing \"points\" array");
  for (const auto& pt : j["points"]) {
    int id = pt.at("id").get<int>();
    if (out.index_of.count(id))
      throw std::runtime_error(origin + ": duplicate point id " + std::to_string(id));
    out.index_of[id] = static_cast<int>(out.ids.size());
    out.ids.push_back(id);
    out.colour_strings.push_back(pt.contains("colour") ? pt["colour"].get<std::string>()
                                                       : std::string());
  }
  if (j.contains("covers")) {
    for (const auto& cv : j["covers"]) {
      if (!cv.is_array() || cv.size() != 2)
        throw std::runtime_error(origin + ": covers entries must be [lower_id, upper_id]");
      int lo = cv[0].get<int>(), hi = cv[1].get<int>();
      auto li = out.index_of.find(lo), hiit = out.index_of.find(hi);
      if (li == out.index_of.end() || hiit == out.index_of.end())
        throw std::runtime_error(origin + ": cover references unknown id");
      out.covers.emplace_back(li->second, hiit->second);
    }
  }
  return out;
}

}  // namespace

LoadedModel load_model(const std::string& json_text, const std::string& origin) {
  json j = parse_json(json_text, origin);
  if (!j.contains("n")) throw std::runtime_error(origin + ": missing \"n\"");
  int n = j["n"].get<int>();
  RawPoints raw = read_points(j, origin);
  Poset p;
  try {
    p = Poset::from_covers(raw.ids.size(), raw.covers);
  } catch (const std::exception& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  std::vector<Colour> colours(raw.ids.size());
  for (std::size_t i = 0; i < raw.ids.size(); ++i) {
    if (raw.colour_strings[i].empty())
      throw std::runtime_error(origin + ": point id " + std::to_string(raw.ids[i]) +
                               " has no colour");
    try {
      colours[i] = parse_colour(raw.colour_strings[i], n);
    } catch (const std::exception& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
  }
  LoadedModel out;
  try {
    out.model = ColouredModel::create(std::move(p), n, std::move(colours));
  } catch (const std::exception& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  out.ids = std::move(raw.ids);
  return out;
}

LoadedFrame load_frame(const std::string& json_text, const std::string& origin) {
  json j = parse_json(json_text, origin);
  RawPoints raw = read_points(j, origin);
  LoadedFrame out;
  try {
    out.poset = Poset::from_covers(raw.ids.size(), raw.covers);
  } catch (const std::exception& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  out.ids = std::move(raw.ids);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

LoadedModel load_model_file(const std::string& path) { return load_model(read_file(path), path); }
LoadedFrame load_frame_file(const std::string& path) { return load_frame(read_file(path), path); }

std::string model_to_json(const ColouredModel& m, const std::vector<int>* ids) {
  json points = json::array();
  auto id_of = [&](std::size_t i) {
    return ids ? (*ids)[i] : static_cast<int>(i);
  };
  for (std::size_t i = 0; i < m.size(); ++i)
    points.push_back({{"id", id_of(i)}, {"colour", colour_string(m.colours[i], m.n)}});
  json covers = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j : m.poset.covers_up(static_cast<int>(i)))
      covers.push_back({id_of(i), id_of(static_cast<std::size_t>(j))});
  json out = {{"n", m.n}, {"points", points}, {"covers", covers}};
  return out.dump(2) + "\n";
}

std::string model_to_dot(const ColouredModel& m, const std::vector<int>* ids) {
  auto id_of = [&](std::size_t i) {
    return ids ? (*ids)[i] : static_cast<int>(i);
  };
  std::ostringstream out;
  out << "digraph model {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    out << "  n" << id_of(i) << " [label=\"" << id_of(i) << ":"
        << colour_string(m.colours[i], m.n) << "\"];\n";
  int h = m.poset.height();
  for (int d = 1; d <= h; ++d) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.poset.depth(static_cast<int>(i)) == d) layer.push_back(i);
    if (layer.empty()) continue;
    out << "  { rank=same;";
    for (std::size_t i : layer) out << " n" << id_of(i) << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j : m.poset.covers_up(static_cast<int>(i)))
      out << "  n" << id_of(i) << " -> n" << id_of(static_cast<std::size_t>(j)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace meetimp
