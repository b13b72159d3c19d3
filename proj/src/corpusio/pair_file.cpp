#include "paratask/corpusio/pair_file.hpp"

#include <fstream>
#include <json.hpp>
#include <string>

#include "paratask/common/error.hpp"

namespace paratask::corpusio {

using ordered_json = nlohmann::ordered_json;

void write_pairs(std::ostream& out, std::span<const textcore::ParaphrasePair> pairs) {
  for (const auto& p : pairs) {
    ordered_json j;
    j["id"] = p.id;
    j["text_a"] = p.text_a;
    j["text_b"] = p.text_b;
    if (p.gold_task) j["task"] = std::string(textcore::task_name(*p.gold_task));
    j["dataset"] = p.dataset;
    out << j.dump() << '\n';
  }
}

void save_pairs(const std::filesystem::path& path, std::span<const textcore::ParaphrasePair> pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_pairs(out, pairs);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

std::vector<textcore::ParaphrasePair> read_pairs(std::istream& in) {
  std::vector<textcore::ParaphrasePair> pairs;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line == "\r") continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError, "pair file line " + std::to_string(n) + ": " + why);
    };
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
      throw fail(e.what());
    }
    textcore::ParaphrasePair p;
    try {
      p.id = j.at("id").get<std::string>();
      p.text_a = j.at("text_a").get<std::string>();
      p.text_b = j.at("text_b").get<std::string>();
      p.dataset = j.value("dataset", std::string{});
      if (auto it = j.find("task"); it != j.end() && !it->is_null()) {
        auto name = it->get<std::string>();
        p.gold_task = textcore::parse_task_label(name);
        if (!p.gold_task) throw fail("unknown task '" + name + "'");
      }
    } catch (const ordered_json::exception& e) {
      throw fail(e.what());
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<textcore::ParaphrasePair> load_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_pairs(in);
}

}  // namespace paratask::corpusio
