#include "paratask/cli/manifest.hpp"

#include <fstream>

#include "paratask/common/error.hpp"
#include "paratask/common/hashing.hpp"

namespace paratask::cli {

namespace fs = std::filesystem;

OutputDir::OutputDir(fs::path dir, bool force) : dir_(std::move(dir)), force_(force) {
  if (dir_.empty()) throw Error(ErrorCode::InvalidArgument, "--out is required");
  if (fs::exists(dir_) && !fs::is_directory(dir_))
    throw Error(ErrorCode::IoError, dir_.string() + " exists and is not a directory");
}

fs::path OutputDir::claim(const std::string& name) {
  auto path = dir_ / name;
  if (!force_ && fs::exists(path))
    throw Error(ErrorCode::IoError, "refusing to overwrite " + path.string() + " (pass --force)");
  fs::create_directories(dir_);
  return path;
}

Manifest::Manifest(std::string command) {
  doc_["tool"] = "paratask";
  doc_["tool_version"] = kToolVersion;
  doc_["command"] = std::move(command);
  doc_["config"] = nlohmann::ordered_json::object();
  doc_["versions"] = nlohmann::ordered_json::object();
  doc_["inputs"] = nlohmann::ordered_json::array();
  doc_["outputs"] = nlohmann::ordered_json::array();
}

void Manifest::add_input(const fs::path& path) {
  doc_["inputs"].push_back({{"path", path.string()}, {"sha256", sha256_file_hex(path)}});
}

void Manifest::add_output(const fs::path& path) {
  doc_["outputs"].push_back(
      {{"file", path.filename().string()}, {"sha256", sha256_file_hex(path)}});
}

void Manifest::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << doc_.dump(2) << '\n';
}

nlohmann::ordered_json replication_check(double micro_f1, const std::string& provider_id,
                                         std::size_t labeled_pairs, std::size_t datasets) {
  const bool remote = provider_id.rfind("remote:", 0) == 0;
  const bool applicable = remote && labeled_pairs == kProtocolPairs && datasets == kProtocolDatasets;
  const bool within = micro_f1 >= kReplicationLow && micro_f1 <= kReplicationHigh;
  nlohmann::ordered_json r;
  r["reported_micro_f1"] = kReportedMicroF1;
  r["band"] = {kReplicationLow, kReplicationHigh};
  r["conditions"] = {{"remote_embedder", remote},
                     {"labeled_pairs", labeled_pairs},
                     {"required_pairs", kProtocolPairs},
                     {"datasets", datasets},
                     {"required_datasets", kProtocolDatasets}};
  r["applicable"] = applicable;
  r["micro_f1"] = micro_f1;
  r["within_band"] = within;
  r["deviation"] = applicable && !within;
  return r;
}

}  // namespace paratask::cli
