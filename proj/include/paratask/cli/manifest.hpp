#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace paratask::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Claims output files inside one directory. Every name is checked before the
// command writes anything, so a refused run leaves the directory untouched.
class OutputDir {
 public:
  OutputDir(std::filesystem::path dir, bool force);

  // Throws IoError if the file exists and force is off.
  std::filesystem::path claim(const std::string& name);
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  bool force_;
};

// Reproducibility record written next to every command's outputs. Holds no
// timestamps or host details so reruns produce identical manifests.
class Manifest {
 public:
  explicit Manifest(std::string command);

  nlohmann::ordered_json& config() { return doc_["config"]; }
  nlohmann::ordered_json& versions() { return doc_["versions"]; }
  nlohmann::ordered_json& section(const std::string& key) { return doc_[key]; }

  void add_input(const std::filesystem::path& path);
  // Hashes the file as written; call after the output is closed.
  void add_output(const std::filesystem::path& path);

  const nlohmann::ordered_json& json() const { return doc_; }
  void save(const std::filesystem::path& path) const;

 private:
  nlohmann::ordered_json doc_;
};

// Reported micro-F1 for the full ten-corpus protocol and the band within
// which a rerun counts as a replication.
inline constexpr double kReportedMicroF1 = 0.82;
inline constexpr double kReplicationLow = 0.70;
inline constexpr double kReplicationHigh = 0.90;
inline constexpr std::size_t kProtocolPairs = 50000;
inline constexpr std::size_t kProtocolDatasets = 10;

// The "replication" manifest section of an evaluation. The check applies only
// to the full protocol with a remote embedder; "deviation" is set when it
// applies and micro_f1 falls outside the band.
nlohmann::ordered_json replication_check(double micro_f1, const std::string& provider_id,
                                         std::size_t labeled_pairs, std::size_t datasets);

}  // namespace paratask::cli
