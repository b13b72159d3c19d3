#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace paratask::textcore {

enum class EquivalenceClass { SemanticallyEquivalent, SemanticallySimilar };

std::string_view equivalence_class_name(EquivalenceClass c) noexcept;

struct TaxonomyEntry {
  std::string name;
  EquivalenceClass equivalence = EquivalenceClass::SemanticallyEquivalent;
  std::string parent;  // empty for top-level entries
  std::string definition;
  std::vector<std::string> citations;

  bool operator==(const TaxonomyEntry&) const = default;
};

// Read-only registry of paraphrasing tasks. Entries keep file order; the
// hierarchy is recorded through `parent`, and the entry count is whatever the
// data file lists.
class TaxonomyRegistry {
 public:
  // The registry compiled into the library from data/taxonomy.tsv.
  static const TaxonomyRegistry& bundled();

  static TaxonomyRegistry parse(std::string_view tsv);
  static TaxonomyRegistry load(const std::filesystem::path& path);

  int version() const noexcept { return version_; }
  const std::vector<TaxonomyEntry>& entries() const noexcept { return entries_; }

  // Exact name match: zero or one entry.
  std::vector<TaxonomyEntry> lookup(std::string_view name) const;
  std::vector<TaxonomyEntry> filter(EquivalenceClass c) const;
  std::vector<TaxonomyEntry> children(std::string_view parent) const;

 private:
  int version_ = 0;
  std::vector<TaxonomyEntry> entries_;
};

}  // namespace paratask::textcore
