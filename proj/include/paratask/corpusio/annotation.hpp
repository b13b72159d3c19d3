#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "paratask/evalkit/confusion.hpp"
#include "paratask/textcore/pair.hpp"

namespace paratask::corpusio {

// PerText: both texts must fit the window; bins cover the pair's summed
// length over [2*min, 2*max]. PairSum: the summed length must fit the window.
enum class LengthPolicy { PerText, PairSum };

std::string_view policy_name(LengthPolicy p) noexcept;
LengthPolicy parse_policy(std::string_view text);  // InvalidArgument

struct SheetOptions {
  std::size_t per_task = 100;
  std::size_t min_chars = 100;
  std::size_t max_chars = 180;
  std::size_t bins = 8;
  LengthPolicy policy = LengthPolicy::PerText;
  std::uint64_t seed = 0;
};

struct SheetRow {
  std::string blinded_id;
  std::string text_a;
  std::string text_b;
};

struct KeyRow {
  std::string blinded_id;
  textcore::TaskLabel task = textcore::TaskLabel::Unknown;
  std::string dataset;
  std::string pair_id;
};

struct AnnotationSheet {
  std::vector<SheetRow> rows;  // presentation order
  std::vector<KeyRow> key;     // same order as rows
  SheetOptions options;
  nlohmann::ordered_json constraints;  // options plus per-dataset bin counts
};

// Length in code points used for windowing and binning.
std::size_t pair_length(const textcore::ParaphrasePair& p, const SheetOptions& o);
bool in_window(const textcore::ParaphrasePair& p, const SheetOptions& o);
// Bin of an in-window pair, in [0, bins).
std::size_t length_bin(const textcore::ParaphrasePair& p, const SheetOptions& o);

// Per task, per_task pairs split evenly over the task's datasets (remainder to
// the first by name); within a dataset, the quota is split evenly over length
// bins. Throws InsufficientData naming the dataset and bin.
AnnotationSheet make_annotation_sheet(std::span<const textcore::ParaphrasePair> pairs,
                                      const SheetOptions& options);

// Columns blinded_id, text_a, text_b, annotation (empty).
void write_sheet_csv(std::ostream& out, const AnnotationSheet& sheet);
// Columns blinded_id, task, dataset, pair_id.
void write_key_csv(std::ostream& out, const AnnotationSheet& sheet);
std::vector<KeyRow> read_key_csv(std::istream& in);

struct FilledRow {
  std::string blinded_id;
  std::string annotation;
};
// Needs blinded_id and annotation columns; others are ignored.
std::vector<FilledRow> read_filled_sheet(std::istream& in);

struct SheetScore {
  evalkit::ConfusionMatrix matrix{true};
  std::vector<std::string> missing;  // key ids without an annotation
};

// Throws UnknownSheetId for ids absent from the key and ParseError for labels
// that are neither a task nor "unknown".
SheetScore score_annotation_sheet(std::span<const KeyRow> key, std::span<const FilledRow> filled);

}  // namespace paratask::corpusio
