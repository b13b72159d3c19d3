#include "paratask/corpusio/annotation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "paratask/common/csv.hpp"
#include "paratask/common/error.hpp"
#include "paratask/corpusio/sampling.hpp"
#include "paratask/forest/rng.hpp"
#include "paratask/textcore/text.hpp"

namespace paratask::corpusio {
namespace {

using textcore::ParaphrasePair;
using textcore::TaskLabel;

std::pair<std::size_t, std::size_t> bin_range(const SheetOptions& o) {
  if (o.policy == LengthPolicy::PerText) return {2 * o.min_chars, 2 * o.max_chars};
  return {o.min_chars, o.max_chars};
}

void shuffle(std::vector<std::size_t>& v, forest::Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::string blinded_id(std::size_t i, std::size_t total) {
  std::string digits = std::to_string(i + 1);
  const std::size_t width = std::max<std::size_t>(4, std::to_string(total).size());
  return "S" + std::string(width - digits.size(), '0') + digits;
}

std::map<std::string, std::size_t> header_index(const csv::Row& header) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < header.size(); ++i) idx[header[i]] = i;
  return idx;
}

std::size_t require_column(const std::map<std::string, std::size_t>& idx, const std::string& name) {
  auto it = idx.find(name);
  if (it == idx.end()) throw Error(ErrorCode::ParseError, "sheet is missing column '" + name + "'");
  return it->second;
}

}  // namespace

std::string_view policy_name(LengthPolicy p) noexcept {
  return p == LengthPolicy::PerText ? "per-text" : "pair-sum";
}

LengthPolicy parse_policy(std::string_view text) {
  if (text == "per-text") return LengthPolicy::PerText;
  if (text == "pair-sum") return LengthPolicy::PairSum;
  throw Error(ErrorCode::InvalidArgument,
              "unknown length policy '" + std::string(text) + "' (per-text|pair-sum)");
}

std::size_t pair_length(const ParaphrasePair& p, const SheetOptions&) {
  return textcore::char_length(p.text_a) + textcore::char_length(p.text_b);
}

bool in_window(const ParaphrasePair& p, const SheetOptions& o) {
  if (o.policy == LengthPolicy::PerText) {
    for (const auto* t : {&p.text_a, &p.text_b}) {
      const auto n = textcore::char_length(*t);
      if (n < o.min_chars || n > o.max_chars) return false;
    }
    return true;
  }
  const auto n = pair_length(p, o);
  return n >= o.min_chars && n <= o.max_chars;
}

std::size_t length_bin(const ParaphrasePair& p, const SheetOptions& o) {
  const auto [lo, hi] = bin_range(o);
  const auto n = std::clamp(pair_length(p, o), lo, hi);
  return (n - lo) * o.bins / (hi - lo + 1);
}

AnnotationSheet make_annotation_sheet(std::span<const ParaphrasePair> pairs,
                                      const SheetOptions& options) {
  if (options.bins == 0 || options.min_chars > options.max_chars)
    throw Error(ErrorCode::InvalidArgument, "need bins >= 1 and min_chars <= max_chars");

  // task -> dataset -> bin -> pair indices (in-window, labeled, unique ids)
  using Bins = std::vector<std::vector<std::size_t>>;
  std::array<std::map<std::string, Bins>, textcore::kNumTasks> pools;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (!p.gold_task || *p.gold_task == TaskLabel::Unknown) continue;
    if (!seen.insert(p.id).second) continue;
    auto& bins = pools[textcore::code(*p.gold_task)][p.dataset];
    bins.resize(options.bins);
    if (in_window(p, options)) bins[length_bin(p, options)].push_back(i);
  }

  const auto [lo, hi] = bin_range(options);
  AnnotationSheet sheet;
  sheet.options = options;
  auto& c = sheet.constraints;
  c["per_task"] = options.per_task;
  c["min_chars"] = options.min_chars;
  c["max_chars"] = options.max_chars;
  c["length_policy"] = policy_name(options.policy);
  c["bins"] = options.bins;
  c["binned_length_range"] = {lo, hi};
  c["seed"] = options.seed;
  c["datasets"] = nlohmann::ordered_json::object();

  std::vector<std::size_t> chosen;
  for (auto task : textcore::kAllTasks) {
    auto& by_dataset = pools[textcore::code(task)];
    if (by_dataset.empty() && options.per_task > 0) {
      throw Error(ErrorCode::InsufficientData,
                  std::string(textcore::task_name(task)) + ": no labeled pairs");
    }
    // Equal share per dataset; no redistribution, so every dataset of a task
    // contributes the same number of pairs (up to the remainder).
    const std::size_t nd = by_dataset.size();
    std::size_t d = 0;
    for (auto& [name, bins] : by_dataset) {
      const std::size_t quota = options.per_task / nd + (d < options.per_task % nd ? 1 : 0);
      ++d;
      // Which bins receive the remainder is drawn by seed.
      std::vector<std::size_t> order(options.bins);
      for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
      forest::Rng bin_rng(forest::derive_seed(options.seed, "sheet-bins/" + name));
      shuffle(order, bin_rng);
      std::vector<std::size_t> need(options.bins, quota / options.bins);
      for (std::size_t r = 0; r < quota % options.bins; ++r) ++need[order[r]];

      forest::Rng rng(forest::derive_seed(options.seed, "sheet/" + name));
      std::vector<std::size_t> counts;
      for (std::size_t b = 0; b < options.bins; ++b) {
        auto& pool = bins[b];
        if (pool.size() < need[b]) {
          const std::size_t b_lo = lo + (b * (hi - lo + 1) + options.bins - 1) / options.bins;
          const std::size_t b_hi = lo + ((b + 1) * (hi - lo + 1) + options.bins - 1) / options.bins - 1;
          throw Error(ErrorCode::InsufficientData,
                      "dataset '" + name + "' length bin " + std::to_string(b) + " [" +
                          std::to_string(b_lo) + ", " + std::to_string(b_hi) + "] has " +
                          std::to_string(pool.size()) + " in-window pairs, needs " +
                          std::to_string(need[b]) +
                          "; relax with fewer --bins, a wider length window, a smaller "
                          "--per-task or --length-policy pair-sum");
        }
        for (std::size_t i = 0; i < need[b]; ++i) {
          std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
          chosen.push_back(pool[i]);
        }
        counts.push_back(need[b]);
      }
      c["datasets"][name] = {{"task", textcore::task_name(task)}, {"drawn", quota}, {"per_bin", counts}};
    }
  }

  std::vector<std::size_t> order(chosen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  forest::Rng order_rng(forest::derive_seed(options.seed, "sheet-order"));
  shuffle(order, order_rng);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& p = pairs[chosen[order[i]]];
    auto id = blinded_id(i, order.size());
    sheet.rows.push_back({id, p.text_a, p.text_b});
    sheet.key.push_back({id, *p.gold_task, p.dataset, p.id});
  }
  c["rows"] = sheet.rows.size();
  return sheet;
}

void write_sheet_csv(std::ostream& out, const AnnotationSheet& sheet) {
  csv::write_row(out, {"blinded_id", "text_a", "text_b", "annotation"});
  for (const auto& r : sheet.rows) csv::write_row(out, {r.blinded_id, r.text_a, r.text_b, ""});
}

void write_key_csv(std::ostream& out, const AnnotationSheet& sheet) {
  csv::write_row(out, {"blinded_id", "task", "dataset", "pair_id"});
  for (const auto& k : sheet.key)
    csv::write_row(out, {k.blinded_id, std::string(textcore::task_name(k.task)), k.dataset, k.pair_id});
}

std::vector<KeyRow> read_key_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw Error(ErrorCode::ParseError, "empty key file");
  const auto idx = header_index(*header);
  const auto c_id = require_column(idx, "blinded_id");
  const auto c_task = require_column(idx, "task");
  const auto c_ds = require_column(idx, "dataset");
  const auto c_pair = idx.count("pair_id") ? idx.at("pair_id") : SIZE_MAX;
  std::vector<KeyRow> key;
  while (auto row = reader.next()) {
    if (row->size() == 1 && row->front().empty()) continue;
    auto field = [&](std::size_t c) { return c < row->size() ? (*row)[c] : std::string{}; };
    auto task = textcore::parse_task_label(field(c_task));
    if (!task || *task == TaskLabel::Unknown) {
      throw Error(ErrorCode::ParseError, "key line " + std::to_string(reader.record_line()) +
                                             ": bad task '" + field(c_task) + "'");
    }
    key.push_back({field(c_id), *task, field(c_ds), field(c_pair)});
  }
  return key;
}

std::vector<FilledRow> read_filled_sheet(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw Error(ErrorCode::ParseError, "empty sheet file");
  const auto idx = header_index(*header);
  const auto c_id = require_column(idx, "blinded_id");
  const auto c_ann = require_column(idx, "annotation");
  std::vector<FilledRow> rows;
  while (auto row = reader.next()) {
    if (row->size() == 1 && row->front().empty()) continue;
    auto field = [&](std::size_t c) { return c < row->size() ? (*row)[c] : std::string{}; };
    rows.push_back({field(c_id), field(c_ann)});
  }
  return rows;
}

SheetScore score_annotation_sheet(std::span<const KeyRow> key, std::span<const FilledRow> filled) {
  std::unordered_map<std::string, const KeyRow*> by_id;
  for (const auto& k : key) by_id[k.blinded_id] = &k;

  SheetScore score;
  std::unordered_set<std::string> answered;
  for (const auto& f : filled) {
    auto it = by_id.find(f.blinded_id);
    if (it == by_id.end()) throw Error(ErrorCode::UnknownSheetId, "sheet id '" + f.blinded_id + "' is not in the key");
    std::string_view ann = f.annotation;
    while (!ann.empty() && (ann.front() == ' ' || ann.front() == '\t')) ann.remove_prefix(1);
    while (!ann.empty() && (ann.back() == ' ' || ann.back() == '\t' || ann.back() == '\r')) ann.remove_suffix(1);
    if (ann.empty()) continue;
    auto label = textcore::parse_task_label(ann);
    if (!label) {
      throw Error(ErrorCode::ParseError,
                  "sheet id '" + f.blinded_id + "': unrecognized annotation '" + std::string(ann) + "'");
    }
    score.matrix.add(it->second->task, *label);
    answered.insert(f.blinded_id);
  }
  for (const auto& k : key)
    if (!answered.count(k.blinded_id)) score.missing.push_back(k.blinded_id);
  return score;
}

}  // namespace paratask::corpusio
