#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "paratask/corpusio/descriptor.hpp"
#include "paratask/textcore/pair.hpp"

namespace paratask::corpusio {

struct DroppedRecord {
  std::size_t line = 0;
  std::string reason;
};

// records == kept + dropped + filtered.
struct IngestStats {
  std::size_t records = 0;
  std::size_t kept = 0;
  std::size_t dropped = 0;   // missing field, empty text or unknown task
  std::size_t filtered = 0;  // rejected by the descriptor's record filter
};

struct IngestResult {
  std::vector<textcore::ParaphrasePair> pairs;
  IngestStats stats;
  std::vector<DroppedRecord> dropped;
};

// Reads every file of the descriptor, applies the filter and field mapping and
// normalizes both texts. Pair ids are "<dataset>:<line>", where line numbers
// count physical lines across the descriptor's files in order. Throws IoError,
// ParseError (with the line number) or MappingError.
IngestResult ingest(const CorpusDescriptor& descriptor);

}  // namespace paratask::corpusio
