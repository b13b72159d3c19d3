#pragma once

#include <optional>
#include <string>

#include "paratask/textcore/task_label.hpp"

namespace paratask::textcore {

// Two texts, an optional gold task and the dataset they came from. Texts are
// stored normalized.
struct ParaphrasePair {
  std::string id;
  std::string text_a;
  std::string text_b;
  std::optional<TaskLabel> gold_task;
  std::string dataset;

  bool operator==(const ParaphrasePair&) const = default;
};

}  // namespace paratask::textcore
