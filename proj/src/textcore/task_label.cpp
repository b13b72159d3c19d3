#include "paratask/textcore/task_label.hpp"

#include <cctype>
#include <string>

namespace paratask::textcore {

std::string_view task_name(TaskLabel label) noexcept {
  switch (label) {
    case TaskLabel::ImageRecaptioning: return "ImageRecaptioning";
    case TaskLabel::SentenceCompression: return "SentenceCompression";
    case TaskLabel::SentenceSimplification: return "SentenceSimplification";
    case TaskLabel::StyleTransfer: return "StyleTransfer";
    case TaskLabel::TextualEntailment: return "TextualEntailment";
    case TaskLabel::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view task_display_name(TaskLabel label) noexcept {
  switch (label) {
    case TaskLabel::ImageRecaptioning: return "Image Recaptioning";
    case TaskLabel::SentenceCompression: return "Sentence Compression";
    case TaskLabel::SentenceSimplification: return "Sentence Simplification";
    case TaskLabel::StyleTransfer: return "Style Transfer";
    case TaskLabel::TextualEntailment: return "Textual Entailment";
    case TaskLabel::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<TaskLabel> parse_task_label(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-' || c == '\t') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key.size() == 1 && key[0] >= '0' && key[0] <= '5')
    return static_cast<TaskLabel>(key[0] - '0');
  for (std::size_t c = 0; c <= kNumTasks; ++c) {
    auto label = static_cast<TaskLabel>(c);
    std::string name;
    for (char ch : task_name(label))
      name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (name == key) return label;
  }
  return std::nullopt;
}

}  // namespace paratask::textcore
