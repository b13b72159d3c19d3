#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace paratask::textcore {

// The five classifier classes. Codes are stable and their order is the
// tie-breaking order everywhere (lowest code wins). Unknown is only valid as an
// annotation answer.
enum class TaskLabel : std::uint8_t {
  ImageRecaptioning = 0,
  SentenceCompression = 1,
  SentenceSimplification = 2,
  StyleTransfer = 3,
  TextualEntailment = 4,
  Unknown = 5,
};

inline constexpr std::size_t kNumTasks = 5;

inline constexpr std::array<TaskLabel, kNumTasks> kAllTasks = {
    TaskLabel::ImageRecaptioning, TaskLabel::SentenceCompression,
    TaskLabel::SentenceSimplification, TaskLabel::StyleTransfer,
    TaskLabel::TextualEntailment};

constexpr std::size_t code(TaskLabel label) noexcept {
  return static_cast<std::size_t>(label);
}

// "SentenceCompression" style identifier.
std::string_view task_name(TaskLabel label) noexcept;
// "Sentence Compression" style heading.
std::string_view task_display_name(TaskLabel label) noexcept;

// Accepts identifiers, display names (case/space/underscore-insensitive),
// integer codes and "unknown". Returns nullopt for anything else.
std::optional<TaskLabel> parse_task_label(std::string_view text);

}  // namespace paratask::textcore
