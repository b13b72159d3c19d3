#include "paratask/textcore/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "paratask/common/error.hpp"

namespace paratask::textcore {

std::string normalize(std::string_view text) {
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));

  // Whitespace handling runs before NFC: composition never yields whitespace
  // or control characters, so the result is a fixed point.
  icu::UnicodeString cleaned;
  bool pending_space = false;
  for (int32_t i = 0; i < src.length();) {
    UChar32 c = src.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !cleaned.isEmpty();
      continue;
    }
    if (u_charType(c) == U_CONTROL_CHAR) continue;
    if (pending_space) {
      cleaned.append(static_cast<UChar>(' '));
      pending_space = false;
    }
    cleaned.append(c);
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCode::IoError, "ICU NFC data unavailable");
  icu::UnicodeString composed = nfc->normalize(cleaned, status);
  if (U_FAILURE(status)) throw Error(ErrorCode::IoError, "ICU NFC normalization failed");

  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::size_t char_length(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string to_lower(std::string_view utf8) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace paratask::textcore
