#ifndef BIDIXGEN_LEXICAL_ENTRY_HPP
#define BIDIXGEN_LEXICAL_ENTRY_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

#include "bidixgen/error.hpp"

namespace bidixgen {

namespace text {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline bool is_valid_utf8(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  int32_t needed = 0;
  u_strFromUTF8(nullptr, 0, &needed, s.data(), static_cast<int32_t>(s.size()), &status);
  return status == U_BUFFER_OVERFLOW_ERROR || status == U_STRING_NOT_TERMINATED_WARNING ||
         U_SUCCESS(status);
}

/// Unicode NFC. Returns nullopt for byte sequences that are not UTF-8.
inline std::optional<std::string> nfc(std::string_view s) {
  if (!is_valid_utf8(s)) return std::nullopt;
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::nullopt;
  const auto input = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  if (normalizer->isNormalized(input, status) && U_SUCCESS(status)) return std::string(s);
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = normalizer->normalize(input, status);
  if (U_FAILURE(status)) return std::nullopt;
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

/// Trimmed and NFC-normalized field; empty optional if the field is empty or not UTF-8.
inline std::optional<std::string> normalize_field(std::string_view raw) {
  const auto trimmed = trim(raw);
  if (trimmed.empty()) return std::nullopt;
  return nfc(trimmed);
}

/// Lowercases and validates a language code against [a-z]{2,3}.
inline std::optional<std::string> normalize_lang(std::string_view raw) {
  std::string code(trim(raw));
  std::transform(code.begin(), code.end(), code.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  if (code.size() < 2 || code.size() > 3) return std::nullopt;
  if (!std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::nullopt;
  }
  return code;
}

}  // namespace text

/// One vertex of the translation graph: a written form in a language with a
/// part-of-speech tag. Ordering is lexicographic over (rep, lang, pos) and
/// defines the dense vertex ids of a built graph.
struct LexicalEntry {
  std::string rep;
  std::string lang;
  std::string pos;

  friend auto operator<=>(const LexicalEntry&, const LexicalEntry&) = default;
  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

/// Builds a normalized entry; throws InvalidSpec if a field is empty, the
/// language code is malformed, or text is not valid UTF-8.
inline LexicalEntry make_entry(std::string_view rep, std::string_view lang, std::string_view pos) {
  auto r = text::normalize_field(rep);
  auto l = text::normalize_lang(lang);
  auto p = text::normalize_field(pos);
  if (!r) throw Error(ErrorKind::InvalidSpec, "empty or non-UTF-8 written form");
  if (!l) throw Error(ErrorKind::InvalidSpec, "invalid language code '" + std::string(lang) + "'");
  if (!p) throw Error(ErrorKind::InvalidSpec, "empty or non-UTF-8 part of speech");
  return LexicalEntry{std::move(*r), std::move(*l), std::move(*p)};
}

inline std::ostream& operator<<(std::ostream& os, const LexicalEntry& e) {
  return os << '(' << e.rep << ", " << e.lang << ", " << e.pos << ')';
}

using EntryPair = std::pair<LexicalEntry, LexicalEntry>;

}  // namespace bidixgen

#endif  // BIDIXGEN_LEXICAL_ENTRY_HPP
