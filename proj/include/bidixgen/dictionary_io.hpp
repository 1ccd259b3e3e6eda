#ifndef BIDIXGEN_DICTIONARY_IO_HPP
#define BIDIXGEN_DICTIONARY_IO_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bidixgen/error.hpp"
#include "bidixgen/lexical_entry.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

/// One raw bilingual dictionary on disk and the languages of its two sides.
struct DictionarySpec {
  std::filesystem::path path;
  std::string lang_a;
  std::string lang_b;

  friend auto operator<=>(const DictionarySpec&, const DictionarySpec&) = default;
  friend bool operator==(const DictionarySpec&, const DictionarySpec&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

inline bool is_skippable(std::string_view line) {
  const auto t = text::trim(line);
  return t.empty() || t.front() == '#';
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

/// Validates and normalizes the language codes of a spec.
inline DictionarySpec normalize_spec(const DictionarySpec& spec) {
  auto a = text::normalize_lang(spec.lang_a);
  auto b = text::normalize_lang(spec.lang_b);
  if (!a || !b) {
    throw Error(ErrorKind::InvalidSpec,
                "bad language code in spec for " + spec.path.string() + ": '" + spec.lang_a + "', '" + spec.lang_b + "'");
  }
  if (*a == *b) throw Error(ErrorKind::InvalidSpec, "dictionary " + spec.path.string() + " has identical languages " + *a);
  return DictionarySpec{spec.path, *a, *b};
}

/// Reads 4-column TSV rows (rep_a, pos_a, rep_b, pos_b) from a stream.
/// Rows are returned sorted and deduplicated.
inline std::vector<EntryPair> parse_dictionary_stream(std::istream& in, const DictionarySpec& raw_spec) {
  const DictionarySpec spec = normalize_spec(raw_spec);
  const std::string where = spec.path.string();
  std::vector<EntryPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = detail::strip_cr(line);
    if (detail::is_skippable(view)) continue;
    const auto fields = detail::split_tabs(view);
    if (fields.size() != 4) {
      throw MalformedLineError(where, line_no, "expected 4 tab-separated columns, got " + std::to_string(fields.size()));
    }
    std::optional<std::string> norm[4];
    for (int i = 0; i < 4; ++i) {
      if (text::trim(fields[i]).empty()) throw MalformedLineError(where, line_no, "empty field in column " + std::to_string(i + 1));
      norm[i] = text::normalize_field(fields[i]);
      if (!norm[i]) throw MalformedLineError(where, line_no, "invalid UTF-8 in column " + std::to_string(i + 1));
    }
    pairs.emplace_back(LexicalEntry{std::move(*norm[0]), spec.lang_a, std::move(*norm[1])},
                       LexicalEntry{std::move(*norm[2]), spec.lang_b, std::move(*norm[3])});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

inline std::vector<EntryPair> parse_dictionary(const DictionarySpec& spec) {
  const DictionarySpec checked = normalize_spec(spec);
  std::ifstream in(checked.path);
  if (!in) throw Error(ErrorKind::MissingFile, "cannot open dictionary " + checked.path.string());
  return parse_dictionary_stream(in, checked);
}

/// Reads `lang_a<TAB>lang_b<TAB>path` lines. Relative paths resolve against
/// the manifest's directory.
inline std::vector<DictionarySpec> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorKind::MissingFile, "cannot open manifest " + manifest.string());
  const auto base = manifest.parent_path();
  std::vector<DictionarySpec> specs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = detail::strip_cr(line);
    if (detail::is_skippable(view)) continue;
    const auto fields = detail::split_tabs(view);
    if (fields.size() != 3) {
      throw MalformedLineError(manifest.string(), line_no, "expected lang_a, lang_b, path");
    }
    std::filesystem::path path(std::string(text::trim(fields[2])));
    if (path.empty()) throw MalformedLineError(manifest.string(), line_no, "empty path");
    if (path.is_relative()) path = base / path;
    specs.push_back(normalize_spec(DictionarySpec{path, std::string(fields[0]), std::string(fields[1])}));
  }
  return specs;
}

inline void write_manifest(std::ostream& out, std::span<const DictionarySpec> specs) {
  for (const auto& s : specs) out << s.lang_a << '\t' << s.lang_b << '\t' << s.path.generic_string() << '\n';
}

/// Writes pairs in the 4-column dictionary format, with an optional leading comment.
inline void write_dictionary(std::ostream& out, std::span<const EntryPair> pairs, std::string_view header = {}) {
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& [a, b] : pairs) out << a.rep << '\t' << a.pos << '\t' << b.rep << '\t' << b.pos << '\n';
}

/// Parses every dictionary and assembles one graph.
inline TranslationGraph load_graph(std::span<const DictionarySpec> specs) {
  std::vector<EntryPair> all;
  for (const auto& spec : specs) {
    auto pairs = parse_dictionary(spec);
    all.insert(all.end(), std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.end()));
  }
  return build_graph(all);
}

}  // namespace bidixgen

#endif  // BIDIXGEN_DICTIONARY_IO_HPP
