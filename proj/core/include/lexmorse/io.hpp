#pragma once

#include "lexmorse/labeling.hpp"
#include "lexmorse/poset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lexmorse {

// Poset files: `# comment`, blank lines, `cover <u> <v>`, and `element <u>`
// for elements named outside any cover (these are rejected as isolated).
// Errors are ParseError with "source:line: message".
struct PosetText {
    std::vector<CoverPair> covers;
    std::vector<std::string> elements;
};

PosetText parse_poset_text(std::string_view text, std::string_view source = "<input>");
Poset read_poset_file(const std::string& path);

// Label files: `# comment`, blank lines, `label <u> <v> <int>`.
EdgeLabeling parse_labels_text(std::string_view text, std::string_view source = "<input>");
EdgeLabeling read_labels_file(const std::string& path);

std::string read_text_file(const std::string& path);  // ParseError when unreadable

}  // namespace lexmorse
