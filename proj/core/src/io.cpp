#include "lexmorse/io.hpp"

#include "lexmorse/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lexmorse {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Calls fn(line_number, tokens) for each non-comment, non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
    int number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto t = tokens(line);
        if (!t.empty()) fn(number, t);
    }
}

Error parse_error(std::string_view source, int line, const std::string& msg) {
    return Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

PosetText parse_poset_text(std::string_view text, std::string_view source) {
    PosetText out;
    for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
        if (t[0] == "cover") {
            if (t.size() != 3) throw parse_error(source, line, "expected `cover <u> <v>`");
            out.covers.push_back({std::string(t[1]), std::string(t[2])});
        } else if (t[0] == "element") {
            if (t.size() != 2) throw parse_error(source, line, "expected `element <u>`");
            out.elements.emplace_back(t[1]);
        } else {
            throw parse_error(source, line, "unknown directive `" + std::string(t[0]) + "`");
        }
    });
    return out;
}

Poset read_poset_file(const std::string& path) {
    auto parsed = parse_poset_text(read_text_file(path), path);
    return build_poset(parsed.covers, parsed.elements);
}

EdgeLabeling parse_labels_text(std::string_view text, std::string_view source) {
    EdgeLabeling out;
    for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
        if (t[0] != "label") throw parse_error(source, line, "unknown directive `" + std::string(t[0]) + "`");
        if (t.size() != 4) throw parse_error(source, line, "expected `label <u> <v> <int>`");
        long long value = 0;
        auto [end, ec] = std::from_chars(t[3].data(), t[3].data() + t[3].size(), value);
        if (ec != std::errc{} || end != t[3].data() + t[3].size())
            throw parse_error(source, line, "bad integer `" + std::string(t[3]) + "`");
        if (out.get(t[1], t[2])) throw parse_error(source, line, "duplicate label for this cover");
        out.set(std::string(t[1]), std::string(t[2]), value);
    });
    return out;
}

EdgeLabeling read_labels_file(const std::string& path) { return parse_labels_text(read_text_file(path), path); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace lexmorse
