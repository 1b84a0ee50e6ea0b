#include "phylotoric/yaml.hpp"

#include <cctype>
#include <cstdlib>

namespace phylotoric {

long long Yaml::as_int() const {
    if (!is_scalar()) throw ParseError("yaml node is not a scalar");
    std::size_t pos = 0;
    long long v = std::stoll(scalar_, &pos);
    if (pos != scalar_.size()) throw ParseError("yaml scalar '" + scalar_ + "' is not an integer");
    return v;
}

Yaml& Yaml::add(const std::string& key, Yaml value) {
    map_.emplace_back(key, std::move(value));
    return *this;
}

Yaml& Yaml::push(Yaml value) {
    list_.push_back(std::move(value));
    return *this;
}

const Yaml* Yaml::find(const std::string& key) const {
    for (const auto& [k, v] : map_)
        if (k == key) return &v;
    return nullptr;
}

const Yaml& Yaml::at(const std::string& key) const {
    const Yaml* y = find(key);
    if (!y) throw ParseError("missing yaml key '" + key + "'");
    return *y;
}

namespace {

bool plain_scalar_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
              c == '/'))
            return false;
    if (s == "true" || s == "false" || s == "null") return false;
    return true;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

void Yaml::emit_node(std::string& out, int indent, bool list_item) const {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    switch (type_) {
        case Type::Scalar:
            out += (quoted_ && !plain_scalar_ok(scalar_)) ? quote(scalar_)
                   : quoted_                              ? scalar_
                                                          : scalar_;
            out += "\n";
            break;
        case Type::Map: {
            if (map_.empty()) {
                out += "{}\n";
                break;
            }
            bool first = true;
            for (const auto& [k, v] : map_) {
                if (!(first && list_item)) out += pad;
                first = false;
                out += k + ":";
                if (v.type_ == Type::Scalar) {
                    out += " ";
                    v.emit_node(out, 0, false);
                } else if ((v.type_ == Type::Map && v.map_.empty()) ||
                           (v.type_ == Type::List && v.list_.empty())) {
                    out += " ";
                    v.emit_node(out, 0, false);
                } else {
                    out += "\n";
                    v.emit_node(out, indent + 1, false);
                }
            }
            break;
        }
        case Type::List: {
            if (list_.empty()) {
                out += "[]\n";
                break;
            }
            for (const auto& v : list_) {
                out += pad + "- ";
                if (v.type_ == Type::Scalar)
                    v.emit_node(out, 0, false);
                else
                    v.emit_node(out, indent + 1, true);
            }
            break;
        }
    }
}

std::string Yaml::emit() const {
    std::string out;
    emit_node(out, 0, false);
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Line {
    int indent;     // in spaces
    bool list_item; // starts with "- "
    std::string content;
    std::size_t offset;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string raw = text.substr(pos, end - pos);
        std::size_t start = pos;
        pos = end + 1;

        std::size_t i = 0;
        while (i < raw.size() && raw[i] == ' ') ++i;
        std::string body = raw.substr(i);
        if (body.empty() || body[0] == '#') continue;
        bool item = body.size() >= 2 && body[0] == '-' && body[1] == ' ';
        if (item) body = body.substr(2);
        lines.push_back({static_cast<int>(i), item, body, start + i});
    }
    return lines;
}

struct YamlParser {
    const std::vector<Line>& lines;
    std::size_t at = 0;

    Yaml parse_block(int indent);
    Yaml parse_value(const std::string& text, std::size_t offset, int indent);
    Yaml parse_scalar(const std::string& text, std::size_t offset) const;
};

Yaml YamlParser::parse_scalar(const std::string& text, std::size_t offset) const {
    if (text == "{}") return Yaml::map();
    if (text == "[]") return Yaml::list();
    if (!text.empty() && text.front() == '"') {
        std::string out;
        std::size_t i = 1;
        for (; i < text.size() && text[i] != '"'; ++i) {
            if (text[i] == '\\' && i + 1 < text.size()) ++i;
            out += text[i];
        }
        if (i >= text.size()) throw ParseError("unterminated quoted string", offset);
        if (i + 1 != text.size()) throw ParseError("trailing content after string", offset + i);
        return Yaml::scalar(out, true);
    }
    return Yaml::scalar(text, false);
}

Yaml YamlParser::parse_value(const std::string& text, std::size_t offset, int indent) {
    if (!text.empty()) return parse_scalar(text, offset);
    // value continues as a nested block
    if (at >= lines.size() || lines[at].indent <= indent)
        throw ParseError("expected an indented block", offset);
    return parse_block(lines[at].indent);
}

Yaml YamlParser::parse_block(int indent) {
    if (lines[at].list_item) {
        Yaml out = Yaml::list();
        while (at < lines.size() && lines[at].indent == indent && lines[at].list_item) {
            Line line = lines[at];
            // a list item is either a scalar or an inline-start map
            auto colon = line.content.find(':');
            bool looks_like_map = colon != std::string::npos &&
                                  line.content.find('"') > colon; // key before any quote
            if (!looks_like_map) {
                ++at;
                out.push(parse_scalar(line.content, line.offset));
                continue;
            }
            // rebuild the first "k: v" as a virtual line at deeper indent
            Yaml m = Yaml::map();
            std::string key = line.content.substr(0, colon);
            std::string rest = line.content.substr(colon + 1);
            while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            ++at;
            if (rest.empty())
                m.add(key, parse_value(rest, line.offset, indent + 1));
            else
                m.add(key, parse_scalar(rest, line.offset));
            while (at < lines.size() && lines[at].indent == indent + 2 && !lines[at].list_item) {
                Line kv = lines[at];
                auto c2 = kv.content.find(':');
                if (c2 == std::string::npos) throw ParseError("expected 'key: value'", kv.offset);
                std::string k2 = kv.content.substr(0, c2);
                std::string r2 = kv.content.substr(c2 + 1);
                while (!r2.empty() && r2.front() == ' ') r2.erase(r2.begin());
                ++at;
                m.add(k2, parse_value(r2, kv.offset, kv.indent));
            }
            out.push(std::move(m));
        }
        return out;
    }

    Yaml out = Yaml::map();
    while (at < lines.size() && lines[at].indent == indent && !lines[at].list_item) {
        Line line = lines[at];
        auto colon = line.content.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line.offset);
        std::string key = line.content.substr(0, colon);
        std::string rest = line.content.substr(colon + 1);
        while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
        ++at;
        out.add(key, parse_value(rest, line.offset, line.indent));
    }
    return out;
}

} // namespace

Yaml Yaml::parse(const std::string& text) {
    std::vector<Line> lines = split_lines(text);
    if (lines.empty()) return Yaml::map();
    YamlParser p{lines};
    Yaml out = p.parse_block(lines[0].indent);
    if (p.at != lines.size()) throw ParseError("unparsed yaml content", lines[p.at].offset);
    return out;
}

} // namespace phylotoric
