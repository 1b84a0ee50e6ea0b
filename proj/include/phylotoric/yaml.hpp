#ifndef PHYLOTORIC_YAML_HPP
#define PHYLOTORIC_YAML_HPP

#include <string>
#include <utility>
#include <vector>

#include "phylotoric/errors.hpp"

namespace phylotoric {

// Small YAML document model covering what the database emits and reads:
// block maps with ordered keys, block lists, integer and string scalars,
// full-line comments.  Strings are double-quoted on output whenever they are
// not plain identifiers, so emission is deterministic and parse(emit(x)) == x.
class Yaml {
public:
    enum class Type { Scalar, Map, List };

    static Yaml scalar(std::string value, bool quoted) {
        Yaml y;
        y.type_ = Type::Scalar;
        y.scalar_ = std::move(value);
        y.quoted_ = quoted;
        return y;
    }
    static Yaml integer(long long v) { return scalar(std::to_string(v), false); }
    static Yaml number(const std::string& digits) { return scalar(digits, false); }
    static Yaml string(std::string s) { return scalar(std::move(s), true); }
    static Yaml map() {
        Yaml y;
        y.type_ = Type::Map;
        return y;
    }
    static Yaml list() {
        Yaml y;
        y.type_ = Type::List;
        return y;
    }

    Type type() const { return type_; }
    bool is_scalar() const { return type_ == Type::Scalar; }
    bool is_map() const { return type_ == Type::Map; }
    bool is_list() const { return type_ == Type::List; }

    const std::string& str() const { return scalar_; }
    long long as_int() const;

    Yaml& add(const std::string& key, Yaml value); // map entry, insertion order kept
    Yaml& push(Yaml value);                        // list element

    const Yaml* find(const std::string& key) const;
    const Yaml& at(const std::string& key) const;
    const std::vector<std::pair<std::string, Yaml>>& entries() const { return map_; }
    const std::vector<Yaml>& items() const { return list_; }

    std::string emit() const;
    static Yaml parse(const std::string& text);

private:
    void emit_node(std::string& out, int indent, bool list_item) const;

    Type type_ = Type::Scalar;
    std::string scalar_;
    bool quoted_ = false;
    std::vector<std::pair<std::string, Yaml>> map_;
    std::vector<Yaml> list_;
};

} // namespace phylotoric

#endif
