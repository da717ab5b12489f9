#pragma once

#include <string>
#include <vector>

namespace xtl {

struct Attribute {
    std::string name;
    std::string value;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct XmlNode;

// An ordered forest of nodes. Concatenation is plain vector append; the
// empty hedge is its identity.
using Hedge = std::vector<XmlNode>;

// One node of the document model: an element with ordered attributes and
// a child hedge, or a text run. Text runs are only ever created
// explicitly; the parser never fabricates empty ones.
struct XmlNode {
    enum class Kind { Element, Text };

    Kind kind = Kind::Element;
    std::string name;                   // element only
    std::vector<Attribute> attributes;  // element only
    Hedge children;                     // element only
    std::string value;                  // text only

    static XmlNode element(std::string name, std::vector<Attribute> attributes = {},
                           Hedge children = {});
    static XmlNode text(std::string value);

    bool is_element() const { return kind == Kind::Element; }
    bool is_text() const { return kind == Kind::Text; }

    // nullptr when absent
    const Attribute* find_attribute(const std::string& name) const;
};

// Attribute order is presentation only: equality treats attribute lists
// as sets. Everything else (names, child order, text) is exact.
bool operator==(const XmlNode& a, const XmlNode& b);
inline bool operator!=(const XmlNode& a, const XmlNode& b) { return !(a == b); }
bool hedge_equal(const Hedge& a, const Hedge& b);

// Concatenated character data: a text run's value, or the values of all
// text descendants of an element in document order.
std::string string_value(const XmlNode& node);
std::string string_value(const Hedge& hedge);

}  // namespace xtl
