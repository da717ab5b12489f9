#pragma once

#include <string>
#include <string_view>

#include "xtl/hedge.hpp"

namespace xtl {

struct ParseOptions {
    // Keep whitespace-only text runs between elements instead of
    // dropping them.
    bool preserve_space = false;
};

// Parses one document (single root element) from UTF-8 text. Comments
// are discarded. Throws ParseError / UnsupportedConstruct.
Hedge parse_xml(std::string_view input, const ParseOptions& options = {});

// Emits UTF-8 markup. '&', '<', '>' are escaped in text, quotes
// additionally in attribute values. Attribute order is preserved.
std::string serialize_xml(const XmlNode& node);
std::string serialize_xml(const Hedge& hedge);

}  // namespace xtl
