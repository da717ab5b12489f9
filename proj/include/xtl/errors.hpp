#pragma once

#include <stdexcept>
#include <string>

namespace xtl {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed markup. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Well-formed XML that uses a construct outside the supported subset
// (PI, CDATA, DOCTYPE, foreign namespace declarations).
class UnsupportedConstruct : public ParseError {
public:
    using ParseError::ParseError;
};

// Hedge invariant broken at output time (duplicate attribute, bad name).
class SerializeError : public Error {
public:
    using Error::Error;
};

// Attribute slot outside an element content prefix, and similar shapes
// that normalization rejects.
class IllegalCombination : public Error {
public:
    using Error::Error;
};

class UnknownMacro : public Error {
public:
    explicit UnknownMacro(const std::string& name)
        : Error("unknown macro '" + name + "'"), name(name) {}

    std::string name;
};

// Bad path expression.
class QueryError : public Error {
public:
    using Error::Error;
};

// Macro expansion exceeded the configured depth.
class RecursionLimit : public Error {
public:
    using Error::Error;
};

// Strict-mode expansion hit a query with no result.
class UnsatisfiedQuery : public Error {
public:
    UnsatisfiedQuery(const std::string& query, const std::string& path)
        : Error("unsatisfied query '" + query + "' at " + path),
          query(query),
          path(path) {}

    std::string query;
    std::string path;
};

// Entry term has no XML surface form (e.g. a bare repetition).
class NotSerializable : public Error {
public:
    using Error::Error;
};

// Enumeration request outside the supported bounds.
class BoundViolation : public Error {
public:
    using Error::Error;
};

}  // namespace xtl
