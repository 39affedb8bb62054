#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace replab {

// An example does not match the attribute schema a tree or dataset declares.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its stated contract (counters not filled,
// counters not zero, missing training labels, trace/tree mismatch, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed tree document or dataset file. The message carries the location
// (JSON path or line number) of the offending element.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A pruning selection names a leaf or is not an antichain.
class InvalidSelection : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused to run; carries the number of prunings it
// would have had to visit (saturated at 2^64-1).
class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(const std::string& what, std::uint64_t count)
        : std::runtime_error(what), pruning_count(count) {}
    std::uint64_t pruning_count;
};

} // namespace replab
