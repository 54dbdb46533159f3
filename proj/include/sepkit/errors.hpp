#pragma once

#include <stdexcept>
#include <string>

namespace sepkit {

// Input text could not be parsed; line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Operation called outside its domain (adjacent pair, set not a separator, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A vertex or edge id does not belong to the graph in question.
class range_error : public domain_error {
public:
    using domain_error::domain_error;
};

// An exact search exceeded its configured budget or the instance is too large.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant failed: indicates a bug, not bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sepkit
