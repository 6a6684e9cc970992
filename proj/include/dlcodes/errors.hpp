#pragma once

#include <stdexcept>
#include <string>

namespace dlcodes {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (sequence literals, code files, rationals).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// A documented precondition of an operation does not hold.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A configured resource budget (vertex count, time) was exceeded.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

} // namespace dlcodes
