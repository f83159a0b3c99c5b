#pragma once

#include <stdexcept>
#include <string>

namespace dselim {

// Step/time budget exhausted before the computation finished.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A sequence window is too narrow for the requested evaluation.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial mentions a variable outside the active ranking.
struct unknown_variable_error : std::invalid_argument {
    explicit unknown_variable_error(const std::string& what) : std::invalid_argument(what) {}
};

// Problem-text syntax or semantic error, with source position.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

}  // namespace dselim
