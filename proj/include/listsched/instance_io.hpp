#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "listsched/model.hpp"

namespace listsched {

// Line-oriented instance text:
//
//     m=3
//     1
//     3/2
//     1 + 1 r2
//
// The first line is the machine count; each following line is one job size
// in Time syntax. Jobs get ids 1..n in line order. Blank lines and lines
// starting with '#' are skipped. write_instance() output parses back to the
// same instance and re-serializes byte-for-byte.
class InstanceParseError : public std::runtime_error {
public:
    InstanceParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

std::string write_instance(const Instance& instance);
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::filesystem::path& path);

} // namespace listsched
