#include "listsched/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace listsched {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

std::string write_instance(const Instance& instance) {
    std::string out = "m=" + std::to_string(instance.machines()) + "\n";
    for (const Job& job : instance.jobs()) out += job.size.to_string() + "\n";
    return out;
}

Instance parse_instance(std::string_view text) {
    std::optional<std::size_t> machines;
    std::size_t machines_line = 0;
    std::vector<Time> sizes;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (!machines) {
            if (!line.starts_with("m="))
                throw InstanceParseError(line_no, "expected 'm=<machines>', got '" + std::string(line) + "'");
            std::string_view digits = line.substr(2);
            std::size_t m = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
                throw InstanceParseError(line_no, "malformed machine count '" + std::string(digits) + "'");
            if (m < 2) throw InstanceParseError(line_no, "machine count must be at least 2");
            machines = m;
            machines_line = line_no;
            continue;
        }

        try {
            Time size = Time::parse(line);
            if (size.is_zero()) throw std::invalid_argument("job size must be positive");
            sizes.push_back(size);
        } catch (const std::exception& e) {
            throw InstanceParseError(line_no, e.what());
        }
    }
    if (!machines) throw InstanceParseError(line_no, "missing 'm=<machines>' header");
    if (sizes.empty()) throw InstanceParseError(machines_line, "instance has no jobs");
    return Instance::from_sizes(sizes, *machines);
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

} // namespace listsched
