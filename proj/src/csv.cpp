#include "duckswarm/csv.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace duckswarm {

std::string format_number(double v) { return fmt::format("{:.17e}", v); }

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::trunc), width_(header.size()) {
    if (!out_) {
        throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
    }
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) {
        throw std::logic_error(fmt::format("{}: row has {} fields, header has {}", path_.string(),
                                           fields.size(), width_));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].find(',') != std::string::npos) {
            throw std::logic_error(fmt::format("{}: field '{}' contains a comma", path_.string(),
                                               fields[i]));
        }
        if (i > 0) {
            out_ << ',';
        }
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.close();
    if (!out_) {
        throw std::runtime_error(fmt::format("error writing {}", path_.string()));
    }
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw std::runtime_error(fmt::format("missing column '{}'", name));
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot open {}", path.string()));
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(fmt::format("{} is empty", path.string()));
    }
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (fields.size() != table.header.size()) {
            throw std::runtime_error(fmt::format("{}: ragged row '{}'", path.string(), line));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

double parse_double(std::string_view text) {
    // from_chars for double is available in libstdc++ 11.
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error(fmt::format("not a number: '{}'", text));
    }
    return v;
}

std::uint64_t parse_uint(std::string_view text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error(fmt::format("not an unsigned integer: '{}'", text));
    }
    return v;
}

}  // namespace duckswarm
