#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace duckswarm {

/// Round-trip scientific notation used for every numeric CSV cell.
std::string format_number(double v);

/// Plain comma-separated writer. Fields never contain commas or quotes in
/// this project, so no quoting is done; a field with a comma is rejected.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& fields);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t width_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; throws std::runtime_error if missing.
    std::size_t column(std::string_view name) const;
};

/// Reads a file written by CsvWriter. Throws std::runtime_error on I/O
/// failure or ragged rows.
CsvTable read_csv(const std::filesystem::path& path);

double parse_double(std::string_view text);
std::uint64_t parse_uint(std::string_view text);

}  // namespace duckswarm
