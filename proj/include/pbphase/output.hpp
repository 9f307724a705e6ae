#ifndef PBPHASE_OUTPUT_HPP
#define PBPHASE_OUTPUT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pbphase {

inline constexpr const char* kSchemaVersion = "1";

/// A numeric table plus the parameters that produced it.
struct OutputRecord
{
    std::string schema_version = kSchemaVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters; ///< insertion ordered
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_parameter(std::string key, std::string value);
    void add_parameter(std::string key, double value);
    void add_row(std::vector<double> row);

    /// Index of a named column; throws std::out_of_range when absent.
    std::size_t column(const std::string& name) const;
};

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double value);

/// `#`-prefixed metadata lines, a header row, then one line per row; LF endings.
void write_csv(std::ostream& out, const OutputRecord& record);
void write_json(std::ostream& out, const OutputRecord& record);

/// Reads what write_csv produced. Throws std::runtime_error on malformed input.
OutputRecord read_csv(std::istream& in);

} // namespace pbphase

#endif // PBPHASE_OUTPUT_HPP
