#include "pbphase/output.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace pbphase {

void OutputRecord::add_parameter(std::string key, std::string value)
{
    parameters.emplace_back(std::move(key), std::move(value));
}

void OutputRecord::add_parameter(std::string key, double value)
{
    parameters.emplace_back(std::move(key), format_number(value));
}

void OutputRecord::add_row(std::vector<double> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("row width " + std::to_string(row.size()) + " does not match " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::size_t OutputRecord::column(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw std::out_of_range("no column named " + name);
}

std::string format_number(double value)
{
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

void write_csv(std::ostream& out, const OutputRecord& record)
{
    out << "# schema_version=" << record.schema_version << '\n';
    out << "# command=" << record.command << '\n';
    for (const auto& [key, value] : record.parameters)
        out << "# " << key << '=' << value << '\n';
    for (std::size_t i = 0; i < record.columns.size(); ++i)
        out << (i ? "," : "") << record.columns[i];
    out << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const OutputRecord& record)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = record.schema_version;
    doc["command"] = record.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters)
        params[key] = value;
    doc["parameters"] = params;
    doc["columns"] = record.columns;
    doc["rows"] = record.rows;
    out << doc.dump(2) << '\n';
}

OutputRecord read_csv(std::istream& in)
{
    OutputRecord record;
    record.schema_version.clear();
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("malformed metadata line: " + line);
            std::string key = body.substr(0, eq);
            std::string value = body.substr(eq + 1);
            if (key == "schema_version")
                record.schema_version = value;
            else if (key == "command")
                record.command = value;
            else
                record.add_parameter(std::move(key), std::move(value));
            continue;
        }
        std::stringstream fields(line);
        std::string field;
        if (!have_header) {
            while (std::getline(fields, field, ','))
                record.columns.push_back(field);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(fields, field, ',')) {
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc() || ptr != field.data() + field.size())
                throw std::runtime_error("malformed number: " + field);
            row.push_back(value);
        }
        record.add_row(std::move(row));
    }
    if (!have_header)
        throw std::runtime_error("missing header row");
    return record;
}

} // namespace pbphase
