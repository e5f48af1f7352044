#include "report.hpp"

#include "resum/errors.hpp"

#include <fstream>
#include <sstream>

namespace resum::cli {

std::string full(const Real& x)
{
    return to_string(x, current_precision().decimal_digits);
}

std::string short_num(const Real& x, int digits)
{
    return to_string(x, digits);
}

Json complex_json(const Cx& z)
{
    return Json{{"re", full(z.re)}, {"im", full(z.im)}};
}

namespace {

std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

void put_row(std::ostringstream& os, const std::vector<std::string>& row)
{
    for (size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << quote(row[i]);
    os << "\n";
}

}  // namespace

void CsvTable::add(std::vector<std::string> row)
{
    if (row.size() != header_.size())
        throw UsageError("csv row has " + std::to_string(row.size()) + " cells, header has " +
                         std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const
{
    std::ostringstream os;
    put_row(os, header_);
    for (const auto& r : rows_)
        put_row(os, r);
    return os.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ResourceError("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw ResourceError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace resum::cli
