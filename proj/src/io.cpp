#include "extropy/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "extropy/error.hpp"
#include "extropy/spec.hpp"

namespace extropy {
namespace {

std::string strip(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(strip(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw DataError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::vector<CensoredRecord> SampleFile::as_records() const {
    if (censored) return records;
    std::vector<CensoredRecord> out;
    out.reserve(values.size());
    for (double v : values) out.push_back({v, true});
    return out;
}

std::vector<double> SampleFile::as_values() const {
    if (!censored) return values;
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        if (!r.event) throw DataError("complete-data estimator given censored records");
        out.push_back(r.time);
    }
    return out;
}

SampleFile read_sample_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (strip(line).empty()) continue;
        header = split(line);
        break;
    }
    if (header.empty()) throw DataError("missing header row");
    for (auto& h : header)
        std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
    auto col = [&](const char* name) -> std::ptrdiff_t {
        const auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : it - header.begin();
    };
    SampleFile out;
    const std::ptrdiff_t cx = col("x"), ct = col("time"), cs = col("status");
    if (ct >= 0 && cs >= 0) {
        out.censored = true;
    } else if (cx < 0) {
        fail(lineno, "header must contain column 'x' or columns 'time,status'");
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (strip(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != header.size())
            fail(lineno, "expected " + std::to_string(header.size()) + " fields, found " + std::to_string(fields.size()));
        auto value = [&](std::ptrdiff_t c) {
            double v;
            try {
                v = parse_real(fields[static_cast<std::size_t>(c)]);
            } catch (const ParseError&) {
                fail(lineno, "'" + fields[static_cast<std::size_t>(c)] + "' is not a number");
            }
            if (v < 0.0) fail(lineno, "values must be >= 0");
            return v;
        };
        if (out.censored) {
            const std::string& s = fields[static_cast<std::size_t>(cs)];
            if (s != "0" && s != "1") fail(lineno, "status must be 0 or 1, found '" + s + "'");
            out.records.push_back({value(ct), s == "1"});
        } else {
            out.values.push_back(value(cx));
        }
    }
    return out;
}

SampleFile read_sample_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_sample_csv(in);
}

}  // namespace extropy
