#pragma once

#include <istream>
#include <string>
#include <vector>

#include "extropy/censored.hpp"

namespace extropy {

/// Contents of a sample file: either a complete column `x` or censored
/// columns `time,status` (status 1 = event observed, 0 = censored).
struct SampleFile {
    bool censored = false;
    std::vector<double> values;            // complete format
    std::vector<CensoredRecord> records;   // censored format

    /// Records view; complete data become uncensored records.
    std::vector<CensoredRecord> as_records() const;
    /// Values view; throws DataError when any record is censored.
    std::vector<double> as_values() const;
};

/// Reads a CSV with a mandatory header row. Malformed rows raise DataError
/// naming the 1-based line number.
SampleFile read_sample_csv(std::istream& in);
SampleFile read_sample_csv_file(const std::string& path);

}  // namespace extropy
