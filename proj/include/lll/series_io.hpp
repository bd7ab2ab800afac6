#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lll/series.hpp"

namespace lll {

/// CSV with a header row; floats at 17 significant digits. Lines
/// starting with '#' (seed annotations) precede the header.
void write_series_csv(std::ostream& os, const NormSeries& series,
                      const std::vector<std::string>& comments = {});

/// Complex matrix dump as row,col,re,im.
void write_matrix_csv(std::ostream& os, const Mat& m);

/// Read a series-style CSV back as name -> column, skipping '#' lines.
std::map<std::string, std::vector<double>> read_csv_columns(std::istream& is);

std::string format_double(double v);

}  // namespace lll
