#include "lll/series_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lll {

std::string format_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", s);
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void NormSeries::init(const std::vector<int>& k_list, const std::vector<double>& s_values) {
  moment_orders = k_list;
  s_list = s_values;
  moments.assign(moment_orders.size(), {});
  bracket.assign(moment_orders.size(), {});
  hs.assign(s_list.size(), {});
  hts.assign(s_list.size(), {});
}

void NormSeries::record(double time, const FockCoefficients& c, int tail_index,
                        const SobolevScale& scale) {
  t.push_back(time);
  l2.push_back(l2_norm(c));
  tail.push_back(tail_mass(c, tail_index));
  for (std::size_t i = 0; i < moment_orders.size(); ++i) {
    moments[i].push_back(radial_moment(c, moment_orders[i]));
    bracket[i].push_back(bracket_norm(c, moment_orders[i]));
  }
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    hs[i].push_back(h_sobolev_norm(c, s_list[i]));
    hts[i].push_back(htilde_norm(c, SobolevScale::make(scale.tau, s_list[i])));
  }
}

std::vector<std::string> NormSeries::column_names() const {
  std::vector<std::string> names = {"t", "l2", "tail"};
  for (int k : moment_orders) names.push_back("m" + std::to_string(k));
  for (int k : moment_orders) names.push_back("bracket_s" + std::to_string(k));
  for (double s : s_list) names.push_back("hs" + format_s(s));
  for (double s : s_list) names.push_back("hts" + format_s(s));
  return names;
}

const std::vector<double>* NormSeries::column(const std::string& name) const {
  if (name == "t") return &t;
  if (name == "l2") return &l2;
  if (name == "tail") return &tail;
  for (std::size_t i = 0; i < moment_orders.size(); ++i) {
    if (name == "m" + std::to_string(moment_orders[i])) return &moments[i];
    if (name == "bracket_s" + std::to_string(moment_orders[i])) return &bracket[i];
  }
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    if (name == "hs" + format_s(s_list[i])) return &hs[i];
    if (name == "hts" + format_s(s_list[i])) return &hts[i];
  }
  return nullptr;
}

void write_series_csv(std::ostream& os, const NormSeries& series,
                      const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << "\n";
  auto names = series.column_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    os << names[i] << (i + 1 < names.size() ? "," : "\n");
  std::vector<const std::vector<double>*> cols;
  for (const auto& n : names) cols.push_back(series.column(n));
  for (std::size_t r = 0; r < series.rows(); ++r)
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << format_double((*cols[i])[r]) << (i + 1 < cols.size() ? "," : "\n");
}

void write_matrix_csv(std::ostream& os, const Mat& m) {
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      os << r << "," << c << "," << format_double(m(r, c).real()) << ","
         << format_double(m(r, c).imag()) << "\n";
}

std::map<std::string, std::vector<double>> read_csv_columns(std::istream& is) {
  std::map<std::string, std::vector<double>> out;
  std::vector<std::string> names;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    if (names.empty()) {
      while (std::getline(ss, cell, ',')) names.push_back(cell);
      continue;
    }
    std::size_t i = 0;
    while (std::getline(ss, cell, ',')) {
      if (i >= names.size()) throw std::runtime_error("ragged CSV row");
      out[names[i++]].push_back(std::stod(cell));
    }
  }
  return out;
}

}  // namespace lll
