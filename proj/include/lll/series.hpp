#pragma once

#include <string>
#include <vector>

#include "lll/fock.hpp"

namespace lll {

/// Time-stamped norm records of a run. Column groups are sized by the
/// requested moment orders / s values; `hs` holds H^s norms, `hts` the
/// (H+1)^rho scale norms, `bracket` the exact <z>^k weighted norms.
struct NormSeries {
  std::vector<int> moment_orders;
  std::vector<double> s_list;

  std::vector<double> t, l2, tail;
  std::vector<std::vector<double>> moments;  // one column per moment order
  std::vector<std::vector<double>> bracket;  // one column per (integer) order
  std::vector<std::vector<double>> hs;       // one column per s
  std::vector<std::vector<double>> hts;      // one column per s

  void init(const std::vector<int>& k_list, const std::vector<double>& s_values);

  /// Compute every configured column from a state and append a row.
  void record(double time, const FockCoefficients& c, int tail_index,
              const SobolevScale& scale);

  std::size_t rows() const { return t.size(); }

  /// Column lookup by CSV name (t, l2, tail, m{k}, bracket_s{k}, hs{s}, hts{s}).
  const std::vector<double>* column(const std::string& name) const;
  std::vector<std::string> column_names() const;
};

std::string format_s(double s);

}  // namespace lll
