#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "shufflesym/cycles.hpp"
#include "shufflesym/point_process.hpp"
#include "shufflesym/rsk.hpp"
#include "shufflesym/shuffle.hpp"
#include "shufflesym/symmetric_functions.hpp"

// Text formats. Rationals are "p/q" strings everywhere; readers throw
// ParseError on malformed input.
namespace shufflesym::io {

// {"alpha": ["1/2", ...], "beta": [...], "gamma": "0"}
std::string params_to_json(const ShuffleParams& p);
ShuffleParams params_from_json(std::string_view text);
/// Inline JSON if the argument starts with '{', otherwise a file path.
ShuffleParams load_params(const std::string& inline_or_path);

// permutation,probability
void write_distribution_csv(std::ostream& out, const ExactDistribution& d);
ExactDistribution read_distribution_csv(std::istream& in);

// partition,probability  with partitions written "3+1+1"
void write_cycle_csv(std::ostream& out, const CycleTypeDistribution& d);
CycleTypeDistribution read_cycle_csv(std::istream& in);

// [[1,3,6],[2,5],[4],[7]]
std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(std::string_view text);

// {"continuum": [[x, y], ...], "lines": [[x, level], ...]}
std::string points_to_json(const PointConfig& c);
PointConfig points_from_json(std::string_view text);

// shape,count,frequency
void write_shape_counts_csv(std::ostream& out, const std::map<Partition, long long>& counts);
std::map<Partition, long long> read_shape_counts_csv(std::istream& in);

}  // namespace shufflesym::io
