#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bqmass/euler.hpp"
#include "bqmass/global.hpp"

namespace bqm {

struct ClassifyRow {
  GenusReport census;
  int kappa = 1;
  bool has_rhs = false;
  double rhs_numeric = 0;
  double rel_err = 0;
};

ClassifyRow classify(Int S, Int bound);

// Doubles rounded to 12 significant digits.
double round12(double x);
std::string format12(double x);

nlohmann::ordered_json to_json(const ClassifyRow& row);
std::string csv_header();
std::string to_csv(const ClassifyRow& row);

}  // namespace bqm
