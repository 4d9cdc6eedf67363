#include "bqmass/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "bqmass/localgenus.hpp"

namespace bqm {

ClassifyRow classify(Int S, Int bound) {
  ClassifyRow row;
  row.census = genus_census(S);
  row.kappa = kappa(S);
  if (!row.census.classes.empty()) {
    const auto m = total_mass_numeric(S, bound);
    row.has_rhs = true;
    row.rhs_numeric = m.rhs;
    row.rel_err = m.rel_err;
  }
  return row;
}

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::ordered_json to_json(const ClassifyRow& row) {
  const auto& c = row.census;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["det"] = c.det;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& f : c.classes) classes.push_back({f.a(), f.b(), f.c()});
  j["classes"] = classes;
  j["aut"] = c.aut;
  j["aut_proper"] = c.aut_proper;
  auto genera = nlohmann::ordered_json::array();
  auto symbols = nlohmann::ordered_json::array();
  for (const auto& g : c.genera) {
    genera.push_back(g.classes);
    auto s = nlohmann::ordered_json::array();
    for (const auto& sym : g.symbols) s.push_back(sym.to_string());
    symbols.push_back(s);
  }
  j["genera"] = genera;
  j["genus_symbols"] = symbols;
  j["mass_exact"] = to_string(c.total_mass);
  j["kappa"] = row.kappa;
  if (row.has_rhs) {
    j["rhs_numeric"] = round12(row.rhs_numeric);
    j["rel_err"] = round12(row.rel_err);
  } else {
    j["rhs_numeric"] = nullptr;
    j["rel_err"] = nullptr;
  }
  auto imp = nlohmann::ordered_json::array();
  for (const auto& f : c.imprimitive) imp.push_back({f.a(), f.b(), f.c()});
  j["imprimitive"] = imp;
  return j;
}

std::string csv_header() { return "det,classes,aut,aut_proper,genera,mass_exact,kappa,rhs_numeric,rel_err"; }

std::string to_csv(const ClassifyRow& row) {
  const auto& c = row.census;
  std::string classes, aut, autp, genera;
  for (size_t i = 0; i < c.classes.size(); ++i) {
    const auto& f = c.classes[i];
    classes += (i ? ";" : "") + std::to_string(f.a()) + " " + std::to_string(f.b()) + " " + std::to_string(f.c());
    aut += (i ? ";" : "") + std::to_string(c.aut[i]);
    autp += (i ? ";" : "") + std::to_string(c.aut_proper[i]);
  }
  for (size_t g = 0; g < c.genera.size(); ++g) {
    if (g) genera += ";";
    for (size_t k = 0; k < c.genera[g].classes.size(); ++k)
      genera += (k ? " " : "") + std::to_string(c.genera[g].classes[k]);
  }
  std::string out = std::to_string(c.det) + ",\"" + classes + "\",\"" + aut + "\",\"" + autp + "\",\"" + genera +
                    "\"," + to_string(c.total_mass) + "," + std::to_string(row.kappa) + ",";
  out += row.has_rhs ? format12(row.rhs_numeric) + "," + format12(row.rel_err) : ",";
  return out;
}

}  // namespace bqm
