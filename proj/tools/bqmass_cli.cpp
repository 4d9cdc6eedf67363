// bqmass: census, Euler factors and verification suites for positive-definite
// integral binary quadratic forms.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bqmass/euler.hpp"
#include "bqmass/global.hpp"
#include "bqmass/report.hpp"
#include "bqmass/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;
  std::ostringstream buf;

  int flush() {
    if (path.empty()) {
      std::cout << buf.str();
      return kExitOk;
    }
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return kExitUsage;
    }
    f << buf.str();
    return kExitOk;
  }
};

// "p:+1,q:-1" -> {p: +1, q: -1}
std::map<bqm::Int, int> parse_hasse(const std::string& text) {
  std::map<bqm::Int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad Hasse constraint '" + item + "'");
    const bqm::Int p = std::stoll(item.substr(0, colon));
    const std::string sign = item.substr(colon + 1);
    int c = 0;
    if (sign == "+1" || sign == "1") c = 1;
    if (sign == "-1") c = -1;
    if (c == 0 || !bqm::is_prime(p) || out.count(p)) throw std::invalid_argument("bad Hasse constraint '" + item + "'");
    out[p] = c;
  }
  if (out.empty()) throw std::invalid_argument("empty Hasse constraint list");
  return out;
}

bqm::CheckResult constrained_decomposition(const std::map<bqm::Int, int>& constraints, bqm::Int max_det) {
  const auto start = std::chrono::steady_clock::now();
  bqm::CheckResult r;
  r.name = "decomposition with Hasse constraints";
  bqm::Int checked = 0;
  for (bqm::Int S = 1; S <= max_det; ++S) {
    const auto rep = bqm::decomposition_check(S, constraints);
    ++checked;
    if (!rep.equal && r.passed) {
      r.passed = false;
      r.detail = "S=" + std::to_string(S) + " lhs=" + bqm::to_string(rep.lhs) + " rhs=" + bqm::to_string(rep.rhs);
    }
  }
  if (r.passed) r.detail = std::to_string(checked) + " determinants";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::ordered_json rationals(const std::vector<bqm::Rational>& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(bqm::to_string(x));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Masses, genera and local Euler factors of binary quadratic forms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  auto* classify = app.add_subcommand("classify", "Class and genus census of one determinant (or a range)");
  bqm::Int det = 0, det_to = 0, bound = 100000;
  std::string format = "json";
  classify->add_option("--det", det, "Hessian determinant S = 4ac - b^2")->required();
  classify->add_option("--to", det_to, "Last determinant of a range starting at --det");
  classify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  classify->add_option("--prime-bound", bound, "Terms of the L-value character sum");

  auto* euler = app.add_subcommand("euler", "A/B local Euler factor coefficients");
  bqm::Int p = 0, unit = 1;
  std::string which = "A", variant = "compact";
  int terms = 6;
  bool closed = false;
  euler->add_option("--p", p, "Prime")->required();
  euler->add_option("--unit", unit, "Unit class representative (odd residue at 2)")->required();
  euler->add_option("--which", which, "A or B")->check(CLI::IsMember({"A", "B"}));
  euler->add_option("--terms", terms, "Number of coefficients")->check(CLI::Range(1, 200));
  euler->add_flag("--closed-form", closed, "Also print the closed rational function and compare");
  euler->add_option("--variant", variant, "Closed form at 2: compact, summed or enumeration")
      ->check(CLI::IsMember({"compact", "summed", "enumeration"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  bqm::Int max_det = 2000, dmax = 500;
  double tol = 1e-3;
  int instances = 50;
  std::uint64_t seed = 20240611;
  verify->add_option("suite", suite, "decomposition | siegel | class-number | kappa | euler-closed-forms")
      ->required()
      ->check(CLI::IsMember({"decomposition", "siegel", "class-number", "kappa", "euler-closed-forms"}));
  verify->add_option("--max-det", max_det, "Largest determinant")->check(CLI::PositiveNumber);
  verify->add_option("--dmax", dmax, "Largest |D|")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--prime-bound", bound, "Terms of the L-value character sum")->check(CLI::Range(100, 100000000));
  std::string hasse;
  verify->add_option("--hasse", hasse, "Hasse constraints for decomposition, e.g. \"3:+1,5:-1\"");
  verify->add_option("--instances", instances, "Random constrained decomposition instances");
  verify->add_option("--seed", seed, "Seed for the constrained instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.path = out_path;
  try {
    if (*classify) {
      if (det < 1 || (det_to != 0 && det_to < det)) {
        std::cerr << "error: determinant range must be nonempty and positive\n";
        return kExitUsage;
      }
      const bqm::Int last = det_to == 0 ? det : det_to;
      if (format == "csv") {
        out.buf << bqm::csv_header() << "\n";
        for (bqm::Int S = det; S <= last; ++S) out.buf << bqm::to_csv(bqm::classify(S, bound)) << "\n";
      } else if (last == det) {
        out.buf << bqm::to_json(bqm::classify(det, bound)).dump(2) << "\n";
      } else {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["reports"] = nlohmann::ordered_json::array();
        for (bqm::Int S = det; S <= last; ++S) {
          auto r = bqm::to_json(bqm::classify(S, bound));
          r.erase("schema");
          j["reports"].push_back(r);
        }
        out.buf << j.dump(2) << "\n";
      }
      return out.flush();
    }

    if (*euler) {
      if (!bqm::is_prime(p)) {
        std::cerr << "error: --p must be prime\n";
        return kExitUsage;
      }
      if ((p == 2 && unit % 2 == 0) || (p != 2 && unit % p == 0)) {
        std::cerr << "error: --unit is not a unit at " << p << "\n";
        return kExitUsage;
      }
      const bqm::Which w = which == "A" ? bqm::Which::A : bqm::Which::B;
      const auto coeffs = bqm::euler_coeffs(p, unit, w, terms);
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["p"] = p;
      j["unit"] = p == 2 ? ((unit % 8) + 8) % 8 : unit;
      j["unit_class"] = bqm::LocalSquareClass::make(p, 0, unit).to_string();
      j["which"] = which;
      j["coefficients"] = rationals(coeffs);
      if (closed) {
        bqm::ClosedFormVariant v = bqm::ClosedFormVariant::Compact;
        if (variant == "summed") v = bqm::ClosedFormVariant::Summed;
        if (variant == "enumeration") v = bqm::ClosedFormVariant::Enumeration;
        const auto rf = bqm::closed_form(p, unit, w, v);
        const auto series = rf.series(terms);
        nlohmann::ordered_json c;
        c["variant"] = p == 2 ? variant : "closed";
        c["numerator"] = rationals(rf.num().coeffs());
        c["denominator"] = rationals(rf.den().coeffs());
        c["text"] = rf.to_string();
        c["series"] = rationals(series);
        c["matches_coefficients"] = series == coeffs;
        j["closed_form"] = c;
      }
      out.buf << j.dump(2) << "\n";
      return out.flush();
    }

    std::vector<bqm::CheckResult> results;
    if (suite == "decomposition") {
      if (hasse.empty()) {
        results.push_back(bqm::verify_decomposition(max_det));
        results.push_back(bqm::verify_decomposition_random(instances, seed, max_det));
      } else {
        results.push_back(constrained_decomposition(parse_hasse(hasse), max_det));
      }
    } else if (suite == "siegel") {
      results.push_back(bqm::verify_siegel(max_det));
    } else if (suite == "class-number") {
      results.push_back(bqm::verify_class_numbers(dmax, bound, tol));
      results.push_back(bqm::verify_kneser(dmax));
    } else if (suite == "kappa") {
      results.push_back(bqm::verify_kappa(max_det, bound, tol));
    } else {
      results.push_back(bqm::verify_odd_closed_forms({3, 5, 7, 11, 13}, 10));
      results.push_back(bqm::verify_table_2(12));
      results.push_back(bqm::verify_p2_closed_forms(12));
    }
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      out.buf << bqm::format_result(r) << "\n";
    }
    const int code = out.flush();
    if (code != kExitOk) return code;
    return ok ? kExitOk : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
