#include "bqmass/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "bqmass/euler.hpp"
#include "bqmass/forms.hpp"
#include "bqmass/global.hpp"
#include "bqmass/localgenus.hpp"
#include "bqmass/mass.hpp"

namespace bqm {

namespace {

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string join(const std::vector<Rational>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

Rational pow2(int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= 2;
  if (e < 0) r = 1 / r;
  r.canonicalize();
  return r;
}

// Tabulated local data at 2 for binary forms, one row per (nu, unit class).
struct Row2 {
  bool exists = false;
  int plus = 0, minus = 0;
  HalfPower pmass;
  Rational gamma_beta_inv;  // gamma_2(u) * beta^-1 per genus
  Rational A, B;
};

Row2 table_row_2(int nu, int u) {
  const Rational g = gamma_factor(u, 2);
  const bool one = (u % 4 == 1);
  Row2 r;
  if (nu == 1 || (nu == 0 && one)) return r;
  r.exists = true;
  if (nu == 0) {
    r.plus = 0;
    r.minus = 1;
    r.pmass = {Rational(1, 4) / g, 2, 0};
    r.gamma_beta_inv = 2;
    r.A = 1;
    r.B = -1;
    return r;
  }
  if (nu == 2) {
    r.plus = 1;
    r.minus = one ? 1 : 0;
    r.pmass = {one ? Rational(1, 8) : Rational(1, 4), 2, 0};
    r.gamma_beta_inv = (one ? Rational(1, 4) : Rational(1, 2)) * g;
    r.A = g / 4;
    r.B = one ? Rational(0) : g / 4;
  } else if (nu == 3) {
    r.plus = 1;
    r.minus = 1;
    r.pmass = {1, 2, -5};
    r.gamma_beta_inv = g / 8;
    r.A = g / 8;
    r.B = 0;
  } else if (nu == 4) {
    r.plus = one ? 1 : 2;
    r.minus = one ? 1 : 0;
    r.pmass = {Rational(1, 4), 2, 0};
    r.gamma_beta_inv = g / 16;
    r.A = g / 16;
    r.B = one ? Rational(0) : g / 16;
  } else {
    const bool square_type = (nu % 2 == 0) && !one;
    r.plus = square_type ? 4 : 2;
    r.minus = square_type ? 0 : 2;
    r.pmass = {1, 2, nu - 10};
    r.gamma_beta_inv = pow2(-nu - 1) * g;
    r.A = pow2(-nu) * g;
    r.B = square_type ? pow2(-nu) * g : Rational(0);
  }
  r.A.canonicalize();
  r.B.canonicalize();
  r.gamma_beta_inv.canonicalize();
  return r;
}

// Global certificate for a 2-adic row: a primitive positive form of the row's
// class whose c_2 is forced by the product formula over its odd places.
struct Certificate {
  bool found = false;
  QuadForm form;
  int forced_c2 = 0;
  int computed_c2 = 0;
};

Certificate certify_row_2(int nu, int u) {
  Certificate cert;
  for (Int S = 1; S <= 4000; ++S) {
    if (valuation(S, 2) != nu || LocalSquareClass::of(S, 2).unit != u) continue;
    const auto classes = enumerate_primitive_classes(S);
    if (classes.empty()) continue;
    cert.found = true;
    cert.form = classes.front();
    int c = hasse_invariant(cert.form, kInfinity);
    for (auto& [p, e] : factorize(S))
      if (p != 2) c *= hasse_invariant(cert.form, p);
    cert.forced_c2 = c;
    cert.computed_c2 = hasse_invariant(cert.form, 2);
    return cert;
  }
  return cert;
}

}  // namespace

CheckResult verify_odd_closed_forms(const std::vector<Int>& primes, int numax) {
  return timed("odd-p closed forms", [&](CheckResult& r) {
    size_t compared = 0;
    for (Int p : primes) {
      for (Int u : {Int{1}, least_nonresidue(p)}) {
        for (Which w : {Which::A, Which::B}) {
          const auto series = closed_form(p, u, w).series(numax + 1);
          const auto pipe = euler_coeffs(p, u, w, numax + 1);
          compared += series.size();
          if (series != pipe) {
            r.passed = false;
            r.detail += "p=" + std::to_string(p) + " u=" + std::to_string(u) + (w == Which::A ? " A" : " B") +
                        " series " + join(series) + " vs pipeline " + join(pipe) + "; ";
          }
        }
      }
    }
    if (r.passed) r.detail = std::to_string(compared) + " coefficients equal";
  });
}

CheckResult verify_table_2(int numax) {
  return timed("p=2 table fidelity", [&](CheckResult& r) {
    size_t entries = 0, certified = 0;
    for (int nu = 0; nu <= numax; ++nu) {
      for (int u : {1, 3, 5, 7}) {
        const Row2 ref = table_row_2(nu, u);
        const auto genera = enumerate_local_genera(2, LocalSquareClass::make(2, nu, u));
        int plus = 0, minus = 0;
        for (const auto& g : genera) (g.symbol.hasse == 1 ? plus : minus)++;
        const std::string where = "nu=" + std::to_string(nu) + " u=" + std::to_string(u);
        ++entries;
        if (!ref.exists) {
          if (!genera.empty()) {
            r.passed = false;
            r.detail += where + ": genera exist where the table has none; ";
          }
          continue;
        }
        bool counts_ok = (plus == ref.plus && minus == ref.minus);
        if (!counts_ok) {
          // Accept only a mismatch that a global form refutes.
          const auto cert = certify_row_2(nu, u);
          const int ref_count = cert.forced_c2 == 1 ? ref.plus : ref.minus;
          if (cert.found && cert.forced_c2 == cert.computed_c2 && ref_count == 0) {
            ++certified;
            std::ostringstream os;
            os << where << ": tabulated Hasse counts " << ref.plus << "|" << ref.minus << " vs enumerated " << plus
               << "|" << minus << "; refuted by " << cert.form.to_string() << " (det " << det_hessian(cert.form)
               << "), whose odd places force c_2 = " << cert.forced_c2;
            r.ledger.push_back(os.str());
          } else {
            r.passed = false;
            r.detail += where + ": Hasse counts differ without a global refutation; ";
          }
        }
        Rational rho = 0;
        for (const auto& g : genera) {
          const HalfPower m = p_mass(g.symbol);
          if (m.coeff != ref.pmass.coeff || m.k != ref.pmass.k) {
            r.passed = false;
            r.detail += where + ": p-mass " + m.to_string() + " vs " + ref.pmass.to_string() + "; ";
          }
          Rational gb = gamma_factor(u, 2) * local_density_inverse(g.symbol);
          gb.canonicalize();
          if (gb != ref.gamma_beta_inv) {
            r.passed = false;
            r.detail += where + ": gamma*beta^-1 " + to_string(gb) + " vs " + to_string(ref.gamma_beta_inv) + "; ";
          }
          rho = normalized_density(g.symbol);
        }
        const Rational A = a_coeff(2, u, nu), B = b_coeff(2, u, nu);
        if (A != ref.A) {
          r.passed = false;
          r.detail += where + ": A " + to_string(A) + " vs " + to_string(ref.A) + "; ";
        }
        if (B != ref.B) {
          // The tabulated B must be what the tabulated counts imply, and those counts must be refuted.
          Rational implied = (ref.plus - ref.minus) * rho;
          implied.canonicalize();
          if (!counts_ok && implied == ref.B) {
            r.ledger.push_back(where + ": tabulated B = " + to_string(ref.B) + " follows from the refuted counts; enumerated B = " +
                               to_string(B));
          } else {
            r.passed = false;
            r.detail += where + ": B " + to_string(B) + " vs " + to_string(ref.B) + "; ";
          }
        }
      }
    }
    r.ledger.push_back(
        "nu=0: tabulated 2-mass 2^-2 gamma^-1 under beta^-1 = 2m 2^(-3nu/2+3) gives 4 gamma^-1; the density column and "
        "generic convention need 2 gamma^-1, so the even unimodular row carries the extra factor 1/2");
    if (r.passed)
      r.detail = std::to_string(entries) + " rows (nu <= " + std::to_string(numax) + ") agree; " +
                 std::to_string(certified) + " tabulated row(s) refuted by the product formula";
  });
}

CheckResult verify_p2_closed_forms(int terms) {
  return timed("p=2 closed forms", [&](CheckResult& r) {
    for (int u : {1, 3, 5, 7}) {
      for (Which w : {Which::A, Which::B}) {
        const auto pipe = euler_coeffs(2, u, w, terms);
        for (auto v : {ClosedFormVariant::Compact, ClosedFormVariant::Summed, ClosedFormVariant::Enumeration}) {
          const auto series = closed_form(2, u, w, v).series(terms);
          std::vector<int> bad;
          for (int i = 0; i < terms; ++i)
            if (series[static_cast<size_t>(i)] != pipe[static_cast<size_t>(i)]) bad.push_back(i);
          if (bad.empty()) continue;
          std::string idx;
          for (int i : bad) idx += (idx.empty() ? "" : ",") + std::to_string(i);
          const std::string where = std::string(w == Which::A ? "A" : "B") + " u=" + std::to_string(u) + " " +
                                    variant_name(v) + ": series differs at nu in {" + idx + "}: " + join(series) +
                                    " vs " + join(pipe);
          if (v == ClosedFormVariant::Enumeration) {
            r.passed = false;
            r.detail += where + "; ";
          } else {
            r.ledger.push_back(where);
          }
        }
      }
    }
    if (r.passed) r.detail = "enumeration closed forms match to " + std::to_string(terms) + " terms";
  });
}

CheckResult verify_decomposition(Int max_det) {
  return timed("decomposition S<=" + std::to_string(max_det), [&](CheckResult& r) {
    size_t realizable = 0;
    for (Int S = 1; S <= max_det; ++S) {
      const auto rep = decomposition_check(S);
      if (rep.genera > 0) ++realizable;
      if (!rep.equal) {
        r.passed = false;
        r.detail += "S=" + std::to_string(S) + " lhs " + to_string(rep.lhs) + " rhs " + to_string(rep.rhs) + "; ";
      }
    }
    if (r.passed)
      r.detail = std::to_string(max_det) + " determinants exact (" + std::to_string(realizable) + " realizable)";
  });
}

CheckResult verify_decomposition_random(int instances, std::uint64_t seed, Int max_det) {
  return timed("decomposition with Hasse constraints", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> pick(1, max_det);
    int done = 0, nonzero = 0, bside = 0;
    while (done < instances) {
      const Int S = pick(rng);
      if (enumerate_primitive_classes(S).empty()) continue;
      std::vector<Int> T = GlobalDeterminant(S).bad_primes();
      // Occasionally constrain a prime of good reduction as well.
      for (Int extra : {3, 5, 7, 11, 13})
        if (std::find(T.begin(), T.end(), extra) == T.end()) {
          if (rng() % 3 == 0) T.push_back(extra);
          break;
        }
      std::map<Int, int> cons;
      for (Int p : T)
        if (rng() % 2 == 0) cons[p] = (rng() % 2 == 0) ? 1 : -1;
      if (cons.empty()) cons[T[rng() % T.size()]] = (rng() % 2 == 0) ? 1 : -1;
      const auto rep = decomposition_check(S, cons);
      ++done;
      if (rep.lhs != 0) ++nonzero;
      // Instances where the B-side contributes.
      Rational pa = 1, pb = 1;
      for (Int p : T)
        if (!cons.count(p)) {
          const auto sq = GlobalDeterminant(S).at(p);
          pb *= b_coeff(p, sq.unit_rep(), sq.val);
        }
      if (pb != 0) ++bside;
      if (!rep.equal) {
        r.passed = false;
        std::string c;
        for (auto& [p, s] : cons) c += std::to_string(p) + ":" + (s > 0 ? "+1 " : "-1 ");
        r.detail += "S=" + std::to_string(S) + " {" + c + "} lhs " + to_string(rep.lhs) + " rhs " + to_string(rep.rhs) + "; ";
      }
    }
    if (r.passed)
      r.detail = std::to_string(done) + " constrained instances exact (" + std::to_string(nonzero) +
                 " with nonzero mass, " + std::to_string(bside) + " with a live B-product)";
  });
}

CheckResult verify_siegel(Int max_det) {
  return timed("Siegel ratio S<=" + std::to_string(max_det), [&](CheckResult& r) {
    size_t multi = 0, pairs = 0;
    for (Int S = 1; S <= max_det; ++S) {
      const auto rep = genus_census(S);
      if (rep.genera.size() < 2) continue;
      ++multi;
      const auto& g0 = rep.genera.front();
      for (size_t i = 1; i < rep.genera.size(); ++i) {
        const auto& gi = rep.genera[i];
        Rational census = gi.mass / g0.mass;
        census.canonicalize();
        const Rational local = genus_mass_ratio(gi.symbols, g0.symbols);
        ++pairs;
        if (census != local) {
          r.passed = false;
          r.detail += "S=" + std::to_string(S) + " genus " + std::to_string(i) + ": census " + to_string(census) +
                      " local " + to_string(local) + "; ";
        }
      }
    }
    if (r.passed)
      r.detail = std::to_string(multi) + " multi-genus determinants, " + std::to_string(pairs) + " ratios exact";
  });
}

CheckResult verify_kappa(Int max_det, Int bound, double tol) {
  return timed("kappa numerics S<=" + std::to_string(max_det), [&](CheckResult& r) {
    double worst = 0;
    Int worst_S = 0;
    size_t n = 0;
    for (Int S = 1; S <= max_det; ++S) {
      if (enumerate_primitive_classes(S).empty()) continue;
      const auto m = total_mass_numeric(S, bound);
      ++n;
      if (m.rel_err > worst) {
        worst = m.rel_err;
        worst_S = S;
      }
      if (m.kappa != 1) r.ledger.push_back("S=" + std::to_string(S) + " has kappa " + std::to_string(m.kappa));
      if (m.rel_err > tol) {
        r.passed = false;
        r.detail += "S=" + std::to_string(S) + " rel_err " + std::to_string(m.rel_err) + "; ";
      }
    }
    const std::vector<std::pair<Int, Rational>> anchors{{3, Rational(1, 12)}, {4, Rational(1, 8)}, {23, Rational(3, 4)}};
    std::string anchor_text;
    for (auto& [S, v] : anchors) {
      const Rational got = genus_census(S).total_mass;
      anchor_text += " S=" + std::to_string(S) + "->" + to_string(got);
      if (got != v) {
        r.passed = false;
        r.detail += "anchor S=" + std::to_string(S) + " census " + to_string(got) + " expected " + to_string(v) + "; ";
      }
    }
    r.ledger.push_back("anchor S=23 is 3/4 (one class with |Aut| = 4, two with |Aut| = 2, GL2-class weighting); 3/2 is the sum of 1/|Aut+| over proper classes, which would give 1/6 at S=3 and 1/4 at S=4, so no single weighting meets the anchors 1/12, 1/8 and 3/2 together");
    if (r.passed) {
      std::ostringstream os;
      os.precision(3);
      os << n << " realizable determinants, worst rel_err " << worst << " at S=" << worst_S << ";" << anchor_text;
      r.detail = os.str();
    }
  });
}

CheckResult verify_class_numbers(Int dmax, Int bound, double tol) {
  return timed("class number formula |D|<=" + std::to_string(dmax), [&](CheckResult& r) {
    double worst = 0;
    size_t n = 0;
    for (Int m = 3; m <= dmax; ++m) {
      const Int D = -m;
      if (!is_fundamental(D)) continue;
      ++n;
      const auto rep = dirichlet_check(D, bound);
      worst = std::max(worst, rep.rel_err);
      if (rep.rel_err > tol) {
        r.passed = false;
        r.detail += "D=" + std::to_string(D) + " rel_err " + std::to_string(rep.rel_err) + "; ";
      }
      // Genus theory: 2^(t-1) genera, t = number of prime discriminant factors.
      int t = 0;
      for (auto& [p, e] : factorize(m)) (void)e, ++t;
      const size_t genera = genus_census(m).genera.size();
      if (genera != (size_t{1} << (t - 1))) {
        r.passed = false;
        r.detail += "D=" + std::to_string(D) + " has " + std::to_string(genera) + " genera; ";
      }
    }
    for (auto [D, h] : std::vector<std::pair<Int, Int>>{{-3, 1}, {-4, 1}, {-23, 3}, {-163, 1}})
      if (class_number(D) != h) {
        r.passed = false;
        r.detail += "h(" + std::to_string(D) + ") = " + std::to_string(class_number(D)) + "; ";
      }
    if (r.passed) {
      std::ostringstream os;
      os.precision(3);
      os << n << " fundamental discriminants, worst rel_err " << worst
         << "; h(-3)=1 h(-4)=1 h(-23)=3 h(-163)=1; genus counts 2^(t-1)";
      r.detail = os.str();
    }
  });
}

CheckResult verify_kneser(Int dmax) {
  return timed("Kneser counts |D|<=" + std::to_string(dmax), [&](CheckResult& r) {
    size_t flagged = 0, n = 0;
    for (Int m = 3; m <= dmax; ++m) {
      if (!is_fundamental(-m)) continue;
      ++n;
      const auto k = kneser_counts(-m);
      flagged += k.flagged;
      if (k.group_order != 2 * k.h || !k.proper_aut_is_mu || !k.proper_weighting_ok || !k.full_weighting_ok) {
        r.passed = false;
        r.detail += "D=" + std::to_string(-m) + "; ";
      }
    }
    r.ledger.push_back(std::to_string(flagged) +
                       " classes have |Aut| = |mu_K| rather than 2|mu_K| (non-ambiguous classes); |Aut+| = |mu_K| "
                       "holds throughout, and h = (|mu_K|/2) sum_G 1/|Aut+| is exact");
    if (r.passed) r.detail = std::to_string(n) + " discriminants: |G| = 2h, both weightings exact";
  });
}

std::string format_result(const CheckResult& r, bool with_time) {
  std::ostringstream os;
  os.precision(3);
  os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
  if (with_time) os << " [" << std::fixed << r.seconds << "s]";
  for (const auto& l : r.ledger) os << "\n  ledger: " << l;
  return os.str();
}

}  // namespace bqm
