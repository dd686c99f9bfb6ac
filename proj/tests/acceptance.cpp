// Acceptance gate: runs the ten acceptance criteria and prints one PASS/FAIL
// line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mubar/corpus.hpp"
#include "mubar/diagrams.hpp"
#include "mubar/factor.hpp"
#include "mubar/io.hpp"
#include "mubar/milnor.hpp"
#include "mubar/words.hpp"

#include "properties.hpp"

using namespace mubar;

namespace {

constexpr int kCap = 512;  // skein crossing limit for closures in the corpus

std::vector<Word> braid_longitudes(const Braid& b) {
  auto raw = longitudes_from_braid(b);
  std::vector<Word> lams;
  for (int i = 1; i <= b.strands; ++i)
    lams.push_back(normalize_longitude(raw[i - 1], i));
  return lams;
}

std::vector<Braid> full_corpus() {
  std::vector<Braid> all = enumerate_pure_braids(2, 6);
  for (const Braid& b : enumerate_pure_braids(3, 6)) all.push_back(b);
  return all;
}

// ---- criterion 1: the golden two-strand example ---------------------------

bool golden_example(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  Braid b(2, {1, 1});
  auto lams = braid_longitudes(b);
  MuTable t = mu_table(lams, 9);
  for (int r = 1; r <= 6; ++r) {
    std::vector<int> idx(r + 1, 1);
    if (t.value(idx) != Int(r % 2 == 1 ? 1 : -1)) {
      detail = "mu(1^" + std::to_string(r) + ",1) wrong";
      return false;
    }
  }
  CMatrix c = c_matrix_from_mu(t);
  Series1 lam = c.at(1, 1).shift(1);  // lambda_11 = u c_11
  for (int k = 1; k <= 8; ++k)
    if (lam[k] != Rational(k % 2 == 1 ? -1 : 1)) {
      detail = "lambda_11 != -u/(1+u)";
      return false;
    }
  GammaResult g = gamma_gauge_fixed(lams, 9);
  for (int k = 0; k <= 8; ++k)
    if (g.gamma_z[k] != Rational(k == 1 ? -1 : 0)) {
      detail = "Gamma != -z";
      return false;
    }
  VerifyResult r = verify_factorization(b, 9, kCap);
  if (!(r.nabla_knot == ConwayPoly::one())) {
    detail = "knot closure polynomial != 1";
    return false;
  }
  for (int k = 0; k < r.lhs.q(); ++k)
    if (r.lhs[k] != Rational(k == 1 ? -1 : 0)) {
      detail = "link polynomial != -z in the string-link variable";
      return false;
    }
  if (!r.matched) {
    detail = "factorization identity failed";
    return false;
  }
  const auto dt = std::chrono::steady_clock::now() - t0;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  detail = std::to_string(ms) + " ms";
  return ms < 1000;
}

// ---- criterion 2: the factorization corpus --------------------------------

bool factorization_corpus(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  CorpusStats two = run_corpus(2, 6, 9, kCap);
  CorpusStats three = run_corpus(3, 6, 9, kCap);
  const auto dt = std::chrono::steady_clock::now() - t0;
  const auto sec = std::chrono::duration_cast<std::chrono::seconds>(dt).count();
  std::ostringstream os;
  os << two.matched << "/" << two.total << " on 2 strands, " << three.matched
     << "/" << three.total << " on 3 strands, " << sec << " s";
  detail = os.str();
  return two.failures.empty() && three.failures.empty() && sec <= 600;
}

// ---- criterion 3: Fox calculus vs mu-bar c-matrices -----------------------

bool fox_equivalence(std::string& detail) {
  int n = 0;
  for (const Braid& b : full_corpus()) {
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 8);
    CMatrix from_mu = c_matrix_from_mu(t);
    CMatrix from_fox = c_matrix_from_fox(lams, 8);
    for (int i = 1; i <= b.strands; ++i)
      for (int j = 1; j <= b.strands; ++j)
        if (!(from_mu.at(i, j) == from_fox.at(i, j))) {
          detail = "mismatch on item " + std::to_string(n);
          return false;
        }
    ++n;
  }
  detail = std::to_string(n) + " items";
  return true;
}

// ---- criterion 4: degeneracy suites ---------------------------------------

bool degeneracy_suites(std::string& detail) {
  int n = 0, split = 0;
  for (const Braid& b : full_corpus()) {
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 8);
    CMatrix c = c_matrix_from_mu(t);
    CHatMatrix ch = chat_matrix(lams, 6);
    LinkingData lk = LinkingData::from_mu(t);
    DegeneracyReport rep = degeneracy_check(c, ch, lk);
    if (!rep.first_zero || !rep.second_zero) {
      detail = "multivariable residual nonzero on item " + std::to_string(n);
      return false;
    }
    if (lk.algebraically_split()) {
      ++split;
      if (!rep.rows_cols_zero) {
        detail = "row/column sums nonzero on split item " + std::to_string(n);
        return false;
      }
    }
    ++n;
  }
  detail = std::to_string(n) + " items, " + std::to_string(split) + " split";
  return true;
}

// ---- criterion 5: the Borromean lowest coefficient ------------------------

bool borromean_coefficient(std::string& detail) {
  Braid bor(3, {1, -2, 1, -2, 1, -2});
  MuTable t = mu_table(braid_longitudes(bor), 6);
  if (!t.all_zero_below_length(3)) {
    detail = "length-2 invariants do not vanish";
    return false;
  }
  Int det = first_coeff_det(t, 3);
  ConwayPoly nabla = conway_skein(close_link(bor), kCap);
  std::ostringstream os;
  os << "det = " << det << ", z^4 coefficient = " << nabla.coeff(4);
  detail = os.str();
  return nabla.coeff(4) == det && det * det == 1;
}

// ---- criterion 6: Gamma structure on split items --------------------------

bool gamma_structure(std::string& detail) {
  int n = 0, split = 0;
  for (const Braid& b : full_corpus()) {
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 9);
    LinkingData lk = LinkingData::from_mu(t);
    if (!lk.algebraically_split()) {
      ++n;
      continue;
    }
    ++split;
    GammaResult g = gamma_gauge_fixed(lams, 9);
    GammaChecks ck = gamma_checks(g, lk);
    if (!ck.applicable || !ck.parity_ok || !ck.divisibility_ok ||
        !ck.leading_square_ok) {
      detail = "structure violated on item " + std::to_string(n);
      return false;
    }
    ++n;
  }
  detail = std::to_string(split) + " split items of " + std::to_string(n);
  return true;
}

// ---- criterion 7: randomized property suites ------------------------------

bool property_suites(std::string& detail) {
  struct Suite {
    const char* name;
    long cases;
    std::function<long(long, unsigned)> run;
  };
  const std::vector<Suite> suites = {
      {"magnus homomorphism", 10000, props::magnus_homomorphism},
      {"fox product rule", 10000, props::fox_product_rule},
      {"series inversion", 10000, props::series_inversion},
      {"conway round trip", 10000, props::conway_round_trip},
      {"artin automorphism", 10000, props::artin_properties},
  };
  long total = 0;
  for (const Suite& s : suites) {
    long held = s.run(s.cases, 20240501);
    if (held != s.cases) {
      detail = std::string(s.name) + ": " + std::to_string(held) + "/" +
               std::to_string(s.cases);
      return false;
    }
    total += held;
  }
  detail = std::to_string(total) + " cases";
  return true;
}

// ---- criterion 8: Seifert oracle agreement --------------------------------

bool seifert_agreement(std::string& detail) {
  // the standard closed-braid trefoil diagram, walked pass by pass
  LinkDiagram tre;
  tre.components = 1;
  tre.crossings = {{1, 5, 2, 4, +1}, {5, 3, 6, 2, +1}, {3, 1, 4, 6, +1}};
  tre.validate();
  SeifertMatrix a(2, {Int(-1), Int(1), Int(0), Int(-1)});
  ConwayPoly from_seifert = a.conway();
  ConwayPoly from_skein = conway_skein(tre, 16);
  if (!(from_seifert == from_skein) ||
      !(from_seifert == ConwayPoly({Int(1), Int(0), Int(1)}))) {
    detail = "trefoil mismatch";
    return false;
  }
  LinkDiagram unknot;
  unknot.components = 1;
  unknot.free_loops = 1;
  SeifertMatrix empty;
  if (!(empty.conway() == ConwayPoly::one()) ||
      !(conway_skein(unknot, 4) == ConwayPoly::one())) {
    detail = "unknot mismatch";
    return false;
  }
  detail = "trefoil and unknot agree";
  return true;
}

// ---- criterion 9: multivariable internal consistency ----------------------

bool multivariable_consistency(std::string& detail) {
  int n = 0, hypothesis = 0;
  for (const Braid& b : full_corpus()) {
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 6);
    CMatrix c = c_matrix_from_mu(t);
    CHatMatrix ch = chat_matrix(lams, 6);
    for (int i = 1; i <= b.strands; ++i)
      for (int j = 1; j <= b.strands; ++j) {
        Series1 sp = ch.at(i, j).specialize_u(6);
        for (int d = 0; d <= 4; ++d)
          if (sp[d] != c.at(i, j)[d]) {
            detail = "c-hat specialization mismatch on item " + std::to_string(n);
            return false;
          }
      }
    // lowest-coefficient comparison under the order-k vanishing hypothesis
    int k = 2;
    while (k < 6 && t.all_zero_below_length(k + 1)) ++k;
    if (k >= 3 && t.all_zero_below_length(k)) {
      ++hypothesis;
      MultiSeries pm = phi_multi(t);
      MultiSeries lead = multi_lowest(pm);
      Series1 pu = phi_u(t);
      auto [deg, coeff] = lowest_coefficient(pu);
      Series1 leadu = lead.specialize_u(pu.q());
      auto [dl, cl] = lowest_coefficient(leadu);
      if (deg >= 0 && !(dl == deg && cl == coeff)) {
        detail = "lowest-term mismatch on item " + std::to_string(n);
        return false;
      }
    }
    ++n;
  }
  detail = std::to_string(n) + " items, " + std::to_string(hypothesis) +
           " under the vanishing hypothesis";
  return true;
}

// ---- criterion 10: determinism --------------------------------------------

#ifndef MUBAR_CLI
#define MUBAR_CLI ""
#endif

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(MUBAR_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

bool determinism(std::string& detail) {
  const std::string cli = MUBAR_CLI;
  if (cli.empty()) {
    detail = "CLI path not configured";
    return false;
  }
  const std::string dir = "acceptance_tmp";
  std::string file = dir + "_braid.json";
  {
    std::ofstream os(file);
    os << braid_to_json(Braid(3, {1, 1, 2, 2, -1, 2})).dump(2) << "\n";
  }
  int checked = 0;
  for (const std::string args :
       {"mu -i " + file + " -q 6", "gamma -i " + file + " -q 7",
        "phi -i " + file + " -q 5", "conway -i " + file + " --closure knot",
        "verify -i " + file + " -q 7",
        std::string("corpus --strands 2 --max-letters 4 -q 6")}) {
    std::string once = run_cli(args);
    std::string twice = run_cli(args);
    if (once.empty() || once != twice) {
      detail = "output differs for: " + args;
      std::remove(file.c_str());
      return false;
    }
    ++checked;
  }
  std::remove(file.c_str());
  detail = std::to_string(checked) + " commands byte-identical";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {"golden two-strand example", golden_example},
      {"factorization corpus (2 and 3 strands, <= 6 letters)", factorization_corpus},
      {"Fox calculus matches the mu-bar c-matrix", fox_equivalence},
      {"degeneracy residuals vanish", degeneracy_suites},
      {"Borromean lowest coefficient is the mu-bar determinant", borromean_coefficient},
      {"Gamma parity, divisibility, and square leading coefficient", gamma_structure},
      {"randomized property suites", property_suites},
      {"Seifert matrix and skein oracles agree", seifert_agreement},
      {"multivariable specializations are consistent", multivariable_consistency},
      {"byte-identical determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].name
              << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
