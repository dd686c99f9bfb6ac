// mubar: command-line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad input or usage,
// 3 resource limit exceeded.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubar/corpus.hpp"
#include "mubar/diagrams.hpp"
#include "mubar/factor.hpp"
#include "mubar/io.hpp"
#include "mubar/milnor.hpp"

namespace {

using mubar::Json;

int default_max_crossings() {
  if (const char* env = std::getenv("MUBAR_MAX_CROSSINGS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MUBAR_MAX_CROSSINGS must be an integer");
    }
  }
  return 18;
}

std::string detect_format(const Json& j) {
  if (j.contains("word")) return "braid";
  if (j.contains("longitudes")) return "longitudes";
  if (j.contains("crossings")) return "pd";
  throw std::invalid_argument("cannot detect input format");
}

// Normalized longitudes from a braid or longitudes file.
std::vector<mubar::Word> longitudes_from_input(const Json& j, const std::string& format) {
  const std::string f = format == "auto" ? detect_format(j) : format;
  if (f == "braid") {
    mubar::Braid b = mubar::braid_from_json(j);
    if (!b.is_pure()) throw std::invalid_argument("braid must be pure");
    auto raw = mubar::longitudes_from_braid(b);
    std::vector<mubar::Word> lams;
    for (int i = 1; i <= b.strands; ++i)
      lams.push_back(mubar::normalize_longitude(raw[i - 1], i));
    return lams;
  }
  if (f == "longitudes") return mubar::longitudes_from_json(j);
  throw std::invalid_argument("expected braid or longitudes input, got " + f);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-bar invariants and the Conway-polynomial factorization of string links"};
  app.require_subcommand(1);

  std::string input, format = "auto", closure = "link";
  int q = 6;
  int max_crossings = 0;
  int strands = 2, max_letters = 4;

  auto add_input = [&](CLI::App* cmd, bool with_q = true) {
    cmd->add_option("-i,--input", input, "input JSON file")->required();
    cmd->add_option("--format", format, "braid|longitudes|pd|auto")
        ->check(CLI::IsMember({"braid", "longitudes", "pd", "auto"}));
    if (with_q) cmd->add_option("-q,--order", q, "truncation order (default 6)");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-crossings", max_crossings,
                    "skein crossing limit (default 18, or MUBAR_MAX_CROSSINGS)");
  };

  CLI::App* mu = app.add_subcommand("mu", "mu-bar invariant table");
  add_input(mu);
  CLI::App* ga = app.add_subcommand("gamma", "Gamma factor of the Conway polynomial");
  add_input(ga);
  CLI::App* ph = app.add_subcommand("phi", "Phi factor of the Alexander polynomial");
  add_input(ph);
  CLI::App* co = app.add_subcommand("conway", "Conway polynomial by the skein relation");
  add_input(co, false);
  co->add_option("--closure", closure, "closure for braid input: link|knot")
      ->check(CLI::IsMember({"link", "knot"}));
  add_cap(co);
  CLI::App* ve = app.add_subcommand("verify", "check nabla_L = nabla_K * Gamma for a braid");
  add_input(ve);
  add_cap(ve);
  CLI::App* cp = app.add_subcommand("corpus", "verify the factorization over all small pure braids");
  cp->add_option("--strands", strands, "strand count (default 2)");
  cp->add_option("--max-letters", max_letters, "maximum braid word length (default 4)");
  cp->add_option("-q,--order", q, "truncation order (default 6)");
  add_cap(cp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (max_crossings == 0) max_crossings = default_max_crossings();

    if (mu->parsed()) {
      auto lams = longitudes_from_input(mubar::load_json_file(input), format);
      emit(mubar::mu_to_json(mubar::mu_table(lams, q)));
    } else if (ga->parsed()) {
      auto lams = longitudes_from_input(mubar::load_json_file(input), format);
      mubar::GammaResult g = mubar::gamma_gauge_fixed(lams, q);
      emit(Json{{"schema", mubar::kSchema},
                {"m", g.m},
                {"q", q},
                {"e", g.e},
                {"gamma_u", mubar::series_to_json(g.gamma_u)},
                {"gamma_z", mubar::series_to_json(g.gamma_z)}});
    } else if (ph->parsed()) {
      auto lams = longitudes_from_input(mubar::load_json_file(input), format);
      mubar::MuTable t = mubar::mu_table(lams, q);
      mubar::Series1 pu = mubar::phi_u(t);
      mubar::MultiSeries pm = mubar::phi_multi(t);
      Json terms = Json::array();
      for (const auto& [deg, v] : pm.terms()) {
        terms.push_back(Json{{"degrees", deg}, {"value", v.str()}});
      }
      emit(Json{{"schema", mubar::kSchema},
                {"m", t.m()},
                {"q", q},
                {"phi_u", mubar::series_to_json(pu)},
                {"phi_multi", terms}});
    } else if (co->parsed()) {
      Json j = mubar::load_json_file(input);
      const std::string f = format == "auto" ? detect_format(j) : format;
      mubar::LinkDiagram d;
      if (f == "pd") {
        d = mubar::pd_from_json(j);
      } else if (f == "braid") {
        mubar::Braid b = mubar::braid_from_json(j);
        d = closure == "link" ? mubar::close_link(b) : mubar::close_knot(b);
      } else {
        throw std::invalid_argument("conway: expected pd or braid input");
      }
      mubar::ConwayPoly nabla = mubar::conway_skein(d, max_crossings);
      emit(Json{{"schema", mubar::kSchema},
                {"components", d.components},
                {"crossings", d.crossings.size()},
                {"nabla", mubar::conway_to_json(nabla)}});
    } else if (ve->parsed()) {
      mubar::Braid b = mubar::braid_from_json(mubar::load_json_file(input));
      mubar::VerifyResult r = mubar::verify_factorization(b, q, max_crossings);
      emit(mubar::verify_to_json(r));
      return r.matched ? 0 : 1;
    } else if (cp->parsed()) {
      mubar::CorpusStats st = mubar::run_corpus(strands, max_letters, q, max_crossings);
      emit(Json{{"schema", mubar::kSchema},
                {"strands", strands},
                {"max_letters", max_letters},
                {"q", q},
                {"total", st.total},
                {"matched", st.matched},
                {"failures", st.failures}});
      return st.failures.empty() ? 0 : 1;
    }
  } catch (const mubar::CrossingLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
