#include "mubar/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace mubar {

namespace {

Json rational_to_json(const Rational& v) {
  if (denominator(v) == 1) {
    const Int& n = numerator(v);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return v.str();
}

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  Json j;
  f >> j;
  return j;
}

Braid braid_from_json(const Json& j) {
  if (!j.contains("strands") || !j.contains("word"))
    throw std::invalid_argument("braid json: need \"strands\" and \"word\"");
  Braid b;
  b.strands = j.at("strands").get<int>();
  b.word = j.at("word").get<std::vector<int>>();
  if (b.strands < 1) throw std::invalid_argument("braid json: strands must be >= 1");
  for (int letter : b.word) {
    const int k = letter > 0 ? letter : -letter;
    if (k < 1 || k >= b.strands)
      throw std::invalid_argument("braid json: letter out of range");
  }
  return b;
}

Json braid_to_json(const Braid& b) {
  return Json{{"strands", b.strands}, {"word", b.word}};
}

std::vector<Word> longitudes_from_json(const Json& j) {
  if (!j.contains("m") || !j.contains("longitudes"))
    throw std::invalid_argument("longitudes json: need \"m\" and \"longitudes\"");
  const int m = j.at("m").get<int>();
  const auto& arr = j.at("longitudes");
  if (!arr.is_array() || static_cast<int>(arr.size()) != m)
    throw std::invalid_argument("longitudes json: need exactly m longitudes");
  std::vector<Word> lams;
  for (const auto& s : arr) {
    Word w = Word::parse(s.get<std::string>());
    if (w.max_generator() > m)
      throw std::invalid_argument("longitudes json: generator beyond x_m");
    lams.push_back(w);
  }
  return lams;
}

Json longitudes_to_json(const std::vector<Word>& lams) {
  Json arr = Json::array();
  for (const auto& w : lams) arr.push_back(w.str());
  return Json{{"m", lams.size()}, {"longitudes", arr}};
}

LinkDiagram pd_from_json(const Json& j) {
  if (!j.contains("components") || !j.contains("crossings"))
    throw std::invalid_argument("pd json: need \"components\" and \"crossings\"");
  LinkDiagram d;
  d.components = j.at("components").get<int>();
  d.free_loops = j.value("free_loops", 0);
  for (const auto& c : j.at("crossings")) {
    if (!c.is_array() || c.size() != 5)
      throw std::invalid_argument("pd json: crossing must be [a,b,c,d,sign]");
    Crossing x;
    x.a = c[0].get<int>();
    x.b = c[1].get<int>();
    x.c = c[2].get<int>();
    x.d = c[3].get<int>();
    const std::string s = c[4].get<std::string>();
    if (s != "+" && s != "-") throw std::invalid_argument("pd json: sign must be \"+\" or \"-\"");
    x.sign = s == "+" ? 1 : -1;
    d.crossings.push_back(x);
  }
  d.validate();
  return d;
}

Json pd_to_json(const LinkDiagram& d) {
  Json arr = Json::array();
  for (const auto& c : d.crossings)
    arr.push_back(Json::array({c.a, c.b, c.c, c.d, c.sign > 0 ? "+" : "-"}));
  return Json{{"components", d.components},
              {"free_loops", d.free_loops},
              {"crossings", arr}};
}

Json mu_to_json(const MuTable& t) {
  Json entries = Json::array();
  for (const auto& [idx, v] : t.entries())
    entries.push_back(Json{{"index", idx}, {"value", int_to_json(v)}});
  return Json{{"schema", kSchema}, {"m", t.m()}, {"q", t.q()}, {"entries", entries}};
}

Json series_to_json(const Series1& s) {
  Json arr = Json::array();
  for (int k = 0; k <= s.q(); ++k) arr.push_back(rational_to_json(s[k]));
  return arr;
}

Json conway_to_json(const ConwayPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

Json verify_to_json(const VerifyResult& r) {
  return Json{{"schema", kSchema},
              {"m", r.m},
              {"q", r.q},
              {"gamma_z", series_to_json(r.gamma_z)},
              {"nabla_link", conway_to_json(r.nabla_link)},
              {"nabla_knot", conway_to_json(r.nabla_knot)},
              {"lhs", series_to_json(r.lhs)},
              {"rhs", series_to_json(r.rhs)},
              {"matched", r.matched}};
}

}  // namespace mubar
