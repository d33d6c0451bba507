#include "serialization.hpp"

#include <json.hpp>

namespace otwb {

using nlohmann::json;

std::string ga_to_json(const GroupAlgebraElement& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.coeffs()) {
    json t;
    t["word"] = w.word();
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  json j;
  j["n"] = e.n();
  j["terms"] = std::move(terms);
  return j.dump();
}

GroupAlgebraElement ga_from_json(const std::string& text) {
  json j = json::parse(text);
  GroupAlgebraElement e(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    e.add_term(Permutation(t.at("word").get<std::vector<int>>()), c);
  }
  return e;
}

std::string character_table_csv(int n) {
  auto classes = conjugacy_classes(n);
  std::string out = "partition";
  for (const auto& cls : classes) out += "," + cls.type.to_string();
  out += "\n";
  for (const auto& [lambda, chi] : character_table(n)) {
    out += lambda.to_string();
    for (const auto& cls : classes) out += "," + rat_str(chi.at(cls.type));
    out += "\n";
  }
  return out;
}

std::string decomposition_json(const CharacterVector& a) {
  json j = json::object();
  for (const auto& [p, m] : decompose(a)) j[p.to_string()] = m;
  return j.dump();
}

std::string ot_degree_json(const NormalFormTable& table, int degree, const CharacterVector& chi,
                           const std::string& algebra_name) {
  json j;
  j["n"] = table.n();
  j["algebra"] = algebra_name;
  j["degree"] = degree;
  json basis = json::array();
  for (const auto& m : table.basis(degree)) basis.push_back(m.to_string());
  j["basis"] = std::move(basis);
  json ch = json::object();
  for (const auto& [p, v] : chi.values) ch[p.to_string()] = rat_str(v);
  j["character"] = std::move(ch);
  return j.dump();
}

}  // namespace otwb
