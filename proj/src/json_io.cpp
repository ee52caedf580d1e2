#include "fliplab/json_io.hpp"

namespace fliplab {

json signotope_to_json(const Signotope& s) {
  return json{{"n", s.n}, {"signs", sign_string(s)}};
}

Signotope signotope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("signs"))
    throw std::invalid_argument("signotope json needs {n, signs}");
  Signotope s = signotope_from_string(j.at("n").get<int>(), j.at("signs").get<std::string>());
  require_valid(s);
  return s;
}

json wiring_to_json(const WiringDiagram& w) {
  return json{{"n", w.n}, {"word", w.word}};
}

WiringDiagram wiring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("word"))
    throw std::invalid_argument("wiring json needs {n, word}");
  WiringDiagram w{j.at("n").get<int>(), j.at("word").get<std::vector<int>>()};
  require_valid(w);
  return w;
}

}
