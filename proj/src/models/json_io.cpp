#include <set>

#include "elw/io.hpp"
#include "json.hpp"

namespace elw {

namespace {

using Json = nlohmann::ordered_json;

Json elements(const std::vector<Elem>& v) {
  Json out = Json::array();
  for (Elem e : v) out.push_back(e);
  return out;
}

Json bel_list(const std::vector<bool>& bel) {
  Json out = Json::array();
  for (std::size_t i = 0; i < bel.size(); ++i) {
    if (bel[i]) out.push_back(i);
  }
  return out;
}

Json algebra_json(const HeytingAlgebra& h) {
  Json leq = Json::array();
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (h.leq(static_cast<Elem>(a), static_cast<Elem>(b))) leq.push_back(Json::array({a, b}));
    }
  }
  Json out = Json::object();
  out["size"] = h.size();
  out["leq"] = std::move(leq);
  return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw ModelFileError(where, message);
}

void expect_keys(const Json& obj, const std::string& where, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) fail(where.empty() ? "/" : where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!required.count(key) && !optional.count(key)) fail(where + "/" + key, "unknown key");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(where.empty() ? "/" : where, "missing key '" + key + "'");
  }
}

std::size_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Elem element(const Json& j, const std::string& where, std::size_t size) {
  const std::size_t v = natural(j, where);
  if (v >= size) fail(where, "element " + std::to_string(v) + " is out of range");
  return static_cast<Elem>(v);
}

std::vector<Elem> element_array(const Json& j, const std::string& where, std::size_t size,
                                std::optional<std::size_t> length) {
  if (!j.is_array()) fail(where, "expected an array");
  if (length && j.size() != *length) {
    fail(where, "expected " + std::to_string(*length) + " entries, found " + std::to_string(j.size()));
  }
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(j[i], where + "/" + std::to_string(i), size));
  return out;
}

std::shared_ptr<const HeytingAlgebra> read_algebra(const Json& j) {
  expect_keys(j, "/algebra", {"size", "leq"}, {"tables"});
  const std::size_t size = natural(j["size"], "/algebra/size");
  if (size == 0 || size > 4096) fail("/algebra/size", "size must be between 1 and 4096");
  const Json& pairs = j["leq"];
  if (!pairs.is_array()) fail("/algebra/leq", "expected an array of [i, j] pairs");
  std::vector<bool> leq(size * size, false);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string where = "/algebra/leq/" + std::to_string(k);
    if (!pairs[k].is_array() || pairs[k].size() != 2) fail(where, "expected an [i, j] pair");
    const Elem a = element(pairs[k][0], where + "/0", size);
    const Elem b = element(pairs[k][1], where + "/1", size);
    leq[static_cast<std::size_t>(a) * size + b] = true;
  }
  HeytingAlgebra h = [&] {
    try {
      return HeytingAlgebra::from_order(size, leq);
    } catch (const StructureError& e) {
      fail("/algebra/leq", e.what());
    }
  }();
  if (j.contains("tables")) {
    const Json& t = j["tables"];
    expect_keys(t, "/algebra/tables", {"meet", "join", "imp"});
    const std::pair<const char*, const std::vector<Elem>*> tables[] = {
        {"meet", &h.meet_table()}, {"join", &h.join_table()}, {"imp", &h.imp_table()}};
    for (const auto& [name, expected] : tables) {
      const std::string where = std::string("/algebra/tables/") + name;
      const auto given = element_array(t[name], where, size, size * size);
      for (std::size_t i = 0; i < given.size(); ++i) {
        if (given[i] != (*expected)[i]) {
          fail(where + "/" + std::to_string(i),
               std::string(name) + " of " + std::to_string(i / size) + " and " + std::to_string(i % size) +
                   " should be " + std::to_string((*expected)[i]));
        }
      }
    }
  }
  return std::make_shared<const HeytingAlgebra>(std::move(h));
}

}  // namespace

std::string model_to_json(const Model& m) {
  std::vector<std::pair<std::string, Json>> fields;
  fields.emplace_back("class", std::string(to_string(class_of(m))));
  fields.emplace_back("algebra", algebra_json(algebra_of(m)));
  if (const auto* el = std::get_if<ElModel>(&m)) {
    fields.emplace_back("true_gen", el->true_gen);
    fields.emplace_back("bel", bel_list(el->bel));
    fields.emplace_back("box", elements(el->box));
    fields.emplace_back("know", elements(el->know));
  } else {
    const auto& iel = std::get<IelModel>(m);
    fields.emplace_back("bel", bel_list(iel.bel));
    fields.emplace_back("know", elements(iel.know));
  }
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + Json(fields[i].first).dump() + ": " + fields[i].second.dump();
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

Model model_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ModelFileError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!j.is_object()) fail("/", "expected an object");
  if (!j.contains("class") || !j["class"].is_string()) fail("/class", "expected a class name");
  const auto cls = logic_from_string(j["class"].get<std::string>());
  if (!cls || !(is_el_class(*cls) || is_iel_class(*cls))) {
    fail("/class", "unknown model class '" + j["class"].get<std::string>() + "'");
  }
  if (is_el_class(*cls)) {
    expect_keys(j, "", {"class", "algebra", "true_gen", "bel", "box", "know"});
  } else {
    expect_keys(j, "", {"class", "algebra", "bel", "know"});
  }
  auto algebra = read_algebra(j["algebra"]);
  const std::size_t size = algebra->size();
  std::vector<bool> bel(size, false);
  for (Elem e : element_array(j["bel"], "/bel", size, std::nullopt)) {
    if (bel[e]) fail("/bel", "element " + std::to_string(e) + " is listed twice");
    bel[e] = true;
  }
  auto know = element_array(j["know"], "/know", size, size);
  if (is_iel_class(*cls)) return IelModel{algebra, std::move(bel), std::move(know), *cls};
  const Elem true_gen = element(j["true_gen"], "/true_gen", size);
  auto box = element_array(j["box"], "/box", size, size);
  return ElModel{algebra, true_gen, std::move(bel), std::move(box), std::move(know), *cls};
}

}  // namespace elw
