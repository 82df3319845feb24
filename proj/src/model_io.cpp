#include "icmc/model_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace icmc {

using nlohmann::json;

namespace {

json label_to_json(const Label& l) {
  return {{"kind", to_string(l.kind)}, {"i", l.i}, {"j", l.j}, {"group", to_string(l.group)}};
}

Label label_from_json(const json& doc) {
  Label l;
  if (doc.is_null()) return l;
  l.kind = parse_label_kind(doc.value("kind", std::string("none")));
  l.i = doc.value("i", 0);
  l.j = doc.value("j", 0);
  l.group = parse_group(doc.value("group", std::string("none")));
  return l;
}

std::uint64_t parse_u64(const json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const BigInt b = parse_bigint(v.get<std::string>());
    if (b < 0 || b > std::numeric_limits<std::uint64_t>::max()) throw Error(std::string(what) + " out of range");
    return static_cast<std::uint64_t>(b);
  }
  throw Error(std::string(what) + " must be a non-negative integer");
}

}  // namespace

json model_to_json(const WeightedIntervalModel& m) {
  json classes = json::array();
  for (const auto& c : m.classes) {
    json row;
    row["left"] = format_rat(c.left);
    row["right"] = format_rat(c.right);
    row["mult"] = c.mult;
    row["kind"] = c.is_points() ? "points" : "twin";
    row["container"] = c.container ? json::array({format_rat(c.container->left), format_rat(c.container->right)})
                                   : json(nullptr);
    row["label"] = label_to_json(c.label);
    classes.push_back(row);
  }
  return classes;
}

WeightedIntervalModel model_from_json(const json& doc) {
  WeightedIntervalModel m;
  try {
    const json& rows = doc.is_array() ? doc : doc.at("classes");
    for (const auto& row : rows) {
      const std::string kind = row.at("kind").get<std::string>();
      const std::uint64_t mult = parse_u64(row.at("mult"), "mult");
      const Label label = label_from_json(row.contains("label") ? row["label"] : json(nullptr));
      if (kind == "twin") {
        m.classes.push_back(IntervalClass::twins(parse_rat(row.at("left").get<std::string>()),
                                                 parse_rat(row.at("right").get<std::string>()), mult, label));
      } else if (kind == "points") {
        const auto& box = row.at("container");
        if (!box.is_array() || box.size() != 2) throw Error("point family needs a two-element container");
        auto c = IntervalClass::points(parse_rat(box[0].get<std::string>()), parse_rat(box[1].get<std::string>()),
                                       mult, label);
        m.classes.push_back(std::move(c));
      } else {
        throw Error("unknown class kind '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(std::string("bad model JSON: ") + e.what());
  }
  m.validate();
  return m;
}

json params_to_json(const ParameterSet& ps) {
  return {{"p", std::to_string(ps.p)}, {"q", std::to_string(ps.q)}, {"pe", std::to_string(ps.pe)},
          {"qe", std::to_string(ps.qe)}};
}

ParameterSet params_from_json(const json& doc) {
  try {
    return {parse_u64(doc.at("p"), "p"), parse_u64(doc.at("q"), "q"), parse_u64(doc.at("pe"), "pe"),
            parse_u64(doc.at("qe"), "qe")};
  } catch (const json::exception& e) {
    throw Error(std::string("bad params JSON: ") + e.what());
  }
}

std::string write_model_file(const ModelFile& f) {
  json doc;
  doc["classes"] = model_to_json(f.model);
  if (f.instance) doc["instance"] = json::parse(instance_to_json(*f.instance));
  if (f.params) doc["params"] = params_to_json(*f.params);
  return doc.dump(1) + "\n";
}

ModelFile parse_model_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("bad model JSON: ") + e.what());
  }
  ModelFile f;
  f.model = model_from_json(doc);
  if (doc.is_object() && doc.contains("instance")) f.instance = parse_instance_json(doc["instance"].dump());
  if (doc.is_object() && doc.contains("params")) f.params = params_from_json(doc["params"]);
  return f;
}

ModelFile read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_file(buf.str());
}

ReductionModel reduction_from_file(const ModelFile& f) {
  if (!f.instance || !f.params) throw Error("model file lacks instance or params");
  return index_model(f.model, *f.instance, *f.params);
}

}  // namespace icmc
