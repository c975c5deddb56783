#include "treextremal/json_report.hpp"

namespace treextremal {

Json output_document(std::string_view command, Json inputs, Json results) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  return doc;
}

Json to_json(const Tree& t) {
  Json edges = Json::array();
  for (auto [u, v] : t.edges()) edges.push_back({u, v});
  return Json{{"n", t.size()}, {"edges", std::move(edges)}};
}

Json to_json(const ExtremalReport& r) {
  Json j;
  j["degree_sequence"] = r.degree_sequence.to_string();
  j["degrees"] = r.degree_sequence.degrees();
  j["objective"] = to_string(r.objective);
  j["method"] = to_string(r.method);
  j["optimum"] = to_decimal(r.optimum);
  j["trees_examined"] = r.trees_examined;
  j["cross_checked"] = r.cross_checked;
  Json opts = Json::array();
  for (const auto& o : r.optimizers) {
    Json item;
    item["canonical_code"] = o.code.code;
    if (o.caterpillar) {
      item["y_vector"] = o.caterpillar->y;
    } else {
      item["y_vector"] = nullptr;
      item["tree"] = to_json(o.tree);
    }
    item["shape_index"] = o.shape_index ? Json(*o.shape_index) : Json(nullptr);
    opts.push_back(std::move(item));
  }
  j["optimizers"] = std::move(opts);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = claim_id(r.claim);
  j["universe"] = Json{{"min_n", r.universe.min_n},
                       {"max_n", r.universe.max_n},
                       {"min_k", r.universe.min_k},
                       {"max_k", r.universe.max_k},
                       {"search_space", r.universe.search_space}};
  j["instances_checked"] = r.instances_checked;
  j["status"] = to_string(r.status);
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"degree_sequence", f.degree_sequence},
                            {"witnesses", f.witnesses},
                            {"expected", f.expected},
                            {"observed", f.observed}});
  j["failures"] = std::move(failures);
  Json findings = Json::object();
  for (const auto& [name, value] : r.findings) findings[name] = value;
  j["findings"] = std::move(findings);
  if (!r.table.empty()) j["table"] = r.table;
  return j;
}

Json tree_summary(const Tree& t) {
  Json j;
  j["n"] = t.size();
  j["phi"] = to_decimal(count_subtrees(t));
  Json per_vertex = Json::array();
  for (const auto& c : count_all_containing(t)) per_vertex.push_back(to_decimal(c));
  j["subtrees_containing"] = std::move(per_vertex);
  j["diameter"] = diameter(t);
  j["is_caterpillar"] = is_caterpillar(t);
  if (auto c = caterpillar_recognize(t)) j["y_vector"] = c->y;
  j["wiener"] = to_decimal(wiener_index(t));
  return j;
}

}  // namespace treextremal
