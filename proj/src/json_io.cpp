#include "shiish/json_io.hpp"

#include "shiish/error.hpp"
#include "shiish/parking.hpp"

namespace shiish {

Json to_json(const Word& a) { return Json(std::vector<int>(a.values().begin(), a.values().end())); }

Word word_from_json(const Json& j) {
  require(j.is_array(), "word must be a JSON array");
  std::vector<int> v;
  for (const auto& e : j) {
    require(e.is_number_integer(), "word entries must be integers");
    v.push_back(e.get<int>());
  }
  return Word(std::move(v));
}

Json classification_json(const Word& a, const std::vector<int>& ks) {
  Json j;
  j["word"] = to_json(a);
  j["parking"] = is_parking_function(a);
  j["ish"] = is_ish_parking(a);
  Json partial = Json::object();
  Json sigma = Json::object();
  for (int k : ks) {
    partial[std::to_string(k)] = is_k_partial(a, k);
    const auto s = sigma_characterization(a, k);
    sigma[std::to_string(k)] =
        s ? Json(std::vector<int>(s->images().begin(), s->images().end())) : Json(nullptr);
  }
  j["partial"] = std::move(partial);
  j["centre"] = centre(a).members;
  j["sigma"] = std::move(sigma);
  return j;
}

namespace {

Json arcs_json(const std::vector<EncodedArc>& arcs) {
  Json out = Json::array();
  for (const auto& [i, j] : arcs) out.push_back({i, j});
  return out;
}

}  // namespace

Json to_json(const BurnReport& br) {
  return Json{{"burnt", br.burnt}, {"tree", arcs_json(br.tree)}, {"damp", arcs_json(br.damp)},
              {"success", br.success}};
}

Json region_json(const Arrangement& arr, const LabelledRegion& lr) {
  const auto d = describe(arr, lr.region);
  Json H = Json::array();
  for (const auto& t : d.H) H.push_back({t.i, t.j, t.a});
  Json I = Json::array();
  for (const auto& p : d.I) I.push_back({p.i, p.j});
  Json dia = Json::array();
  for (const auto& t : draw_diagram(d).arcs) dia.push_back({t.i, t.j, t.a});
  return Json{{"signs", lr.region.signs},
              {"w", std::vector<int>(d.w.images().begin(), d.w.images().end())},
              {"H", std::move(H)},
              {"I", std::move(I)},
              {"label", std::vector<int>(lr.label.entries().begin(), lr.label.entries().end())},
              {"diagram", std::move(dia)}};
}

Json to_json(const EquivalenceReport& rep) {
  Json mism = Json::array();
  for (const auto& m : rep.mismatches) {
    Json l = Json::array(), r = Json::array();
    for (const auto& w : m.only_left) l.push_back(to_json(w));
    for (const auto& w : m.only_right) r.push_back(to_json(w));
    mism.push_back({{"left", m.left}, {"right", m.right}, {"only_left", l}, {"only_right", r}});
  }
  Json counts = Json::object();
  for (const auto& [name, c] : rep.counts) counts[name] = c;
  return Json{{"n", rep.n},
              {"k", rep.k},
              {"expected", rep.expected},
              {"counts", counts},
              {"labels_injective", rep.labels_injective},
              {"sigma_method", rep.sigma_method},
              {"mismatches", mism},
              {"pass", rep.pass}};
}

Json to_json(const ArtifactCheck& c) {
  return Json{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

Json to_json(const CountRow& row) {
  return Json{{"n", row.n},
              {"k", row.k},
              {"regions", row.regions},
              {"expected_regions", row.expected_regions},
              {"tail_parkers", row.tail_parkers},
              {"tail_formula", row.tail_formula},
              {"pass", row.pass}};
}

}  // namespace shiish
