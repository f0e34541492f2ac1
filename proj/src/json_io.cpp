#include "vgc/json_io.hpp"

#include <stdexcept>

namespace vgc {

namespace {

bool label_ambiguous(const ColoredGraph& g, const std::string& l) {
  bool in_t = false, in_a = false;
  for (const auto& x : g.ext_t_labels) in_t |= x == l;
  for (const auto& x : g.ext_a_labels) in_a |= x == l;
  return in_t && in_a;
}

std::string endpoint_str(const ColoredGraph& g, VertexId v) {
  switch (v.kind) {
    case VKind::ExtT:
      return (label_ambiguous(g, g.ext_t_labels[v.idx]) ? "t:" : "") + g.ext_t_labels[v.idx];
    case VKind::ExtA:
      return (label_ambiguous(g, g.ext_a_labels[v.idx]) ? "a:" : "") + g.ext_a_labels[v.idx];
    case VKind::IntT: return "t#" + std::to_string(v.idx);
    case VKind::IntA: return "a#" + std::to_string(v.idx);
  }
  return "?";
}

VertexId endpoint_parse(const ColoredGraph& g, const std::string& s) {
  if (s.rfind("t#", 0) == 0) return int_t_vertex(std::stoi(s.substr(2)));
  if (s.rfind("a#", 0) == 0) return int_a_vertex(std::stoi(s.substr(2)));
  if (s.rfind("t:", 0) == 0) {
    for (int i = 0; i < g.n_ext_t(); i++)
      if (g.ext_t_labels[i] == s.substr(2)) return ext_t(i);
    throw std::invalid_argument("unknown terrestrial endpoint: " + s);
  }
  if (s.rfind("a:", 0) == 0) {
    for (int i = 0; i < g.n_ext_a(); i++)
      if (g.ext_a_labels[i] == s.substr(2)) return ext_a(i);
    throw std::invalid_argument("unknown aerial endpoint: " + s);
  }
  if (label_ambiguous(g, s))
    throw std::invalid_argument("ambiguous endpoint " + s + ": use t:/a: prefix");
  for (int i = 0; i < g.n_ext_t(); i++)
    if (g.ext_t_labels[i] == s) return ext_t(i);
  for (int i = 0; i < g.n_ext_a(); i++)
    if (g.ext_a_labels[i] == s) return ext_a(i);
  throw std::invalid_argument("unknown endpoint: " + s);
}

}  // namespace

nlohmann::json graph_to_json(const ColoredGraph& g) {
  nlohmann::json j;
  j["m"] = g.params.m;
  j["n"] = g.params.n;
  j["ext_t"] = g.ext_t_labels;
  j["ext_a"] = g.ext_a_labels;
  j["int_t"] = g.int_t;
  j["int_a"] = g.int_a;
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({endpoint_str(g, e.a), endpoint_str(g, e.b),
                     e.kind == EKind::Full ? "full" : "dashed"});
  j["edges"] = edges;
  auto orient = nlohmann::json::array();
  for (const auto& c : g.carriers) {
    if (c.is_edge)
      orient.push_back("e" + std::to_string(c.edge));
    else
      orient.push_back(endpoint_str(g, c.v));
  }
  j["orientation"] = orient;
  if (g.order.type == OrderDatum::Type::Order) {
    auto ord = nlohmann::json::array();
    for (auto v : g.order.seq) ord.push_back(endpoint_str(g, v));
    j["order"] = ord;
  } else if (g.order.type == OrderDatum::Type::Lie) {
    auto lie = nlohmann::json::array();
    for (const auto& w : g.order.words) {
      auto word = nlohmann::json::array();
      for (auto v : w.letters) word.push_back(endpoint_str(g, v));
      lie.push_back(word);
    }
    j["lie"] = lie;
  }
  return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  ColoredGraph g;
  g.params.m = j.at("m").get<int>();
  g.params.n = j.at("n").get<int>();
  g.ext_t_labels = j.at("ext_t").get<std::vector<std::string>>();
  g.ext_a_labels = j.at("ext_a").get<std::vector<std::string>>();
  for (const auto& l : g.ext_t_labels)
    if (l.rfind("t#", 0) == 0 || l.rfind("a#", 0) == 0)
      throw std::invalid_argument("external labels must not look like t#i/a#i");
  for (const auto& l : g.ext_a_labels)
    if (l.rfind("t#", 0) == 0 || l.rfind("a#", 0) == 0)
      throw std::invalid_argument("external labels must not look like t#i/a#i");
  g.int_t = j.value("int_t", 0);
  g.int_a = j.value("int_a", 0);
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.a = endpoint_parse(g, je.at(0).get<std::string>());
    e.b = endpoint_parse(g, je.at(1).get<std::string>());
    std::string kind = je.at(2).get<std::string>();
    if (kind == "full")
      e.kind = EKind::Full;
    else if (kind == "dashed")
      e.kind = EKind::Dashed;
    else
      throw std::invalid_argument("edge kind must be full or dashed");
    g.edges.push_back(e);
  }
  if (j.contains("orientation")) {
    for (const auto& jc : j.at("orientation")) {
      std::string s = jc.get<std::string>();
      if (!s.empty() && s[0] == 'e' && s.find('#') == std::string::npos &&
          isdigit((unsigned char)s[1])) {
        g.carriers.push_back(Carrier::of_edge(std::stoi(s.substr(1))));
      } else {
        g.carriers.push_back(Carrier::of_vertex(endpoint_parse(g, s)));
      }
    }
  } else {
    g.carriers = canonical_carriers(g);
  }
  if (j.contains("order")) {
    g.order.type = OrderDatum::Type::Order;
    for (const auto& jo : j.at("order"))
      g.order.seq.push_back(endpoint_parse(g, jo.get<std::string>()));
  } else if (j.contains("lie")) {
    g.order.type = OrderDatum::Type::Lie;
    for (const auto& jw : j.at("lie")) {
      LieWord w;
      for (const auto& jv : jw) w.letters.push_back(endpoint_parse(g, jv.get<std::string>()));
      g.order.words.push_back(w);
    }
  } else if (g.params.m == 1) {
    g.order.type = OrderDatum::Type::Order;
    auto terr = g.terrestrial_vertices();
    g.order.seq = terr;
  }
  validate(g);
  return g;
}

nlohmann::json graph_sum_to_json(const GraphSum& s) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, tc] : s.terms) {
    (void)k;
    nlohmann::json t;
    t["graph"] = graph_to_json(tc.first);
    t["coef"] = tc.second.get_str();
    arr.push_back(t);
  }
  return arr;
}

nlohmann::json tensor_pair_sum_to_json(const TensorPairSum& s) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, t3] : s.terms) {
    (void)k;
    nlohmann::json t;
    t["left"] = graph_to_json(std::get<0>(t3));
    t["right"] = graph_to_json(std::get<1>(t3));
    t["coef"] = std::get<2>(t3).get_str();
    arr.push_back(t);
  }
  return arr;
}

nlohmann::json monomial_to_json(const PresMonomial& m, const Signature& sig,
                                const Rational& coef) {
  nlohmann::json j;
  if (sig.params.m == 1) {
    auto ord = nlohmann::json::array();
    for (int u : m.order) ord.push_back(sig.ext_t[u]);
    j["order"] = ord;
  } else {
    auto wt = nlohmann::json::array();
    for (auto [a, b] : m.wt) wt.push_back({sig.ext_t[a], sig.ext_t[b]});
    j["wt"] = wt;
  }
  auto w = nlohmann::json::array();
  for (auto [a, b] : m.w) w.push_back({sig.ext_a[a], sig.ext_a[b]});
  j["w"] = w;
  auto eta = nlohmann::json::array();
  for (int v : m.eta) eta.push_back(sig.ext_a[v]);
  j["eta"] = eta;
  j["coef"] = coef.get_str();
  return j;
}

nlohmann::json presentation_to_json(const PresentationElement& x) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, tc] : x.terms) {
    (void)k;
    arr.push_back(monomial_to_json(tc.first, x.sig, tc.second));
  }
  return arr;
}

}  // namespace vgc
