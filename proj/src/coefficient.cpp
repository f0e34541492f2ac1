#include "vgc/coefficient.hpp"

#include <stdexcept>

namespace vgc {

void CoefficientFunctional::add_pattern(const ColoredGraph& pattern, const Rational& value) {
  auto [cg, s] = canonicalize(pattern);
  if (s == 0 || value == 0) return;
  if (cg.n_ext_t() || cg.n_ext_a())
    throw std::invalid_argument("coefficient patterns have no external vertices");
  for (const auto& e : cg.edges)
    if (e.tadpole())
      throw std::invalid_argument("coefficient patterns must be tadpole-free");
  support[cg.encode()] = {cg, value * s};
  vertex_shapes.insert({cg.int_t, cg.int_a});
  edge_counts.insert((int)cg.edges.size());
}

Rational CoefficientFunctional::eval(const ColoredGraph& pattern) const {
  if (!vertex_shapes.count({pattern.int_t, pattern.int_a})) return 0;
  auto [cg, s] = canonicalize(pattern);
  if (s == 0) return 0;
  auto it = support.find(cg.encode());
  if (it == support.end()) return 0;
  return it->second.second * s;
}

CoefficientFunctional mu_functional(Params p) {
  CoefficientFunctional f;
  ColoredGraph g;
  g.params = p;
  g.int_a = 2;
  g.edges.push_back({int_a_vertex(0), int_a_vertex(1), EKind::Full});
  g.carriers = canonical_carriers(g);
  if (p.m == 1) g.order.type = OrderDatum::Type::Order;
  f.add_pattern(g, 1);
  return f;
}

CoefficientFunctional c0_functional(Params p) {
  CoefficientFunctional f;
  // terrestrial-aerial full edge
  {
    ColoredGraph g;
    g.params = p;
    g.int_t = 1;
    g.int_a = 1;
    g.edges.push_back({int_t_vertex(0), int_a_vertex(0), EKind::Full});
    g.carriers = canonical_carriers(g);
    if (p.m == 1) {
      g.order.type = OrderDatum::Type::Order;
      g.order.seq = {int_t_vertex(0)};
    }
    f.add_pattern(g, 1);
  }
  if (p.m >= 2) {
    // dashed terrestrial pair
    ColoredGraph g;
    g.params = p;
    g.int_t = 2;
    g.edges.push_back({int_t_vertex(0), int_t_vertex(1), EKind::Dashed});
    g.carriers = canonical_carriers(g);
    f.add_pattern(g, 1);
  } else {
    // edgeless terrestrial pair; the functional takes 1 on the Lie word
    // [x,y] and 0 on the disconnected product, so each linear order sees 1/2
    ColoredGraph g;
    g.params = p;
    g.int_t = 2;
    g.order.type = OrderDatum::Type::Order;
    g.order.seq = {int_t_vertex(0), int_t_vertex(1)};
    g.carriers = canonical_carriers(g);
    f.add_pattern(g, Rational(1, 2));
  }
  return f;
}

}  // namespace vgc
