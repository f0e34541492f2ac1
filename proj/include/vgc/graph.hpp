#pragma once

// Colored oriented graphs for the two-colored (terrestrial/aerial) graph
// cooperads: vertices come in four flavors (external/internal x
// terrestrial/aerial), edges are full (degree n-1) or dashed (degree m-1,
// terrestrial-terrestrial only).  A graph carries an orientation datum: a
// total order on the parity-odd carriers plus a direction on each
// direction-sensitive edge.  Graphs are manipulated as canonical
// representatives with transported signs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vgc {

using Rational = mpq_class;

struct Params {
  int m = 1;
  int n = 3;

  // colored invariant: n - 2 >= m >= 1
  bool valid_colored() const { return m >= 1 && n - 2 >= m; }

  // parity-odd carriers
  bool full_edges_ordered() const { return n % 2 == 0; }    // deg n-1 odd
  bool dashed_edges_ordered() const { return m % 2 == 0; }  // deg m-1 odd
  bool aerial_vertices_ordered() const { return n % 2 == 1; }
  bool terr_vertices_ordered() const { return m % 2 == 1; }

  // direction-sensitive edges
  bool full_edges_directed() const { return n % 2 == 1; }
  bool dashed_edges_directed() const { return m % 2 == 1; }

  bool operator==(const Params&) const = default;
};

enum class VKind : uint8_t { ExtT = 0, ExtA = 1, IntT = 2, IntA = 3 };

struct VertexId {
  VKind kind = VKind::ExtT;
  int idx = 0;

  bool terrestrial() const { return kind == VKind::ExtT || kind == VKind::IntT; }
  bool aerial() const { return !terrestrial(); }
  bool internal() const { return kind == VKind::IntT || kind == VKind::IntA; }
  bool external() const { return !internal(); }

  auto operator<=>(const VertexId&) const = default;
};

inline VertexId ext_t(int i) { return {VKind::ExtT, i}; }
inline VertexId ext_a(int i) { return {VKind::ExtA, i}; }
inline VertexId int_t_vertex(int i) { return {VKind::IntT, i}; }
inline VertexId int_a_vertex(int i) { return {VKind::IntA, i}; }

enum class EKind : uint8_t { Full = 0, Dashed = 1 };

struct Edge {
  VertexId a, b;
  EKind kind = EKind::Full;
  bool tadpole() const { return a == b; }
  bool touches(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return a == v ? b : a; }
  // full edges sort before dashed ones; the orientation word groups the two
  // kinds into separate blocks
  friend bool operator<(const Edge& x, const Edge& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  bool operator==(const Edge&) const = default;
};

// One entry of the orientation word: either an edge (by index into the edge
// list) or an internal vertex.
struct Carrier {
  bool is_edge = true;
  int edge = -1;
  VertexId v;

  static Carrier of_edge(int i) { return {true, i, {}}; }
  static Carrier of_vertex(VertexId v) { return {false, -1, v}; }
  bool operator==(const Carrier& o) const {
    return is_edge == o.is_edge && (is_edge ? edge == o.edge : v == o.v);
  }
};

// m = 1 decorations.  A Lie word is stored as a left-normed sequence
// (w0,w1,...,wr) meaning [[..[w0,w1],w2]..,wr]; basis words have w0 minimal.
struct LieWord {
  std::vector<VertexId> letters;
  auto operator<=>(const LieWord&) const = default;
};

struct OrderDatum {
  enum class Type : uint8_t { None = 0, Order = 1, Lie = 2 };
  Type type = Type::None;
  std::vector<VertexId> seq;    // Type::Order: all terrestrial vertices
  std::vector<LieWord> words;   // Type::Lie: partition into Lie words
  bool operator==(const OrderDatum&) const = default;
};

struct ColoredGraph {
  Params params;
  std::vector<std::string> ext_t_labels;
  std::vector<std::string> ext_a_labels;
  int int_t = 0;
  int int_a = 0;
  std::vector<Edge> edges;
  std::vector<Carrier> carriers;  // orientation word over the odd carriers
  OrderDatum order;

  int n_ext_t() const { return (int)ext_t_labels.size(); }
  int n_ext_a() const { return (int)ext_a_labels.size(); }
  int n_vertices() const { return n_ext_t() + n_ext_a() + int_t + int_a; }
  int n_full() const;
  int n_dashed() const;

  bool vertex_exists(VertexId v) const;
  std::vector<VertexId> all_vertices() const;
  std::vector<VertexId> terrestrial_vertices() const;

  // valence: tadpoles count twice
  int valence(VertexId v) const;
  std::vector<int> incident_edges(VertexId v) const;

  std::string encode() const;
  bool same_signature(const ColoredGraph& o) const;
};

// Empty graph of a signature (identity orientation, trivial order for m=1).
ColoredGraph empty_graph(Params p, const std::vector<std::string>& ut,
                         const std::vector<std::string>& va);

// Expected canonical orientation word: odd edge kinds in edge-list order,
// then internal terrestrial vertices by index, then internal aerial ones.
std::vector<Carrier> canonical_carriers(const ColoredGraph& g);

bool edge_ordered(const Params& p, EKind k);
bool edge_directed(const Params& p, EKind k);

// Throws std::invalid_argument if the graph is structurally malformed.
void validate(const ColoredGraph& g);

// Rewrites g into normalized form (endpoints sorted, edges sorted, carrier
// word canonical) and returns the transported sign; 0 if g is identified
// with minus itself by the local relations (directed tadpole, repeated odd
// edge carrier).
int normalize(ColoredGraph& g);

// Canonical representative: lexicographically minimal normalized encoding
// over relabelings of internal vertices within each color class, with the
// accumulated sign; sign 0 when some relabeling fixes the graph but reverses
// the orientation.  Lie-decorated graphs are treated as labeled objects and
// only normalized.
std::pair<ColoredGraph, int> canonicalize(const ColoredGraph& g);

int degree(const ColoredGraph& g);

enum class DegreeShift { None, GC, VGC };  // +n resp. +m
int degree(const ColoredGraph& g, DegreeShift shift);

int loop_order(const ColoredGraph& g);

// Connected components over edges (every vertex is a node; decorations are
// ignored).  Returns component index per vertex in all_vertices() order.
std::vector<int> edge_components(const ColoredGraph& g, int* count);

bool is_connected(const ColoredGraph& g);
bool has_internal_edge_component(const ColoredGraph& g);

class GraphSum {
 public:
  // term key -> (canonical graph, coefficient); zero coefficients erased
  std::map<std::string, std::pair<ColoredGraph, Rational>> terms;

  void add(const ColoredGraph& canonical_g, const Rational& c);
  void add_canonicalized(const ColoredGraph& g, const Rational& c);
  void add_sum(const GraphSum& other, const Rational& scale = 1);
  bool zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
};

// Gluing product along the shared external vertices.  For m = 1 order data
// the product is the sum over all interleavings of the two linear orders
// that agree on the common external terrestrial vertices (pointwise product
// of dual-basis functions); for Lie decorations it is the forest union.
GraphSum hopf_product(const ColoredGraph& g1, const ColoredGraph& g2);

// sign of moving the listed carriers (edge indices / internal vertices) to
// the back of the orientation word, keeping relative orders
int unshuffle_back_sign(const ColoredGraph& g, const std::vector<int>& removed_edges,
                        const std::vector<VertexId>& removed_vertices);

}  // namespace vgc
