#include <gentle/algebra.hpp>
#include <gentle/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gentle {

GentleAlgebra::GentleAlgebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                             std::vector<std::pair<int, int>> relations)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  validate();
  label_half_edges();
}

bool GentleAlgebra::is_relation(int a, int b) const {
  return std::binary_search(relations_.begin(), relations_.end(), std::make_pair(a, b));
}

int GentleAlgebra::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

int GentleAlgebra::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  return -1;
}

bool GentleAlgebra::trivially_graded() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.degree == 0; });
}

void GentleAlgebra::validate() {
  const int n = vertex_count();
  if (n == 0) throw Error(ErrorKind::SyntaxError, "presentation has no vertices");
  std::set<std::string> names;
  for (const auto& v : vertices_) {
    if (!names.insert(v).second) throw Error(ErrorKind::SyntaxError, "duplicate vertex '" + v + "'");
  }
  std::set<std::string> ids;
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!ids.insert(a.id).second) throw Error(ErrorKind::SyntaxError, "duplicate arrow '" + a.id + "'");
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw Error(ErrorKind::SyntaxError, "arrow '" + a.id + "' has an unknown endpoint");
    out_[static_cast<std::size_t>(a.source)].push_back(static_cast<int>(i));
    in_[static_cast<std::size_t>(a.target)].push_back(static_cast<int>(i));
  }
  for (const auto& [a, b] : relations_) {
    if (a < 0 || b < 0 || a >= arrow_count() || b >= arrow_count())
      throw Error(ErrorKind::SyntaxError, "relation refers to an unknown arrow");
    if (arrow(a).target != arrow(b).source)
      throw Error(ErrorKind::NotGentle, "relation (" + arrow(a).id + ", " + arrow(b).id +
                                            ") is not a composable pair");
  }
  for (int v = 0; v < n; ++v) {
    const std::string& name = vertices_[static_cast<std::size_t>(v)];
    if (outgoing(v).size() > 2)
      throw Error(ErrorKind::NotGentle, "more than two arrows start at vertex '" + name + "'");
    if (incoming(v).size() > 2)
      throw Error(ErrorKind::NotGentle, "more than two arrows end at vertex '" + name + "'");
  }
  for (int a = 0; a < arrow_count(); ++a) {
    int rel = 0, free = 0;
    for (int b : outgoing(arrow(a).target)) (is_relation(a, b) ? rel : free)++;
    if (rel > 1)
      throw Error(ErrorKind::NotGentle, "arrow '" + arrow(a).id + "' starts two relations");
    if (free > 1)
      throw Error(ErrorKind::NotGentle,
                  "arrow '" + arrow(a).id + "' has two relation-free successors");
    rel = free = 0;
    for (int b : incoming(arrow(a).source)) (is_relation(b, a) ? rel : free)++;
    if (rel > 1) throw Error(ErrorKind::NotGentle, "arrow '" + arrow(a).id + "' ends two relations");
    if (free > 1)
      throw Error(ErrorKind::NotGentle,
                  "arrow '" + arrow(a).id + "' has two relation-free predecessors");
  }
}

void GentleAlgebra::label_half_edges() {
  out_end_.assign(arrows_.size(), -1);
  in_end_.assign(arrows_.size(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& ins = incoming(v);
    const auto& outs = outgoing(v);
    const int k = static_cast<int>(ins.size() + outs.size());
    bool found = false;
    for (int mask = 0; mask < (1 << k) && !found; ++mask) {
      auto end_in = [&](std::size_t i) { return (mask >> i) & 1; };
      auto end_out = [&](std::size_t j) { return (mask >> (ins.size() + j)) & 1; };
      bool ok = true;
      if (ins.size() == 2 && end_in(0) == end_in(1)) ok = false;
      if (outs.size() == 2 && end_out(0) == end_out(1)) ok = false;
      for (std::size_t i = 0; ok && i < ins.size(); ++i)
        for (std::size_t j = 0; ok && j < outs.size(); ++j)
          if (is_relation(ins[i], outs[j]) != (end_in(i) == end_out(j))) ok = false;
      if (!ok) continue;
      found = true;
      for (std::size_t i = 0; i < ins.size(); ++i) in_end_[static_cast<std::size_t>(ins[i])] = end_in(i);
      for (std::size_t j = 0; j < outs.size(); ++j) out_end_[static_cast<std::size_t>(outs[j])] = end_out(j);
    }
    if (!found)
      throw Error(ErrorKind::NotGentle,
                  "no consistent half-edge labelling at vertex '" + vertices_[static_cast<std::size_t>(v)] + "'");
  }
}

int GentleAlgebra::out_slot(HalfEdge h) const {
  for (int a : outgoing(h.vertex))
    if (out_end(a) == h.end) return a;
  return -1;
}

int GentleAlgebra::in_slot(HalfEdge h) const {
  for (int a : incoming(h.vertex))
    if (in_end(a) == h.end) return a;
  return -1;
}

bool GentleAlgebra::is_finite_dimensional() const {
  // Each arrow has at most one relation-free successor, so nonzero paths are
  // unbounded exactly when this successor map has a cycle.
  std::vector<int> next(arrows_.size(), -1);
  for (int a = 0; a < arrow_count(); ++a)
    for (int b : outgoing(arrow(a).target))
      if (!is_relation(a, b)) next[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < arrow_count(); ++a) {
    int x = a;
    for (int step = 0; step <= arrow_count(); ++step) {
      x = next[static_cast<std::size_t>(x)];
      if (x < 0) break;
    }
    if (x >= 0) return false;
  }
  return true;
}

GentleAlgebra GentleAlgebra::with_degrees(const std::vector<int>& degrees) const {
  std::vector<Arrow> arrows = arrows_;
  for (std::size_t i = 0; i < arrows.size() && i < degrees.size(); ++i) arrows[i].degree = degrees[i];
  return GentleAlgebra(vertices_, std::move(arrows), relations_);
}

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string field_string(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorKind::SyntaxError, where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

GentleAlgebra parse_presentation(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::SyntaxError, "top level: expected an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorKind::SyntaxError, "vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
    vertices.push_back(field_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));

  auto vertex_of = [&](const std::string& name, const std::string& where) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw Error(ErrorKind::SyntaxError, where + ": unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices.begin());
  };

  std::vector<Arrow> arrows;
  const json arrows_doc = doc.value("arrows", json::array());
  if (!arrows_doc.is_array()) throw Error(ErrorKind::SyntaxError, "arrows: expected an array");
  for (std::size_t i = 0; i < arrows_doc.size(); ++i) {
    const std::string where = "arrows[" + std::to_string(i) + "]";
    const json& a = arrows_doc[i];
    if (!a.is_object()) throw Error(ErrorKind::SyntaxError, where + ": expected an object");
    for (const char* key : {"id", "from", "to"})
      if (!a.contains(key)) throw Error(ErrorKind::SyntaxError, where + ": missing field '" + key + "'");
    Arrow arrow;
    arrow.id = field_string(a["id"], where + ".id");
    arrow.source = vertex_of(field_string(a["from"], where + ".from"), where + ".from");
    arrow.target = vertex_of(field_string(a["to"], where + ".to"), where + ".to");
    if (a.contains("degree")) {
      if (!a["degree"].is_number_integer())
        throw Error(ErrorKind::SyntaxError, where + ".degree: expected an integer");
      arrow.degree = a["degree"].get<int>();
    }
    arrows.push_back(std::move(arrow));
  }

  auto arrow_of = [&](const std::string& id, const std::string& where) {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].id == id) return static_cast<int>(k);
    throw Error(ErrorKind::SyntaxError, where + ": unknown arrow '" + id + "'");
  };

  std::vector<std::pair<int, int>> relations;
  const json rel_doc = doc.value("relations", json::array());
  if (!rel_doc.is_array()) throw Error(ErrorKind::SyntaxError, "relations: expected an array");
  for (std::size_t i = 0; i < rel_doc.size(); ++i) {
    const std::string where = "relations[" + std::to_string(i) + "]";
    const json& r = rel_doc[i];
    if (!r.is_array() || r.size() != 2)
      throw Error(ErrorKind::NotGentle, where + ": relations must be pairs of arrows");
    int a = arrow_of(field_string(r[0], where + "[0]"), where + "[0]");
    int b = arrow_of(field_string(r[1], where + "[1]"), where + "[1]");
    if (arrows[static_cast<std::size_t>(a)].target != arrows[static_cast<std::size_t>(b)].source)
      throw Error(ErrorKind::NotGentle, where + ": arrows '" + arrows[static_cast<std::size_t>(a)].id +
                                            "' and '" + arrows[static_cast<std::size_t>(b)].id +
                                            "' are not composable");
    relations.emplace_back(a, b);
  }
  return GentleAlgebra(std::move(vertices), std::move(arrows), std::move(relations));
}

GentleAlgebra load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.kind())).size() + 2));
  }
}

std::string presentation_to_json(const GentleAlgebra& alg) {
  nlohmann::ordered_json doc;
  doc["vertices"] = alg.vertex_names();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : alg.arrows()) {
    nlohmann::ordered_json j;
    j["id"] = a.id;
    j["from"] = alg.vertex_names()[static_cast<std::size_t>(a.source)];
    j["to"] = alg.vertex_names()[static_cast<std::size_t>(a.target)];
    j["degree"] = a.degree;
    doc["arrows"].push_back(j);
  }
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : alg.relations()) doc["relations"].push_back({alg.arrow(a).id, alg.arrow(b).id});
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Path basis

PathBasis::PathBasis(const GentleAlgebra& alg) {
  if (!alg.is_finite_dimensional())
    throw Error(ErrorKind::InfiniteDimensional, "a relation-free oriented cycle gives infinitely many paths");
  const int n = alg.vertex_count();
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    identity_.push_back(static_cast<int>(paths_.size()));
    paths_.push_back(Path{v, v, {}, 0});
    frontier.push_back(identity_.back());
  }
  arrow_path_.assign(static_cast<std::size_t>(alg.arrow_count()), -1);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int p : frontier) {
      const Path cur = paths_[static_cast<std::size_t>(p)];
      for (int b : alg.outgoing(cur.target)) {
        if (!cur.arrows.empty() && alg.is_relation(cur.arrows.back(), b)) continue;
        Path ext = cur;
        ext.arrows.push_back(b);
        ext.target = alg.arrow(b).target;
        ext.degree += alg.arrow(b).degree;
        if (ext.arrows.size() == 1) arrow_path_[static_cast<std::size_t>(b)] = static_cast<int>(paths_.size());
        next.push_back(static_cast<int>(paths_.size()));
        paths_.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  between_.assign(static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < size(); ++i) {
    const Path& p = paths_[static_cast<std::size_t>(i)];
    between_[static_cast<std::size_t>(p.source)][static_cast<std::size_t>(p.target)].push_back(i);
    lookup_[{p.source, p.arrows}] = i;
  }
  compose_.assign(static_cast<std::size_t>(size() * size()), -1);
  for (int i = 0; i < size(); ++i) {
    const Path& p = paths_[static_cast<std::size_t>(i)];
    for (int j = 0; j < size(); ++j) {
      const Path& q = paths_[static_cast<std::size_t>(j)];
      if (p.target != q.source) continue;
      if (!p.arrows.empty() && !q.arrows.empty() && alg.is_relation(p.arrows.back(), q.arrows.front())) continue;
      std::vector<int> arrows = p.arrows;
      arrows.insert(arrows.end(), q.arrows.begin(), q.arrows.end());
      compose_[static_cast<std::size_t>(i * size() + j)] = find(p.source, arrows);
    }
  }
}

const std::vector<int>& PathBasis::between(int u, int v) const {
  return between_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

int PathBasis::find(int source, const std::vector<int>& arrows) const {
  auto it = lookup_.find({source, arrows});
  return it == lookup_.end() ? -1 : it->second;
}

int PathBasis::strip_prefix(int p, int prefix) const {
  const Path& a = path(p);
  const Path& b = path(prefix);
  if (a.source != b.source || b.arrows.size() > a.arrows.size()) return -1;
  if (!std::equal(b.arrows.begin(), b.arrows.end(), a.arrows.begin())) return -1;
  return find(b.target, std::vector<int>(a.arrows.begin() + static_cast<long>(b.arrows.size()), a.arrows.end()));
}

int PathBasis::strip_suffix(int p, int suffix) const {
  const Path& a = path(p);
  const Path& b = path(suffix);
  if (a.target != b.target || b.arrows.size() > a.arrows.size()) return -1;
  if (!std::equal(b.arrows.rbegin(), b.arrows.rend(), a.arrows.rbegin())) return -1;
  return find(a.source, std::vector<int>(a.arrows.begin(), a.arrows.end() - static_cast<long>(b.arrows.size())));
}

std::string PathBasis::name(int p, const GentleAlgebra& alg) const {
  const Path& q = path(p);
  if (q.arrows.empty()) return "e" + alg.vertex_names()[static_cast<std::size_t>(q.source)];
  std::string s;
  for (int a : q.arrows) s += (s.empty() ? "" : "*") + alg.arrow(a).id;
  return s;
}

// ---------------------------------------------------------------------------
// Threads

ThreadDecomposition threads(const GentleAlgebra& alg) {
  ThreadDecomposition out;
  const int n = alg.vertex_count();

  // Forbidden threads walk half-edges along relations.
  std::set<HalfEdge> seen;
  auto walk_forbidden = [&](HalfEdge start, bool cyclic) {
    Thread t;
    t.kind = ThreadKind::Forbidden;
    t.cyclic = cyclic;
    HalfEdge h = start;
    while (true) {
      seen.insert(h);
      t.vertices.push_back(h.vertex);
      t.slots.push_back(h.end);
      int f = alg.out_slot(h);
      if (f < 0) break;
      t.arrows.push_back(f);
      h = HalfEdge{alg.arrow(f).target, alg.in_end(f)};
      if (cyclic && h == start) break;
    }
    out.forbidden.push_back(std::move(t));
  };
  for (int v = 0; v < n; ++v)
    for (int e = 0; e < 2; ++e)
      if (alg.in_slot({v, e}) < 0) walk_forbidden({v, e}, false);
  for (int v = 0; v < n; ++v)
    for (int e = 0; e < 2; ++e)
      if (!seen.count({v, e})) walk_forbidden({v, e}, true);

  // Permitted threads walk sides.  Side A of v pairs the incoming slot of
  // end 1 with the outgoing slot of end 0; side B is the other pairing.
  auto side_in = [&](int v, int side) { return alg.in_slot({v, side == 0 ? 1 : 0}); };
  auto side_out = [&](int v, int side) { return alg.out_slot({v, side == 0 ? 0 : 1}); };
  std::set<std::pair<int, int>> visited;
  auto walk_permitted = [&](int v, int side, bool cyclic) {
    Thread t;
    t.kind = ThreadKind::Permitted;
    t.cyclic = cyclic;
    const std::pair<int, int> start{v, side};
    while (true) {
      visited.insert({v, side});
      t.vertices.push_back(v);
      t.slots.push_back(side);
      int b = side_out(v, side);
      if (b < 0) break;
      t.arrows.push_back(b);
      v = alg.arrow(b).target;
      side = alg.in_end(b) == 1 ? 0 : 1;
      if (cyclic && std::make_pair(v, side) == start) break;
    }
    out.permitted.push_back(std::move(t));
  };
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 2; ++s)
      if (side_in(v, s) < 0) walk_permitted(v, s, false);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 2; ++s)
      if (!visited.count({v, s})) walk_permitted(v, s, true);
  return out;
}

// ---------------------------------------------------------------------------
// Cartan and Coxeter data

IntMatrix cartan_matrix(const PathBasis& basis, int vertex_count) {
  IntMatrix c(static_cast<std::size_t>(vertex_count), std::vector<Integer>(static_cast<std::size_t>(vertex_count), 0));
  for (int u = 0; u < vertex_count; ++u)
    for (int v = 0; v < vertex_count; ++v)
      c[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<long>(basis.between(u, v).size());
  return c;
}

std::map<int, IntMatrix> graded_cartan(const PathBasis& basis, int vertex_count) {
  std::map<int, IntMatrix> out;
  for (int i = 0; i < basis.size(); ++i) {
    const Path& p = basis.path(i);
    auto [it, fresh] = out.try_emplace(p.degree);
    if (fresh)
      it->second.assign(static_cast<std::size_t>(vertex_count),
                        std::vector<Integer>(static_cast<std::size_t>(vertex_count), 0));
    it->second[static_cast<std::size_t>(p.source)][static_cast<std::size_t>(p.target)] += 1;
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n - 1][n - 1]);
}

IntegerPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntegerPolynomial>> a(n, std::vector<IntegerPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = IntegerPolynomial::constant(-m[i][j]);
      if (i == j) a[i][j] = a[i][j] + IntegerPolynomial::monomial(1, 1);
    }
  if (n == 0) return IntegerPolynomial::constant(1);
  IntegerPolynomial prev = IntegerPolynomial::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntegerPolynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        IntegerPolynomial q;
        if (!num.divide_exact(prev, q))
          throw Error(ErrorKind::NotPolynomial, "fraction-free elimination produced an inexact quotient");
        a[i][j] = q;
      }
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

CoxeterData coxeter(const GentleAlgebra& alg) {
  PathBasis basis(alg);
  const int n = alg.vertex_count();
  CoxeterData cd;
  cd.cartan = cartan_matrix(basis, n);
  Integer det = determinant(cd.cartan);
  if (abs(det) != 1)
    throw Error(ErrorKind::CartanNotUnimodular, "det C = " + det.get_str());

  // Solve C^T X = C exactly; then Phi = -X.
  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> aug(N, std::vector<Rational>(2 * N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      aug[i][j] = cd.cartan[j][i];
      aug[i][N + j] = cd.cartan[i][j];
    }
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (sgn(aug[piv][c]) == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || sgn(aug[r][c]) == 0) continue;
      Rational s = aug[r][c];
      for (std::size_t k = 0; k < 2 * N; ++k) aug[r][k] -= s * aug[c][k];
    }
  }
  cd.coxeter.assign(N, std::vector<Integer>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Rational v = -aug[i][N + j];
      if (v.get_den() != 1) throw Error(ErrorKind::CartanNotUnimodular, "Coxeter matrix is not integral");
      cd.coxeter[i][j] = v.get_num();
    }
  cd.char_poly = characteristic_polynomial(cd.coxeter);
  cd.cyclotomic_certificate = is_cyclotomic_product(cd.char_poly);
  for (const auto& z : distinct_roots(cd.char_poly)) {
    long double r = std::abs(z);
    cd.root_moduli.push_back(r);
    cd.spectral_radius = std::max(cd.spectral_radius, r);
  }
  return cd;
}

long double log_spectral_radius(const CoxeterData& cd) { return std::log(cd.spectral_radius); }

}  // namespace gentle

namespace gentle {

bool has_finite_global_dimension(const GentleAlgebra& alg) {
  const int n = alg.arrow_count();
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b : alg.outgoing(alg.arrows()[static_cast<std::size_t>(a)].target))
      if (alg.is_relation(a, b)) next[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a) {
    int x = a;
    for (int step = 0; step < n && x >= 0; ++step) {
      x = next[static_cast<std::size_t>(x)];
      if (x == a) return false;
    }
  }
  return true;
}

}  // namespace gentle
