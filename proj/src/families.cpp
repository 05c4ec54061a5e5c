#include "bdim/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace bdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Appends a path of `length` new vertices starting at id `next`, the first
// one joined to `anchor`. Returns the id after the last new vertex.
int attach_path(std::vector<Edge>& edges, Vertex anchor, int length, int next) {
  Vertex prev = anchor;
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return next;
}

int ipow3(int e) {
  int r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph spider_graph(std::span<const SpiderLegs> legs) {
  int n = 1;
  for (auto [length, count] : legs) {
    require(length >= 1 && count >= 0, "spider legs need length >= 1, count >= 0");
    n += length * count;
  }
  std::vector<Edge> edges;
  int next = 1;
  for (auto [length, count] : legs)
    for (int c = 0; c < count; ++c) next = attach_path(edges, 0, length, next);
  return Graph(n, edges);
}

Graph f_graph(int k) {
  require(k >= 0, "F_k needs k >= 0");
  const int n = (k + 1) + k * (k + 1) / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  int next = k + 1;
  for (int i = 1; i <= k; ++i) next = attach_path(edges, i, i, next);
  return Graph(n, edges);
}

int x_product_vertex(int k, std::span<const int> coords) {
  require(static_cast<int>(coords.size()) == k + 1, "X_k vertex needs k+1 coordinates");
  int id = 0;
  for (int c : coords) {
    require(c >= 0 && c <= 2, "X_k coordinate must be 0, 1 or 2");
    id = id * 3 + c;
  }
  return id;
}

int x_apex(int k, int j) {
  require(j >= 1 && j <= k + 1, "X_k apex index must be in 1..k+1");
  return ipow3(k + 1) + (j - 1);
}

Graph x_graph(int k) {
  require(k >= 0 && k <= 8, "X_k needs 0 <= k <= 8");
  const Graph first = path_graph(3);           // a-b-c
  const Graph rest = Graph(3, {{0, 1}});       // ab, c isolated
  Graph product = first;
  for (int i = 0; i < k; ++i) product = cartesian_product(product, rest);

  const int cube = ipow3(k + 1);
  std::vector<Edge> edges(product.edges());
  for (int j = 1; j <= k + 1; ++j) {
    const int apex = x_apex(k, j);
    const int place = ipow3(k + 1 - j);  // weight of coordinate j
    for (int v = 0; v < cube; ++v)
      if ((v / place) % 3 == 0) edges.emplace_back(apex, v);
  }
  return Graph(cube + k + 1, edges);
}

Graph grid_graph(int m, int n) {
  require(m >= 1 && n >= 1, "grid needs m, n >= 1");
  return cartesian_product(path_graph(m), path_graph(n));
}

HLayout h_layout(int k) {
  require(k >= 2, "H_k needs k >= 2");
  HLayout l;
  l.k = k;
  l.spine_last = 3 * k - 2;
  l.cut = (3 * k - 2) / 2;
  // A cycle needs three vertices; floor(k/2) < 3 for k < 6.
  l.cycle_length = std::max(3, k / 2);
  int pendant = 0;
  for (int j = 1; j <= l.cut - 1; ++j) pendant += j;
  for (int j = l.cut + 2; j <= 3 * k - 3; ++j) pendant += 3 * k - 2 - j;
  l.order = (l.spine_last + 1) + pendant + (l.cycle_length - 2) +
            2 * (6 * k) * (3 * k);
  return l;
}

Graph h_graph(int k) {
  const HLayout l = h_layout(k);
  std::vector<Edge> edges;
  for (int j = 0; j < l.spine_last; ++j) edges.emplace_back(j, j + 1);
  int next = l.spine_last + 1;
  for (int j = 1; j <= l.cut - 1; ++j) next = attach_path(edges, j, j, next);
  for (int j = l.cut + 2; j <= 3 * k - 3; ++j)
    next = attach_path(edges, j, 3 * k - 2 - j, next);
  // Close v_cut .. v_{cut+1} into a cycle through cycle_length - 2 new vertices.
  next = attach_path(edges, l.cut, l.cycle_length - 2, next);
  edges.emplace_back(next - 1, l.cut + 1);
  for (Vertex center : {0, l.spine_last})
    for (int leg = 0; leg < 6 * k; ++leg) next = attach_path(edges, center, 3 * k, next);
  return Graph(next, edges);
}

Graph plus_isolated(const Graph& g) { return disjoint_union(g, Graph(1, {})); }

Graph generate(const FamilySpec& spec) {
  auto param = [&](std::size_t i) {
    require(spec.params.size() > i, spec.describe() + ": missing parameter");
    return spec.params[i];
  };
  auto operand = [&](std::size_t i) -> const FamilySpec& {
    require(spec.operands.size() > i, spec.describe() + ": missing operand");
    return spec.operands[i];
  };
  switch (spec.family) {
    case Family::path: return path_graph(param(0));
    case Family::cycle: return cycle_graph(param(0));
    case Family::complete: return complete_graph(param(0));
    case Family::spider: return spider_graph(spec.legs);
    case Family::f: return f_graph(param(0));
    case Family::x: return x_graph(param(0));
    case Family::grid: return grid_graph(param(0), param(1));
    case Family::h: return h_graph(param(0));
    case Family::product:
      return cartesian_product(generate(operand(0)), generate(operand(1)));
    case Family::disjoint_union:
      return disjoint_union(generate(operand(0)), generate(operand(1)));
    case Family::plus_isolated: return plus_isolated(generate(operand(0)));
  }
  throw InvalidInput("unknown family");
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  switch (family) {
    case Family::path: os << "path"; break;
    case Family::cycle: os << "cycle"; break;
    case Family::complete: os << "complete"; break;
    case Family::spider: os << "spider"; break;
    case Family::f: os << "F"; break;
    case Family::x: os << "X"; break;
    case Family::grid: os << "grid"; break;
    case Family::h: os << "H"; break;
    case Family::product: os << "product"; break;
    case Family::disjoint_union: os << "union"; break;
    case Family::plus_isolated: os << "plus-isolated"; break;
  }
  for (int p : params) os << ' ' << p;
  for (auto [length, count] : legs) os << ' ' << length << 'x' << count;
  for (const auto& op : operands) os << ' ' << op.describe();
  return os.str();
}

namespace {

int parse_int(const std::string& tok) {
  int value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw InvalidInput("expected an integer, got '" + tok + "'");
  return value;
}

FamilySpec parse_at(std::span<const std::string> toks, std::size_t& pos) {
  if (pos >= toks.size()) throw InvalidInput("missing family name");
  std::string name = toks[pos++];
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  FamilySpec spec;
  auto ints = [&](int count) {
    for (int i = 0; i < count; ++i) {
      if (pos >= toks.size()) throw InvalidInput(name + ": missing parameter");
      spec.params.push_back(parse_int(toks[pos++]));
    }
  };
  if (name == "path") { spec.family = Family::path; ints(1); }
  else if (name == "cycle") { spec.family = Family::cycle; ints(1); }
  else if (name == "complete") { spec.family = Family::complete; ints(1); }
  else if (name == "f") { spec.family = Family::f; ints(1); }
  else if (name == "x") { spec.family = Family::x; ints(1); }
  else if (name == "h") { spec.family = Family::h; ints(1); }
  else if (name == "grid") { spec.family = Family::grid; ints(2); }
  else if (name == "spider") {
    spec.family = Family::spider;
    // legs as LENGTHxCOUNT tokens, e.g. 3x6
    while (pos < toks.size()) {
      const std::string& tok = toks[pos];
      auto x = tok.find('x');
      if (x == std::string::npos) break;
      spec.legs.push_back({parse_int(tok.substr(0, x)), parse_int(tok.substr(x + 1))});
      ++pos;
    }
    if (spec.legs.empty()) throw InvalidInput("spider needs LENGTHxCOUNT legs");
  } else if (name == "product" || name == "union") {
    spec.family = name == "product" ? Family::product : Family::disjoint_union;
    spec.operands.push_back(parse_at(toks, pos));
    spec.operands.push_back(parse_at(toks, pos));
  } else if (name == "plus-isolated") {
    spec.family = Family::plus_isolated;
    spec.operands.push_back(parse_at(toks, pos));
  } else {
    throw InvalidInput("unknown family '" + name + "'");
  }
  return spec;
}

}  // namespace

FamilySpec parse_family(std::span<const std::string> tokens) {
  std::size_t pos = 0;
  FamilySpec spec = parse_at(tokens, pos);
  if (pos != tokens.size()) throw InvalidInput("trailing tokens after family spec");
  return spec;
}

FamilySpec parse_family(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> toks;
  for (std::string t; is >> t;) toks.push_back(t);
  return parse_family(toks);
}

}  // namespace bdim
