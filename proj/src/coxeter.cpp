#include "tlkl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace tlkl {

namespace {

std::vector<std::vector<int>> path_matrix(int rank, const std::vector<int>& bonds) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = bonds[i];
  return m;
}

void bond(std::vector<std::vector<int>>& m, int a, int b, int value) { m[a][b] = m[b][a] = value; }

int parse_positive(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("unknown graph spec '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

int parse_bond(std::string token, std::string_view whole) {
  std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) { return std::tolower(c); });
  if (token == "inf" || token == "infinity" || token == "oo") return kInfinity;
  return parse_positive(token, whole);
}

std::string render_matrix_spec(const std::vector<std::vector<int>>& m) {
  std::ostringstream os;
  os << "custom:[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      if (m[i][j] == kInfinity)
        os << "inf";
      else
        os << m[i][j];
    }
  }
  os << ']';
  return os.str();
}

std::string letter_string(std::span<const Generator> word) {
  std::string s;
  s.reserve(word.size());
  for (Generator g : word) s.push_back(static_cast<char>(g));
  return s;
}

Word string_word(const std::string& s) { return Word(s.begin(), s.end()); }

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph(std::vector<std::vector<int>> matrix, std::string spec)
    : rank_(static_cast<int>(matrix.size())), matrix_(std::move(matrix)), spec_(std::move(spec)) {
  validate();
  if (spec_.empty()) spec_ = render_matrix_spec(matrix_);
  class_ = classify(*this);
}

void CoxeterGraph::validate() const {
  if (rank_ < 1) throw std::invalid_argument("Coxeter graph must have at least one generator");
  if (rank_ > 64) throw std::invalid_argument("Coxeter graph rank above 64 is not supported");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(matrix_[i].size()) != rank_) throw std::invalid_argument("Coxeter matrix must be square");
    if (matrix_[i][i] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] != matrix_[j][i]) throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (matrix_[i][j] != kInfinity && matrix_[i][j] < 2)
        throw std::invalid_argument("off-diagonal Coxeter matrix entries must be >= 2 or infinity");
    }
  }
}

CoxeterGraph CoxeterGraph::from_matrix(std::vector<std::vector<int>> matrix, std::string spec) {
  return CoxeterGraph(std::move(matrix), std::move(spec));
}

CoxeterGraph CoxeterGraph::parse(std::string_view spec) {
  std::string s(spec);
  auto bad = [&] { return std::invalid_argument("unknown graph spec '" + s + "'"); };
  if (s.rfind("custom:", 0) == 0) {
    std::string body = s.substr(7);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw bad();
    body = body.substr(1, body.size() - 2);
    std::vector<std::vector<int>> rows;
    std::stringstream rs(body);
    std::string row;
    while (std::getline(rs, row, ';')) {
      std::replace(row.begin(), row.end(), ',', ' ');
      std::istringstream es(row);
      std::vector<int> r;
      std::string tok;
      while (es >> tok) r.push_back(parse_bond(tok, s));
      rows.push_back(std::move(r));
    }
    auto g = CoxeterGraph(std::move(rows), {});
    return g;
  }
  if (s.rfind("I2(", 0) == 0) {
    if (s.back() != ')') throw bad();
    int m = parse_bond(s.substr(3, s.size() - 4), s);
    return CoxeterGraph(path_matrix(2, {m}), s);
  }
  std::string family;
  std::size_t pos = 0;
  while (pos < s.size() && !std::isdigit(static_cast<unsigned char>(s[pos]))) family.push_back(s[pos++]);
  int n = parse_positive(std::string_view(s).substr(pos), s);
  auto need = [&](bool ok) {
    if (!ok) throw bad();
  };
  if (family == "A") {
    return CoxeterGraph(path_matrix(n, std::vector<int>(std::max(n - 1, 0), 3)), s);
  }
  if (family == "B") {
    need(n >= 2);
    std::vector<int> bonds(n - 1, 3);
    bonds[0] = 4;
    return CoxeterGraph(path_matrix(n, bonds), s);
  }
  if (family == "D") {
    need(n >= 4);
    auto m = path_matrix(n, std::vector<int>(n - 1, 3));
    bond(m, n - 2, n - 1, 2);
    bond(m, n - 3, n - 1, 3);
    return CoxeterGraph(std::move(m), s);
  }
  if (family == "E") {
    need(n >= 6 && n <= 8);
    std::vector<std::vector<int>> m = path_matrix(n, std::vector<int>(n - 1, 2));
    bond(m, 0, 2, 3);
    bond(m, 1, 3, 3);
    for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1, 3);
    return CoxeterGraph(std::move(m), s);
  }
  if (family == "F") {
    need(n == 4);
    return CoxeterGraph(path_matrix(4, {3, 4, 3}), s);
  }
  if (family == "H") {
    need(n == 3 || n == 4);
    return CoxeterGraph(path_matrix(n, n == 3 ? std::vector<int>{5, 3} : std::vector<int>{5, 3, 3}), s);
  }
  if (family == "affA") {
    if (n == 1) return CoxeterGraph(path_matrix(2, {kInfinity}), s);
    auto m = path_matrix(n + 1, std::vector<int>(n, 3));
    bond(m, 0, n, 3);
    return CoxeterGraph(std::move(m), s);
  }
  if (family == "affB") {
    need(n >= 3);
    std::vector<int> bonds(n - 1, 3);
    bonds[0] = 4;
    auto m = path_matrix(n, bonds);
    for (auto& r : m) r.push_back(2);
    m.push_back(std::vector<int>(n + 1, 2));
    m[n][n] = 1;
    bond(m, n - 2, n, 3);
    return CoxeterGraph(std::move(m), s);
  }
  if (family == "affC") {
    need(n >= 2);
    std::vector<int> bonds(n, 3);
    bonds.front() = 4;
    bonds.back() = 4;
    return CoxeterGraph(path_matrix(n + 1, bonds), s);
  }
  if (family == "affD") {
    need(n >= 4);
    auto m = path_matrix(n - 1, std::vector<int>(n - 2, 3));
    for (auto& r : m) r.resize(n + 1, 2);
    m.resize(n + 1, std::vector<int>(n + 1, 2));
    m[n - 1][n - 1] = m[n][n] = 1;
    bond(m, n - 3, n - 1, 3);
    bond(m, 1, n, 3);
    return CoxeterGraph(std::move(m), s);
  }
  if (family == "affF") {
    need(n == 4);
    return CoxeterGraph(path_matrix(5, {3, 3, 4, 3}), s);
  }
  if (family == "affG") {
    need(n == 2);
    return CoxeterGraph(path_matrix(3, {3, 6}), s);
  }
  throw bad();
}

bool CoxeterGraph::is_connected() const {
  std::vector<bool> seen(rank_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < rank_; ++b)
      if (!seen[b] && matrix_[a][b] != 2 && a != b) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == rank_;
}

bool CoxeterGraph::is_non_branching() const {
  for (int a = 0; a < rank_; ++a) {
    int degree = 0;
    for (int b = 0; b < rank_; ++b)
      if (a != b && matrix_[a][b] != 2) ++degree;
    if (degree >= 3) return false;
  }
  return true;
}

bool CoxeterGraph::projection_dichotomy_holds() const {
  return class_.kind != GraphKind::Unknown && is_non_branching() && class_.name != "affF4";
}

std::optional<int> CoxeterGraph::longest_length() const {
  if (class_.kind != GraphKind::Finite) return std::nullopt;
  const std::string& n = class_.name;
  int r = rank_;
  switch (n[0]) {
    case 'A':
      return r * (r + 1) / 2;
    case 'B':
      return r * r;
    case 'D':
      return r * (r - 1);
    case 'E':
      return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F':
      return 24;
    case 'H':
      return r == 3 ? 15 : 60;
    case 'I':
      return matrix_[0][1];
    default:
      return std::nullopt;
  }
}

GraphClass classify(const CoxeterGraph& g) {
  const int r = g.rank();
  GraphClass unknown;
  if (r == 1) return {GraphKind::Finite, "A1"};
  if (!g.is_connected()) return unknown;
  if (r == 2) {
    int m = g.m(0, 1);
    if (m == kInfinity) return {GraphKind::Affine, "affA1"};
    if (m == 3) return {GraphKind::Finite, "A2"};
    if (m == 4) return {GraphKind::Finite, "B2"};
    return {GraphKind::Finite, "I2(" + std::to_string(m) + ")"};
  }
  std::vector<std::vector<int>> adj(r);
  int edges = 0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (a != b && g.m(a, b) != 2) {
        if (g.m(a, b) == kInfinity) return unknown;
        adj[a].push_back(b);
        if (a < b) ++edges;
      }
  auto all_three = [&] {
    for (int a = 0; a < r; ++a)
      for (int b : adj[a])
        if (g.m(a, b) != 3) return false;
    return true;
  };
  if (edges >= r) {
    // The only cycle among finite/affine graphs: affine A_{r-1}.
    bool cycle = edges == r && std::all_of(adj.begin(), adj.end(), [](auto& v) { return v.size() == 2; });
    if (cycle && all_three()) return {GraphKind::Affine, "affA" + std::to_string(r - 1)};
    return unknown;
  }
  std::vector<int> branch;
  for (int a = 0; a < r; ++a)
    if (adj[a].size() >= 3) branch.push_back(a);

  if (branch.empty()) {
    // Path: read bond labels from one end.
    int start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<int> bonds;
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int b : adj[cur])
        if (b != prev) next = b;
      if (next < 0) break;
      bonds.push_back(g.m(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<int> rev(bonds.rbegin(), bonds.rend());
    bonds = std::min(bonds, rev);  // orientation-free
    auto count = [&](int v) { return std::count(bonds.begin(), bonds.end(), v); };
    const std::string n = std::to_string(r);
    if (count(3) == r - 1) return {GraphKind::Finite, "A" + n};
    if (bonds.back() == 4 && count(4) == 1 && count(3) == r - 2) return {GraphKind::Finite, "B" + n};
    if (bonds == std::vector<int>{3, 4, 3}) return {GraphKind::Finite, "F4"};
    if (bonds == std::vector<int>{3, 5}) return {GraphKind::Finite, "H3"};
    if (bonds == std::vector<int>{3, 3, 5}) return {GraphKind::Finite, "H4"};
    if (bonds.front() == 4 && bonds.back() == 4 && count(4) == 2 && count(3) == r - 3)
      return {GraphKind::Affine, "affC" + std::to_string(r - 1)};
    if (bonds == std::vector<int>{3, 3, 4, 3} || bonds == std::vector<int>{3, 4, 3, 3})
      return {GraphKind::Affine, "affF4"};
    if (bonds == std::vector<int>{3, 6}) return {GraphKind::Affine, "affG2"};
    return unknown;
  }

  // Arm lengths hanging off a branch vertex, and whether the far bond is 4.
  auto arm = [&](int center, int first, bool& ends_in_four, bool& other_bonds) {
    int len = 0, prev = center, cur = first;
    ends_in_four = false;
    while (true) {
      ++len;
      int m = g.m(prev, cur);
      if (m == 4 && adj[cur].size() == 1)
        ends_in_four = true;
      else if (m != 3)
        other_bonds = true;
      if (adj[cur].size() != 2) break;
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    if (adj[cur].size() > 2) other_bonds = true;  // reached another branch vertex
    return len;
  };

  if (branch.size() == 1 && adj[branch[0]].size() == 3) {
    int c = branch[0];
    std::vector<int> arms;
    int fours = 0;
    bool other = false;
    for (int b : adj[c]) {
      bool four = false;
      arms.push_back(arm(c, b, four, other));
      fours += four;
    }
    if (other) return unknown;
    std::sort(arms.begin(), arms.end());
    const std::string n = std::to_string(r);
    if (fours == 0) {
      if (arms[0] == 1 && arms[1] == 1) return {GraphKind::Finite, "D" + n};
      if (arms == std::vector<int>{1, 2, 2}) return {GraphKind::Finite, "E6"};
      if (arms == std::vector<int>{1, 2, 3}) return {GraphKind::Finite, "E7"};
      if (arms == std::vector<int>{1, 2, 4}) return {GraphKind::Finite, "E8"};
      if (arms == std::vector<int>{2, 2, 2}) return {GraphKind::Affine, "affE6"};
      if (arms == std::vector<int>{1, 3, 3}) return {GraphKind::Affine, "affE7"};
      if (arms == std::vector<int>{1, 2, 5}) return {GraphKind::Affine, "affE8"};
      return unknown;
    }
    if (fours == 1 && arms[0] == 1 && arms[1] == 1) return {GraphKind::Affine, "affB" + std::to_string(r - 1)};
    return unknown;
  }
  if (branch.size() == 1 && adj[branch[0]].size() == 4 && r == 5 && all_three()) return {GraphKind::Affine, "affD4"};
  if (branch.size() == 2 && all_three()) {
    for (int c : branch) {
      if (adj[c].size() != 3) return unknown;
      int leaves = 0;
      for (int b : adj[c]) leaves += adj[b].size() == 1;
      if (leaves != 2) return unknown;
    }
    return {GraphKind::Affine, "affD" + std::to_string(r - 1)};
  }
  return unknown;
}

// ---------------------------------------------------------------------------
// Words

std::string format_word(std::span<const Generator> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::string tok;
  Word out;
  bool saw_e = false;
  while (is >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("cannot parse word '" + std::string(text) + "'");
    int g = std::stoi(tok);
    if (g < 1) throw std::invalid_argument("generator indices are 1-based: '" + std::string(text) + "'");
    out.push_back(g - 1);
  }
  if (saw_e && !out.empty()) throw std::invalid_argument("'e' cannot be combined with generators");
  if (!saw_e && out.empty()) throw std::invalid_argument("empty word; use 'e' for the identity");
  return out;
}

// ---------------------------------------------------------------------------
// CoxeterGroup

CoxeterGroup::CoxeterGroup(CoxeterGraph graph, std::size_t element_cap)
    : graph_(std::move(graph)), element_cap_(element_cap) {
  intern(std::string());
}

std::vector<std::string> CoxeterGroup::braid_closure(const std::string& start, bool commutations_only) const {
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> order{start};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::string cur = order[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Generator a = cur[i], b = cur[i + 1];
      if (a == b) throw std::logic_error("braid_closure called on a non-reduced word");
      int m = graph_.m(a, b);
      if (m == kInfinity || (commutations_only && m != 2)) continue;
      if (i + m > cur.size()) continue;
      bool alternating = true;
      for (int k = 2; k < m && alternating; ++k) alternating = cur[i + k] == (k % 2 == 0 ? a : b);
      if (!alternating) continue;
      std::string next = cur;
      for (int k = 0; k < m; ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.insert(next).second) {
        if (order.size() >= kDefaultClosureCap) throw SizeError("braid closure exceeds cap");
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

Element CoxeterGroup::intern(const std::string& reduced) {
  if (auto it = reduced_words_.find(reduced); it != reduced_words_.end()) return Element{it->second};
  if (nodes_.size() >= element_cap_)
    throw SizeError("element cap of " + std::to_string(element_cap_) + " exceeded for graph " + graph_.spec());

  const int r = graph_.rank();
  std::vector<std::string> closure = braid_closure(reduced, false);
  Node node;
  const std::string& nf = *std::min_element(closure.begin(), closure.end());
  node.word = string_word(nf);
  node.right.assign(r, -1);
  node.left.assign(r, -1);
  node.right_witness.assign(r, {});
  node.left_witness.assign(r, {});
  // Witnesses chosen as the least word with the given first/last letter.
  std::vector<const std::string*> best_right(r, nullptr), best_left(r, nullptr);
  for (const std::string& w : closure) {
    if (w.empty()) break;
    Generator last = w.back(), first = w.front();
    node.right_descents |= std::uint64_t{1} << last;
    node.left_descents |= std::uint64_t{1} << first;
    if (!best_right[last] || w < *best_right[last]) best_right[last] = &w;
    if (!best_left[first] || w < *best_left[first]) best_left[first] = &w;
  }
  for (int s = 0; s < r; ++s) {
    if (best_right[s]) node.right_witness[s] = best_right[s]->substr(0, best_right[s]->size() - 1);
    if (best_left[s]) node.left_witness[s] = best_left[s]->substr(1);
  }

  // Full commutativity: scan the commutation class for a braid factor of
  // length m(s,t) >= 3.
  std::vector<std::string> cclass = braid_closure(nf, true);
  std::sort(cclass.begin(), cclass.end());
  for (const std::string& w : cclass) {
    for (std::size_t i = 0; i + 1 < w.size() && !node.braid; ++i) {
      Generator a = w[i], b = w[i + 1];
      int m = graph_.m(a, b);
      if (m == kInfinity || m < 3 || i + m > w.size()) continue;
      bool alternating = true;
      for (int k = 2; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 == 0 ? a : b);
      if (alternating) {
        node.braid = BraidWitness{Word(w.begin(), w.begin() + i), a, b, m, Word(w.begin() + i + m, w.end())};
      }
    }
    if (node.braid) break;
  }
  node.fully_commutative = !node.braid;

  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  for (std::string& w : closure) reduced_words_.emplace(std::move(w), id);
  return Element{id};
}

Element CoxeterGroup::mult_gen(Element w, Generator s, Side side) {
  if (s < 0 || s >= rank()) throw std::out_of_range("generator index out of range");
  const bool right = side == Side::Right;
  std::int32_t cached = right ? nodes_[w.id].right[s] : nodes_[w.id].left[s];
  if (cached >= 0) return Element{static_cast<std::uint32_t>(cached)};
  Element out;
  if (is_descent(w, s, side)) {
    std::string shorter = right ? nodes_[w.id].right_witness[s] : nodes_[w.id].left_witness[s];
    out = intern(shorter);
  } else {
    std::string longer = letter_string(nodes_[w.id].word);
    if (right)
      longer.push_back(static_cast<char>(s));
    else
      longer.insert(longer.begin(), static_cast<char>(s));
    out = intern(longer);
  }
  auto& a = right ? nodes_[w.id].right : nodes_[w.id].left;
  a[s] = static_cast<std::int32_t>(out.id);
  auto& b = right ? nodes_[out.id].right : nodes_[out.id].left;
  b[s] = static_cast<std::int32_t>(w.id);
  return out;
}

Element CoxeterGroup::canonical_form(std::span<const Generator> word) {
  Element w = identity();
  for (Generator s : word) w = mult_gen(w, s, Side::Right);
  return w;
}

Element CoxeterGroup::parse(std::string_view text) {
  Word w = parse_word(text);
  for (Generator g : w)
    if (g >= rank())
      throw std::invalid_argument("generator " + std::to_string(g + 1) + " out of range for " + graph_.spec());
  return canonical_form(w);
}

Element CoxeterGroup::multiply(Element x, Element y) {
  Word letters = word(y);
  for (Generator s : letters) x = mult_gen(x, s, Side::Right);
  return x;
}

Element CoxeterGroup::inverse(Element w) {
  Word letters = word(w);
  std::reverse(letters.begin(), letters.end());
  return intern(letter_string(letters));
}

std::uint64_t CoxeterGroup::descent_mask(Element w, Side side) const {
  return side == Side::Right ? nodes_[w.id].right_descents : nodes_[w.id].left_descents;
}

std::vector<Generator> CoxeterGroup::descents(Element w, Side side) const {
  std::vector<Generator> out;
  for (int s = 0; s < rank(); ++s)
    if (is_descent(w, s, side)) out.push_back(s);
  return out;
}

const CoxeterGroup::BraidWitness& CoxeterGroup::braid_witness(Element w) const {
  if (!nodes_[w.id].braid) throw std::logic_error("braid_witness: element is fully commutative");
  return *nodes_[w.id].braid;
}

std::string CoxeterGroup::format(Element w) const { return format_word(word(w)); }

bool CoxeterGroup::shortlex_less(Element a, Element b) const {
  const Word& x = word(a);
  const Word& y = word(b);
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

void CoxeterGroup::sort_shortlex(std::vector<Element>& v) const {
  std::sort(v.begin(), v.end(), [this](Element a, Element b) { return shortlex_less(a, b); });
}

bool CoxeterGroup::bruhat_leq(Element x, Element w) {
  if (x == w) return true;
  int lx = length(x), lw = length(w);
  if (lx >= lw) return false;
  if (lx == 0) return true;
  std::uint64_t key = (std::uint64_t{x.id} << 32) | w.id;
  if (auto it = bruhat_memo_.find(key); it != bruhat_memo_.end()) return it->second;
  // If ws < w then x <= w iff min(x, xs) <= ws.
  auto s = static_cast<Generator>(__builtin_ctzll(descent_mask(w, Side::Right)));
  Element ws = mult_gen(w, s, Side::Right);
  Element lower = is_descent(x, s, Side::Right) ? mult_gen(x, s, Side::Right) : x;
  bool result = bruhat_leq(lower, ws);
  bruhat_memo_.emplace(key, result);
  return result;
}

const std::vector<Element>& CoxeterGroup::lower_interval(Element w) {
  if (auto it = lower_memo_.find(w.id); it != lower_memo_.end()) return it->second;
  std::vector<Element> out;
  if (length(w) == 0) {
    out.push_back(identity());
  } else {
    auto s = static_cast<Generator>(__builtin_ctzll(descent_mask(w, Side::Right)));
    Element ws = mult_gen(w, s, Side::Right);
    std::vector<Element> below = lower_interval(ws);
    out = below;
    for (Element y : below) out.push_back(mult_gen(y, s, Side::Right));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    sort_shortlex(out);
  }
  return lower_memo_.emplace(w.id, std::move(out)).first->second;
}

std::vector<Element> CoxeterGroup::bruhat_interval_c(Element x, Element w) {
  if (!bruhat_leq(x, w))
    throw std::invalid_argument("bruhat_interval_c: " + format(x) + " is not below " + format(w));
  std::vector<Element> out;
  for (Element y : lower_interval(w))
    if (is_fully_commutative(y) && bruhat_leq(x, y)) out.push_back(y);
  return out;
}

std::vector<Element> CoxeterGroup::enumerate_up_to(int max_len) {
  std::vector<Element> all{identity()};
  std::vector<Element> level{identity()};
  for (int len = 1; (max_len < 0 || len <= max_len) && !level.empty(); ++len) {
    std::vector<Element> next;
    for (Element w : level)
      for (Generator s = 0; s < rank(); ++s)
        if (!is_descent(w, s, Side::Right)) next.push_back(mult_gen(w, s, Side::Right));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sort_shortlex(next);
    if (all.size() + next.size() > element_cap_)
      throw SizeError("enumeration of " + graph_.spec() + " exceeds the element cap of " +
                      std::to_string(element_cap_));
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace tlkl
