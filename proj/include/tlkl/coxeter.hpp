#pragma once

// Coxeter graphs and group elements.
//
// Elements are interned in a CoxeterGroup and referred to by a small handle.
// Every interned element stores its ShortLex-least reduced word, so two
// handles are equal exactly when the group elements are equal. Generators are
// 0-based in this API and 1-based in all text I/O.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tlkl {

using Generator = int;
using Word = std::vector<Generator>;

/// m(s,t) value standing for infinity.
inline constexpr int kInfinity = 0;

enum class Side { Left, Right };

/// Thrown when an enumeration or braid closure exceeds its configured cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphKind { Finite, Affine, Unknown };

/// Structural classification of a connected Coxeter graph.
struct GraphClass {
  GraphKind kind = GraphKind::Unknown;
  std::string name;  // e.g. "A3", "B3", "I2(5)", "affF4"; empty when unknown
};

class CoxeterGraph {
 public:
  /// Parses "A3", "B4", "D4", "E6", "F4", "H3", "H4", "I2(7)", "affA2",
  /// "affB3", "affC2", "affD4", "affF4", "affG2" or "custom:[1,3;3,1]" (rows
  /// separated by ';', entries by ',' or spaces, "inf" or 0 for infinity).
  static CoxeterGraph parse(std::string_view spec);
  static CoxeterGraph from_matrix(std::vector<std::vector<int>> matrix, std::string spec = {});

  int rank() const { return rank_; }
  /// Order of st; kInfinity for an infinite order. m(s,s) == 1.
  int m(Generator s, Generator t) const { return matrix_[s][t]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  /// Canonical spec string, round-trips through parse().
  const std::string& spec() const { return spec_; }
  const GraphClass& classification() const { return class_; }

  bool commute(Generator s, Generator t) const { return matrix_[s][t] == 2; }
  bool is_connected() const;
  /// No generator has three or more non-commuting neighbours.
  bool is_non_branching() const;
  /// Finite irreducible or affine, non-branching, and not affine F4: the
  /// graphs on which sigma(C'_w) is c_w or 0.
  bool projection_dichotomy_holds() const;
  /// Length of the longest element for recognised finite graphs.
  std::optional<int> longest_length() const;

 private:
  CoxeterGraph(std::vector<std::vector<int>> matrix, std::string spec);
  void validate() const;

  int rank_ = 0;
  std::vector<std::vector<int>> matrix_;
  std::string spec_;
  GraphClass class_;
};

GraphClass classify(const CoxeterGraph& g);

/// Handle to an element interned in a CoxeterGroup.
struct Element {
  std::uint32_t id = 0;
  friend auto operator<=>(Element, Element) = default;
};

/// Element store with memoised multiplication, descents, Bruhat order and
/// full-commutativity. Not thread-safe: confine each instance to one thread.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultElementCap = 200'000;
  static constexpr std::size_t kDefaultClosureCap = 2'000'000;

  explicit CoxeterGroup(CoxeterGraph graph, std::size_t element_cap = kDefaultElementCap);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  Element identity() const { return Element{0}; }
  std::size_t interned() const { return nodes_.size(); }

  /// The element represented by an arbitrary word (not necessarily reduced).
  Element canonical_form(std::span<const Generator> word);
  /// Parses "1 2 1", "1,2,1" or "e".
  Element parse(std::string_view text);
  Element mult_gen(Element w, Generator s, Side side);
  Element multiply(Element x, Element y);
  Element inverse(Element w);

  const Word& word(Element w) const { return nodes_[w.id].word; }
  int length(Element w) const { return static_cast<int>(nodes_[w.id].word.size()); }
  /// (-1)^length.
  int sign(Element w) const { return length(w) % 2 == 0 ? 1 : -1; }
  /// Bitmask of generators s with l(ws) < l(w) (Right) or l(sw) < l(w) (Left).
  std::uint64_t descent_mask(Element w, Side side) const;
  bool is_descent(Element w, Generator s, Side side) const { return (descent_mask(w, side) >> s) & 1U; }
  std::vector<Generator> descents(Element w, Side side) const;
  bool is_fully_commutative(Element w) const { return nodes_[w.id].fully_commutative; }
  /// For non-FC w: a reduced word prefix.(s t s ...).suffix of w whose middle
  /// block is the longest element of the rank-2 parabolic <s,t>.
  struct BraidWitness {
    Word prefix;
    Generator s = 0, t = 0;
    int m = 0;
    Word suffix;
  };
  const BraidWitness& braid_witness(Element w) const;

  std::string format(Element w) const;
  bool shortlex_less(Element a, Element b) const;
  void sort_shortlex(std::vector<Element>& v) const;

  bool bruhat_leq(Element x, Element w);
  bool bruhat_less(Element x, Element w) { return x != w && bruhat_leq(x, w); }
  /// All x <= w in ShortLex order.
  const std::vector<Element>& lower_interval(Element w);
  /// Fully commutative y with x <= y <= w; throws std::invalid_argument if x is not <= w.
  std::vector<Element> bruhat_interval_c(Element x, Element w);

  /// All elements of length <= max_len (max_len < 0: no bound), by length
  /// then ShortLex. Throws SizeError beyond the element cap.
  std::vector<Element> enumerate_up_to(int max_len);

 private:
  struct Node {
    Word word;  // ShortLex-least reduced word
    std::uint64_t right_descents = 0;
    std::uint64_t left_descents = 0;
    bool fully_commutative = true;
    std::vector<std::int32_t> right;  // cached products, -1 unknown
    std::vector<std::int32_t> left;
    std::vector<std::string> right_witness;  // reduced word of w ending in s, minus s
    std::vector<std::string> left_witness;   // reduced word of w starting with s, minus s
    std::optional<BraidWitness> braid;
  };

  Element intern(const std::string& reduced_word);
  std::vector<std::string> braid_closure(const std::string& word, bool commutations_only) const;

  CoxeterGraph graph_;
  std::size_t element_cap_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::uint32_t> reduced_words_;
  std::unordered_map<std::uint64_t, bool> bruhat_memo_;
  std::unordered_map<std::uint32_t, std::vector<Element>> lower_memo_;
};

/// Text form of a word: 1-based indices separated by spaces, "e" when empty.
std::string format_word(std::span<const Generator> word);
/// Accepts space- or comma-separated 1-based indices, or "e".
Word parse_word(std::string_view text);

}  // namespace tlkl
