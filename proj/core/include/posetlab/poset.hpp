#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetlab {

/// Index of an element inside its poset.
using Element = int;
using Bits = boost::dynamic_bitset<>;
using ElementPair = std::pair<Element, Element>;

/// A permutation of all elements of a poset, lowest first.
using LinearExtension = std::vector<Element>;
using Realizer = std::vector<LinearExtension>;

/// Finite poset over named elements. The strict order is stored transitively
/// closed as one bitset per element in each direction, so comparability
/// queries are O(1). Values are immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of a cover (or any acyclic) relation.
  /// A pair (x, y) means y covers x. Throws CycleDetected, UnknownElement,
  /// DuplicateElement.
  static Poset from_cover_pairs(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers);

  /// Same as from_cover_pairs but over element indices.
  static Poset from_relation(std::vector<std::string> elements,
                             const std::vector<ElementPair>& relation);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Element e) const { return names_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement.
  Element index_of(std::string_view name) const;

  bool less(Element a, Element b) const { return up_[a].test(static_cast<std::size_t>(b)); }
  bool leq(Element a, Element b) const { return a == b || less(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || less(b, a); }
  bool incomparable(Element a, Element b) const { return !comparable(a, b); }

  /// Strict upset / downset.
  const Bits& above(Element e) const { return up_[e]; }
  const Bits& below(Element e) const { return down_[e]; }

  /// True iff `upper` covers `lower`.
  bool covers(Element lower, Element upper) const;
  /// All cover pairs (lower, upper) in index order.
  std::vector<ElementPair> cover_pairs() const;
  std::size_t comparable_pair_count() const;

  /// Order restricted to `subset`; the result lists elements in the given order.
  Poset induced(std::span<const Element> subset) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

std::size_t height(const Poset& p);
std::size_t width(const Poset& p);
std::vector<Element> minimal_elements(const Poset& p);
std::vector<Element> maximal_elements(const Poset& p);

/// Elements in `set` as an ascending index list.
std::vector<Element> to_elements(const Bits& set);
/// Closed upset {y : x <= y}.
std::vector<Element> upset(const Poset& p, Element x);

Poset induced_subposet(const Poset& p, std::span<const Element> subset);
/// Name-based variant. Throws UnknownElement.
Poset induced_subposet(const Poset& p, const std::vector<std::string>& subset);

/// Ordered incomparable pairs (a, b); both orientations are listed.
std::vector<ElementPair> incomparable_pairs(const Poset& p);
/// Incomparable (a, b) with downset(a) within downset(b) and upset(b) within upset(a).
std::vector<ElementPair> critical_pairs(const Poset& p);

bool is_linear_extension(const Poset& p, std::span<const Element> order);
/// True iff every extension is linear and every incomparable (a, b) has b
/// before a in some extension.
bool verify_realizer(const Poset& p, const Realizer& r);

/// A linear extension of `p` that keeps the order of `upset_order` (an
/// extension of the upset of x) and puts everything outside the upset first.
/// Throws NotAnUpsetExtension.
LinearExtension lift_extension(const Poset& p, Element x, std::span<const Element> upset_order);

/// Some fixed linear extension (sorted by downset size, then index).
LinearExtension default_extension(const Poset& p);

}  // namespace posetlab
