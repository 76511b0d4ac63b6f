#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "monoid_table.hpp"

namespace garside {

  //! Outcome of a search that a length truncation can cut short.
  enum class Search {
    found,           //!< the element exists and is returned
    absent,          //!< proven not to exist
    bound_exceeded,  //!< nothing found before the table bound was reached
  };

  struct SearchResult {
    Search  status  = Search::absent;
    Element element = identity_element;

    bool found() const noexcept {
      return status == Search::found;
    }
  };

  inline char const* to_string(Search s) {
    switch (s) {
      case Search::found:
        return "found";
      case Search::absent:
        return "absent";
      case Search::bound_exceeded:
        return "bound-exceeded";
    }
    return "?";
  }

  namespace detail {
    inline void sort_unique(std::vector<Element>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace detail

  //! All c with a * c = b.  More than one c means the monoid is not left
  //! cancellative.
  inline std::vector<Element> left_quotients(MonoidTable const& t, Element a,
                                             Element b) {
    if (a.length > b.length) {
      return {};
    }
    std::vector<Element> current{b};
    for (auto g : t.word(a)) {
      std::vector<Element> next;
      for (auto x : current) {
        for (auto node : t.left_predecessors(x)) {
          if (t.node_letter(node) == g) {
            next.push_back(t.node_element(x, node));
          }
        }
      }
      detail::sort_unique(next);
      current = std::move(next);
      if (current.empty()) {
        break;
      }
    }
    return current;
  }

  //! All c with c * a = b.
  inline std::vector<Element> right_quotients(MonoidTable const& t, Element a,
                                              Element b) {
    if (a.length > b.length) {
      return {};
    }
    std::vector<Element> current{b};
    auto                 w = t.word(a);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      std::vector<Element> next;
      for (auto x : current) {
        for (auto node : t.right_predecessors(x)) {
          if (t.node_letter(node) == *it) {
            next.push_back(t.node_element(x, node));
          }
        }
      }
      detail::sort_unique(next);
      current = std::move(next);
      if (current.empty()) {
        break;
      }
    }
    return current;
  }

  //! Whether b = a * c for some c.
  inline bool left_divides(MonoidTable const& t, Element a, Element b) {
    if (a.length == 1 && b.length >= 1) {
      return (t.left_atom_mask(b) >> a.id) & 1;
    }
    return !left_quotients(t, a, b).empty();
  }

  //! Whether b = c * a for some c.
  inline bool right_divides(MonoidTable const& t, Element a, Element b) {
    if (a.length == 1 && b.length >= 1) {
      return (t.right_atom_mask(b) >> a.id) & 1;
    }
    return !right_quotients(t, a, b).empty();
  }

  //! Left divisors of x, sorted by length then id.
  inline std::vector<Element> left_divisors(MonoidTable const& t, Element x) {
    std::vector<Element> out;
    std::vector<Element> current{x};
    while (true) {
      out.insert(out.end(), current.begin(), current.end());
      if (current.front().length == 0) {
        break;
      }
      std::vector<Element> next;
      for (auto y : current) {
        for (auto node : t.right_predecessors(y)) {
          next.push_back(t.node_element(y, node));
        }
      }
      detail::sort_unique(next);
      current = std::move(next);
    }
    detail::sort_unique(out);
    return out;
  }

  //! Right divisors of x, sorted by length then id.
  inline std::vector<Element> right_divisors(MonoidTable const& t, Element x) {
    std::vector<Element> out;
    std::vector<Element> current{x};
    while (true) {
      out.insert(out.end(), current.begin(), current.end());
      if (current.front().length == 0) {
        break;
      }
      std::vector<Element> next;
      for (auto y : current) {
        for (auto node : t.left_predecessors(y)) {
          next.push_back(t.node_element(y, node));
        }
      }
      detail::sort_unique(next);
      current = std::move(next);
    }
    detail::sort_unique(out);
    return out;
  }

  enum class Side { left, right };

  inline std::vector<Element> divisor_set(MonoidTable const& t, Element x,
                                          Side side) {
    return side == Side::left ? left_divisors(t, x) : right_divisors(t, x);
  }

  //! Whether the left and right divisors of x coincide.
  inline bool is_balanced(MonoidTable const& t, Element x) {
    if (x.length >= 1 && t.left_atom_mask(x) != t.right_atom_mask(x)) {
      return false;
    }
    return left_divisors(t, x) == right_divisors(t, x);
  }

  namespace detail {
    // The greatest element of `candidates` under left divisibility, if every
    // candidate left-divides it.
    inline std::optional<Element>
    left_maximum(MonoidTable const& t, std::vector<Element> const& candidates) {
      if (candidates.empty()) {
        return std::nullopt;
      }
      auto top = std::max_element(candidates.begin(), candidates.end(),
                                  [](Element a, Element b) {
                                    return a.length < b.length;
                                  });
      auto best = *top;
      for (auto c : candidates) {
        if (c.length == best.length ? c != best : !left_divides(t, c, best)) {
          return std::nullopt;
        }
      }
      return best;
    }
  }  // namespace detail

  //! The greatest common left divisor of a and b, or nothing when the common
  //! left divisors have no greatest element.  Divisors never exceed the
  //! lengths of a and b, so the answer is exact.
  inline std::optional<Element> left_gcd(MonoidTable const& t, Element a,
                                         Element b) {
    if (a == b) {
      return a;
    }
    auto da = left_divisors(t, a);
    auto db = left_divisors(t, b);
    std::vector<Element> common;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                          std::back_inserter(common));
    return detail::left_maximum(t, common);
  }

  //! The least common right multiple of a and b.
  //!
  //! Common right multiples are searched by increasing length.  If the first
  //! length that has any has exactly one, it is returned; an lcm must have
  //! that length, so two or more candidates prove that no lcm exists.  If no
  //! common multiple fits below the bound the result is bound_exceeded.
  inline SearchResult right_lcm(MonoidTable const& t, Element a, Element b) {
    if (a == b) {
      return {Search::found, a};
    }
    for (std::size_t l = std::max(a.length, b.length); l <= t.bound(); ++l) {
      std::vector<Element> common;
      for (auto x : t.elements(l)) {
        if (left_divides(t, a, x) && left_divides(t, b, x)) {
          common.push_back(x);
        }
      }
      if (common.size() == 1) {
        return {Search::found, common.front()};
      }
      if (common.size() > 1) {
        return {Search::absent, identity_element};
      }
    }
    return {Search::bound_exceeded, identity_element};
  }

  //! The least balanced element divisible on the left by every atom.
  //! absent means no such element exists up to the table bound.
  inline SearchResult find_garside_element(MonoidTable const& t) {
    auto const all = t.all_atoms_mask();
    for (std::size_t l = 1; l <= t.bound(); ++l) {
      for (auto x : t.elements(l)) {
        if (t.left_atom_mask(x) == all && t.right_atom_mask(x) == all
            && is_balanced(t, x)) {
          return {Search::found, x};
        }
      }
    }
    return {Search::absent, identity_element};
  }

  //! Number of atoms dividing x on the left.
  inline int number_of_left_atoms(MonoidTable const& t, Element x) {
    return x.length == 0 ? 0 : std::popcount(t.left_atom_mask(x));
  }

}  // namespace garside
