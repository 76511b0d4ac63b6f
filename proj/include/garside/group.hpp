#pragma once

#include <compare>
#include <string>

#include "garside_structure.hpp"

namespace garside {

  //! The element delta^-k * m of the group of fractions.
  struct GroupElement {
    std::uint32_t delta_power = 0;
    Element       positive    = identity_element;

    friend constexpr auto operator<=>(GroupElement const&,
                                      GroupElement const&) = default;
  };

  //! Cancels delta from the left of the positive part while k > 0, giving
  //! the unique form where k = 0 or delta does not left-divide m.
  inline GroupElement group_normalize(GarsideStructure const& g,
                                      std::uint32_t k, Element m) {
    auto const& t = g.table();
    while (k > 0 && m.length >= g.delta().length
           && left_divides(t, g.delta(), m)) {
      auto q = left_quotients(t, g.delta(), m);
      if (q.size() != 1) {
        throw Error("left quotient by the Garside element is not unique");
      }
      m = q.front();
      --k;
    }
    return {k, m};
  }

  inline GroupElement group_normalize(GarsideStructure const& g,
                                      GroupElement x) {
    return group_normalize(g, x.delta_power, x.positive);
  }

  inline bool group_equal(GarsideStructure const& g, GroupElement a,
                          GroupElement b) {
    return group_normalize(g, a) == group_normalize(g, b);
  }

  //! delta^-k a * delta^-l b = delta^-(k+l) tau^-l(a) b, using
  //! a * delta^-1 = delta^-1 * tau^-1(a).
  inline GroupElement group_multiply(GarsideStructure const& g, GroupElement a,
                                     GroupElement b) {
    auto shifted = g.tau_power(a.positive, -static_cast<long>(b.delta_power));
    auto m       = g.table().multiply(shifted, b.positive);
    return group_normalize(g, a.delta_power + b.delta_power, m);
  }

  //! delta^-1 * x * delta.
  inline GroupElement tau(GarsideStructure const& g, GroupElement x) {
    return {x.delta_power, g.tau(x.positive)};
  }

  inline Element tau(GarsideStructure const& g, Element x) {
    return g.tau(x);
  }

  inline std::string to_string(GarsideStructure const& g, GroupElement x) {
    std::string out;
    if (x.delta_power > 0) {
      out = "D^-" + std::to_string(x.delta_power) + " ";
    }
    return out + "[" + g.table().to_string(x.positive) + "]";
  }

}  // namespace garside
