#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside_structure.hpp"

namespace garside {

  enum class Verdict { pass, fail, inconclusive };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "PASS";
      case Verdict::fail:
        return "FAIL";
      case Verdict::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }

  //! A concrete counterexample: named elements, an optional exponent and a
  //! human-readable explanation.
  struct Witness {
    std::vector<std::pair<std::string, Element>> items;
    std::optional<std::uint32_t>                 exponent;
    std::string                                  detail;

    Element get(std::string_view name) const {
      for (auto const& [key, value] : items) {
        if (key == name) {
          return value;
        }
      }
      throw InputError("witness has no item \"" + std::string(name) + "\"");
    }

    bool has(std::string_view name) const {
      for (auto const& item : items) {
        if (item.first == name) {
          return true;
        }
      }
      return false;
    }
  };

  //! Outcome of a property check.  `witnesses` is nonempty exactly when the
  //! verdict is fail; the first entry is the primary witness.
  struct PropertyReport {
    std::string                        property_id;
    Verdict                            verdict = Verdict::pass;
    std::vector<Witness>               witnesses;
    std::map<std::string, long>        parameters;
    std::vector<std::string>           notes;

    bool passed() const noexcept {
      return verdict == Verdict::pass;
    }

    Witness const& witness() const {
      if (witnesses.empty()) {
        throw PreconditionError("report " + property_id + " has no witness");
      }
      return witnesses.front();
    }
  };

  struct CheckOptions {
    //! Violations recorded per report; checking stops early once reached.
    std::size_t max_witnesses = 16;
  };

  namespace detail {
    class ReportBuilder {
     public:
      ReportBuilder(std::string id, CheckOptions opts) : _opts(opts) {
        _report.property_id = std::move(id);
      }

      void fail(Witness w) {
        _report.verdict = Verdict::fail;
        if (_report.witnesses.size() < _opts.max_witnesses) {
          _report.witnesses.push_back(std::move(w));
        }
      }

      void inconclusive(std::string note) {
        if (_report.verdict == Verdict::pass) {
          _report.verdict = Verdict::inconclusive;
        }
        _report.notes.push_back(std::move(note));
      }

      bool full() const {
        return _report.witnesses.size() >= _opts.max_witnesses;
      }

      PropertyReport& report() {
        return _report;
      }

      PropertyReport finish() {
        // a definite failure overrides earlier inconclusive pairs
        if (!_report.witnesses.empty()) {
          _report.verdict = Verdict::fail;
        }
        return std::move(_report);
      }

     private:
      PropertyReport _report;
      CheckOptions   _opts;
    };
  }  // namespace detail

  //! Atoms have length 1 and 1 is the only element of length 0.  Both hold by
  //! construction for validated homogeneous presentations; the report records
  //! the counts.
  inline PropertyReport check_property_i(MonoidTable const& t,
                                         CheckOptions       opts = {}) {
    detail::ReportBuilder b("i", opts);
    b.report().parameters["bound"] = static_cast<long>(t.bound());
    validate(t.presentation());
    if (t.size(0) != 1) {
      b.fail({{}, std::nullopt, "more than one element of length 0"});
    }
    for (letter_type g = 0; g < t.number_of_generators(); ++g) {
      if (t.generator(g).length != 1) {
        b.fail({{{"generator", t.generator(g)}}, std::nullopt,
                "generator without length 1"});
      }
    }
    b.report().notes.push_back("atoms: " + std::to_string(t.number_of_atoms()));
    return b.finish();
  }

  //! For each pair of distinct atoms s, t, their right lcm exists and is
  //! balanced.
  inline PropertyReport check_property_ii(MonoidTable const& t,
                                          CheckOptions       opts = {}) {
    detail::ReportBuilder b("ii", opts);
    b.report().parameters["bound"] = static_cast<long>(t.bound());
    auto atoms                     = t.atoms();
    for (std::size_t i = 0; i < atoms.size() && !b.full(); ++i) {
      for (std::size_t j = i + 1; j < atoms.size() && !b.full(); ++j) {
        auto s = atoms[i], u = atoms[j];
        auto m = right_lcm(t, s, u);
        if (m.status == Search::bound_exceeded) {
          b.inconclusive("no common right multiple of " + t.to_string(s)
                         + " and " + t.to_string(u) + " up to the bound");
        } else if (m.status == Search::absent) {
          b.fail({{{"s", s}, {"t", u}}, std::nullopt, "no right lcm"});
        } else if (!is_balanced(t, m.element)) {
          b.fail({{{"s", s}, {"t", u}, {"lcm", m.element}},
                  std::nullopt,
                  "right lcm is not balanced"});
        }
      }
    }
    return b.finish();
  }

  //! For each ordered pair of distinct atoms s, t and 1 <= n <= n_max, the
  //! left gcd of lcm(s, t) and s^n is s.
  inline PropertyReport check_property_iii(MonoidTable const& t,
                                           std::size_t        n_max,
                                           CheckOptions       opts = {}) {
    if (n_max < 1 || n_max > t.bound()) {
      throw PreconditionError("n_max must lie in [1, bound]");
    }
    detail::ReportBuilder b("iii", opts);
    b.report().parameters["bound"] = static_cast<long>(t.bound());
    b.report().parameters["n_max"] = static_cast<long>(n_max);
    auto atoms                     = t.atoms();
    for (std::size_t i = 0; i < atoms.size() && !b.full(); ++i) {
      for (std::size_t j = 0; j < atoms.size() && !b.full(); ++j) {
        if (i == j) {
          continue;
        }
        auto s = atoms[i], u = atoms[j];
        auto m = right_lcm(t, s, u);
        if (m.status == Search::bound_exceeded) {
          b.inconclusive("no common right multiple of " + t.to_string(s)
                         + " and " + t.to_string(u) + " up to the bound");
          continue;
        }
        if (m.status == Search::absent) {
          b.fail({{{"s", s}, {"t", u}}, std::nullopt, "no right lcm"});
          continue;
        }
        for (std::size_t n = 1; n <= n_max && !b.full(); ++n) {
          auto sn = t.power(s, n);
          auto g  = left_gcd(t, m.element, sn);
          if (!g) {
            b.fail({{{"s", s}, {"t", u}, {"lcm", m.element}, {"power", sn}},
                    static_cast<std::uint32_t>(n),
                    "lcm and s^n have no left gcd"});
          } else if (*g != s) {
            b.fail({{{"s", s},
                     {"t", u},
                     {"lcm", m.element},
                     {"power", sn},
                     {"gcd", *g}},
                    static_cast<std::uint32_t>(n),
                    "left gcd of lcm(s, t) and s^n is " + t.to_string(*g)
                        + ", not s"});
          }
        }
      }
    }
    return b.finish();
  }

  namespace detail {
    // The atoms u with z = u^j and r * b = b * u, for one quotient z.
    inline bool rbbt_holds(MonoidTable const& t, Element r, Element b,
                           std::size_t j, Element z) {
      auto rb = t.left_multiply(r, b);
      for (auto u : t.atoms()) {
        if (t.power(u, j) == z && t.right_multiply(b, u) == rb) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  //! Exhaustively checks: whenever r^j * b = b * z for an atom r, an element
  //! b of length <= max_b and 1 <= j <= max_j, then z = u^j for an atom u
  //! with r * b = b * u.
  inline PropertyReport verify_rbbt(MonoidTable const& t, std::size_t max_b,
                                    std::size_t  max_j,
                                    CheckOptions opts = {}) {
    if (max_j < 1 || max_b + max_j > t.bound()) {
      throw PreconditionError("rb=bt check needs max_j >= 1 and "
                              "max_b + max_j <= bound");
    }
    detail::ReportBuilder rep("rbbt", opts);
    rep.report().parameters["bound"] = static_cast<long>(t.bound());
    rep.report().parameters["lb"]    = static_cast<long>(max_b);
    rep.report().parameters["j"]     = static_cast<long>(max_j);
    std::size_t instances            = 0;
    for (auto r : t.atoms()) {
      for (std::size_t l = 0; l <= max_b; ++l) {
        for (auto b : t.elements(l)) {
          for (std::size_t j = 1; j <= max_j; ++j) {
            auto x = t.multiply(t.power(r, j), b);
            for (auto z : left_quotients(t, b, x)) {
              ++instances;
              if (!detail::rbbt_holds(t, r, b, j, z)) {
                rep.fail({{{"r", r}, {"b", b}, {"z", z}},
                          static_cast<std::uint32_t>(j),
                          "no atom u with z = u^j and r b = b u"});
                if (rep.full()) {
                  return rep.finish();
                }
              }
            }
          }
        }
      }
    }
    rep.report().notes.push_back("instances with a solution z: "
                                 + std::to_string(instances));
    return rep.finish();
  }

  //! alpha(x y) = alpha(x alpha(y)) for all x, y of length <= max_length.
  inline PropertyReport verify_alpha_identity(GarsideStructure const& g,
                                              std::size_t  max_length,
                                              CheckOptions opts = {}) {
    auto const& t = g.table();
    if (2 * max_length > t.bound()) {
      throw PreconditionError("alpha identity check needs 2 * L <= bound");
    }
    detail::ReportBuilder rep("alpha-identity", opts);
    rep.report().parameters["bound"]   = static_cast<long>(t.bound());
    rep.report().parameters["l_check"] = static_cast<long>(max_length);
    std::vector<Element> elements;
    for (std::size_t l = 0; l <= max_length; ++l) {
      auto level = t.elements(l);
      elements.insert(elements.end(), level.begin(), level.end());
    }
    std::vector<Element> heads;
    for (auto y : elements) {
      heads.push_back(g.alpha(y));
    }
    for (auto x : elements) {
      for (std::size_t k = 0; k < elements.size(); ++k) {
        auto y   = elements[k];
        auto lhs = g.alpha(t.multiply(x, y));
        auto rhs = g.alpha(t.multiply(x, heads[k]));
        if (lhs != rhs) {
          rep.fail({{{"x", x}, {"y", y}, {"lhs", lhs}, {"rhs", rhs}},
                    std::nullopt,
                    "alpha(x y) differs from alpha(x alpha(y))"});
          if (rep.full()) {
            return rep.finish();
          }
        }
      }
    }
    return rep.finish();
  }

  namespace detail {
    // Empty string when atom_conjugation(b) is a permutation of the atoms
    // dividing b, otherwise the reason it is not.
    inline std::string lemgar2_violation(MonoidTable const& t, Element b) {
      AtomPermutation p;
      try {
        p = atom_conjugation(t, b);
      } catch (BoundExceeded const&) {
        throw;
      } catch (Error const& e) {
        return e.what();
      }
      std::vector<Element> dividing;
      for (auto a : t.atoms()) {
        if (b.length > 0 && left_divides(t, a, b)) {
          dividing.push_back(a);
        }
      }
      if (p.domain() != dividing) {
        return "domain differs from the atoms dividing b";
      }
      if (!p.is_permutation()) {
        return "not a permutation of the atoms dividing b";
      }
      return {};
    }
  }  // namespace detail

  //! For every balanced candidate b, atom_conjugation(b) permutes the atoms
  //! dividing b.  Candidates that are not balanced are skipped.
  inline PropertyReport verify_lemgar2(MonoidTable const&          t,
                                       std::vector<Element> const& candidates,
                                       CheckOptions                opts = {}) {
    detail::ReportBuilder rep("lemgar2", opts);
    rep.report().parameters["bound"] = static_cast<long>(t.bound());
    std::size_t balanced             = 0;
    for (auto b : candidates) {
      if (!is_balanced(t, b)) {
        continue;
      }
      ++balanced;
      if (b.length + 1 > t.bound()) {
        rep.inconclusive("r b exceeds the bound for b = " + t.to_string(b));
        continue;
      }
      auto why = detail::lemgar2_violation(t, b);
      if (!why.empty()) {
        rep.fail({{{"b", b}}, std::nullopt, why});
        if (rep.full()) {
          break;
        }
      }
    }
    rep.report().parameters["balanced"] = static_cast<long>(balanced);
    return rep.finish();
  }

  //! verify_lemgar2 over the simples.
  inline PropertyReport verify_lemgar2(GarsideStructure const& g,
                                       CheckOptions            opts = {}) {
    return verify_lemgar2(g.table(), g.simples(), opts);
  }

  //! Left and right cancellativity for elements of length <= max_length:
  //! for each element z and atom a there is at most one c with a c = z, and
  //! at most one c with c a = z.  The atom case implies the general one.
  inline PropertyReport check_cancellativity(MonoidTable const& t,
                                             std::size_t        max_length,
                                             CheckOptions       opts = {}) {
    detail::ReportBuilder rep("cancellative", opts);
    rep.report().parameters["bound"]      = static_cast<long>(t.bound());
    rep.report().parameters["max_length"] = static_cast<long>(max_length);
    auto scan = [&](Element z, auto preds, std::string const& side) {
      std::map<Element, Element> seen;
      for (auto node : preds) {
        auto a = t.generator(t.node_letter(node));
        auto c = t.node_element(z, node);
        auto [it, fresh] = seen.emplace(a, c);
        if (!fresh && it->second != c) {
          rep.fail({{{"z", z}, {"atom", a}, {"c1", it->second}, {"c2", c}},
                    std::nullopt,
                    side + " cancellation fails"});
        }
      }
    };
    for (std::size_t l = 1; l <= max_length && !rep.full(); ++l) {
      for (auto z : t.elements(l)) {
        scan(z, t.left_predecessors(z), "left");
        scan(z, t.right_predecessors(z), "right");
        if (rep.full()) {
          break;
        }
      }
    }
    return rep.finish();
  }

  struct CenterResult {
    //! Least e >= 1 with delta^e central.
    std::size_t exponent = 0;
    //! Order of the permutation of the atoms induced by delta.
    std::size_t permutation_order = 0;
    //! commutes[f - 1]: whether delta^f commutes with every atom, f <= e.
    std::vector<bool> commutes;
  };

  //! The least power of delta commuting with every atom, read off the
  //! permutation delta induces on the atoms and confirmed by multiplying
  //! delta^f s and s delta^f out for every atom s and every f <= e.
  inline CenterResult center_exponent(GarsideStructure const& g) {
    auto const&  t = g.table();
    CenterResult out;
    out.permutation_order = g.delta_conjugation().order();
    out.exponent          = out.permutation_order;
    auto needed           = out.exponent * g.delta().length + 1;
    if (needed > t.bound()) {
      throw BoundExceeded(needed, t.bound());
    }
    for (std::size_t f = 1; f <= out.exponent; ++f) {
      auto power = t.power(g.delta(), f);
      bool all   = true;
      for (auto s : t.atoms()) {
        if (t.multiply(power, s) != t.multiply(s, power)) {
          all = false;
          break;
        }
      }
      out.commutes.push_back(all);
      if (all != (f == out.exponent)) {
        throw Error("direct commutation check disagrees with the atom "
                    "permutation at delta^"
                    + std::to_string(f));
      }
    }
    return out;
  }

  //! Recomputes the failure described by the primary witness of a report.
  //! Returns true when the failure is reproduced.
  inline bool replay_witness(MonoidTable const& t, PropertyReport const& r) {
    auto const& w  = r.witness();
    auto const& id = r.property_id;
    if (id == "ii") {
      auto m = right_lcm(t, w.get("s"), w.get("t"));
      return m.status == Search::absent
             || (m.found() && !is_balanced(t, m.element));
    }
    if (id == "iii") {
      auto s = w.get("s");
      auto m = right_lcm(t, s, w.get("t"));
      if (!m.found()) {
        return m.status == Search::absent;
      }
      auto g = left_gcd(t, m.element, t.power(s, w.exponent.value()));
      return !g || *g != s;
    }
    if (id == "rbbt") {
      auto r0 = w.get("r"), b = w.get("b"), z = w.get("z");
      auto j  = w.exponent.value();
      auto x  = t.multiply(t.power(r0, j), b);
      return t.multiply(b, z) == x && !detail::rbbt_holds(t, r0, b, j, z);
    }
    if (id == "alpha-identity") {
      GarsideStructure g(t);
      auto             x = w.get("x"), y = w.get("y");
      return g.alpha(t.multiply(x, y)) != g.alpha(t.multiply(x, g.alpha(y)));
    }
    if (id == "lemgar2") {
      return !detail::lemgar2_violation(t, w.get("b")).empty();
    }
    if (id == "cancellative") {
      auto z = w.get("z"), a = w.get("atom"), c1 = w.get("c1"),
           c2 = w.get("c2");
      return c1 != c2
             && ((t.left_multiply(a, c1) == z && t.left_multiply(a, c2) == z)
                 || (t.right_multiply(c1, a) == z
                     && t.right_multiply(c2, a) == z));
    }
    if (id == "i") {
      return t.size(0) != 1;
    }
    throw InputError("no replay for property \"" + id + "\"");
  }

}  // namespace garside
