#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace garside {

  //! A partial map on atoms, stored by atom index.
  class AtomPermutation {
   public:
    AtomPermutation() = default;
    explicit AtomPermutation(std::size_t atoms) : _image(atoms, -1) {}

    void set(Element from, Element to) {
      _image.at(from.id) = static_cast<int>(to.id);
    }

    bool contains(Element a) const {
      return a.length == 1 && a.id < _image.size() && _image[a.id] >= 0;
    }

    Element operator()(Element a) const {
      if (!contains(a)) {
        throw PreconditionError("atom outside the domain of the permutation");
      }
      return {1, static_cast<std::uint32_t>(_image[a.id])};
    }

    std::vector<Element> domain() const {
      std::vector<Element> out;
      for (std::uint32_t i = 0; i < _image.size(); ++i) {
        if (_image[i] >= 0) {
          out.push_back({1, i});
        }
      }
      return out;
    }

    std::vector<Element> range() const {
      std::vector<Element> out;
      for (auto x : _image) {
        if (x >= 0) {
          out.push_back({1, static_cast<std::uint32_t>(x)});
        }
      }
      detail::sort_unique(out);
      return out;
    }

    //! Injective with domain equal to range.
    bool is_permutation() const {
      auto d = domain();
      auto r = range();
      return d.size() == r.size() && d == r;
    }

    bool is_identity() const {
      for (std::uint32_t i = 0; i < _image.size(); ++i) {
        if (_image[i] >= 0 && static_cast<std::uint32_t>(_image[i]) != i) {
          return false;
        }
      }
      return true;
    }

    AtomPermutation inverse() const {
      AtomPermutation out(_image.size());
      for (auto a : domain()) {
        out.set((*this)(a), a);
      }
      return out;
    }

    //! Least e >= 1 with this^e the identity on the domain.
    std::size_t order() const {
      if (!is_permutation()) {
        throw PreconditionError("order of a map that is not a permutation");
      }
      std::size_t out = 1;
      for (auto a : domain()) {
        std::size_t len = 1;
        for (auto b = (*this)(a); b != a; b = (*this)(b)) {
          ++len;
        }
        out = std::lcm(out, len);
      }
      return out;
    }

    std::size_t number_of_atoms() const noexcept {
      return _image.size();
    }

    bool operator==(AtomPermutation const&) const = default;

   private:
    std::vector<int> _image;
  };

  //! For a balanced element b, maps each atom r left-dividing b to the unique
  //! atom t with r * b = b * t.
  inline AtomPermutation atom_conjugation(MonoidTable const& t, Element b) {
    if (!is_balanced(t, b)) {
      throw PreconditionError(t.to_string(b) + " is not balanced");
    }
    AtomPermutation out(t.number_of_atoms());
    if (b.length == 0) {
      return out;
    }
    for (auto r : t.atoms()) {
      if (!left_divides(t, r, b)) {
        continue;
      }
      auto                   rb = t.left_multiply(r, b);
      std::optional<Element> image;
      for (auto s : t.atoms()) {
        if (t.right_multiply(b, s) == rb) {
          if (image) {
            throw Error("two atoms t with " + t.to_string(r) + " * b = b * t"
                        + " for b = " + t.to_string(b));
          }
          image = s;
        }
      }
      if (!image) {
        throw Error("no atom t with " + t.to_string(r) + " * b = b * t for b = "
                    + t.to_string(b));
      }
      out.set(r, *image);
    }
    return out;
  }

  //! A truncated monoid together with its Garside element.  Provides the
  //! head function, greedy normal forms and conjugation by the Garside
  //! element.
  class GarsideStructure {
   public:
    //! Throws UnsupportedOperation when no Garside element exists within the
    //! table bound.
    explicit GarsideStructure(MonoidTable const& t) : _table(&t) {
      auto r = find_garside_element(t);
      if (!r.found()) {
        throw UnsupportedOperation(
            "no Garside element of length <= " + std::to_string(t.bound()));
      }
      init(r.element);
    }

    GarsideStructure(MonoidTable const& t, Element delta) : _table(&t) {
      if (t.left_atom_mask(delta) != t.all_atoms_mask()
          || !is_balanced(t, delta)) {
        throw PreconditionError(t.to_string(delta)
                                + " is not a Garside element");
      }
      init(delta);
    }

    MonoidTable const& table() const noexcept {
      return *_table;
    }

    Element delta() const noexcept {
      return _delta;
    }

    //! The left divisors of the Garside element.
    std::vector<Element> const& simples() const noexcept {
      return _simples;
    }

    bool is_simple(Element x) const {
      return std::binary_search(_simples.begin(), _simples.end(), x);
    }

    //! The left gcd of x and the Garside element.
    Element alpha(Element x) const {
      std::vector<Element> common;
      for (auto s : _simples) {
        if (s.length <= x.length && left_divides(*_table, s, x)) {
          common.push_back(s);
        }
      }
      auto best = detail::left_maximum(*_table, common);
      if (!best) {
        throw Error("no left gcd of " + _table->to_string(x)
                    + " with the Garside element");
      }
      return *best;
    }

    //! Simples x_1, ..., x_k with x = x_1 ... x_k and each x_i the head of
    //! x_i ... x_k.
    std::vector<Element> normal_form(Element x) const {
      std::vector<Element> out;
      while (x.length > 0) {
        auto head = alpha(x);
        if (head.length == 0) {
          throw Error("element " + _table->to_string(x)
                      + " has no nontrivial simple head");
        }
        auto rest = left_quotients(*_table, head, x);
        if (rest.size() != 1) {
          throw Error("left quotient of " + _table->to_string(x) + " by "
                      + _table->to_string(head) + " is not unique");
        }
        out.push_back(head);
        x = rest.front();
      }
      return out;
    }

    //! r -> t with r * delta = delta * t.
    AtomPermutation const& delta_conjugation() const noexcept {
      return _tau;
    }

    //! delta^-1 * x * delta, computed letter by letter.
    Element tau(Element x) const {
      return apply(_tau, x);
    }

    //! delta * x * delta^-1.
    Element tau_inverse(Element x) const {
      return apply(_tau_inv, x);
    }

    //! tau applied k times; negative k applies the inverse.
    Element tau_power(Element x, long k) const {
      auto        ord = static_cast<long>(_tau.order());
      long        e   = ((k % ord) + ord) % ord;
      for (long i = 0; i < e; ++i) {
        x = tau(x);
      }
      return x;
    }

   private:
    void init(Element delta) {
      _delta   = delta;
      _simples = left_divisors(*_table, delta);
      _tau     = atom_conjugation(*_table, delta);
      _tau_inv = _tau.inverse();
    }

    Element apply(AtomPermutation const& p, Element x) const {
      word_type w;
      for (auto g : _table->word(x)) {
        w.push_back(_table->letter(p(_table->generator(g))));
      }
      return _table->element_of(w);
    }

    MonoidTable const*   _table;
    Element              _delta;
    std::vector<Element> _simples;
    AtomPermutation      _tau;
    AtomPermutation      _tau_inv;
  };

}  // namespace garside
