#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"

namespace garside {

  //! An element of a truncated monoid: its length and its index among the
  //! elements of that length.  Indices follow the lexicographic order of the
  //! canonical words, so comparing Elements compares (length, shortlex).
  struct Element {
    std::uint32_t length = 0;
    std::uint32_t id     = 0;

    friend constexpr auto operator<=>(Element const&, Element const&) = default;
  };

  inline constexpr Element identity_element{0, 0};

  struct TableOptions {
    //! Building a length level with more classes than this throws
    //! ResourceError.
    std::size_t max_classes_per_level = 1'000'000;
  };

  //! Exact truncation, up to a length bound, of the monoid defined by a
  //! homogeneous presentation.
  //!
  //! Level L (the elements of length L) is obtained from level L - 1 by
  //! closing the set of pairs (element of length L - 1, generator) under the
  //! relation rewrites that touch the final letter; rewrites inside the prefix
  //! are already accounted for by the classes of level L - 1.  Levels are
  //! materialized on first use and never change afterwards, so a table is
  //! logically immutable and may be queried from several threads.
  class MonoidTable {
   public:
    //! A pair (element of the previous level, generator) encoded as
    //! prev_id * number_of_generators() + generator.
    using node_type = std::uint32_t;

    MonoidTable(Presentation p, std::size_t bound, TableOptions opts = {})
        : _pres(std::move(p)),
          _bound(bound),
          _opts(opts),
          _gens(_pres.number_of_generators()),
          _levels(bound + 1),
          _mtx(std::make_unique<std::mutex>()) {
      validate(_pres);
      if (bound < 1) {
        throw InputError("table bound must be at least 1");
      }
      if (_gens == 0) {
        throw InputError("presentation has no generators");
      }
      auto l0          = std::make_unique<Level>();
      l0->size         = 1;
      l0->rpred_offset = {0, 0};
      l0->lpred_offset = {0, 0};
      l0->left_mask    = {0};
      l0->right_mask   = {0};
      l0->parent       = {0};
      _levels[0]       = std::move(l0);
      _built.store(1, std::memory_order_release);
      materialize(1);
      if (size(1) > 64) {
        throw UnsupportedOperation("more than 64 atoms are not supported");
      }
    }

    MonoidTable(MonoidTable&& other) noexcept
        : _pres(std::move(other._pres)),
          _bound(other._bound),
          _opts(other._opts),
          _gens(other._gens),
          _levels(std::move(other._levels)),
          _built(other._built.load()),
          _mtx(std::move(other._mtx)) {}

    MonoidTable(MonoidTable const&)            = delete;
    MonoidTable& operator=(MonoidTable const&) = delete;
    MonoidTable& operator=(MonoidTable&&)      = delete;

    Presentation const& presentation() const noexcept {
      return _pres;
    }

    std::size_t bound() const noexcept {
      return _bound;
    }

    std::size_t number_of_generators() const noexcept {
      return _gens;
    }

    //! Number of elements of the given length.
    std::size_t size(std::size_t length) const {
      return level(length).size;
    }

    std::vector<std::size_t> sizes(std::size_t upto) const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i <= upto; ++i) {
        out.push_back(size(i));
      }
      return out;
    }

    //! Number of levels built so far.
    std::size_t materialized() const noexcept {
      return _built.load(std::memory_order_acquire);
    }

    //! Builds every level up to and including the given length.
    void materialize(std::size_t length) const {
      if (length > _bound) {
        throw BoundExceeded(length, _bound);
      }
      if (length < materialized()) {
        return;
      }
      std::lock_guard<std::mutex> lock(*_mtx);
      for (std::size_t l = _built.load(std::memory_order_relaxed); l <= length;
           ++l) {
        _levels[l] = build_level(l);
        _built.store(l + 1, std::memory_order_release);
      }
    }

    std::size_t number_of_atoms() const {
      return size(1);
    }

    Element atom(std::size_t i) const {
      return {1, static_cast<std::uint32_t>(i)};
    }

    std::vector<Element> atoms() const {
      std::vector<Element> out;
      for (std::size_t i = 0; i < number_of_atoms(); ++i) {
        out.push_back(atom(i));
      }
      return out;
    }

    //! The atom represented by a generator.
    Element generator(letter_type g) const {
      return right_multiply(identity_element, g);
    }

    //! The generator spelling the canonical word of an atom.
    letter_type letter(Element atom) const {
      check_atom(atom);
      return level(1).parent_letter(atom.id, _gens);
    }

    std::vector<Element> elements(std::size_t length) const {
      std::vector<Element> out(size(length));
      for (std::uint32_t i = 0; i < out.size(); ++i) {
        out[i] = {static_cast<std::uint32_t>(length), i};
      }
      return out;
    }

    Element element_of(word_type const& w) const {
      if (w.size() > _bound) {
        throw BoundExceeded(w.size(), _bound);
      }
      Element x = identity_element;
      for (auto g : w) {
        x = right_multiply(x, g);
      }
      return x;
    }

    Element element_of(std::string_view text) const {
      return element_of(_pres.parse_word(text));
    }

    //! The lexicographically least word representing x.
    word_type word(Element x) const {
      word_type w(x.length);
      for (std::size_t l = x.length; l > 0; --l) {
        auto node = level(l).parent[x.id];
        w[l - 1]  = node % _gens;
        x         = {static_cast<std::uint32_t>(l - 1),
                     static_cast<std::uint32_t>(node / _gens)};
      }
      return w;
    }

    std::string to_string(Element x) const {
      return _pres.to_string(word(x));
    }

    Element right_multiply(Element x, letter_type g) const {
      check_letter(g);
      auto const& next = level(x.length + 1);
      return {x.length + 1, next.right_class[x.id * _gens + g]};
    }

    Element left_multiply(letter_type g, Element x) const {
      check_letter(g);
      auto const& next = level(x.length + 1);
      return {x.length + 1, next.left_class[x.id * _gens + g]};
    }

    Element right_multiply(Element x, Element atom) const {
      return right_multiply(x, letter(atom));
    }

    Element left_multiply(Element atom, Element x) const {
      return left_multiply(letter(atom), x);
    }

    Element multiply(Element a, Element b) const {
      if (a.length + b.length > _bound) {
        throw BoundExceeded(a.length + b.length, _bound);
      }
      for (auto g : word(b)) {
        a = right_multiply(a, g);
      }
      return a;
    }

    Element power(Element a, std::size_t n) const {
      if (a.length * n > _bound) {
        throw BoundExceeded(a.length * n, _bound);
      }
      Element out = identity_element;
      for (std::size_t i = 0; i < n; ++i) {
        out = multiply(out, a);
      }
      return out;
    }

    //! Nodes (c, g) with c * g = x, i.e. the ways of writing x = c * g.
    std::span<node_type const> right_predecessors(Element x) const {
      auto const& lv = level(x.length);
      return std::span<node_type const>(lv.rpred).subspan(
          lv.rpred_offset[x.id],
          lv.rpred_offset[x.id + 1] - lv.rpred_offset[x.id]);
    }

    //! Nodes (c, g) with g * c = x, i.e. the ways of writing x = g * c.
    std::span<node_type const> left_predecessors(Element x) const {
      auto const& lv = level(x.length);
      return std::span<node_type const>(lv.lpred).subspan(
          lv.lpred_offset[x.id],
          lv.lpred_offset[x.id + 1] - lv.lpred_offset[x.id]);
    }

    //! The element c of a node (c, g) belonging to a level.
    static Element node_element(std::uint32_t level_of_node, node_type node,
                                std::size_t gens) {
      return {level_of_node - 1, static_cast<std::uint32_t>(node / gens)};
    }

    Element node_element(Element x, node_type node) const {
      return node_element(x.length, node, _gens);
    }

    letter_type node_letter(node_type node) const {
      return node % _gens;
    }

    //! Bit i is set iff atom i left-divides x.
    std::uint64_t left_atom_mask(Element x) const {
      return level(x.length).left_mask[x.id];
    }

    //! Bit i is set iff atom i right-divides x.
    std::uint64_t right_atom_mask(Element x) const {
      return level(x.length).right_mask[x.id];
    }

    std::uint64_t all_atoms_mask() const {
      auto n = number_of_atoms();
      return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }

   private:
    struct Level {
      std::size_t size = 0;
      // canonical word of class i = word(parent class) + parent letter
      std::vector<node_type> parent;
      // node of the previous level -> class of this level
      std::vector<std::uint32_t> right_class;
      std::vector<std::uint32_t> left_class;
      // CSR lists of nodes
      std::vector<std::uint32_t> rpred_offset;
      std::vector<node_type>     rpred;
      std::vector<std::uint32_t> lpred_offset;
      std::vector<node_type>     lpred;
      std::vector<std::uint64_t> left_mask;
      std::vector<std::uint64_t> right_mask;

      letter_type parent_letter(std::uint32_t id, std::size_t gens) const {
        return parent[id] % gens;
      }
    };

    void check_letter(letter_type g) const {
      if (g >= _gens) {
        throw InputError("generator index out of range");
      }
    }

    void check_atom(Element a) const {
      if (a.length != 1) {
        throw PreconditionError("element is not an atom");
      }
    }

    Level const& level(std::size_t l) const {
      if (l >= materialized()) {
        materialize(l);
      }
      return *_levels[l];
    }

    // only called with _mtx held and all lower levels built
    std::unique_ptr<Level> build_level(std::size_t l) const {
      auto const& prev  = *_levels[l - 1];
      std::size_t nodes = prev.size * _gens;
      if (nodes > std::numeric_limits<std::uint32_t>::max() / 2) {
        throw ResourceError(l, _opts.max_classes_per_level);
      }

      std::vector<std::uint32_t> uf(nodes);
      std::iota(uf.begin(), uf.end(), 0);
      auto find = [&uf](std::uint32_t x) {
        while (uf[x] != x) {
          uf[x] = uf[uf[x]];
          x     = uf[x];
        }
        return x;
      };
      auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          // keep the smaller node as root
          if (a < b) {
            uf[b] = a;
          } else {
            uf[a] = b;
          }
        }
      };

      // class in level l - 1 of x * w[0 .. k - 1), x of length l - k
      auto prefix_class = [&](std::uint32_t x, std::size_t from,
                              word_type const& w) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          auto const& next = *_levels[from + i + 1];
          x                = next.right_class[x * _gens + w[i]];
        }
        return x;
      };

      for (auto const& chain : _pres.relations) {
        std::size_t k = chain.front().size();
        if (k > l) {
          continue;
        }
        std::size_t from = l - k;
        for (std::uint32_t x = 0; x < _levels[from]->size; ++x) {
          auto const& u  = chain.front();
          auto        cu = prefix_class(x, from, u);
          for (std::size_t s = 1; s < chain.size(); ++s) {
            auto const& v  = chain[s];
            auto        cv = prefix_class(x, from, v);
            unite(cu * _gens + u.back(), cv * _gens + v.back());
          }
        }
      }

      auto lv = std::make_unique<Level>();
      lv->right_class.assign(nodes, 0);
      std::vector<std::uint32_t> root_class(nodes,
                                            std::numeric_limits<std::uint32_t>::max());
      for (std::uint32_t n = 0; n < nodes; ++n) {
        auto r = find(n);
        if (root_class[r] == std::numeric_limits<std::uint32_t>::max()) {
          // first node met is the least pair, hence the least word
          root_class[r] = static_cast<std::uint32_t>(lv->parent.size());
          lv->parent.push_back(n);
          if (lv->parent.size() > _opts.max_classes_per_level) {
            throw ResourceError(l, _opts.max_classes_per_level);
          }
        }
        lv->right_class[n] = root_class[r];
      }
      lv->size = lv->parent.size();
      std::vector<std::uint32_t>().swap(root_class);
      std::vector<std::uint32_t>().swap(uf);

      auto build_csr = [&](std::vector<std::uint32_t> const& cls,
                           std::vector<std::uint32_t>&       offset,
                           std::vector<node_type>&           list) {
        offset.assign(lv->size + 1, 0);
        for (auto c : cls) {
          ++offset[c + 1];
        }
        std::partial_sum(offset.begin(), offset.end(), offset.begin());
        list.resize(cls.size());
        auto pos = offset;
        for (std::uint32_t n = 0; n < cls.size(); ++n) {
          list[pos[cls[n]]++] = n;
        }
      };
      build_csr(lv->right_class, lv->rpred_offset, lv->rpred);

      // g * c for c of length l - 1: c = c' * h gives g * c = (g * c') * h
      lv->left_class.assign(nodes, 0);
      for (std::uint32_t c = 0; c < prev.size; ++c) {
        for (letter_type g = 0; g < _gens; ++g) {
          std::uint32_t out;
          if (l == 1) {
            out = lv->right_class[g];
          } else {
            auto pn  = prev.parent[c];
            auto cp  = pn / _gens;
            auto h   = pn % _gens;
            auto gcp = prev.left_class[cp * _gens + g];
            out      = lv->right_class[gcp * _gens + h];
          }
          lv->left_class[c * _gens + g] = out;
        }
      }
      build_csr(lv->left_class, lv->lpred_offset, lv->lpred);

      lv->left_mask.assign(lv->size, 0);
      lv->right_mask.assign(lv->size, 0);
      if (l == 1) {
        for (std::uint32_t i = 0; i < lv->size; ++i) {
          if (i < 64) {
            lv->left_mask[i] = lv->right_mask[i] = std::uint64_t(1) << i;
          }
        }
      } else {
        auto const& atoms = *_levels[1];
        for (std::uint32_t n = 0; n < nodes; ++n) {
          auto c = lv->right_class[n];
          lv->left_mask[c] |= prev.left_mask[n / _gens];
          lv->right_mask[c] |= std::uint64_t(1) << atoms.right_class[n % _gens];
        }
      }
      return lv;
    }

    Presentation                         _pres;
    std::size_t                          _bound;
    TableOptions                         _opts;
    std::size_t                          _gens;
    mutable std::vector<std::unique_ptr<Level>> _levels;
    mutable std::atomic<std::size_t>     _built{0};
    std::unique_ptr<std::mutex>          _mtx;
  };

  inline MonoidTable build_table(Presentation p, std::size_t bound,
                                 TableOptions opts = {}) {
    return MonoidTable(std::move(p), bound, opts);
  }

}  // namespace garside
