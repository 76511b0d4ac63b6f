#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "presentation.hpp"

namespace garside {

  //! Symmetric Coxeter matrix; entry 0 stands for infinity (no relation).
  class CoxeterMatrix {
   public:
    explicit CoxeterMatrix(std::vector<std::vector<unsigned>> m)
        : _m(std::move(m)) {
      for (std::size_t i = 0; i < _m.size(); ++i) {
        if (_m[i].size() != _m.size()) {
          throw InputError("Coxeter matrix is not square");
        }
        if (_m[i][i] != 1) {
          throw InputError("Coxeter matrix diagonal entries must be 1");
        }
        for (std::size_t j = 0; j < _m.size(); ++j) {
          if (_m[i][j] != _m[j][i]) {
            throw InputError("Coxeter matrix is not symmetric");
          }
          if (i != j && _m[i][j] == 1) {
            throw InputError("off-diagonal Coxeter entries must be >= 2");
          }
        }
      }
    }

    std::size_t rank() const noexcept {
      return _m.size();
    }

    unsigned operator()(std::size_t i, std::size_t j) const {
      return _m.at(i).at(j);
    }

    //! Rank 2 with a single entry m.
    static CoxeterMatrix dihedral(unsigned m) {
      return CoxeterMatrix({{1, m}, {m, 1}});
    }

    //! Builds the matrix of a diagram: listed edges get their label, all
    //! other pairs commute.
    static CoxeterMatrix
    from_edges(std::size_t                                              rank,
               std::vector<std::tuple<std::size_t, std::size_t, unsigned>> const&
                   edges) {
      std::vector<std::vector<unsigned>> m(rank, std::vector<unsigned>(rank, 2));
      for (std::size_t i = 0; i < rank; ++i) {
        m[i][i] = 1;
      }
      for (auto [i, j, label] : edges) {
        m.at(i).at(j) = m.at(j).at(i) = label;
      }
      return CoxeterMatrix(std::move(m));
    }

    //! Linear diagram s_1 - s_2 - ... - s_n.
    static CoxeterMatrix type_a(std::size_t n) {
      std::vector<std::tuple<std::size_t, std::size_t, unsigned>> edges;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1, 3);
      }
      return from_edges(n, edges);
    }

    //! E8 in Bourbaki numbering: s1 - s3 - s4 - s5 - s6 - s7 - s8 with s2
    //! attached to s4 (0-based indices below).
    static CoxeterMatrix e8() {
      return from_edges(8, {{0, 2, 3},
                            {2, 3, 3},
                            {3, 4, 3},
                            {4, 5, 3},
                            {5, 6, 3},
                            {6, 7, 3},
                            {1, 3, 3}});
    }

    bool operator==(CoxeterMatrix const&) const = default;

   private:
    std::vector<std::vector<unsigned>> _m;
  };

  namespace detail {
    inline word_type alternating(letter_type a, letter_type b, std::size_t n) {
      word_type w;
      for (std::size_t k = 0; k < n; ++k) {
        w.push_back(k % 2 == 0 ? a : b);
      }
      return w;
    }

    inline std::vector<std::string> numbered(std::string const& stem,
                                             std::size_t n, std::size_t from = 1) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(stem + std::to_string(from + i));
      }
      return out;
    }
  }  // namespace detail

  //! Positive monoid of the Artin-Tits group: sts... = tst... (m factors)
  //! for each pair with finite m.  Generators are named s1, ..., sn unless
  //! names are given.
  inline Presentation artin_presentation(CoxeterMatrix const&     cm,
                                         std::vector<std::string> names = {}) {
    Presentation p;
    p.generators = names.empty() ? detail::numbered("s", cm.rank())
                                 : std::move(names);
    if (p.generators.size() != cm.rank()) {
      throw InputError("wrong number of generator names");
    }
    for (letter_type i = 0; i < cm.rank(); ++i) {
      for (letter_type j = i + 1; j < cm.rank(); ++j) {
        if (auto m = cm(i, j); m != 0) {
          p.relations.push_back(
              {detail::alternating(i, j, m), detail::alternating(j, i, m)});
        }
      }
    }
    validate(p);
    return p;
  }

  //! Rank 2 Artin monoid of type I_2(m) on generators s, t.
  inline Presentation dihedral_artin_presentation(unsigned m) {
    return artin_presentation(CoxeterMatrix::dihedral(m), {"s", "t"});
  }

  //! The monoid f(h, m): generators x1, ..., xm and the single chain
  //! x1 x2 ... = x2 x3 ... = ... = xm x1 ..., each side with h letters
  //! taken cyclically.
  inline Presentation fhm_presentation(std::size_t h, std::size_t m) {
    if (h < 1 || m < 1) {
      throw InputError("f(h, m) needs h, m >= 1");
    }
    Presentation p;
    p.generators = detail::numbered("x", m);
    if (m >= 2) {
      std::vector<word_type> chain;
      for (std::size_t k = 0; k < m; ++k) {
        word_type w;
        for (std::size_t i = 0; i < h; ++i) {
          w.push_back(static_cast<letter_type>((k + i) % m));
        }
        chain.push_back(std::move(w));
      }
      p.relations.push_back(std::move(chain));
    }
    validate(p);
    return p;
  }

  //! Chow's presentation of the type B_n Artin group on sigma1, ...,
  //! sigma(n-1), tau1, ..., taun.
  inline Presentation chow_presentation(std::size_t n) {
    if (n < 2) {
      throw InputError("Chow presentation needs n >= 2");
    }
    Presentation p;
    p.generators = detail::numbered("sigma", n - 1);
    auto taus    = detail::numbered("tau", n);
    p.generators.insert(p.generators.end(), taus.begin(), taus.end());
    auto sigma = [](std::size_t i) { return static_cast<letter_type>(i - 1); };
    auto tau   = [n](std::size_t i) {
      return static_cast<letter_type>(n - 1 + i - 1);
    };
    for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
      p.relations.push_back({{sigma(i), sigma(i + 1), sigma(i)},
                             {sigma(i + 1), sigma(i), sigma(i + 1)}});
    }
    for (std::size_t i = 1; i <= n - 1; ++i) {
      for (std::size_t j = i + 2; j <= n - 1; ++j) {
        p.relations.push_back({{sigma(i), sigma(j)}, {sigma(j), sigma(i)}});
      }
    }
    for (std::size_t i = 1; i <= n - 1; ++i) {
      p.relations.push_back({{sigma(i), tau(i), tau(i + 1)},
                             {tau(i), tau(i + 1), sigma(i)}});
      p.relations.push_back({{sigma(i), tau(i)}, {tau(i + 1), sigma(i)}});
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != i && j != i + 1) {
          p.relations.push_back({{sigma(i), tau(j)}, {tau(j), sigma(i)}});
        }
      }
    }
    validate(p);
    return p;
  }

  //! <a, b | a a = b b>
  inline Presentation godelle_presentation() {
    Presentation p;
    p.generators = {"a", "b"};
    p.relations  = {{{0, 0}, {1, 1}}};
    validate(p);
    return p;
  }

  //! Band generator presentation of the dual braid monoid of type A_n
  //! (n + 1 strands): generators a_ts for 1 <= s < t <= n + 1, named "a<t><s>",
  //! with a_ts a_rq = a_rq a_ts when [s, t] and [q, r] are disjoint or nested,
  //! and a_ts a_sr = a_tr a_ts = a_sr a_tr for r < s < t.
  inline Presentation bkl_dual_presentation(std::size_t n) {
    if (n < 1 || n > 8) {
      throw InputError("dual braid presentation supports 1 <= n <= 8");
    }
    std::size_t const strands = n + 1;
    Presentation      p;
    std::vector<std::vector<letter_type>> index(
        strands + 1, std::vector<letter_type>(strands + 1, 0));
    for (std::size_t t = 2; t <= strands; ++t) {
      for (std::size_t s = 1; s < t; ++s) {
        index[t][s] = static_cast<letter_type>(p.generators.size());
        p.generators.push_back("a" + std::to_string(t) + std::to_string(s));
      }
    }
    auto a = [&index](std::size_t t, std::size_t s) { return index[t][s]; };
    std::vector<std::pair<std::size_t, std::size_t>> bands;
    for (std::size_t t = 2; t <= strands; ++t) {
      for (std::size_t s = 1; s < t; ++s) {
        bands.emplace_back(t, s);
      }
    }
    for (std::size_t x = 0; x < bands.size(); ++x) {
      for (std::size_t y = x + 1; y < bands.size(); ++y) {
        auto [t, s] = bands[x];
        auto [r, q] = bands[y];
        long prod   = (long(t) - long(r)) * (long(t) - long(q))
                    * (long(s) - long(r)) * (long(s) - long(q));
        if (prod > 0) {
          p.relations.push_back({{a(t, s), a(r, q)}, {a(r, q), a(t, s)}});
        }
      }
    }
    for (std::size_t t = 3; t <= strands; ++t) {
      for (std::size_t s = 2; s < t; ++s) {
        for (std::size_t r = 1; r < s; ++r) {
          p.relations.push_back({{a(t, s), a(s, r)},
                                 {a(t, r), a(t, s)},
                                 {a(s, r), a(t, r)}});
        }
      }
    }
    validate(p);
    return p;
  }

}  // namespace garside
