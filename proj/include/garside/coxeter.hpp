#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "families.hpp"
#include "matrix.hpp"
#include "properties.hpp"

namespace garside {

  //! One matrix per Coxeter generator, acting on the root basis of the
  //! geometric representation.
  struct ReflectionRep {
    CoxeterMatrix        coxeter;
    std::vector<QMatrix> generators;

    //! Product of the generator matrices along a word (0-based letters).
    QMatrix image(word_type const& w) const {
      auto out = QMatrix::identity(RationalField{}, coxeter.rank());
      for (auto g : w) {
        out = out * generators.at(g);
      }
      return out;
    }
  };

  //! The geometric representation with an integral Cartan matrix:
  //! s_i(a_j) = a_j - c_ij a_i where c_ij = c_ji = -1 for m = 3, and
  //! (c_ij, c_ji) = (-1, -2) for m = 4, (-1, -3) for m = 6 (i < j).  This is
  //! the symmetric geometric representation rescaled on the root basis, so
  //! all entries are integers.  Throws InputError for other labels and
  //! Error if the matrices fail to satisfy the Coxeter relations (which can
  //! happen for diagrams whose cycles carry labels 4 or 6).
  inline ReflectionRep reflection_rep(CoxeterMatrix const& cm) {
    auto const n = cm.rank();
    std::vector<std::vector<long long>> cartan(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      cartan[i][i] = 2;
      for (std::size_t j = i + 1; j < n; ++j) {
        switch (cm(i, j)) {
          case 2:
            break;
          case 3:
            cartan[i][j] = cartan[j][i] = -1;
            break;
          case 4:
            cartan[i][j] = -1;
            cartan[j][i] = -2;
            break;
          case 6:
            cartan[i][j] = -1;
            cartan[j][i] = -3;
            break;
          default:
            throw InputError("reflection representation supports Coxeter "
                             "labels 2, 3, 4, 6 only");
        }
      }
    }
    ReflectionRep rep{cm, {}};
    RationalField Q;
    for (std::size_t i = 0; i < n; ++i) {
      auto m = QMatrix::identity(Q, n);
      // column j holds s_i(a_j)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Q.sub(m(i, j), Q.from_integer(cartan[i][j]));
      }
      rep.generators.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        auto prod  = rep.generators[i] * rep.generators[j];
        auto order = prod.order(12);
        if (order != cm(i, j)) {
          throw Error("reflection matrices fail the Coxeter relation for ("
                      + std::to_string(i + 1) + ", " + std::to_string(j + 1)
                      + ")");
        }
      }
    }
    return rep;
  }

  //! One generator x_i of the B31 diagram presentation as a word in the E8
  //! generators: x_i -> conjugator^-1 core conjugator.  Letters are 1-based
  //! E8 indices in Bourbaki numbering.
  struct EmbeddingEntry {
    std::vector<unsigned> conjugator;
    std::vector<unsigned> core;
  };

  using EmbeddingData = std::array<EmbeddingEntry, 5>;

  inline EmbeddingData g31_embedding_data() {
    return {{
        {{2, 3, 1, 5}, {1, 4}},
        {{4, 2, 3, 5, 6, 5, 7}, {2, 5}},
        {{5, 6, 7}, {1, 4}},
        {{2, 5, 6}, {4, 6}},
        {{3, 1, 5, 6}, {4, 8}},
    }};
  }

  //! FNV-1a over the entries, separating words and entries by markers.
  inline std::uint64_t checksum(EmbeddingData const& data) {
    std::uint64_t h    = 0xcbf29ce484222325ULL;
    auto          feed = [&h](unsigned x) {
      h ^= x;
      h *= 0x100000001b3ULL;
    };
    for (auto const& e : data) {
      for (auto x : e.conjugator) {
        feed(x);
      }
      feed(100);
      for (auto x : e.core) {
        feed(x);
      }
      feed(200);
    }
    return h;
  }

  //! The regular element c = (s4 s2 s3 s1 s4 s3 s5 s6 s7 s8)^6 of W(E8),
  //! 1-based letters.
  inline std::vector<unsigned> e8_regular_element_word() {
    std::vector<unsigned> base{4, 2, 3, 1, 4, 3, 5, 6, 7, 8};
    std::vector<unsigned> out;
    for (int i = 0; i < 6; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  //! Relations of the B31 diagram presentation, 1-based x indices.  The
  //! circle joins x1, x2, x3; plain edges join x4-x1, x4-x2, x2-x5, x3-x5;
  //! every other pair outside the circle commutes.
  struct G31Relation {
    unsigned    i, j;
    unsigned    order;  // order of x_i x_j in the reflection group image
    std::string kind;   // "braid", "commute" or "circle"
  };

  inline std::vector<G31Relation> g31_diagram_relations() {
    return {
        {1, 4, 3, "braid"},   {2, 4, 3, "braid"},   {2, 5, 3, "braid"},
        {3, 5, 3, "braid"},   {1, 5, 2, "commute"}, {3, 4, 2, "commute"},
        {4, 5, 2, "commute"},
    };
  }

  struct G31Images {
    std::array<QMatrix, 5> x;
    QMatrix                beta;  // image of (x4 x1 x2 x3 x5)^6
    QMatrix                c;     // image of the regular element word
  };

  inline G31Images g31_images(ReflectionRep const& rep) {
    auto word_of = [](std::vector<unsigned> const& w) {
      word_type out;
      for (auto x : w) {
        out.push_back(x - 1);
      }
      return out;
    };
    auto data = g31_embedding_data();
    auto make = [&](EmbeddingEntry const& e) {
      auto conj = rep.image(word_of(e.conjugator));
      auto inv  = rep.image(
          word_of({e.conjugator.rbegin(), e.conjugator.rend()}));
      return inv * rep.image(word_of(e.core)) * conj;
    };
    std::array<QMatrix, 5> x{make(data[0]), make(data[1]), make(data[2]),
                             make(data[3]), make(data[4])};
    auto prod = x[3] * x[0] * x[1] * x[2] * x[4];
    return {x, prod.power(6), rep.image(word_of(e8_regular_element_word()))};
  }

  //! Checks the B31 embedding words at the level of W(E8): each image is an
  //! involution, the circle relation x1 x2 x3 = x2 x3 x1 = x3 x1 x2 holds,
  //! the pairs of the diagram have the expected orders, and the image of
  //! (x4 x1 x2 x3 x5)^6 has order exactly 4, equals the image of the regular
  //! element word and commutes with every x_i.
  inline PropertyReport verify_g31_relations_in_w_e8() {
    PropertyReport report;
    report.property_id = "g31-embedding";
    auto rep           = reflection_rep(CoxeterMatrix::e8());
    auto img           = g31_images(rep);
    auto fail          = [&report](std::string what) {
      report.verdict = Verdict::fail;
      report.witnesses.push_back({{}, std::nullopt, std::move(what)});
    };
    for (unsigned i = 0; i < 5; ++i) {
      if (img.x[i].is_identity() || !img.x[i].power(2).is_identity()) {
        fail("x" + std::to_string(i + 1) + " is not an involution");
      }
    }
    report.notes.push_back("involutions: checked x1..x5");
    auto const& x  = img.x;
    auto        a  = x[0] * x[1] * x[2];
    auto        b  = x[1] * x[2] * x[0];
    auto        cc = x[2] * x[0] * x[1];
    if (!(a == b) || !(b == cc)) {
      fail("circle relation x1 x2 x3 = x2 x3 x1 = x3 x1 x2");
    }
    report.notes.push_back("circle relation: checked");
    auto relations = g31_diagram_relations();
    for (std::size_t k = 0; k < relations.size(); ++k) {
      auto const& r     = relations[k];
      auto        order = (x[r.i - 1] * x[r.j - 1]).order(12);
      if (order != r.order) {
        fail("relation " + std::to_string(k + 1) + ", " + r.kind + " x"
             + std::to_string(r.i) + " x"
             + std::to_string(r.j) + ": order " + std::to_string(order)
             + ", expected " + std::to_string(r.order));
      }
    }
    // pairs inside the circle carry no binary relation; record their orders
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
      report.notes.push_back("circle pair x" + std::to_string(i) + " x"
                             + std::to_string(j) + ": order "
                             + std::to_string((x[i - 1] * x[j - 1]).order(12)));
    }
    auto order = img.beta.order(12);
    report.parameters["beta_order"] = static_cast<long>(order);
    if (order != 4) {
      fail("image of (x4 x1 x2 x3 x5)^6 has order " + std::to_string(order)
           + ", expected 4");
    }
    if (!(img.beta == img.c)) {
      fail("image of (x4 x1 x2 x3 x5)^6 differs from the regular element");
    }
    for (unsigned i = 0; i < 5; ++i) {
      if (!(img.beta * x[i] == x[i] * img.beta)) {
        fail("x" + std::to_string(i + 1)
             + " does not commute with the regular element");
      }
    }
    return report;
  }

}  // namespace garside
