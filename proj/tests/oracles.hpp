#pragma once

// Independent reference implementations used by the tests.  None of this
// code calls into the library beyond reading presentations, so agreement
// with the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "garside/presentation.hpp"

namespace oracle {

  using garside::Presentation;
  using garside::word_type;

  // All words reachable from w by replacing an occurrence of one side of a
  // relation chain with another side of the same chain.
  inline std::set<word_type> congruence_class(Presentation const& p,
                                              word_type const&    w) {
    std::set<word_type>   seen{w};
    std::deque<word_type> todo{w};
    while (!todo.empty()) {
      auto u = todo.front();
      todo.pop_front();
      for (auto const& chain : p.relations) {
        for (auto const& lhs : chain) {
          if (lhs.size() > u.size()) {
            continue;
          }
          for (std::size_t pos = 0; pos + lhs.size() <= u.size(); ++pos) {
            if (!std::equal(lhs.begin(), lhs.end(), u.begin() + pos)) {
              continue;
            }
            for (auto const& rhs : chain) {
              auto v = u;
              std::copy(rhs.begin(), rhs.end(), v.begin() + pos);
              if (seen.insert(v).second) {
                todo.push_back(std::move(v));
              }
            }
          }
        }
      }
    }
    return seen;
  }

  inline bool congruent(Presentation const& p, word_type const& a,
                        word_type const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    return congruence_class(p, a).count(b) != 0;
  }

  // Number of congruence classes among all words of each length <= L.
  inline std::vector<std::size_t> class_counts(Presentation const& p,
                                               std::size_t         L) {
    std::vector<std::size_t> out;
    auto const               m = p.number_of_generators();
    for (std::size_t len = 0; len <= L; ++len) {
      std::set<word_type> covered;
      std::size_t         classes = 0;
      word_type           w(len, 0);
      while (true) {
        if (!covered.count(w)) {
          ++classes;
          auto c = congruence_class(p, w);
          covered.insert(c.begin(), c.end());
        }
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == m) {
          w[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
      out.push_back(classes);
    }
    return out;
  }

  inline word_type random_word(std::mt19937& rng, std::size_t gens,
                               std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> d(0, gens - 1);
    word_type                                    w(len);
    for (auto& x : w) {
      x = d(rng);
    }
    return w;
  }

  // Applies up to `steps` random single rewrites to w.
  inline word_type random_rewrite(Presentation const& p, word_type w,
                                  std::mt19937& rng, std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) {
      std::vector<std::pair<std::size_t, word_type const*>> options;
      for (auto const& chain : p.relations) {
        for (auto const& lhs : chain) {
          for (std::size_t pos = 0; pos + lhs.size() <= w.size(); ++pos) {
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
              for (auto const& rhs : chain) {
                if (&rhs != &lhs) {
                  options.emplace_back(pos, &rhs);
                }
              }
            }
          }
        }
      }
      if (options.empty()) {
        break;
      }
      auto [pos, rhs] = options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)];
      std::copy(rhs->begin(), rhs->end(), w.begin() + pos);
    }
    return w;
  }

  // Dense n x n matrices over F_p as flat vectors of residues.
  using Mat = std::vector<std::int64_t>;

  inline Mat mat_mul(Mat const& a, Mat const& b, std::size_t n,
                     std::int64_t p) {
    Mat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) {
          s += a[i * n + k] * b[k * n + j];
        }
        c[i * n + j] = s % p;
      }
    }
    return c;
  }

  inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x) {
      if (a * x % p == 1) {
        return x;
      }
    }
    return 0;
  }

  // Rank mod p by plain Gaussian elimination on a copy.
  inline std::size_t rank_mod(std::vector<Mat> rows, std::int64_t p) {
    if (rows.empty()) {
      return 0;
    }
    auto const  cols = rows.front().size();
    std::size_t r    = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] % p == 0) {
        ++piv;
      }
      if (piv == rows.size()) {
        continue;
      }
      std::swap(rows[r], rows[piv]);
      auto inv = inverse_mod(((rows[r][c] % p) + p) % p, p);
      for (auto& x : rows[r]) {
        x = ((x * inv) % p + p) % p;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != r && rows[i][c] % p != 0) {
          auto f = rows[i][c];
          for (std::size_t k = 0; k < cols; ++k) {
            rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
          }
        }
      }
      ++r;
    }
    return r;
  }

  // Keeps a maximal independent subset of `mats`, in order.
  inline std::vector<Mat> independent_subset(std::vector<Mat> const& mats,
                                             std::int64_t            p) {
    std::vector<Mat> out;
    for (auto const& m : mats) {
      out.push_back(m);
      if (rank_mod(out, p) < out.size()) {
        out.pop_back();
      }
    }
    return out;
  }

  // Dimension of the span of all products of the generators of length at
  // most n^2 (the empty product being the identity).  Products of length l
  // span the space spanned by {b g : b in a basis of the length l - 1
  // products, g a generator}; once a length adds nothing new to the running
  // span, no longer length can.
  inline std::size_t product_span_dimension(std::vector<Mat> const& gens,
                                            std::size_t n, std::int64_t p) {
    Mat id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      id[i * n + i] = 1 % p;
    }
    std::vector<Mat> level{id};
    std::vector<Mat> total{id};
    total = independent_subset(total, p);
    for (std::size_t len = 1; len <= n * n; ++len) {
      std::vector<Mat> next;
      for (auto const& b : level) {
        for (auto const& g : gens) {
          next.push_back(mat_mul(b, g, n, p));
        }
      }
      level        = independent_subset(next, p);
      auto before  = rank_mod(total, p);
      auto grown   = total;
      grown.insert(grown.end(), level.begin(), level.end());
      grown = independent_subset(grown, p);
      if (grown.size() == before) {
        break;
      }
      total = std::move(grown);
    }
    return total.size();
  }

  struct GeneratorSet {
    std::int64_t     p;
    std::size_t      n;
    std::vector<Mat> gens;
  };

  // A random generator set with n <= 4, p in {2, 3, 5, 7}, k <= 3, mixing
  // dense random matrices with matrix units, permutation matrices,
  // diagonal and nilpotent ones, the zero matrix, the identity, scalar
  // multiples and repeats.
  inline GeneratorSet random_generator_set(std::mt19937& rng) {
    static constexpr std::int64_t primes[] = {2, 3, 5, 7};
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    GeneratorSet out;
    out.p  = primes[uniform(0, 3)];
    out.n  = uniform(1, 4);
    auto n = out.n;
    auto k = uniform(1, 3);
    auto entry = [&] { return static_cast<std::int64_t>(uniform(0, out.p - 1)); };
    for (std::size_t g = 0; g < k; ++g) {
      Mat m(n * n, 0);
      switch (uniform(0, 8)) {
        case 0:
        case 1:
          for (auto& x : m) {
            x = entry();
          }
          break;
        case 2:
          m[uniform(0, n - 1) * n + uniform(0, n - 1)] = 1;
          break;
        case 3: {
          std::vector<std::size_t> perm(n);
          for (std::size_t i = 0; i < n; ++i) {
            perm[i] = i;
          }
          std::shuffle(perm.begin(), perm.end(), rng);
          for (std::size_t i = 0; i < n; ++i) {
            m[i * n + perm[i]] = 1;
          }
          break;
        }
        case 4:
          for (std::size_t i = 0; i < n; ++i) {
            m[i * n + i] = entry();
          }
          break;
        case 5:
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
              m[i * n + j] = entry();
            }
          }
          break;
        case 6:
          break;
        case 7:
          for (std::size_t i = 0; i < n; ++i) {
            m[i * n + i] = 1;
          }
          break;
        default:
          if (!out.gens.empty()) {
            m = out.gens[uniform(0, out.gens.size() - 1)];
            auto c = entry();
            for (auto& x : m) {
              x = x * c % out.p;
            }
          } else {
            for (auto& x : m) {
              x = entry();
            }
          }
      }
      out.gens.push_back(std::move(m));
    }
    return out;
  }

}  // namespace oracle
