#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace garside {

  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  //! A monoid presentation by generators and chains of relations.
  //!
  //! Each relation chain lists two or more words that are declared pairwise
  //! equal.  All words of a chain must have the same length, so that the
  //! monoid carries an additive length function with atoms of length 1.
  struct Presentation {
    std::vector<std::string>            generators;
    std::vector<std::vector<word_type>> relations;

    std::size_t number_of_generators() const noexcept {
      return generators.size();
    }

    letter_type index_of(std::string_view name) const {
      auto it = std::find(generators.cbegin(), generators.cend(), name);
      if (it == generators.cend()) {
        throw InputError("unknown generator \"" + std::string(name) + "\"");
      }
      return static_cast<letter_type>(it - generators.cbegin());
    }

    //! Parses a word of whitespace-separated tokens.  A token that is not a
    //! generator name is split into generator names when this can be done in
    //! exactly one way, so "sts" is accepted for generators s, t.  The token
    //! "1" and the empty string denote the empty word.
    word_type parse_word(std::string_view text) const;

    std::string to_string(word_type const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto x : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += generators.at(x);
      }
      return out;
    }
  };

  namespace detail {
    inline std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace detail

  inline word_type Presentation::parse_word(std::string_view text) const {
    word_type out;
    for (auto token : detail::split_ws(text)) {
      auto it = std::find(generators.cbegin(), generators.cend(), token);
      if (it != generators.cend()) {
        out.push_back(static_cast<letter_type>(it - generators.cbegin()));
        continue;
      }
      if (token == "1") {
        continue;
      }
      // ways[i] = number of decompositions of token[i..] (capped at 2)
      std::size_t const        n = token.size();
      std::vector<int>         ways(n + 1, 0);
      std::vector<letter_type> choice(n, 0);
      ways[n] = 1;
      for (std::size_t i = n; i-- > 0;) {
        for (letter_type g = 0; g < generators.size(); ++g) {
          auto const& name = generators[g];
          if (token.substr(i).starts_with(name) && ways[i + name.size()] > 0) {
            ways[i] = std::min(2, ways[i] + ways[i + name.size()]);
            choice[i] = g;
          }
        }
      }
      if (ways[0] == 0) {
        throw InputError("cannot read \"" + std::string(token)
                         + "\" as a word over the generators");
      }
      if (ways[0] > 1) {
        throw InputError("\"" + std::string(token)
                         + "\" splits into generators in more than one way");
      }
      for (std::size_t i = 0; i < n; i += generators[choice[i]].size()) {
        out.push_back(choice[i]);
      }
    }
    return out;
  }

  //! Throws InputError unless the presentation has distinct nonempty
  //! generator names and homogeneous relation chains over them.
  inline void validate(Presentation const& p) {
    std::unordered_set<std::string> seen;
    for (auto const& g : p.generators) {
      if (g.empty()) {
        throw InputError("empty generator name");
      }
      if (g == "1" || g.find_first_of(" \t=#:") != std::string::npos) {
        throw InputError("invalid generator name \"" + g + "\"");
      }
      if (!seen.insert(g).second) {
        throw InputError("duplicate generator \"" + g + "\"");
      }
    }
    auto show = [&p](std::vector<word_type> const& chain) {
      std::string out;
      for (auto const& w : chain) {
        if (!out.empty()) {
          out += " = ";
        }
        for (auto x : w) {
          out += x < p.generators.size() ? p.generators[x] : "?";
        }
      }
      return out;
    };
    for (auto const& chain : p.relations) {
      if (chain.size() < 2) {
        throw InputError("relation chain with fewer than two sides: "
                         + show(chain));
      }
      for (auto const& w : chain) {
        if (w.empty()) {
          throw InputError("relation with an empty side: " + show(chain));
        }
        for (auto x : w) {
          if (x >= p.generators.size()) {
            throw InputError("relation uses an undeclared generator: "
                             + show(chain));
          }
        }
        if (w.size() != chain.front().size()) {
          throw InputError("non-homogeneous relation chain: " + show(chain));
        }
      }
    }
  }

  //! Reads the line-oriented text format:
  //!
  //!     # comment
  //!     gens: s t
  //!     rel: s t s = t s t
  //!
  //! The result is validated before it is returned.
  inline Presentation parse_presentation(std::istream& in) {
    Presentation             p;
    bool                     have_gens = false;
    std::vector<std::string> pending;
    std::string              line;
    std::size_t              lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      auto body = detail::trim(line);
      if (body.empty()) {
        continue;
      }
      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        throw InputError("line " + std::to_string(lineno)
                         + ": expected \"gens:\" or \"rel:\"");
      }
      auto key  = detail::trim(body.substr(0, colon));
      auto rest = body.substr(colon + 1);
      if (key == "gens") {
        if (have_gens) {
          throw InputError("line " + std::to_string(lineno)
                           + ": generators declared twice");
        }
        for (auto tok : detail::split_ws(rest)) {
          p.generators.emplace_back(tok);
        }
        have_gens = true;
      } else if (key == "rel") {
        pending.emplace_back(rest);
      } else {
        throw InputError("line " + std::to_string(lineno)
                         + ": unknown key \"" + std::string(key) + "\"");
      }
    }
    if (!have_gens) {
      throw InputError("presentation has no \"gens:\" line");
    }
    for (auto const& rel : pending) {
      std::vector<word_type> chain;
      std::string_view       rest = rel;
      while (true) {
        auto eq = rest.find('=');
        chain.push_back(p.parse_word(rest.substr(0, eq)));
        if (eq == std::string_view::npos) {
          break;
        }
        rest = rest.substr(eq + 1);
      }
      p.relations.push_back(std::move(chain));
    }
    validate(p);
    return p;
  }

  inline Presentation parse_presentation(std::string const& text) {
    std::istringstream in(text);
    return parse_presentation(in);
  }

  inline std::string format_presentation(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& g : p.generators) {
      out += ' ' + g;
    }
    out += '\n';
    for (auto const& chain : p.relations) {
      out += "rel:";
      bool first = true;
      for (auto const& w : chain) {
        out += first ? " " : " = ";
        out += p.to_string(w);
        first = false;
      }
      out += '\n';
    }
    return out;
  }

}  // namespace garside
