#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxeter.hpp"
#include "families.hpp"
#include "group.hpp"
#include "properties.hpp"
#include "span.hpp"

namespace garside::cli {

  enum exit_code : int {
    success       = 0,
    property_fail = 1,
    input_error   = 2,
    bound_error   = 3,
  };

  //! Where the presentation of a command comes from.
  struct Source {
    std::string family;
    std::string pres_file;
    unsigned    rank2 = 0;
    unsigned    type_a = 0;
    std::size_t h = 0, m = 0, n = 0;
    std::size_t bound = 12;

    Presentation presentation() const {
      if (!pres_file.empty()) {
        if (!family.empty()) {
          throw InputError("give either --family or --pres, not both");
        }
        std::ifstream in(pres_file);
        if (!in) {
          throw InputError("cannot open " + pres_file);
        }
        return parse_presentation(in);
      }
      if (family == "artin") {
        if ((rank2 == 0) == (type_a == 0)) {
          throw InputError("artin needs exactly one of --rank2 M, --typeA N");
        }
        if (rank2 != 0) {
          if (rank2 < 2) {
            throw InputError("--rank2 needs M >= 2");
          }
          return dihedral_artin_presentation(rank2);
        }
        return artin_presentation(CoxeterMatrix::type_a(type_a));
      }
      if (family == "e8") {
        return artin_presentation(CoxeterMatrix::e8());
      }
      if (family == "fhm") {
        return fhm_presentation(h, m);
      }
      if (family == "chow") {
        return chow_presentation(n);
      }
      if (family == "godelle") {
        return godelle_presentation();
      }
      if (family == "bkl") {
        return bkl_dual_presentation(n);
      }
      if (family.empty()) {
        throw InputError("no monoid given: use --family NAME or --pres FILE");
      }
      throw InputError("unknown family \"" + family + "\"");
    }

    //! Flags reproducing this source, for replay lines.
    std::string flags() const {
      std::string out;
      if (!pres_file.empty()) {
        out = "--pres " + pres_file;
      } else {
        out = "--family " + family;
        if (family == "artin") {
          out += rank2 != 0 ? " --rank2 " + std::to_string(rank2)
                            : " --typeA " + std::to_string(type_a);
        } else if (family == "fhm") {
          out += " --h " + std::to_string(h) + " --m " + std::to_string(m);
        } else if (family == "chow" || family == "bkl") {
          out += " --n " + std::to_string(n);
        }
      }
      return out + " --bound " + std::to_string(bound);
    }
  };

  struct Outcome {
    int            code = success;
    std::string    text;
    nlohmann::json data = nlohmann::json::object();
  };

  namespace detail {
    inline std::string quote(std::string const& s) {
      return "\"" + s + "\"";
    }

    inline nlohmann::json to_json(MonoidTable const&    t,
                                  PropertyReport const& r) {
      nlohmann::json j;
      j["property"]   = r.property_id;
      j["verdict"]    = to_string(r.verdict);
      j["parameters"] = r.parameters;
      j["notes"]      = r.notes;
      j["witnesses"]  = nlohmann::json::array();
      for (auto const& w : r.witnesses) {
        nlohmann::json jw;
        jw["items"] = nlohmann::json::object();
        for (auto const& [k, v] : w.items) {
          jw["items"][k] = t.to_string(v);
        }
        if (w.exponent) {
          jw["exponent"] = *w.exponent;
        }
        jw["detail"] = w.detail;
        j["witnesses"].push_back(jw);
      }
      return j;
    }

    // A command line that recomputes the failure of the primary witness.
    inline std::string replay(MonoidTable const& t, Source const& src,
                              PropertyReport const& r) {
      auto const& w   = r.witness();
      auto        s   = [&](char const* k) { return quote(t.to_string(w.get(k))); };
      auto        pre = "garside ";
      auto const& id  = r.property_id;
      if (id == "ii") {
        return w.has("lcm")
                   ? pre + std::string("balanced ") + src.flags() + " " + s("lcm")
                   : pre + std::string("lcm ") + src.flags() + " " + s("s") + " "
                         + s("t");
      }
      if (id == "iii") {
        if (!w.has("power")) {
          return pre + std::string("lcm ") + src.flags() + " " + s("s") + " "
                 + s("t");
        }
        return pre + std::string("gcd ") + src.flags() + " " + s("lcm") + " "
               + s("power");
      }
      if (id == "rbbt") {
        return pre + std::string("rbbt ") + src.flags() + " --r " + s("r")
               + " --b " + s("b") + " --j " + std::to_string(*w.exponent);
      }
      if (id == "alpha-identity") {
        return pre + std::string("alpha ") + src.flags() + " " + s("x") + " "
               + s("y");
      }
      if (id == "lemgar2") {
        return pre + std::string("conj ") + src.flags() + " " + s("b");
      }
      return {};
    }

    inline Outcome report_outcome(MonoidTable const& t, Source const& src,
                                  std::vector<PropertyReport> const& reports) {
      Outcome out;
      out.data["reports"] = nlohmann::json::array();
      bool failed = false, inconclusive = false;
      for (auto const& r : reports) {
        out.text += "PROPERTY " + r.property_id + ": " + to_string(r.verdict)
                    + "\n";
        for (auto const& note : r.notes) {
          out.text += "  note: " + note + "\n";
        }
        if (r.verdict == Verdict::fail) {
          failed = true;
          auto const& w = r.witness();
          out.text += "  witness:";
          for (auto const& [k, v] : w.items) {
            out.text += " " + k + "=" + quote(t.to_string(v));
          }
          if (w.exponent) {
            out.text += (r.property_id == "rbbt" ? " j=" : " n=")
                        + std::to_string(*w.exponent);
          }
          out.text += "\n  detail: " + w.detail + "\n";
          if (r.witnesses.size() > 1) {
            out.text += "  violations recorded: "
                        + std::to_string(r.witnesses.size()) + "\n";
          }
          auto line = replay(t, src, r);
          if (!line.empty()) {
            out.text += "  replay: " + line + "\n";
          }
        } else if (r.verdict == Verdict::inconclusive) {
          inconclusive = true;
        }
        out.data["reports"].push_back(to_json(t, r));
      }
      out.code = failed ? property_fail : inconclusive ? bound_error : success;
      return out;
    }

    inline std::string join(MonoidTable const& t, std::vector<Element> const& v,
                            std::string const& sep) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : sep) + t.to_string(v[i]);
      }
      return out;
    }

    inline std::string search_text(MonoidTable const& t, SearchResult r) {
      return r.found() ? t.to_string(r.element)
                       : std::string(r.status == Search::absent
                                         ? "ABSENT"
                                         : "BOUND-EXCEEDED");
    }
  }  // namespace detail

  //! Runs the command line (without the program name).  Returns the exit
  //! code: 0 success, 1 property failure, 2 input error, 3 bound exceeded.
  inline int run(std::vector<std::string> const& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Exact computations in homogeneous Garside monoids", "garside"};
    app.require_subcommand(1);
    // "-h" is taken by the fhm parameter
    app.set_help_flag("--help", "print help");

    Source                   src;
    std::size_t              nmax = 6, lb = 4, jmax = 3;
    std::string              dump = "text", file, r_atom, b_word;
    std::vector<std::string> words;

    auto add_source = [&](CLI::App* sub) {
      sub->add_option("--family", src.family,
                      "artin | e8 | fhm | chow | godelle | bkl");
      sub->add_option("--pres", src.pres_file, "presentation file");
      sub->add_option("--rank2", src.rank2, "artin: I2(M)");
      sub->add_option("--typeA", src.type_a, "artin: A_N");
      sub->add_option("--h", src.h, "fhm: word length h");
      sub->add_option("--m", src.m, "fhm: number of generators m");
      sub->add_option("--n", src.n, "chow / bkl parameter");
      sub->add_option("--bound", src.bound, "length bound of the table");
      sub->add_option("--dump", dump, "text | json")
          ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_words = [&](CLI::App* sub, std::size_t count) {
      sub->add_option("words", words, "words over the generators")
          ->expected(static_cast<int>(count));
    };

    auto* check = app.add_subcommand("check", "properties i, ii, iii");
    add_source(check);
    check->add_option("--nmax", nmax, "largest exponent for property iii");

    auto* nf = app.add_subcommand("nf", "greedy normal form of a word");
    add_source(nf);
    add_words(nf, 1);

    auto* lcm = app.add_subcommand("lcm", "right lcm of two words");
    add_source(lcm);
    add_words(lcm, 2);

    auto* gcd = app.add_subcommand("gcd", "left gcd of two words");
    add_source(gcd);
    add_words(gcd, 2);

    auto* center = app.add_subcommand("center", "least central power of delta");
    add_source(center);

    auto* rbbt = app.add_subcommand("rbbt", "exhaustive rb = bt check");
    add_source(rbbt);
    rbbt->add_option("--lb", lb, "largest length of b");
    rbbt->add_option("--j", jmax, "largest exponent j");
    rbbt->add_option("--r", r_atom, "single instance: the atom r");
    rbbt->add_option("--b", b_word, "single instance: the element b");

    auto* tau = app.add_subcommand("tau", "conjugate a word by delta");
    add_source(tau);
    add_words(tau, 1);

    auto* balanced = app.add_subcommand("balanced", "divisors and balance");
    add_source(balanced);
    add_words(balanced, 1);

    auto* alpha = app.add_subcommand(
        "alpha", "head of a word; with two words x y compares "
                 "alpha(x y) and alpha(x alpha(y))");
    add_source(alpha);
    alpha->add_option("words", words, "one or two words")->expected(1, 2);

    auto* conj = app.add_subcommand("conj", "atom conjugation by a balanced word");
    add_source(conj);
    add_words(conj, 1);

    auto* sizes = app.add_subcommand("sizes", "element counts per length");
    add_source(sizes);

    auto* embed = app.add_subcommand("embed-check",
                                     "B31 embedding words in W(E8)");
    embed->add_option("--dump", dump)->check(CLI::IsMember({"text", "json"}));

    auto* span = app.add_subcommand("span", "unital algebra dimension");
    span->add_option("--file", file, "matrix file")->required();
    span->add_option("--dump", dump)->check(CLI::IsMember({"text", "json"}));

    auto* lie = app.add_subcommand("lie-span", "Lie algebra dimension");
    lie->add_option("--file", file, "matrix file")->required();
    lie->add_option("--dump", dump)->check(CLI::IsMember({"text", "json"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }

    auto word_at = [&](MonoidTable const& t, std::size_t i) {
      return t.element_of(words.at(i));
    };

    Outcome result;
    try {
      if (*embed) {
        auto report = verify_g31_relations_in_w_e8();
        result.text = "PROPERTY g31-embedding: "
                      + std::string(to_string(report.verdict)) + "\n";
        for (auto const& note : report.notes) {
          result.text += "  note: " + note + "\n";
        }
        for (auto const& w : report.witnesses) {
          result.text += "  violation: " + w.detail + "\n";
        }
        result.text += "  beta order: "
                       + std::to_string(report.parameters["beta_order"]) + "\n";
        result.data["property"]   = report.property_id;
        result.data["verdict"]    = to_string(report.verdict);
        result.data["notes"]      = report.notes;
        result.data["beta_order"] = report.parameters["beta_order"];
        result.code = report.passed() ? success : property_fail;
      } else if (*span || *lie) {
        auto mf = read_matrix_file(file);
        auto r  = [&] {
          if (mf.p == 0) {
            auto g = mf.over_rationals();
            return *span ? algebra_dimension(g) : lie_algebra_dimension(g);
          }
          auto g = mf.over_prime_field();
          return *span ? algebra_dimension(g) : lie_algebra_dimension(g);
        }();
        result.text = "dimension " + std::to_string(r.dimension) + "\nrounds "
                      + std::to_string(r.rounds) + "\n";
        result.data["dimension"]  = r.dimension;
        result.data["rounds"]     = r.rounds;
        result.data["dimensions"] = r.dimensions;
        result.data["p"]          = mf.p;
        result.data["n"]          = mf.n;
      } else {
        MonoidTable t(src.presentation(), src.bound);
        if (*check) {
          std::vector<PropertyReport> reports{check_property_i(t),
                                              check_property_ii(t),
                                              check_property_iii(t, nmax)};
          result = detail::report_outcome(t, src, reports);
        } else if (*nf) {
          GarsideStructure g(t);
          auto             x = word_at(t, 0);
          auto             f = g.normal_form(x);
          result.text = "DELTA: " + t.to_string(g.delta()) + "\nNF: "
                        + (f.empty() ? std::string("1")
                                     : detail::join(t, f, " | "))
                        + "\n";
          result.data["delta"] = t.to_string(g.delta());
          result.data["nf"]    = nlohmann::json::array();
          for (auto s : f) {
            result.data["nf"].push_back(t.to_string(s));
          }
        } else if (*lcm) {
          auto r      = right_lcm(t, word_at(t, 0), word_at(t, 1));
          result.text = "LCM: " + detail::search_text(t, r) + "\n";
          result.data["status"] = to_string(r.status);
          if (r.found()) {
            result.data["lcm"] = t.to_string(r.element);
          }
          if (r.status == Search::bound_exceeded) {
            result.code = bound_error;
          }
        } else if (*gcd) {
          auto r      = left_gcd(t, word_at(t, 0), word_at(t, 1));
          result.text = "GCD: " + (r ? t.to_string(*r) : "ABSENT") + "\n";
          result.data["gcd"] = r ? nlohmann::json(t.to_string(*r)) : nullptr;
        } else if (*center) {
          GarsideStructure g(t);
          auto             c = center_exponent(g);
          result.text = "DELTA: " + t.to_string(g.delta()) + "\nCENTER: exponent "
                        + std::to_string(c.exponent) + " (permutation order "
                        + std::to_string(c.permutation_order) + ")\n";
          result.data["delta"]             = t.to_string(g.delta());
          result.data["exponent"]          = c.exponent;
          result.data["permutation_order"] = c.permutation_order;
        } else if (*rbbt) {
          if (!r_atom.empty() || !b_word.empty()) {
            auto r = t.element_of(r_atom);
            auto b = t.element_of(b_word);
            if (r.length != 1) {
              throw InputError("--r must be an atom");
            }
            auto x  = t.multiply(t.power(r, jmax), b);
            auto zs = left_quotients(t, b, x);
            bool ok = true;
            result.text = "INSTANCE: r=" + detail::quote(t.to_string(r))
                          + " b=" + detail::quote(t.to_string(b))
                          + " j=" + std::to_string(jmax) + "\n";
            for (auto z : zs) {
              bool holds = garside::detail::rbbt_holds(t, r, b, jmax, z);
              ok         = ok && holds;
              result.text += "  z=" + detail::quote(t.to_string(z)) + ": "
                             + (holds ? "z = u^j with r b = b u"
                                      : "no atom u with z = u^j and r b = b u")
                             + "\n";
            }
            if (zs.empty()) {
              result.text += "  no z with r^j b = b z\n";
            }
            result.data["holds"] = ok;
            result.code          = ok ? success : property_fail;
          } else {
            result = detail::report_outcome(t, src,
                                            {verify_rbbt(t, lb, jmax)});
          }
        } else if (*tau) {
          GarsideStructure g(t);
          auto             y = g.tau(word_at(t, 0));
          result.text        = "TAU: " + t.to_string(y) + "\n";
          result.data["tau"] = t.to_string(y);
        } else if (*balanced) {
          auto x  = word_at(t, 0);
          auto ld = left_divisors(t, x);
          auto rd = right_divisors(t, x);
          bool b  = ld == rd;
          result.text = "LEFT: " + detail::join(t, ld, ", ") + "\nRIGHT: "
                        + detail::join(t, rd, ", ") + "\nBALANCED: "
                        + (b ? "yes" : "no") + "\n";
          result.data["balanced"] = b;
        } else if (*alpha) {
          GarsideStructure g(t);
          auto             x = word_at(t, 0);
          if (words.size() == 1) {
            result.text = "ALPHA: " + t.to_string(g.alpha(x)) + "\n";
            result.data["alpha"] = t.to_string(g.alpha(x));
          } else {
            auto y   = word_at(t, 1);
            auto lhs = g.alpha(t.multiply(x, y));
            auto rhs = g.alpha(t.multiply(x, g.alpha(y)));
            result.text = "ALPHA(x y): " + t.to_string(lhs)
                          + "\nALPHA(x alpha(y)): " + t.to_string(rhs) + "\n";
            result.data["lhs"] = t.to_string(lhs);
            result.data["rhs"] = t.to_string(rhs);
            result.code        = lhs == rhs ? success : property_fail;
          }
        } else if (*conj) {
          auto x = word_at(t, 0);
          auto p = atom_conjugation(t, x);
          result.text = "CONJ:";
          for (auto a : p.domain()) {
            result.text += " " + t.to_string(a) + "->" + t.to_string(p(a));
            result.data["map"][t.to_string(a)] = t.to_string(p(a));
          }
          result.text += "\nPERMUTATION: "
                         + std::string(p.is_permutation() ? "yes" : "no")
                         + "\n";
          result.code = p.is_permutation() ? success : property_fail;
        } else if (*sizes) {
          auto s      = t.sizes(src.bound);
          result.text = "SIZES:";
          for (auto x : s) {
            result.text += " " + std::to_string(x);
          }
          result.text += "\n";
          result.data["sizes"] = s;
        }
      }
    } catch (BoundExceeded const& e) {
      err << "bound exceeded: " << e.what() << "\n";
      return bound_error;
    } catch (ResourceError const& e) {
      err << "resource limit: " << e.what() << "\n";
      return bound_error;
    } catch (UnsupportedOperation const& e) {
      err << "unsupported: " << e.what() << "\n";
      return bound_error;
    } catch (InputError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (PreconditionError const& e) {
      err << "precondition: " << e.what() << "\n";
      return input_error;
    } catch (Error const& e) {
      err << "failure: " << e.what() << "\n";
      return property_fail;
    }

    if (dump == "json") {
      result.data["exit_code"] = result.code;
      out << result.data.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return result.code;
  }

}  // namespace garside::cli
