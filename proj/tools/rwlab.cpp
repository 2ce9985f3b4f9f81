// rwlab: command-line front end to the rewriting library.
//
// Exit status: 0 on success, 1 if a report contains a FAIL line, 2 on a
// usage error (unknown verb, bad flag, unreadable file, malformed word).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rwlab/casestudy.hpp"
#include "rwlab/completion.hpp"
#include "rwlab/error.hpp"
#include "rwlab/invariant.hpp"
#include "rwlab/obstruction.hpp"
#include "rwlab/rewrite.hpp"
#include "rwlab/structure.hpp"
#include "rwlab/verify.hpp"

using namespace rwlab;

namespace {

  //! Flags shared by every verb.
  struct Common {
    std::string file;
    std::string preset_name;
    std::string word;
    std::string other;
    std::size_t max_len = 0;
    std::size_t radius  = 0;
    bool        machine = false;
    unsigned    jobs    = 1;
  };

  //! Circuit slots for `phi` and `witness`; the slot w is the common -w.
  struct CircuitFlags {
    std::string family;
    std::string x = "a";
    std::string w1, w2;
    std::string eps = "+1", delta = "+1";
    std::string eps1 = "+1", delta1 = "+1", eps2 = "+1", delta2 = "+1";
  };

  //! A usage problem detected after parsing.
  struct UsageError : Error {
    using Error::Error;
  };

  Ambient load(Common const& c, std::string_view fallback) {
    if (!c.file.empty() && !c.preset_name.empty()) {
      throw UsageError("-p and --preset are exclusive");
    }
    if (!c.file.empty()) {
      std::ifstream in(c.file);
      if (!in) {
        throw UsageError("cannot read " + c.file);
      }
      std::stringstream text;
      text << in.rdbuf();
      return std::make_shared<Presentation const>(parse_presentation(text.str()));
    }
    try {
      return preset(c.preset_name.empty() ? fallback : c.preset_name);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
  }

  Word parse(Presentation const& p, std::string const& text) {
    try {
      return p.alphabet().parse_word(text);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
  }

  Sign sign_flag(std::string const& text) {
    try {
      return parse_sign(text);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
  }

  CtParams circuit_params(CircuitFlags const& f, std::string const& w) {
    auto const& alphabet = preset("Q")->alphabet();
    CtParams    p;
    try {
      p.family = parse_family(f.family);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
    Word const x = parse(*preset("Q"), f.x);
    if (x.size() != 1) {
      throw UsageError("--x takes a single letter");
    }
    p.x      = x[0];
    p.w      = alphabet.parse_word(w);
    p.w1     = alphabet.parse_word(f.w1);
    p.w2     = alphabet.parse_word(f.w2);
    p.eps    = sign_flag(f.eps);
    p.delta  = sign_flag(f.delta);
    p.eps1   = sign_flag(f.eps1);
    p.delta1 = sign_flag(f.delta1);
    p.eps2   = sign_flag(f.eps2);
    p.delta2 = sign_flag(f.delta2);
    try {
      validate(p);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
    return p;
  }

  //! Prints `key=value` records (tab separated) in machine mode, otherwise
  //! just the values, one per line.
  void emit(bool machine,
            std::vector<std::pair<std::string, std::string>> const& fields) {
    if (machine) {
      bool first = true;
      for (auto const& [k, v] : fields) {
        std::cout << (first ? "" : "\t") << k << '=' << v;
        first = false;
      }
      std::cout << '\n';
    } else {
      for (auto const& f : fields) {
        std::cout << f.second << '\n';
      }
    }
  }

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  CLI::App* verb(CLI::App& app, std::string const& name,
                 std::string const& help, Common& c) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-p,--presentation", c.file, "presentation file");
    sub->add_option("--preset", c.preset_name, "P, Q, Qbar, M4 or N4");
    sub->add_option("-w,--word", c.word, "word (space-separated tokens)");
    sub->add_option("--other", c.other, "second word");
    sub->add_option("--max-len", c.max_len, "length or slot bound");
    sub->add_option("--radius", c.radius, "search radius");
    sub->add_flag("--machine", c.machine, "tab-separated key=value output");
    sub->add_option("--jobs", c.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    return sub;
  }

  void circuit_flags(CLI::App* sub, CircuitFlags& f) {
    sub->add_option("--circuit", f.family, "CT1..CT7");
    sub->add_option("--x", f.x, "letter slot");
    sub->add_option("--w1", f.w1, "word slot w1");
    sub->add_option("--w2", f.w2, "word slot w2");
    sub->add_option("--eps", f.eps, "+1 or -1");
    sub->add_option("--delta", f.delta, "+1 or -1");
    sub->add_option("--eps1", f.eps1, "+1 or -1");
    sub->add_option("--delta1", f.delta1, "+1 or -1");
    sub->add_option("--eps2", f.eps2, "+1 or -1");
    sub->add_option("--delta2", f.delta2, "+1 or -1");
  }

  std::size_t or_default(std::size_t v, std::size_t d) {
    return v == 0 ? d : v;
  }

  int report_exit(Report const& r, bool machine) {
    std::cout << format_report(r, machine);
    return r.all_pass() ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String rewriting, critical circuits and path invariants"};
  app.require_subcommand(1);
  app.allow_extras(false);

  Common       c;
  CircuitFlags cf;
  bool         trace      = false;
  bool         show       = false;
  bool         print_pres = false;
  std::size_t  max_rules  = 50;
  std::string  against    = "N4";
  std::string  check;
  std::size_t  ct7_max_len = 0;

  auto* red = verb(app, "reduce", "normal form of a word", c);
  red->add_flag("--trace", trace, "print every rewrite step");
  auto* nf   = verb(app, "nf", "enumerate normal forms", c);
  auto* pk   = verb(app, "peaks", "critical peaks", c);
  auto* conf = verb(app, "confluence", "resolve every critical peak", c);
  auto* comp = verb(app, "complete", "bounded Knuth-Bendix completion", c);
  comp->add_option("--max-rules", max_rules, "new-rule budget");
  comp->add_flag("--print", print_pres, "print the resulting presentation");
  auto* eq   = verb(app, "equal", "word problem for -w and --other", c);
  auto* phi  = verb(app, "phi", "path invariant of a critical circuit", c);
  circuit_flags(phi, cf);
  phi->add_flag("--show", show, "print the circuit and the closed form");
  auto* part = verb(app, "partial", "derivation of a group word", c);
  auto* cls  = verb(app, "classify", "H-class of a word", c);
  auto* sig  = verb(app, "sigma", "action on the class of h", c);
  auto* ball = verb(app, "ball", "right Cayley ball", c);
  auto* dist = verb(app, "dist", "directed distance from -w to --other", c);
  auto* iso  = verb(app, "isometry", "compare Cayley balls", c);
  iso->add_option("--against", against, "second preset");
  auto* hn   = verb(app, "hn", "membership in <a, [F,F]>", c);
  auto* wit  = verb(app, "witness", "X-generator witnesses", c);
  circuit_flags(wit, cf);
  auto* ver  = verb(app, "verify", "run a verification sweep", c);
  ver->add_option("check", check,
                  "prop31, figure2, identities, obstruction, isometry, "
                  "structure, peaks, orientation, completion, homotopy or all")
      ->required();
  ver->add_option("--ct7-max-len", ct7_max_len,
                  "slot bound for CT7 in figure2 (default min(max-len, 3))");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (red->parsed()) {
      auto const p = load(c, "Qbar");
      Word const w = parse(*p, c.word);
      if (trace) {
        std::cout << format_reduction(rwlab::reduce(w, *p), p->alphabet());
      }
      std::string const n = p->alphabet().format(normalize(w, *p));
      if (c.machine) {
        emit(true, {{"input", p->alphabet().format(w)}, {"nf", n}});
      } else {
        emit(false, {{"nf", n}});
      }
    } else if (nf->parsed()) {
      auto const p = load(c, "Qbar");
      for (auto const& w : enumerate_normal_forms(*p, or_default(c.max_len, 4))) {
        emit(c.machine, {{"nf", p->alphabet().format(w)}});
      }
    } else if (pk->parsed()) {
      auto const p = load(c, "Qbar");
      for (auto const& k : critical_peaks(*p, or_default(c.max_len, 3))) {
        emit(c.machine, {{"peak", format_peak(k, p->alphabet())}});
      }
    } else if (conf->parsed()) {
      auto const p = load(c, "Qbar");
      auto const r = is_confluent_bounded(*p, or_default(c.max_len, 3));
      std::cout << format_confluence_report(r, p->alphabet());
      emit(c.machine, {{"confluent", yes_no(r.confluent)},
                       {"unresolved", std::to_string(r.unresolved_count())}});
    } else if (comp->parsed()) {
      auto const         p = load(c, "Q");
      KnuthBendixOptions opts;
      opts.max_new_rules = max_rules;
      opts.max_lhs_len   = or_default(c.max_len, opts.max_lhs_len);
      auto const kb      = knuth_bendix(*p, opts);
      std::cout << format_knuth_bendix_report(kb.report, p->alphabet());
      if (print_pres) {
        std::cout << print_presentation(kb.presentation);
      }
    } else if (eq->parsed()) {
      auto const p = load(c, "Qbar");
      bool const e = word_problem_equal(parse(*p, c.word), parse(*p, c.other), *p);
      emit(c.machine, {{"equal", yes_no(e)}});
    } else if (phi->parsed()) {
      CtParams const    params = circuit_params(cf, c.word);
      Ambient const     zg     = preset("P");
      Path const        circuit = build_ct_circuit(params);
      RingElement const value   = phi_path(circuit, k_a_weights(), zg);
      if (show) {
        std::cout << format_path(circuit, preset("Q")->alphabet()) << '\n';
        emit(c.machine, {{"closed_form",
                          format_ring(closed_form_ct(params, zg))}});
      }
      if (c.machine) {
        emit(true, {{"circuit", format_params(params)},
                    {"phi", format_ring(value)}});
      } else {
        emit(false, {{"phi", format_ring(value)}});
      }
    } else if (part->parsed()) {
      auto const p = preset("P");
      emit(c.machine,
           {{"partial", format_ring(partial_derivation(parse(*p, c.word), p))}});
    } else if (cls->parsed()) {
      auto const p = load(c, "Qbar");
      emit(c.machine,
           {{"class", format_hclass(classify(parse(*p, c.word), *p))}});
    } else if (sig->parsed()) {
      auto const& alphabet = preset("Qbar")->alphabet();
      Word const  w        = parse(*preset("Qbar"), c.word);
      std::vector<std::pair<std::string, std::string>> fields{
          {"key", alphabet.format(sigma_key(w))}};
      if (!c.other.empty()) {
        fields.emplace_back(
            "equal", yes_no(sigma_equal(w, parse(*preset("Qbar"), c.other))));
      }
      emit(c.machine, fields);
    } else if (ball->parsed()) {
      auto const p = load(c, "M4");
      std::cout << format_ball(
          cayley_ball(*p, parse(*p, c.word), or_default(c.radius, 3)), *p);
    } else if (dist->parsed()) {
      auto const p = load(c, "M4");
      auto const d = d_A(*p, parse(*p, c.word), parse(*p, c.other),
                         or_default(c.radius, 6));
      emit(c.machine, {{"distance", format_distance(d)}});
    } else if (iso->parsed()) {
      auto const p1 = load(c, "M4");
      Common     second;
      second.preset_name = against;
      auto const p2      = load(second, "N4");
      auto const r = isometry_check(*p1, *p2, or_default(c.radius, 4),
                                    c.word.empty() ? "ε" : c.word);
      for (auto const& v : r.violations) {
        emit(c.machine, {{"violation", v}});
      }
      Report rep;
      rep.add("isometry", r.pass,
              std::to_string(r.vertices) + " vertices, "
                  + std::to_string(r.pairs_checked) + " ordered pairs");
      return report_exit(rep, c.machine);
    } else if (hn->parsed()) {
      Word const w = parse(*preset("P"), c.word);
      emit(c.machine, {{"member", yes_no(hn_member(w))},
                       {"b_exponent", std::to_string(b_exponent(w))}});
    } else if (wit->parsed()) {
      Witness const w
          = cf.family.empty()
                ? commutator_witness(parse(*preset("P"), c.word),
                                     sign_flag(cf.eps), sign_flag(cf.delta))
                : phi_to_x_witness(circuit_params(cf, c.word));
      std::cout << format_witness(w);
      return w.verified ? 0 : 1;
    } else if (ver->parsed()) {
      Report r;
      bool const all = check == "all";
      bool       known = all;
      auto run = [&](char const* name, auto&& f) {
        if (all || check == name) {
          known = true;
          r.append(f());
        }
      };
      run("figure2", [&] {
        std::size_t const n = or_default(c.max_len, 4);
        std::size_t const n7
            = or_default(ct7_max_len, std::min<std::size_t>(n, 3));
        return verify_figure2(n, n7, k_a_weights(), c.jobs);
      });
      run("identities",
          [&] { return verify_identities(or_default(c.max_len, 5)); });
      run("prop31", [&] { return verify_prop31(or_default(c.max_len, 6)); });
      run("peaks", [&] { return verify_peaks(or_default(c.max_len, 3)); });
      run("orientation",
          [&] { return verify_orientation(or_default(c.max_len, 4)); });
      run("completion", [&] { return verify_completion(); });
      run("homotopy", [&] { return verify_homotopy(); });
      run("structure",
          [&] { return verify_structure(or_default(c.max_len, 5)); });
      run("obstruction",
          [&] { return verify_obstruction(or_default(c.max_len, 5)); });
      run("isometry",
          [&] { return verify_isometry(or_default(c.radius, 4)); });
      if (!known) {
        throw UsageError("unknown check: " + check);
      }
      return report_exit(r, c.machine);
    }
  } catch (UsageError const& e) {
    std::cerr << "rwlab: " << e.what() << '\n';
    return 2;
  } catch (ParseError const& e) {
    std::cerr << "rwlab: " << e.what() << '\n';
    return 2;
  } catch (Error const& e) {
    std::cerr << "rwlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
