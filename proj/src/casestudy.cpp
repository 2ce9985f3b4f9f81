#include "rwlab/casestudy.hpp"

#include <algorithm>
#include <array>

#include "rwlab/error.hpp"

namespace rwlab {

  using namespace letters;

  namespace {
    std::array<char const*, 4> const group_tokens = {"a", "a'", "b", "b'"};

    std::string tok(Letter x) {
      return x == h ? "h" : x == z ? "z" : group_tokens[x];
    }

    std::string signs(Sign eps, Sign delta) {
      return std::string(eps == Sign::plus ? "+" : "-")
             + (delta == Sign::plus ? "+" : "-");
    }

    std::string header(bool with_z) {
      std::string order = with_z ? "a a' b b' h z" : "a a' b b' h";
      return "letters " + order + "\ninverse a a'\ninverse b b'\norder "
             + order + "\n";
    }

    std::string i_rules() {
      std::string r;
      for (Letter x : group) {
        r += "rule I_" + tok(x) + " : " + tok(x) + " " + tok(inv(x))
             + " -> ε\n";
      }
      return r;
    }

    std::string k_rules() {
      std::string r;
      for (Letter x : group) {
        r += "rule K_" + tok(x) + " : " + tok(x) + " h -> h " + tok(x) + "\n";
      }
      return r;
    }

    std::string c_rules() {
      std::string r;
      for (Sign e : both_signs) {
        for (Sign d : both_signs) {
          auto x = tok(a_pow(e)), y = tok(b_pow(d));
          r += "rule C_" + signs(e, d) + " : h " + x + " " + y + " -> h " + y
               + " " + x + "\n";
        }
      }
      return r;
    }

    std::string z_rules() {
      std::string r;
      for (Letter y : {a, a_inv, b, b_inv, h}) {
        r += "rule Z_" + tok(y) + " : h h " + tok(y) + " -> h h\n";
      }
      return r;
    }

    std::string cbar_schemas() {
      std::string r;
      for (Sign e : both_signs) {
        for (Sign d : both_signs) {
          auto x = tok(a_pow(e)), y = tok(b_pow(d));
          r += "schema Cbar_" + signs(e, d) + " ( w : a a' b b' ) : h w " + x
               + " " + y + " -> h w " + y + " " + x + "\n";
        }
      }
      return r;
    }

    std::string zero_rules() {
      std::string r;
      for (Letter u : {a, a_inv, b, b_inv, h, z}) {
        r += "rule Zl_" + tok(u) + " : z " + tok(u) + " -> z\n";
      }
      // z z -> z is already among the rules above.
      for (Letter u : {a, a_inv, b, b_inv, h}) {
        r += "rule Zr_" + tok(u) + " : " + tok(u) + " z -> z\n";
      }
      return r;
    }

    Ambient make(std::string const& text) {
      return std::make_shared<Presentation const>(parse_presentation(text));
    }

    CasePresentations make_presentations() {
      CasePresentations cp;
      std::string const p_text
          = "letters a a' b b'\ninverse a a'\ninverse b b'\norder a a' b b'\n"
            + i_rules();
      std::string const q_text = header(false) + i_rules() + k_rules()
                                 + c_rules() + z_rules();
      cp.P    = make(p_text);
      cp.Q    = make(q_text);
      cp.Qbar = make(q_text + cbar_schemas());

      auto m4_initial
          = parse_presentation(header(true) + i_rules() + k_rules() + c_rules()
                               + z_rules() + "rule H : h h -> z\n"
                               + cbar_schemas());
      auto m4 = knuth_bendix(m4_initial);
      if (m4.report.status != CompletionStatus::completed) {
        throw Error("completion of M4 did not finish: " + m4.report.reason);
      }
      cp.M4            = std::make_shared<Presentation const>(m4.presentation);
      cp.m4_completion = m4.report;
      cp.N4 = make(header(true) + i_rules() + k_rules() + c_rules()
                   + zero_rules() + "rule H : h h -> h\n" + cbar_schemas());
      return cp;
    }

    // Rules of Q and the schemas of Qbar, looked up once.
    struct CaseRules {
      RulePtr           I[4];
      RulePtr           K[4];
      RulePtr           C[2][2];
      RuleSchema const* Cbar[2][2];
    };

    int idx(Sign s) {
      return s == Sign::plus ? 0 : 1;
    }

    CaseRules const& case_rules() {
      static CaseRules const rules = [] {
        auto const& cp = build_presentations();
        CaseRules   r;
        for (Letter x : group) {
          r.I[x] = cp.Q->find_rule("I_" + tok(x));
          r.K[x] = cp.Q->find_rule("K_" + tok(x));
        }
        for (Sign e : both_signs) {
          for (Sign d : both_signs) {
            r.C[idx(e)][idx(d)] = cp.Q->find_rule("C_" + signs(e, d));
            r.Cbar[idx(e)][idx(d)]
                = cp.Qbar->find_schema("Cbar_" + signs(e, d));
          }
        }
        return r;
      }();
      return rules;
    }

    bool is_group_word(Word const& w) {
      return std::all_of(
          w.begin(), w.end(), [](Letter x) { return x <= b_inv; });
    }

    Word ab(Sign eps, Sign delta) {
      return Word{a_pow(eps), b_pow(delta)};
    }

    Word ba(Sign eps, Sign delta) {
      return Word{b_pow(delta), a_pow(eps)};
    }

    Word const H{h};

    RulePtr cbar(Word const& w, Sign eps, Sign delta) {
      auto const& s = *case_rules().Cbar[idx(eps)][idx(delta)];
      return std::make_shared<Rule const>(
          instantiate_schema(s, w, build_presentations().Qbar->alphabet()));
    }

    Edge edge(Word left, RulePtr r, Word right) {
      return Edge{std::move(left), std::move(r), Sign::plus, std::move(right)};
    }
  }  // namespace

  CasePresentations const& build_presentations() {
    static CasePresentations const cp = make_presentations();
    return cp;
  }

  Ambient preset(std::string_view name) {
    auto const& cp = build_presentations();
    if (name == "P") {
      return cp.P;
    } else if (name == "Q") {
      return cp.Q;
    } else if (name == "Qbar") {
      return cp.Qbar;
    } else if (name == "M4") {
      return cp.M4;
    } else if (name == "N4") {
      return cp.N4;
    }
    throw Error("unknown preset \"" + std::string(name)
                + "\" (expected P, Q, Qbar, M4 or N4)");
  }

  std::vector<std::string> const& preset_names() {
    static std::vector<std::string> const names
        = {"P", "Q", "Qbar", "M4", "N4"};
    return names;
  }

  Path build_C_path(Word const& w, Sign eps, Sign delta) {
    if (!is_group_word(w)) {
      throw Error("build_C_path: w must be a word over a a' b b'");
    }
    auto const&       q = case_rules();
    Word const        u = ab(eps, delta);
    Word const        v = ba(eps, delta);
    std::size_t const n = w.size();
    std::vector<Edge> edges;
    edges.reserve(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      edges.push_back(Edge{w.substr(0, i), q.K[w[i]], Sign::minus,
                           w.substr(i + 1) + u});
    }
    edges.push_back(Edge{w, q.C[idx(eps)][idx(delta)], Sign::plus, Word()});
    for (std::size_t i = n; i-- > 0;) {
      edges.push_back(Edge{w.substr(0, i), q.K[w[i]], Sign::plus,
                           w.substr(i + 1) + v});
    }
    return Path::unchecked(H + w + u, H + w + v, std::move(edges));
  }

  Realization const& c_realization() {
    static Realization const r = [](Rule const& rule) -> std::optional<Path> {
      if (!rule.instance_of) {
        return std::nullopt;
      }
      auto const& q = case_rules();
      for (Sign e : both_signs) {
        for (Sign d : both_signs) {
          if (rule.instance_of->schema == q.Cbar[idx(e)][idx(d)]->name()) {
            return build_C_path(rule.instance_of->value, e, d);
          }
        }
      }
      return std::nullopt;
    };
    return r;
  }

  Path build_ct_bar_circuit(CtParams const& p) {
    validate(p);
    auto const&       q = case_rules();
    Word              top;
    std::vector<Edge> left, right;
    Letter const      x  = p.x;
    Word const        xx = Word{x, inv(x)};
    switch (p.family) {
      case CtFamily::ct1: {
        Word const u = ab(p.eps, p.delta), v = ba(p.eps, p.delta);
        top   = H + p.w1 + xx + p.w2 + u;
        left  = {edge(H + p.w1, q.I[x], p.w2 + u),
                 edge({}, cbar(p.w1 + p.w2, p.eps, p.delta), {})};
        right = {edge({}, cbar(p.w1 + xx + p.w2, p.eps, p.delta), {}),
                 edge(H + p.w1, q.I[x], p.w2 + v)};
        break;
      }
      case CtFamily::ct2:
        top   = xx + x;
        left  = {edge({}, q.I[x], Word{x})};
        right = {edge(Word{x}, q.I[inv(x)], {})};
        break;
      case CtFamily::ct3: {
        Letter const a_e = a_pow(p.eps), b_d = b_pow(p.delta);
        top   = H + p.w + a_e + b_d + inv(b_d);
        left  = {edge(H + p.w + a_e, q.I[b_d], {})};
        right = {edge({}, cbar(p.w, p.eps, p.delta), Word{inv(b_d)}),
                 edge({}, cbar(p.w + b_d, p.eps, -p.delta), {}),
                 edge(H + p.w, q.I[b_d], Word{a_e})};
        break;
      }
      case CtFamily::ct4: {
        Letter const a_e = a_pow(p.eps), b_d = b_pow(p.delta);
        top   = H + p.w + inv(a_e) + a_e + b_d;
        left  = {edge(H + p.w, q.I[inv(a_e)], Word{b_d})};
        right = {edge({}, cbar(p.w + inv(a_e), p.eps, p.delta), {}),
                 edge({}, cbar(p.w, -p.eps, p.delta), Word{a_e}),
                 edge(H + p.w + b_d, q.I[inv(a_e)], {})};
        break;
      }
      case CtFamily::ct5: {
        Word const u = ab(p.eps, p.delta), v = ba(p.eps, p.delta);
        top   = x + H + p.w + u;
        left  = {edge(Word{x}, cbar(p.w, p.eps, p.delta), {}),
                 edge({}, q.K[x], p.w + v)};
        right = {edge({}, q.K[x], p.w + u),
                 edge({}, cbar(x + p.w, p.eps, p.delta), {})};
        break;
      }
      case CtFamily::ct6:
        top   = xx + H;
        left  = {edge({}, q.I[x], H)};
        right = {edge(Word{x}, q.K[inv(x)], {}),
                 edge({}, q.K[x], Word{inv(x)}),
                 edge(H, q.I[x], {})};
        break;
      case CtFamily::ct7: {
        Word const u1 = ab(p.eps1, p.delta1), v1 = ba(p.eps1, p.delta1);
        Word const u2 = ab(p.eps2, p.delta2), v2 = ba(p.eps2, p.delta2);
        top   = H + p.w1 + u1 + p.w2 + u2;
        left  = {edge({}, cbar(p.w1, p.eps1, p.delta1), p.w2 + u2),
                 edge({}, cbar(p.w1 + v1 + p.w2, p.eps2, p.delta2), {})};
        right = {edge({}, cbar(p.w1 + u1 + p.w2, p.eps2, p.delta2), {}),
                 edge({}, cbar(p.w1, p.eps1, p.delta1), p.w2 + v2)};
        break;
      }
    }
    Path const l(top, std::move(left));
    Path const r(top, std::move(right));
    return compose(r, invert(l));
  }

  Path build_ct_circuit(CtParams const& params) {
    return lift_path(build_ct_bar_circuit(params),
                     *build_presentations().Q,
                     c_realization());
  }

  namespace {
    // 'I', 'K', 'C' (plain or schema instance), 'Z', or 0.
    char rule_family(Rule const& r) {
      if (r.instance_of) {
        return r.instance_of->schema.starts_with("Cbar_") ? 'C' : 0;
      }
      if (r.name.size() >= 2 && r.name[1] == '_') {
        char c = r.name[0];
        if (c == 'I' || c == 'K' || c == 'C' || c == 'Z') {
          return c;
        }
      }
      return 0;
    }

    Sign exp_of(Letter x) {
      return exponent(x);
    }
  }  // namespace

  std::optional<CtParams> classify_peak(CriticalPeak const& k) {
    char const  f1  = rule_family(*k.rule1);
    char const  f2  = rule_family(*k.rule2);
    Word const& s   = k.source;
    std::size_t n   = s.size();
    bool const  inc = k.kind == PeakKind::inclusion;
    CtParams    p;
    if (!inc && f1 == 'I' && f2 == 'I' && n == 3) {
      p.family = CtFamily::ct2;
      p.x      = s[0];
    } else if (!inc && f1 == 'I' && f2 == 'K' && n == 3) {
      p.family = CtFamily::ct6;
      p.x      = s[0];
    } else if (!inc && f1 == 'K' && f2 == 'C' && n >= 4) {
      p.family = CtFamily::ct5;
      p.x      = s[0];
      p.w      = s.substr(2, n - 4);
      p.eps    = exp_of(s[n - 2]);
      p.delta  = exp_of(s[n - 1]);
    } else if (!inc && f1 == 'C' && f2 == 'I' && n >= 4) {
      p.family = CtFamily::ct3;
      p.w      = s.substr(1, n - 4);
      p.eps    = exp_of(s[n - 3]);
      p.delta  = exp_of(s[n - 2]);
    } else if (inc && f1 == 'I' && f2 == 'C' && n >= 4) {
      std::size_t const pos = k.position1;
      if (pos + 2 <= n - 2) {
        p.family = CtFamily::ct1;
        p.w1     = s.substr(1, pos - 1);
        p.x      = s[pos];
        p.w2     = s.substr(pos + 2, n - 2 - (pos + 2));
      } else if (pos + 2 == n - 1) {
        p.family = CtFamily::ct4;
        p.w      = s.substr(1, n - 4);
      } else {
        return std::nullopt;
      }
      p.eps   = exp_of(s[n - 2]);
      p.delta = exp_of(s[n - 1]);
    } else if (inc && f1 == 'C' && f2 == 'C' && k.position1 == 0) {
      std::size_t const n1 = k.rule1->lhs.size();
      if (n1 < 3 || n < n1 + 2) {
        return std::nullopt;
      }
      p.family = CtFamily::ct7;
      p.w1     = s.substr(1, n1 - 3);
      p.eps1   = exp_of(s[n1 - 2]);
      p.delta1 = exp_of(s[n1 - 1]);
      p.w2     = s.substr(n1, n - 2 - n1);
      p.eps2   = exp_of(s[n - 2]);
      p.delta2 = exp_of(s[n - 1]);
    } else {
      return std::nullopt;
    }
    for (Word const* w : {&p.w, &p.w1, &p.w2}) {
      if (!is_group_word(*w)) {
        return std::nullopt;
      }
    }
    if (p.x > b_inv) {
      return std::nullopt;
    }
    return p;
  }

  bool in_prop31_normal_forms(Word const& w) {
    if (is_group_word(w)) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inv(w[i - 1])) {
          return false;
        }
      }
      return true;
    }
    if (w == Word{h, h}) {
      return true;
    }
    if (w.empty() || w[0] != h) {
      return false;
    }
    // h b^j a^k
    std::size_t i = 1;
    while (i < w.size() && w[i] == w[1] && (w[i] == b || w[i] == b_inv)) {
      ++i;
    }
    std::size_t const j = i;
    while (i < w.size() && w[i] == w[j] && is_a_letter(w[i])) {
      ++i;
    }
    return i == w.size();
  }

}  // namespace rwlab
