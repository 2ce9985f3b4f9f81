#include "rwlab/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rwlab/error.hpp"
#include "rwlab/rewrite.hpp"

namespace rwlab {

  ////////////////////////////////////////////////////////////////////////
  // RuleSchema
  ////////////////////////////////////////////////////////////////////////

  RuleSchema::RuleSchema(std::string         name,
                         std::string         variable,
                         std::vector<Letter> range,
                         Word                lhs_prefix,
                         Word                lhs_suffix,
                         Word                rhs_prefix,
                         Word                rhs_suffix)
      : name_(std::move(name)),
        variable_(std::move(variable)),
        range_(std::move(range)),
        range_mask_(256, false),
        lhs_prefix_(std::move(lhs_prefix)),
        lhs_suffix_(std::move(lhs_suffix)),
        rhs_prefix_(std::move(rhs_prefix)),
        rhs_suffix_(std::move(rhs_suffix)) {
    if (name_.empty() || variable_.empty()) {
      throw Error("schema name and variable must be non-empty");
    }
    if (lhs_prefix_.size() != rhs_prefix_.size()) {
      throw Error("schema " + name_
                  + ": the variable must sit at the same offset on both sides");
    }
    for (Letter x : range_) {
      range_mask_[x] = true;
    }
  }

  bool RuleSchema::in_range(Letter x) const noexcept {
    return range_mask_[x];
  }

  bool RuleSchema::accepts(Word const& v) const {
    return std::all_of(
        v.begin(), v.end(), [this](Letter x) { return in_range(x); });
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderingSpec
  ////////////////////////////////////////////////////////////////////////

  OrderingSpec::OrderingSpec(std::vector<Letter> precedence,
                             std::size_t         alphabet_size)
      : precedence_(std::move(precedence)), rank_(alphabet_size, 0) {
    if (precedence_.size() != alphabet_size) {
      throw Error("ordering must list every letter exactly once");
    }
    std::vector<bool> seen(alphabet_size, false);
    for (std::size_t i = 0; i < precedence_.size(); ++i) {
      Letter x = precedence_[i];
      if (x >= alphabet_size || seen[x]) {
        throw Error("ordering must list every letter exactly once");
      }
      seen[x] = true;
      rank_[x] = alphabet_size - i;
    }
  }

  Rule instantiate_schema(RuleSchema const& s,
                          Word const&       v,
                          Alphabet const&   alphabet) {
    if (!s.accepts(v)) {
      throw Error("word \"" + alphabet.format(v)
                  + "\" is outside the range of schema " + s.name());
    }
    return Rule{s.name() + "[" + alphabet.format(v) + "]",
                s.lhs(v),
                s.rhs(v),
                SchemaInstance{s.name(), v}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_word(Word const&        w,
                    Alphabet const&    alphabet,
                    std::string const& where) {
      for (Letter x : w) {
        if (x >= alphabet.size()) {
          throw Error(where + ": letter index out of range");
        }
      }
    }

    bool oriented(Rule const& r, OrderingSpec const& o) {
      return compare_shortlex(r.lhs, r.rhs, o) == std::strong_ordering::greater;
    }

    // Decides lhs > rhs for every instance at once; relies on the variable
    // sitting at the same offset on both sides.
    std::strong_ordering orientation(RuleSchema const& s, OrderingSpec const& o) {
      std::size_t const l = s.lhs_prefix().size() + s.lhs_suffix().size();
      std::size_t const r = s.rhs_prefix().size() + s.rhs_suffix().size();
      if (l != r) {
        return l <=> r;
      }
      auto c = compare_shortlex(s.lhs_prefix(), s.rhs_prefix(), o);
      if (c != std::strong_ordering::equal) {
        return c;
      }
      return compare_shortlex(s.lhs_suffix(), s.rhs_suffix(), o);
    }
  }  // namespace

  Presentation::Presentation(Alphabet                    alphabet,
                             std::vector<Rule>           rules,
                             std::vector<RuleSchema>     schemas,
                             std::optional<OrderingSpec> ordering)
      : alphabet_(std::move(alphabet)),
        schemas_(std::move(schemas)),
        ordering_(std::move(ordering)),
        by_first_letter_(alphabet_.size()) {
    std::set<std::string> names;
    std::set<std::pair<Word, Word>> pairs;
    for (auto& r : rules) {
      check_word(r.lhs, alphabet_, "rule " + r.name);
      check_word(r.rhs, alphabet_, "rule " + r.name);
      if (!names.insert(r.name).second) {
        throw Error("duplicate rule name \"" + r.name + "\"");
      }
      if (r.lhs == r.rhs) {
        throw Error("rule " + r.name + " has identical sides");
      }
      pairs.emplace(r.lhs, r.rhs);
      rules_.push_back(std::make_shared<Rule const>(std::move(r)));
    }
    for (auto const& r : rules_) {
      if (pairs.contains({r->rhs, r->lhs})) {
        throw Error("anti-symmetry violated: both \"" + alphabet_.format(r->lhs)
                    + " -> " + alphabet_.format(r->rhs)
                    + "\" and its reverse are rules");
      }
    }
    for (auto const& s : schemas_) {
      for (Word const* w : {&s.lhs_prefix(),
                            &s.lhs_suffix(),
                            &s.rhs_prefix(),
                            &s.rhs_suffix()}) {
        check_word(*w, alphabet_, "schema " + s.name());
      }
      check_word(Word(s.range().begin(), s.range().end()),
                 alphabet_,
                 "schema " + s.name());
      if (!names.insert(s.name()).second) {
        throw Error("duplicate rule or schema name \"" + s.name() + "\"");
      }
      if (s.lhs_prefix() == s.rhs_prefix() && s.lhs_suffix() == s.rhs_suffix()) {
        throw Error("schema " + s.name() + " has identical sides");
      }
    }
    if (ordering_) {
      if (ordering_->precedence().size() != alphabet_.size()) {
        throw Error("ordering must list every letter exactly once");
      }
      effective_ordering_ = *ordering_;
    } else {
      effective_ordering_ = OrderingSpec(alphabet_.letters(), alphabet_.size());
    }
    for (std::uint32_t i = 0; i < rules_.size(); ++i) {
      if (rules_[i]->lhs.empty()) {
        empty_lhs_.push_back(i);
      } else {
        by_first_letter_[rules_[i]->lhs.front()].push_back(i);
      }
    }
    orientable_ = ordering_.has_value()
                  && std::all_of(rules_.begin(),
                                 rules_.end(),
                                 [this](RulePtr const& r) {
                                   return oriented(*r, *ordering_);
                                 })
                  && std::all_of(schemas_.begin(),
                                 schemas_.end(),
                                 [this](RuleSchema const& s) {
                                   return orientation(s, *ordering_)
                                          == std::strong_ordering::greater;
                                 });
  }

  RulePtr Presentation::find_rule(std::string_view name) const {
    for (auto const& r : rules_) {
      if (r->name == name) {
        return r;
      }
    }
    return nullptr;
  }

  RuleSchema const* Presentation::find_schema(std::string_view name) const {
    for (auto const& s : schemas_) {
      if (s.name() == name) {
        return &s;
      }
    }
    return nullptr;
  }

  Presentation Presentation::with_rules(std::vector<Rule> rules) const {
    return Presentation(alphabet_, std::move(rules), schemas_, ordering_);
  }

  bool Presentation::operator==(Presentation const& that) const {
    if (this == &that) {
      return true;
    }
    return alphabet_ == that.alphabet_ && schemas_ == that.schemas_
           && ordering_ == that.ordering_
           && std::equal(rules_.begin(),
                         rules_.end(),
                         that.rules_.begin(),
                         that.rules_.end(),
                         [](RulePtr const& a, RulePtr const& b) {
                           return *a == *b;
                         });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct RawLine {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::string strip_comment(std::string const& line) {
      auto pos = line.find('#');
      return pos == std::string::npos ? line : line.substr(0, pos);
    }

    std::string pad_parens(std::string const& line) {
      std::string result;
      for (char c : line) {
        if (c == '(' || c == ')') {
          result += ' ';
          result += c;
          result += ' ';
        } else {
          result += c;
        }
      }
      return result;
    }

    Word parse_side(Alphabet const&                 alphabet,
                    std::vector<std::string> const& tokens,
                    std::size_t                     line) {
      if (tokens.size() == 1 && tokens[0] == empty_word_token) {
        return {};
      }
      Word w;
      for (auto const& t : tokens) {
        auto x = alphabet.find(t);
        if (!x) {
          throw ParseError(line, "undeclared letter \"" + t + "\"");
        }
        w.push_back(*x);
      }
      return w;
    }

    // Splits `lhs -> rhs` token lists.
    std::pair<std::vector<std::string>, std::vector<std::string>>
    split_arrow(std::vector<std::string> const& tokens,
                std::size_t                     from,
                std::size_t                     line) {
      auto arrow = std::find(tokens.begin() + from, tokens.end(), "->");
      if (arrow == tokens.end()) {
        throw ParseError(line, "expected \"->\"");
      }
      if (std::find(arrow + 1, tokens.end(), "->") != tokens.end()) {
        throw ParseError(line, "more than one \"->\"");
      }
      return {std::vector<std::string>(tokens.begin() + from, arrow),
              std::vector<std::string>(arrow + 1, tokens.end())};
    }

    struct SchemaSide {
      Word prefix;
      Word suffix;
    };

    SchemaSide parse_schema_side(Alphabet const&                 alphabet,
                                 std::vector<std::string> const& tokens,
                                 std::string const&              var,
                                 std::size_t                     line) {
      auto it = std::find(tokens.begin(), tokens.end(), var);
      if (it == tokens.end()
          || std::find(it + 1, tokens.end(), var) != tokens.end()) {
        throw ParseError(line,
                         "the variable \"" + var
                             + "\" must occur exactly once on each side");
      }
      std::vector<std::string> before(tokens.begin(), it);
      std::vector<std::string> after(it + 1, tokens.end());
      return {parse_side(alphabet, before, line),
              parse_side(alphabet, after, line)};
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    std::vector<RawLine> lines;
    {
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        number = 0;
      while (std::getline(in, line)) {
        ++number;
        auto tokens = split_tokens(pad_parens(strip_comment(line)));
        if (!tokens.empty()) {
          lines.push_back({number, std::move(tokens)});
        }
      }
    }

    std::optional<RawLine>                           letters_line;
    std::vector<std::pair<std::string, std::string>> inverse_pairs;
    std::optional<RawLine>                           order_line;
    for (auto const& l : lines) {
      auto const& kw = l.tokens[0];
      if (kw == "letters") {
        if (letters_line) {
          throw ParseError(l.number, "letters declared twice");
        }
        letters_line = l;
      } else if (kw == "inverse") {
        if (l.tokens.size() != 3) {
          throw ParseError(l.number, "expected: inverse <tok> <tok>");
        }
        inverse_pairs.emplace_back(l.tokens[1], l.tokens[2]);
      } else if (kw == "order") {
        if (order_line) {
          throw ParseError(l.number, "order declared twice");
        }
        order_line = l;
      } else if (kw != "rule" && kw != "schema") {
        throw ParseError(l.number, "unknown keyword \"" + kw + "\"");
      }
    }
    if (!letters_line) {
      throw ParseError(lines.empty() ? 1 : lines.front().number,
                       "missing \"letters\" declaration");
    }

    Alphabet alphabet;
    try {
      alphabet = Alphabet(std::vector<std::string>(letters_line->tokens.begin()
                                                       + 1,
                                                   letters_line->tokens.end()),
                          {});
    } catch (Error const& e) {
      throw ParseError(letters_line->number, e.what());
    }
    for (auto const& l : lines) {
      if (l.tokens[0] == "inverse") {
        for (std::size_t i : {1, 2}) {
          if (!alphabet.find(l.tokens[i])) {
            throw ParseError(l.number,
                             "undeclared letter \"" + l.tokens[i] + "\"");
          }
        }
      }
    }
    try {
      alphabet = Alphabet(alphabet.tokens(), inverse_pairs);
    } catch (Error const& e) {
      throw ParseError(letters_line->number, e.what());
    }

    std::optional<OrderingSpec> ordering;
    if (order_line) {
      std::vector<Letter> precedence;
      for (std::size_t i = 1; i < order_line->tokens.size(); ++i) {
        auto x = alphabet.find(order_line->tokens[i]);
        if (!x) {
          throw ParseError(order_line->number,
                           "undeclared letter \"" + order_line->tokens[i]
                               + "\"");
        }
        precedence.push_back(*x);
      }
      try {
        ordering = OrderingSpec(precedence, alphabet.size());
      } catch (Error const& e) {
        throw ParseError(order_line->number, e.what());
      }
    }

    std::vector<Rule>       rules;
    std::vector<RuleSchema> schemas;
    std::set<std::string>   names;
    std::map<std::pair<Word, Word>, std::size_t> seen_pairs;
    for (auto const& l : lines) {
      auto const& t = l.tokens;
      if (t[0] == "rule") {
        if (t.size() < 4 || t[2] != ":") {
          throw ParseError(l.number, "expected: rule <name> : <lhs> -> <rhs>");
        }
        if (!names.insert(t[1]).second) {
          throw ParseError(l.number, "duplicate name \"" + t[1] + "\"");
        }
        auto [lhs_tokens, rhs_tokens] = split_arrow(t, 3, l.number);
        Rule r{t[1],
               parse_side(alphabet, lhs_tokens, l.number),
               parse_side(alphabet, rhs_tokens, l.number),
               std::nullopt};
        if (r.lhs == r.rhs) {
          throw ParseError(l.number, "rule has identical sides");
        }
        if (seen_pairs.contains({r.rhs, r.lhs})) {
          throw ParseError(l.number,
                           "anti-symmetry violated: reverse of the rule on line "
                               + std::to_string(seen_pairs[{r.rhs, r.lhs}]));
        }
        seen_pairs.emplace(std::make_pair(r.lhs, r.rhs), l.number);
        rules.push_back(std::move(r));
      } else if (t[0] == "schema") {
        // schema <name> ( <var> : <tok>+ ) : <seq> -> <seq>
        auto close = std::find(t.begin(), t.end(), ")");
        if (t.size() < 9 || t[2] != "(" || t[4] != ":" || close == t.end()
            || close + 1 == t.end() || *(close + 1) != ":") {
          throw ParseError(
              l.number,
              "expected: schema <name> ( <var> : <tok>+ ) : <seq> -> <seq>");
        }
        if (!names.insert(t[1]).second) {
          throw ParseError(l.number, "duplicate name \"" + t[1] + "\"");
        }
        std::string const& var = t[3];
        if (alphabet.find(var)) {
          throw ParseError(l.number,
                           "schema variable \"" + var
                               + "\" clashes with a letter");
        }
        std::vector<Letter> range;
        for (auto it = t.begin() + 5; it != close; ++it) {
          auto x = alphabet.find(*it);
          if (!x) {
            throw ParseError(l.number, "undeclared letter \"" + *it + "\"");
          }
          range.push_back(*x);
        }
        if (range.empty()) {
          throw ParseError(l.number, "empty variable range");
        }
        auto [lhs_tokens, rhs_tokens]
            = split_arrow(t, static_cast<std::size_t>(close - t.begin()) + 2,
                          l.number);
        auto lhs = parse_schema_side(alphabet, lhs_tokens, var, l.number);
        auto rhs = parse_schema_side(alphabet, rhs_tokens, var, l.number);
        try {
          schemas.emplace_back(t[1],
                               var,
                               std::move(range),
                               std::move(lhs.prefix),
                               std::move(lhs.suffix),
                               std::move(rhs.prefix),
                               std::move(rhs.suffix));
        } catch (Error const& e) {
          throw ParseError(l.number, e.what());
        }
      }
    }
    return Presentation(std::move(alphabet),
                        std::move(rules),
                        std::move(schemas),
                        std::move(ordering));
  }

  std::string print_presentation(Presentation const& p) {
    auto const&        a = p.alphabet();
    std::ostringstream out;
    out << "letters";
    for (auto const& t : a.tokens()) {
      out << ' ' << t;
    }
    out << '\n';
    for (Letter x : a.letters()) {
      auto y = a.inverse(x);
      if (y && x < *y) {
        out << "inverse " << a.token(x) << ' ' << a.token(*y) << '\n';
      }
    }
    if (p.ordering()) {
      out << "order";
      for (Letter x : p.ordering()->precedence()) {
        out << ' ' << a.token(x);
      }
      out << '\n';
    }
    for (auto const& r : p.rules()) {
      out << "rule " << r->name << " : " << a.format(r->lhs) << " -> "
          << a.format(r->rhs) << '\n';
    }
    auto side = [&](Word const& prefix, Word const& suffix, std::string const& v) {
      std::string s;
      if (!prefix.empty()) {
        s += a.format(prefix) + ' ';
      }
      s += v;
      if (!suffix.empty()) {
        s += ' ' + a.format(suffix);
      }
      return s;
    };
    for (auto const& s : p.schemas()) {
      out << "schema " << s.name() << " ( " << s.variable() << " :";
      for (Letter x : s.range()) {
        out << ' ' << a.token(x);
      }
      out << " ) : " << side(s.lhs_prefix(), s.lhs_suffix(), s.variable())
          << " -> " << side(s.rhs_prefix(), s.rhs_suffix(), s.variable())
          << '\n';
    }
    return out.str();
  }

}  // namespace rwlab
