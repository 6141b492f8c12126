#include "synmon/langcore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "synmon/errors.hpp"

namespace synmon {

  namespace {
    constexpr std::string_view utf8_empty_set = "\xE2\x88\x85";  // ∅
    constexpr std::string_view utf8_epsilon   = "\xCE\xB5";      // ε
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet and words
  ////////////////////////////////////////////////////////////////////////

  bool is_reserved_character(char c) noexcept {
    switch (c) {
      case '(':
      case ')':
      case '|':
      case '*':
      case '#':
      case '~':
      case '{':
      case '}':
      case ',':
      case '+':
      case '_':
      case ' ':
      case '\t':
      case '\n':
      case '\r':
        return true;
      default:
        return static_cast<unsigned char>(c) >= 0x80 || c < 0x20;
    }
  }

  Alphabet::Alphabet(std::string_view letters) : _letters(letters) {
    if (_letters.empty()) {
      throw ParseError("alphabet must be nonempty", 0);
    }
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (is_reserved_character(_letters[i])) {
        throw ParseError(std::string("reserved character '") + _letters[i]
                             + "' cannot be a letter",
                         i);
      }
      if (_letters.find(_letters[i]) != i) {
        throw ParseError(std::string("duplicate letter '") + _letters[i] + "'", i);
      }
    }
  }

  std::optional<std::size_t> Alphabet::index_of(Letter a) const noexcept {
    auto pos = _letters.find(a);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return pos;
  }

  std::vector<Word> words_up_to(Alphabet const& alphabet, std::size_t max_length) {
    std::vector<Word> result{Word()};
    std::size_t       level_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const level_end = result.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
          result.push_back(result[i] + alphabet[a]);
        }
      }
      level_begin = level_end;
    }
    return result;
  }

  bool shortlex_less(Alphabet const& alphabet, std::string_view u, std::string_view v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return alphabet.index_of(u[i]).value_or(alphabet.size())
               < alphabet.index_of(v[i]).value_or(alphabet.size());
      }
    }
    return false;
  }

  Word reversed(std::string_view w) {
    return Word(w.rbegin(), w.rend());
  }

  ////////////////////////////////////////////////////////////////////////
  // Regex parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class RegexParser {
     public:
      RegexParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      Regex parse() {
        skip_space();
        if (at_end()) {
          throw ParseError("empty expression", _pos);
        }
        Regex r = alternation();
        skip_space();
        if (!at_end()) {
          throw ParseError(std::string("unexpected '") + _text[_pos] + "'", _pos);
        }
        return r;
      }

     private:
      bool at_end() const {
        return _pos >= _text.size();
      }

      void skip_space() {
        while (!at_end()
               && (_text[_pos] == ' ' || _text[_pos] == '\t' || _text[_pos] == '\n')) {
          ++_pos;
        }
      }

      bool starts_atom() {
        skip_space();
        if (at_end()) {
          return false;
        }
        char const c = _text[_pos];
        if (c == '(' || c == '#') {
          return true;
        }
        auto rest = _text.substr(_pos);
        if (rest.starts_with(utf8_empty_set) || rest.starts_with(utf8_epsilon)) {
          return true;
        }
        return !is_reserved_character(c) || static_cast<unsigned char>(c) >= 0x80;
      }

      Regex alternation() {
        Regex left = concatenation();
        skip_space();
        while (!at_end() && _text[_pos] == '|') {
          ++_pos;
          Regex right = concatenation();
          left        = Regex::alternation(std::move(left), std::move(right));
          skip_space();
        }
        return left;
      }

      Regex concatenation() {
        if (!starts_atom()) {
          if (at_end()) {
            throw ParseError("expected expression before end of input", _pos);
          }
          throw ParseError(std::string("expected expression before '") + _text[_pos]
                               + "'",
                           _pos);
        }
        Regex left = postfix();
        while (starts_atom()) {
          left = Regex::concatenation(std::move(left), postfix());
        }
        return left;
      }

      Regex postfix() {
        Regex r = atom();
        skip_space();
        while (!at_end() && _text[_pos] == '*') {
          ++_pos;
          r = Regex::star(std::move(r));
          skip_space();
        }
        return r;
      }

      Regex atom() {
        skip_space();
        std::size_t const start = _pos;
        auto              rest  = _text.substr(_pos);
        if (rest.starts_with(utf8_empty_set)) {
          _pos += utf8_empty_set.size();
          return Regex::empty();
        }
        if (rest.starts_with(utf8_epsilon)) {
          _pos += utf8_epsilon.size();
          return Regex::epsilon();
        }
        char const c = _text[_pos];
        if (c == '#') {
          ++_pos;
          return Regex::empty();
        }
        if (c == '(') {
          ++_pos;
          skip_space();
          if (!at_end() && _text[_pos] == ')') {
            ++_pos;
            return Regex::epsilon();
          }
          Regex inner = alternation();
          skip_space();
          if (at_end() || _text[_pos] != ')') {
            throw ParseError("missing ')' for '(' opened at position "
                                 + std::to_string(start),
                             _pos);
          }
          ++_pos;
          return inner;
        }
        if (!_alphabet.contains(c)) {
          throw ParseError(std::string("letter '") + c + "' outside alphabet", _pos);
        }
        ++_pos;
        return Regex::literal(c);
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;
    };

    void print(std::ostream& os, Regex const& r, int context) {
      // context: 0 = alternation, 1 = concatenation, 2 = star operand
      switch (r.kind) {
        case Regex::Kind::empty:
          os << utf8_empty_set;
          return;
        case Regex::Kind::epsilon:
          os << utf8_epsilon;
          return;
        case Regex::Kind::literal:
          os << r.letter;
          return;
        case Regex::Kind::alternation:
          if (context > 0) {
            os << '(';
          }
          print(os, r.children[0], 0);
          os << '|';
          print(os, r.children[1], 0);
          if (context > 0) {
            os << ')';
          }
          return;
        case Regex::Kind::concatenation:
          if (context > 1) {
            os << '(';
          }
          print(os, r.children[0], 1);
          print(os, r.children[1], 1);
          if (context > 1) {
            os << ')';
          }
          return;
        case Regex::Kind::star:
          print(os, r.children[0], 2);
          os << '*';
          return;
      }
    }
  }  // namespace

  Regex parse_regex(std::string_view text, Alphabet const& alphabet) {
    return RegexParser(text, alphabet).parse();
  }

  std::string to_string(Regex const& r) {
    std::ostringstream os;
    print(os, r, 0);
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  Dfa::Dfa(Alphabet                               alphabet,
           std::size_t                            states,
           State                                  initial,
           std::vector<State> const&              finals,
           std::vector<std::vector<State>> const& transitions)
      : _alphabet(std::move(alphabet)), _initial(initial), _final(states, false) {
    if (states == 0) {
      throw std::invalid_argument("a DFA needs at least one state");
    }
    if (initial >= states) {
      throw std::invalid_argument("initial state out of range");
    }
    for (State f : finals) {
      if (f >= states) {
        throw std::invalid_argument("final state out of range");
      }
      _final[f] = true;
    }
    if (transitions.size() != states) {
      throw std::invalid_argument("transition table needs one row per state");
    }
    _trans.reserve(states * _alphabet.size());
    for (auto const& row : transitions) {
      if (row.size() != _alphabet.size()) {
        throw std::invalid_argument("transition row needs one entry per letter");
      }
      for (State t : row) {
        if (t >= states) {
          throw std::invalid_argument("transition target out of range");
        }
        _trans.push_back(t);
      }
    }
  }

  std::vector<State> Dfa::finals() const {
    std::vector<State> result;
    for (State q = 0; q < _final.size(); ++q) {
      if (_final[q]) {
        result.push_back(q);
      }
    }
    return result;
  }

  std::optional<State> Dfa::run(State from, std::string_view word) const {
    State q = from;
    for (char c : word) {
      auto a = _alphabet.index_of(c);
      if (!a) {
        return std::nullopt;
      }
      q = next(q, *a);
    }
    return q;
  }

  Dfa Dfa::with_initial(State q) const {
    if (q >= number_of_states()) {
      throw std::invalid_argument("initial state out of range");
    }
    Dfa copy      = *this;
    copy._initial = q;
    copy._minimal = false;
    return copy;
  }

  Dfa Dfa::with_finals(std::vector<bool> finals) const {
    if (finals.size() != number_of_states()) {
      throw std::invalid_argument("final-state vector has wrong size");
    }
    Dfa copy      = *this;
    copy._final   = std::move(finals);
    copy._minimal = false;
    return copy;
  }

  namespace {
    std::vector<std::vector<State>> rows_of(Dfa const& d) {
      std::vector<std::vector<State>> rows(d.number_of_states());
      for (State q = 0; q < d.number_of_states(); ++q) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
          rows[q].push_back(d.next(q, a));
        }
      }
      return rows;
    }

    // Deterministic automaton on sets of states of d, each set kept sorted.
    // step(S, a) gives the successor set; accepting(S) decides finality.
    template <typename Step, typename Accepting>
    Dfa subset_construction(Alphabet const&    alphabet,
                            std::vector<State> start,
                            Step&&             step,
                            Accepting&&        accepting) {
      std::map<std::vector<State>, State> index;
      std::vector<std::vector<State>>     sets{start};
      index.emplace(std::move(start), 0);
      std::vector<std::vector<State>> trans;
      std::vector<State>              finals;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<State> row;
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
          std::vector<State> next = step(sets[i], a);
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          auto [it, inserted] = index.emplace(next, static_cast<State>(sets.size()));
          if (inserted) {
            sets.push_back(std::move(next));
          }
          row.push_back(it->second);
        }
        trans.push_back(std::move(row));
        if (accepting(sets[i])) {
          finals.push_back(static_cast<State>(i));
        }
      }
      return Dfa(alphabet, sets.size(), 0, finals, trans);
    }
  }  // namespace

  Dfa minimize(Dfa const& d) {
    std::size_t const k = d.alphabet().size();
    // reachable part
    std::vector<State> order{d.initial()};
    std::vector<bool>  seen(d.number_of_states(), false);
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        State t = d.next(order[i], a);
        if (!seen[t]) {
          seen[t] = true;
          order.push_back(t);
        }
      }
    }
    // Moore refinement over the reachable states
    std::vector<State> cls(d.number_of_states(), 0);
    std::size_t        classes = 0;
    {
      bool has_final = false, has_nonfinal = false;
      for (State q : order) {
        (d.is_final(q) ? has_final : has_nonfinal) = true;
      }
      for (State q : order) {
        cls[q] = (has_final && has_nonfinal && d.is_final(q)) ? 1 : 0;
      }
      classes = (has_final && has_nonfinal) ? 2 : 1;
    }
    while (true) {
      std::map<std::vector<State>, State> signature;
      std::vector<State>                  next_cls(d.number_of_states(), 0);
      for (State q : order) {
        std::vector<State> sig{cls[q]};
        for (std::size_t a = 0; a < k; ++a) {
          sig.push_back(cls[d.next(q, a)]);
        }
        auto [it, _] = signature.emplace(std::move(sig), static_cast<State>(signature.size()));
        next_cls[q]  = it->second;
      }
      bool const stable = signature.size() == classes;
      cls               = std::move(next_cls);
      classes           = signature.size();
      if (stable) {
        break;
      }
    }
    // breadth-first renumbering of the quotient
    std::vector<State> number(classes, State(-1));
    std::vector<State> representative;
    number[cls[d.initial()]] = 0;
    representative.push_back(d.initial());
    std::vector<std::vector<State>> trans;
    std::vector<State>              finals;
    for (std::size_t i = 0; i < representative.size(); ++i) {
      State const        q = representative[i];
      std::vector<State> row;
      for (std::size_t a = 0; a < k; ++a) {
        State const c = cls[d.next(q, a)];
        if (number[c] == State(-1)) {
          number[c] = static_cast<State>(representative.size());
          representative.push_back(d.next(q, a));
        }
        row.push_back(number[c]);
      }
      trans.push_back(std::move(row));
      if (d.is_final(q)) {
        finals.push_back(static_cast<State>(i));
      }
    }
    Dfa result(d.alphabet(), representative.size(), 0, finals, trans);
    result._minimal = true;
    return result;
  }

  namespace {
    // Thompson automaton with epsilon moves; internal to regex conversion.
    struct EpsilonNfa {
      std::vector<std::vector<std::pair<std::size_t, State>>> moves;
      std::vector<std::vector<State>>                         epsilon;

      State add_state() {
        moves.emplace_back();
        epsilon.emplace_back();
        return static_cast<State>(moves.size() - 1);
      }

      // Returns (entry, exit) of the fragment.
      std::pair<State, State> build(Regex const& r, Alphabet const& alphabet) {
        State const in  = add_state();
        State const out = add_state();
        switch (r.kind) {
          case Regex::Kind::empty:
            break;
          case Regex::Kind::epsilon:
            epsilon[in].push_back(out);
            break;
          case Regex::Kind::literal: {
            auto a = alphabet.index_of(r.letter);
            if (!a) {
              throw std::invalid_argument(std::string("letter '") + r.letter
                                          + "' outside alphabet");
            }
            moves[in].emplace_back(*a, out);
            break;
          }
          case Regex::Kind::alternation: {
            auto [i1, o1] = build(r.children[0], alphabet);
            auto [i2, o2] = build(r.children[1], alphabet);
            epsilon[in].push_back(i1);
            epsilon[in].push_back(i2);
            epsilon[o1].push_back(out);
            epsilon[o2].push_back(out);
            break;
          }
          case Regex::Kind::concatenation: {
            auto [i1, o1] = build(r.children[0], alphabet);
            auto [i2, o2] = build(r.children[1], alphabet);
            epsilon[in].push_back(i1);
            epsilon[o1].push_back(i2);
            epsilon[o2].push_back(out);
            break;
          }
          case Regex::Kind::star: {
            auto [i1, o1] = build(r.children[0], alphabet);
            epsilon[in].push_back(i1);
            epsilon[in].push_back(out);
            epsilon[o1].push_back(i1);
            epsilon[o1].push_back(out);
            break;
          }
        }
        return {in, out};
      }

      std::vector<State> closure(std::vector<State> set) const {
        std::vector<bool> in(moves.size(), false);
        for (State q : set) {
          in[q] = true;
        }
        for (std::size_t i = 0; i < set.size(); ++i) {
          for (State t : epsilon[set[i]]) {
            if (!in[t]) {
              in[t] = true;
              set.push_back(t);
            }
          }
        }
        return set;
      }
    };
  }  // namespace

  Dfa regex_to_min_dfa(Regex const& r, Alphabet const& alphabet) {
    EpsilonNfa nfa;
    auto [entry, exit] = nfa.build(r, alphabet);
    auto start         = nfa.closure({entry});
    std::sort(start.begin(), start.end());
    Dfa d = subset_construction(
        alphabet,
        std::move(start),
        [&nfa](std::vector<State> const& set, std::size_t a) {
          std::vector<State> next;
          for (State q : set) {
            for (auto const& [letter, t] : nfa.moves[q]) {
              if (letter == a) {
                next.push_back(t);
              }
            }
          }
          return nfa.closure(std::move(next));
        },
        [exit = exit](std::vector<State> const& set) {
          return std::find(set.begin(), set.end(), exit) != set.end();
        });
    return minimize(d);
  }

  Dfa min_dfa(std::string_view regex, Alphabet const& alphabet) {
    return regex_to_min_dfa(parse_regex(regex, alphabet), alphabet);
  }

  bool membership(Dfa const& d, std::string_view w) {
    auto q = d.run(d.initial(), w);
    return q && d.is_final(*q);
  }

  Dfa left_derivative(Dfa const& d, Letter a) {
    auto i = d.alphabet().index_of(a);
    if (!i) {
      throw std::invalid_argument(std::string("letter '") + a + "' outside alphabet");
    }
    return minimize(d.with_initial(d.next(d.initial(), *i)));
  }

  Dfa right_derivative(Dfa const& d, Letter a) {
    auto i = d.alphabet().index_of(a);
    if (!i) {
      throw std::invalid_argument(std::string("letter '") + a + "' outside alphabet");
    }
    std::vector<bool> finals(d.number_of_states());
    for (State q = 0; q < d.number_of_states(); ++q) {
      finals[q] = d.is_final(d.next(q, *i));
    }
    return minimize(d.with_finals(std::move(finals)));
  }

  Dfa reverse_language(Dfa const& d) {
    std::size_t const n = d.number_of_states();
    // predecessors per letter
    std::vector<std::vector<std::vector<State>>> pred(
        d.alphabet().size(), std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
        pred[a][d.next(q, a)].push_back(q);
      }
    }
    Dfa r = subset_construction(
        d.alphabet(),
        d.finals(),
        [&pred](std::vector<State> const& set, std::size_t a) {
          std::vector<State> next;
          for (State q : set) {
            next.insert(next.end(), pred[a][q].begin(), pred[a][q].end());
          }
          return next;
        },
        [&d](std::vector<State> const& set) {
          return std::find(set.begin(), set.end(), d.initial()) != set.end();
        });
    return minimize(r);
  }

  Dfa complement(Dfa const& d) {
    std::vector<bool> finals(d.number_of_states());
    for (State q = 0; q < d.number_of_states(); ++q) {
      finals[q] = !d.is_final(q);
    }
    return minimize(d.with_finals(std::move(finals)));
  }

  Dfa state_language(Dfa const& d, State q) {
    return minimize(d.with_initial(q));
  }

  Dfa state_set_language(Dfa const& d, std::span<State const> states) {
    std::vector<State> start(states.begin(), states.end());
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    Dfa r = subset_construction(
        d.alphabet(),
        std::move(start),
        [&d](std::vector<State> const& set, std::size_t a) {
          std::vector<State> next;
          for (State q : set) {
            next.push_back(d.next(q, a));
          }
          return next;
        },
        [&d](std::vector<State> const& set) {
          return std::any_of(set.begin(), set.end(), [&d](State q) { return d.is_final(q); });
        });
    return minimize(r);
  }

  namespace {
    void require_same_alphabet(Dfa const& d1, Dfa const& d2) {
      if (!(d1.alphabet() == d2.alphabet())) {
        throw AlphabetMismatch("alphabets differ: '" + d1.alphabet().letters() + "' vs '"
                               + d2.alphabet().letters() + "'");
      }
    }

    // Breadth-first search of the product automaton. Stops at the first pair
    // for which bad(p, q) holds and returns the word leading there.
    template <typename Bad>
    std::optional<Word> product_search(Dfa const& d1, Dfa const& d2, Bad&& bad) {
      require_same_alphabet(d1, d2);
      std::size_t const                        n2 = d2.number_of_states();
      std::vector<std::pair<std::size_t, int>> parent(d1.number_of_states() * n2,
                                                      {std::size_t(-1), -1});
      std::deque<std::size_t>                  queue;
      std::size_t const start = std::size_t(d1.initial()) * n2 + d2.initial();
      parent[start]           = {start, -1};
      queue.push_back(start);
      while (!queue.empty()) {
        std::size_t const cur = queue.front();
        queue.pop_front();
        State const p = static_cast<State>(cur / n2), q = static_cast<State>(cur % n2);
        if (bad(p, q)) {
          Word        w;
          std::size_t node = cur;
          while (parent[node].second != -1) {
            w.push_back(d1.alphabet()[parent[node].second]);
            node = parent[node].first;
          }
          return reversed(w);
        }
        for (std::size_t a = 0; a < d1.alphabet().size(); ++a) {
          std::size_t const nxt = std::size_t(d1.next(p, a)) * n2 + d2.next(q, a);
          if (parent[nxt].first == std::size_t(-1)) {
            parent[nxt] = {cur, static_cast<int>(a)};
            queue.push_back(nxt);
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  bool language_equal(Dfa const& d1, Dfa const& d2) {
    return !distinguishing_word(d1, d2).has_value();
  }

  bool language_included(Dfa const& d1, Dfa const& d2) {
    return !product_search(d1, d2, [&](State p, State q) {
              return d1.is_final(p) && !d2.is_final(q);
            }).has_value();
  }

  std::optional<Word> distinguishing_word(Dfa const& d1, Dfa const& d2) {
    return product_search(
        d1, d2, [&](State p, State q) { return d1.is_final(p) != d2.is_final(q); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  std::string dfa_to_json(Dfa const& d) {
    nlohmann::ordered_json j;
    j["alphabet"] = nlohmann::ordered_json::array();
    for (char c : d.alphabet().letters()) {
      j["alphabet"].push_back(std::string(1, c));
    }
    j["states"]  = d.number_of_states();
    j["initial"] = d.initial();
    j["finals"]  = d.finals();
    j["trans"]   = rows_of(d);
    return j.dump();
  }

  Dfa dfa_from_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("malformed DFA JSON: ") + e.what(), e.byte);
    }
    try {
      std::string letters;
      for (auto const& x : j.at("alphabet")) {
        auto s = x.get<std::string>();
        if (s.size() != 1) {
          throw ParseError("alphabet entries must be single characters", 0);
        }
        letters += s;
      }
      return Dfa(Alphabet(letters),
                 j.at("states").get<std::size_t>(),
                 j.at("initial").get<State>(),
                 j.at("finals").get<std::vector<State>>(),
                 j.at("trans").get<std::vector<std::vector<State>>>());
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("invalid DFA JSON: ") + e.what(), 0);
    } catch (std::invalid_argument const& e) {
      throw ParseError(std::string("invalid DFA: ") + e.what(), 0);
    }
  }

  std::string to_dot(Dfa const& d, std::string_view name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  start [shape=point];\n";
    for (State q = 0; q < d.number_of_states(); ++q) {
      os << "  q" << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle")
         << "];\n";
    }
    os << "  start -> q" << d.initial() << ";\n";
    for (State q = 0; q < d.number_of_states(); ++q) {
      // merge parallel edges into one label
      std::map<State, std::string> labels;
      for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
        auto& l = labels[d.next(q, a)];
        if (!l.empty()) {
          l += ",";
        }
        l += d.alphabet()[a];
      }
      for (auto const& [t, l] : labels) {
        os << "  q" << q << " -> q" << t << " [label=\"" << l << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  std::string canonical_key(Dfa const& d) {
    Dfa const          m = d.is_minimal() ? d : minimize(d);
    std::ostringstream os;
    os << m.alphabet().letters() << ':' << m.number_of_states() << ':';
    for (State q = 0; q < m.number_of_states(); ++q) {
      os << (m.is_final(q) ? '1' : '0');
    }
    for (State q = 0; q < m.number_of_states(); ++q) {
      os << ';';
      for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
        os << m.next(q, a) << ',';
      }
    }
    return os.str();
  }

}  // namespace synmon
