#include "synmon/freemon.hpp"

#include <stdexcept>

#include "synmon/errors.hpp"
#include "synmon/fp_linear.hpp"

namespace synmon {

  namespace {
    constexpr std::string_view utf8_epsilon = "\xCE\xB5";

    bool is_wordlike(Variety v) noexcept {
      return v == Variety::set || v == Variety::pos || v == Variety::pset
             || v == Variety::inv;
    }

    std::string show_word(Word const& w) {
      return w.empty() ? std::string(utf8_epsilon) : w;
    }
  }  // namespace

  VarietyTag make_tag(Variety v, std::uint32_t prime) {
    if (v == Variety::vect && !fp::is_prime(prime)) {
      throw std::invalid_argument("vect requires a prime, got " + std::to_string(prime));
    }
    return {v, v == Variety::vect ? prime : 2};
  }

  VarietyTag parse_variety(std::string_view name, std::uint32_t prime) {
    static constexpr std::pair<std::string_view, Variety> names[] = {
        {"set", Variety::set},
        {"pos", Variety::pos},
        {"pset", Variety::pset},
        {"inv", Variety::inv},
        {"jsl", Variety::jsl},
        {"vect", Variety::vect},
    };
    for (auto const& [n, v] : names) {
      if (n == name) {
        return make_tag(v, prime);
      }
    }
    throw std::invalid_argument("unknown variety '" + std::string(name) + "'");
  }

  std::string_view variety_name(Variety v) noexcept {
    switch (v) {
      case Variety::set:
        return "set";
      case Variety::pos:
        return "pos";
      case Variety::pset:
        return "pset";
      case Variety::inv:
        return "inv";
      case Variety::jsl:
        return "jsl";
      case Variety::vect:
        return "vect";
    }
    return "?";
  }

  std::string to_string(VarietyTag tag) {
    std::string s(variety_name(tag.variety));
    if (tag.variety == Variety::vect) {
      s += "(" + std::to_string(tag.prime) + ")";
    }
    return s;
  }

  std::vector<VarietyTag> all_varieties(std::uint32_t prime) {
    return {make_tag(Variety::set),
            make_tag(Variety::pos),
            make_tag(Variety::pset),
            make_tag(Variety::inv),
            make_tag(Variety::jsl),
            make_tag(Variety::vect, prime)};
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeElem
  ////////////////////////////////////////////////////////////////////////

  FreeElem FreeElem::word(VarietyTag tag, Word w) {
    FreeElem u;
    u._tag = tag;
    u._terms.emplace(std::move(w), 1);
    return u;
  }

  FreeElem FreeElem::unit(VarietyTag tag) {
    return word(tag, Word());
  }

  FreeElem FreeElem::bottom() {
    FreeElem u;
    u._tag    = make_tag(Variety::pset);
    u._bottom = true;
    return u;
  }

  FreeElem FreeElem::complemented(Word w) {
    FreeElem u      = word(make_tag(Variety::inv), std::move(w));
    u._complemented = true;
    return u;
  }

  FreeElem FreeElem::word_set(std::vector<Word> words) {
    FreeElem u;
    u._tag = make_tag(Variety::jsl);
    for (auto& w : words) {
      u._terms.emplace(std::move(w), 1);
    }
    return u;
  }

  FreeElem FreeElem::polynomial(std::uint32_t                                     prime,
                                std::vector<std::pair<Word, std::int64_t>> const& terms) {
    fp::Field const field(prime);
    FreeElem        u;
    u._tag = make_tag(Variety::vect, prime);
    for (auto const& [w, c] : terms) {
      auto& slot = u._terms[w];
      slot       = field.add(slot, field.reduce(c));
    }
    std::erase_if(u._terms, [](auto const& kv) { return kv.second == 0; });
    return u;
  }

  Word const& FreeElem::single_word() const {
    if (!is_wordlike(_tag.variety) || _bottom || _terms.size() != 1) {
      throw std::logic_error("free element is not a single word");
    }
    return _terms.begin()->first;
  }

  namespace {
    void require_tag(VarietyTag tag, FreeElem const& u, char const* which) {
      if (!(u.tag() == tag)) {
        throw TagMismatch(std::string("operand ") + which + " has variety "
                          + to_string(u.tag()) + ", expected " + to_string(tag));
      }
    }
  }  // namespace

  FreeElem free_mul(VarietyTag tag, FreeElem const& u, FreeElem const& v) {
    require_tag(tag, u, "u");
    require_tag(tag, v, "v");
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos:
        return FreeElem::word(tag, u.single_word() + v.single_word());
      case Variety::pset:
        if (u.is_bottom() || v.is_bottom()) {
          return FreeElem::bottom();
        }
        return FreeElem::word(tag, u.single_word() + v.single_word());
      case Variety::inv: {
        Word w = u.single_word() + v.single_word();
        return u.is_complemented() != v.is_complemented()
                   ? FreeElem::complemented(std::move(w))
                   : FreeElem::word(tag, std::move(w));
      }
      case Variety::jsl: {
        std::vector<Word> words;
        for (auto const& [x, _] : u.terms()) {
          for (auto const& [y, __] : v.terms()) {
            words.push_back(x + y);
          }
        }
        return FreeElem::word_set(std::move(words));
      }
      case Variety::vect: {
        fp::Field const                            field(tag.prime);
        std::vector<std::pair<Word, std::int64_t>> terms;
        for (auto const& [x, c] : u.terms()) {
          for (auto const& [y, d] : v.terms()) {
            terms.emplace_back(x + y, field.mul(c, d));
          }
        }
        return FreeElem::polynomial(tag.prime, terms);
      }
    }
    throw std::logic_error("unreachable");
  }

  FreeElem free_add(FreeElem const& u, FreeElem const& v) {
    require_tag(u.tag(), v, "v");
    if (u.tag().variety == Variety::jsl) {
      std::vector<Word> words;
      for (auto const& [x, _] : u.terms()) {
        words.push_back(x);
      }
      for (auto const& [y, _] : v.terms()) {
        words.push_back(y);
      }
      return FreeElem::word_set(std::move(words));
    }
    if (u.tag().variety == Variety::vect) {
      std::vector<std::pair<Word, std::int64_t>> terms;
      for (auto const& [x, c] : u.terms()) {
        terms.emplace_back(x, c);
      }
      for (auto const& [y, d] : v.terms()) {
        terms.emplace_back(y, d);
      }
      return FreeElem::polynomial(u.tag().prime, terms);
    }
    throw TagMismatch("addition is defined for jsl and vect only");
  }

  FreeElem free_complement(FreeElem const& u) {
    if (u.tag().variety != Variety::inv) {
      throw TagMismatch("complement is defined for inv only");
    }
    return u.is_complemented() ? FreeElem::word(u.tag(), u.single_word())
                               : FreeElem::complemented(u.single_word());
  }

  FreeElem free_reverse(FreeElem const& u) {
    switch (u.tag().variety) {
      case Variety::set:
      case Variety::pos:
        return FreeElem::word(u.tag(), reversed(u.single_word()));
      case Variety::pset:
        return u.is_bottom() ? u : FreeElem::word(u.tag(), reversed(u.single_word()));
      case Variety::inv:
        return u.is_complemented() ? FreeElem::complemented(reversed(u.single_word()))
                                   : FreeElem::word(u.tag(), reversed(u.single_word()));
      case Variety::jsl: {
        std::vector<Word> words;
        for (auto const& [x, _] : u.terms()) {
          words.push_back(reversed(x));
        }
        return FreeElem::word_set(std::move(words));
      }
      case Variety::vect: {
        std::vector<std::pair<Word, std::int64_t>> terms;
        for (auto const& [x, c] : u.terms()) {
          terms.emplace_back(reversed(x), c);
        }
        return FreeElem::polynomial(u.tag().prime, terms);
      }
    }
    throw std::logic_error("unreachable");
  }

  OutputValue eval_language(VarietyTag tag, Dfa const& l0, FreeElem const& u) {
    require_tag(tag, u, "u");
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos:
        return {membership(l0, u.single_word()) ? 1u : 0u};
      case Variety::pset:
        // 0 encodes bottom
        return {!u.is_bottom() && membership(l0, u.single_word()) ? 1u : 0u};
      case Variety::inv:
        return {membership(l0, u.single_word()) != u.is_complemented() ? 1u : 0u};
      case Variety::jsl:
        for (auto const& [w, _] : u.terms()) {
          if (membership(l0, w)) {
            return {1};
          }
        }
        return {0};
      case Variety::vect: {
        fp::Field const field(tag.prime);
        fp::Scalar      sum = 0;
        for (auto const& [w, c] : u.terms()) {
          if (membership(l0, w)) {
            sum = field.add(sum, c);
          }
        }
        return {sum};
      }
    }
    throw std::logic_error("unreachable");
  }

  std::string to_string(OutputValue y, VarietyTag tag) {
    if (tag.variety == Variety::pset && y.value == 0) {
      return "_|_";
    }
    return std::to_string(y.value);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class FreeElemParser {
     public:
      FreeElemParser(std::string_view text, Alphabet const& alphabet, std::size_t max_len)
          : _text(text), _alphabet(alphabet), _max_len(max_len) {}

      bool at_end() const {
        return _pos >= _text.size();
      }
      char peek() const {
        return _text[_pos];
      }
      std::size_t pos() const {
        return _pos;
      }
      void advance(std::size_t n = 1) {
        _pos += n;
      }
      void skip_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
          ++_pos;
        }
      }
      void expect_end() {
        skip_space();
        if (!at_end()) {
          throw ParseError(std::string("unexpected '") + peek() + "'", _pos);
        }
      }
      void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) {
          throw ParseError(std::string("expected '") + c + "'", _pos);
        }
        ++_pos;
      }

      // A possibly empty run of letters, or ε.
      Word word() {
        skip_space();
        if (_text.substr(_pos).starts_with(utf8_epsilon)) {
          _pos += utf8_epsilon.size();
          return Word();
        }
        Word w;
        while (!at_end() && !is_reserved_character(peek())) {
          if (!_alphabet.contains(peek())) {
            throw ParseError(std::string("letter '") + peek() + "' outside alphabet", _pos);
          }
          w.push_back(peek());
          ++_pos;
          if (w.size() > _max_len) {
            throw ParseError("word longer than " + std::to_string(_max_len)
                                 + " letters",
                             _pos);
          }
        }
        return w;
      }

      std::string_view rest() const {
        return _text.substr(_pos);
      }

     private:
      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _max_len;
      std::size_t      _pos = 0;
    };
  }  // namespace

  FreeElem parse_free_elem(VarietyTag       tag,
                           std::string_view text,
                           Alphabet const&  alphabet,
                           std::size_t      max_word_length) {
    FreeElemParser p(text, alphabet, max_word_length);
    p.skip_space();
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos: {
        Word w = p.word();
        p.expect_end();
        return FreeElem::word(tag, std::move(w));
      }
      case Variety::pset: {
        if (p.rest().starts_with("_|_")) {
          p.advance(3);
          p.expect_end();
          return FreeElem::bottom();
        }
        Word w = p.word();
        p.expect_end();
        return FreeElem::word(tag, std::move(w));
      }
      case Variety::inv: {
        bool const neg = !p.at_end() && p.peek() == '~';
        if (neg) {
          p.advance();
        }
        Word w = p.word();
        p.expect_end();
        return neg ? FreeElem::complemented(std::move(w)) : FreeElem::word(tag, std::move(w));
      }
      case Variety::jsl: {
        p.expect('{');
        std::vector<Word> words;
        p.skip_space();
        if (!p.at_end() && p.peek() == '}') {
          p.advance();
          p.expect_end();
          return FreeElem::word_set({});
        }
        while (true) {
          words.push_back(p.word());
          p.skip_space();
          if (!p.at_end() && p.peek() == ',') {
            p.advance();
            continue;
          }
          break;
        }
        p.expect('}');
        p.expect_end();
        return FreeElem::word_set(std::move(words));
      }
      case Variety::vect: {
        std::vector<std::pair<Word, std::int64_t>> terms;
        if (p.rest() == "0") {
          return FreeElem::polynomial(tag.prime, {});
        }
        while (true) {
          p.skip_space();
          std::int64_t coeff = 1;
          // optional "k*" prefix
          std::size_t digits = 0;
          auto        rest   = p.rest();
          while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') {
            ++digits;
          }
          if (digits > 0 && digits < rest.size() && rest[digits] == '*') {
            if (digits > 9) {
              throw ParseError("coefficient too large", p.pos());
            }
            coeff = std::stoll(std::string(rest.substr(0, digits)));
            p.advance(digits + 1);
          }
          terms.emplace_back(p.word(), coeff);
          p.skip_space();
          if (!p.at_end() && p.peek() == '+') {
            p.advance();
            continue;
          }
          break;
        }
        p.expect_end();
        return FreeElem::polynomial(tag.prime, terms);
      }
    }
    throw std::logic_error("unreachable");
  }

  std::string to_string(FreeElem const& u) {
    switch (u.tag().variety) {
      case Variety::set:
      case Variety::pos:
        return show_word(u.single_word());
      case Variety::pset:
        return u.is_bottom() ? "_|_" : show_word(u.single_word());
      case Variety::inv:
        return (u.is_complemented() ? "~" : "") + show_word(u.single_word());
      case Variety::jsl: {
        std::string s = "{";
        bool        first = true;
        for (auto const& [w, _] : u.terms()) {
          s += (first ? "" : ",") + show_word(w);
          first = false;
        }
        return s + "}";
      }
      case Variety::vect: {
        if (u.terms().empty()) {
          return "0";
        }
        std::string s;
        bool        first = true;
        for (auto const& [w, c] : u.terms()) {
          s += first ? "" : "+";
          if (c != 1) {
            s += std::to_string(c) + "*";
          }
          s += show_word(w);
          first = false;
        }
        return s;
      }
    }
    throw std::logic_error("unreachable");
  }

}  // namespace synmon
