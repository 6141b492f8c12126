#include "synmon/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "synmon/errors.hpp"
#include "synmon/fp_linear.hpp"

namespace synmon {

  namespace {
    bool two_valued(Variety v) {
      return v != Variety::jsl && v != Variety::vect;
    }
  }  // namespace

  ContextOracle::ContextOracle(VarietyTag tag, Dfa const& l0, Limits const& limits)
      : _tag(tag), _dfa(l0.is_minimal() ? l0 : minimize(l0)) {
    std::size_t const n = _dfa.number_of_states();
    if (tag.variety == Variety::jsl && n > 20) {
      throw CapacityError("jsl context oracle supports at most 20 states", n);
    }
    _bound    = n - 1;
    _contexts = words_up_to(_dfa.alphabet(), _bound);
    std::size_t const k = _contexts.size();
    std::size_t const pairs = tag.variety == Variety::jsl ? k : k * k;
    if (pairs > limits.max_contexts) {
      throw CapacityError("context oracle exceeds the context limit", pairs);
    }
    for (auto const& x : _contexts) {
      _reach.push_back(*_dfa.run(_dfa.initial(), x));
    }
    _accept.assign(n, std::vector<std::uint8_t>(k));
    for (State q = 0; q < n; ++q) {
      for (std::size_t y = 0; y < k; ++y) {
        _accept[q][y] = _dfa.is_final(*_dfa.run(q, _contexts[y])) ? 1 : 0;
      }
    }
  }

  State ContextOracle::after(std::size_t x, Word const& w) const {
    auto r = _dfa.run(_reach[x], w);
    if (!r) {
      throw std::invalid_argument("word " + w + " leaves the alphabet "
                                  + _dfa.alphabet().letters());
    }
    return *r;
  }

  std::uint64_t ContextOracle::union_mask(std::size_t x, FreeElem const& u) const {
    std::uint64_t mask = 0;
    for (auto const& [w, _] : u.terms()) {
      mask |= std::uint64_t(1) << after(x, w);
    }
    return mask;
  }

  Dfa ContextOracle::union_dfa(std::uint64_t mask) const {
    std::vector<State> states;
    for (State q = 0; q < _dfa.number_of_states(); ++q) {
      if (mask >> q & 1) {
        states.push_back(q);
      }
    }
    return state_set_language(_dfa, states);
  }

  std::uint32_t ContextOracle::union_id(std::uint64_t mask) const {
    std::lock_guard lock(_mutex);
    if (auto it = _union_ids.find(mask); it != _union_ids.end()) {
      return it->second;
    }
    auto [it, _] = _languages.emplace(canonical_key(union_dfa(mask)),
                                      static_cast<std::uint32_t>(_languages.size()));
    _union_ids.emplace(mask, it->second);
    return it->second;
  }

  std::vector<std::uint32_t> ContextOracle::values(FreeElem const& u) const {
    if (!(u.tag() == _tag)) {
      throw TagMismatch("element of " + to_string(u.tag()) + " given to a "
                        + to_string(_tag) + " oracle");
    }
    std::size_t const          k = _contexts.size();
    std::vector<std::uint32_t> out;
    switch (_tag.variety) {
      case Variety::set:
      case Variety::pos:
      case Variety::pset:
      case Variety::inv: {
        out.reserve(k * k);
        if (u.is_bottom()) {
          out.assign(k * k, 0);
          break;
        }
        std::uint8_t const flip = u.is_complemented() ? 1 : 0;
        for (std::size_t x = 0; x < k; ++x) {
          auto const& acc = _accept[after(x, u.single_word())];
          for (std::size_t y = 0; y < k; ++y) {
            out.push_back(acc[y] ^ flip);
          }
        }
        break;
      }
      case Variety::jsl:
        for (std::size_t x = 0; x < k; ++x) {
          out.push_back(union_id(union_mask(x, u)));
        }
        break;
      case Variety::vect: {
        fp::Field const field(_tag.prime);
        out.assign(k * k, 0);
        for (std::size_t x = 0; x < k; ++x) {
          for (auto const& [w, c] : u.terms()) {
            auto const& acc = _accept[after(x, w)];
            for (std::size_t y = 0; y < k; ++y) {
              if (acc[y]) {
                out[x * k + y] = field.add(out[x * k + y], c);
              }
            }
          }
        }
        break;
      }
    }
    return out;
  }

  std::string ContextOracle::profile(FreeElem const& u) const {
    auto const  v = values(u);
    std::string p;
    if (two_valued(_tag.variety)) {
      p.assign((v.size() + 7) / 8, '\0');
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
          p[i / 8] = static_cast<char>(p[i / 8] | (1 << (i % 8)));
        }
      }
      return p;
    }
    p.reserve(v.size() * 4);
    for (auto x : v) {
      for (int b = 0; b < 4; ++b) {
        p.push_back(static_cast<char>(x >> (8 * b) & 0xFF));
      }
    }
    return p;
  }

  bool ContextOracle::congruent(FreeElem const& u, FreeElem const& v) const {
    return values(u) == values(v);
  }

  bool ContextOracle::leq(FreeElem const& u, FreeElem const& v) const {
    if (_tag.variety != Variety::pos) {
      return congruent(u, v);
    }
    return !witness(u, v, true).has_value();
  }

  std::optional<ContextWitness> ContextOracle::witness(FreeElem const& u,
                                                       FreeElem const& v,
                                                       bool            ordered) const {
    auto const        a = values(u);
    auto const        b = values(v);
    std::size_t const k = _contexts.size();
    if (_tag.variety == Variety::jsl) {
      for (std::size_t x = 0; x < k; ++x) {
        if (a[x] == b[x]) {
          continue;
        }
        Dfa const  du = union_dfa(union_mask(x, u));
        Dfa const  dv = union_dfa(union_mask(x, v));
        Word const y  = *distinguishing_word(du, dv);
        return ContextWitness{_contexts[x], y, {membership(du, y) ? 1u : 0u},
                              {membership(dv, y) ? 1u : 0u}};
      }
      return std::nullopt;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool const differs = ordered && _tag.variety == Variety::pos ? a[i] > b[i] : a[i] != b[i];
      if (differs) {
        return ContextWitness{_contexts[i / k], _contexts[i % k], {a[i]}, {b[i]}};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Route 1
  ////////////////////////////////////////////////////////////////////////

  namespace {

    FreeElem letter_elem(VarietyTag tag, char c) {
      return FreeElem::word(tag, Word(1, c));
    }

    SynAlgebra linear_quotient(std::shared_ptr<ContextOracle const> const& oracle,
                               Limits const&                               limits) {
      VarietyTag const tag = oracle->tag();
      Dfa const&       m   = oracle->language();
      Alphabet const&  x   = m.alphabet();
      fp::Field const  field(tag.prime);
      std::size_t const k = oracle->contexts().size();

      SynAlgebra s;
      s.tag          = tag;
      s.alphabet     = x;
      s.linear.prime = tag.prime;
      auto basis     = std::make_shared<fp::Basis>(field, k * k);
      std::vector<Word> reps;
      auto values = [&](FreeElem const& u) { return oracle->values(u); };
      if (basis->insert(values(FreeElem::unit(tag)))) {
        reps.emplace_back();
      }
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t a = 0; a < x.size(); ++a) {
          Word w = reps[i] + x[a];
          if (basis->insert(values(FreeElem::word(tag, w)))) {
            if (reps.size() >= limits.max_elements) {
              throw CapacityError("quotient dimension exceeds the element limit", reps.size() + 1);
            }
            reps.push_back(std::move(w));
          }
        }
      }
      std::size_t const d = reps.size();
      auto coords = [&](FreeElem const& u) {
        auto c = basis->coordinates(values(u));
        if (!c) {
          throw std::logic_error("context profile outside the span of the quotient");
        }
        return *c;
      };
      // right action of the letters on the basis
      std::vector<std::vector<fp::Vector>> right(d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t a = 0; a < x.size(); ++a) {
          right[i].push_back(coords(FreeElem::word(tag, reps[i] + x[a])));
        }
      }
      auto act = [&](fp::Vector const& v, std::size_t a) {
        fp::Vector r(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
          if (v[i] == 0) {
            continue;
          }
          for (std::size_t j = 0; j < d; ++j) {
            r[j] = field.add(r[j], field.mul(v[i], right[i][a][j]));
          }
        }
        return r;
      };
      s.linear.dimension = d;
      s.linear.product.assign(d, std::vector<fp::Vector>(d));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          fp::Vector v(d, 0);
          v[i] = 1;
          for (char c : reps[j]) {
            v = act(v, *x.index_of(c));
          }
          s.linear.product[i][j] = v;
        }
      }
      s.linear.unit = d > 0 ? coords(FreeElem::unit(tag)) : fp::Vector();
      for (std::size_t a = 0; a < x.size(); ++a) {
        s.linear.generators.push_back(d > 0 ? coords(letter_elem(tag, x[a])) : fp::Vector());
      }
      for (auto const& w : reps) {
        FreeElem e = FreeElem::word(tag, w);
        s.linear.output.push_back(eval_language(tag, m, e).value);
        s.elements.push_back({{}, {}, std::move(e)});
      }
      s.coordinates = [oracle, basis, d](FreeElem const& u) {
        if (d == 0) {
          return fp::Vector();
        }
        auto c = basis->coordinates(oracle->values(u));
        if (!c) {
          throw std::logic_error("context profile outside the span of the quotient");
        }
        return *c;
      };
      return s;
    }

  }  // namespace

  SynAlgebra congruence_quotient(VarietyTag tag, Dfa const& l0, Limits const& limits) {
    auto oracle = std::make_shared<ContextOracle const>(tag, l0, limits);
    if (tag.variety == Variety::vect) {
      return linear_quotient(oracle, limits);
    }
    Dfa const&      m = oracle->language();
    Alphabet const& x = m.alphabet();

    SynAlgebra s;
    s.tag      = tag;
    s.alphabet = x;
    auto classes = std::make_shared<std::map<std::string, Index>>();
    std::vector<std::string> profiles;
    auto insert = [&](FreeElem u) -> Index {
      std::string p = oracle->profile(u);
      if (auto it = classes->find(p); it != classes->end()) {
        return it->second;
      }
      if (s.elements.size() >= limits.max_elements) {
        throw CapacityError("congruence quotient exceeds the element limit",
                            s.elements.size() + 1);
      }
      Index const i = s.elements.size();
      classes->emplace(p, i);
      profiles.push_back(std::move(p));
      s.elements.push_back({{}, {}, std::move(u)});
      return i;
    };

    s.unit = insert(FreeElem::unit(tag));
    if (tag.variety == Variety::pset) {
      s.zero = insert(FreeElem::bottom());
    }
    if (tag.variety == Variety::jsl) {
      s.zero = insert(FreeElem::word_set({}));
    }
    Table right;  // right[i][a] = class of rep_i * a
    for (Index i = 0; i < s.elements.size(); ++i) {
      right.emplace_back();
      for (std::size_t a = 0; a < x.size(); ++a) {
        FreeElem u = free_mul(tag, s.elements[i].representative, letter_elem(tag, x[a]));
        right[i].push_back(insert(std::move(u)));
      }
      if (tag.variety == Variety::inv) {
        insert(free_complement(s.elements[i].representative));
      }
      if (tag.variety == Variety::jsl) {
        for (Index j = 0; j < i; ++j) {
          insert(free_add(s.elements[j].representative, s.elements[i].representative));
        }
      }
    }

    std::size_t const n      = s.elements.size();
    auto              lookup = [&](FreeElem const& u) { return classes->at(oracle->profile(u)); };
    for (std::size_t a = 0; a < x.size(); ++a) {
      s.gen.push_back(right[s.unit][a]);
    }
    for (auto const& e : s.elements) {
      s.output.push_back(eval_language(tag, m, e.representative));
    }
    if (tag.variety == Variety::inv) {
      for (auto const& e : s.elements) {
        s.involution.push_back(lookup(free_complement(e.representative)));
      }
    }
    if (tag.variety == Variety::jsl) {
      s.add.assign(n, std::vector<Index>(n));
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j <= i; ++j) {
          s.add[i][j] = s.add[j][i] =
              lookup(free_add(s.elements[i].representative, s.elements[j].representative));
        }
      }
    }
    // Products follow from the right action of the letters, since the
    // congruence is compatible with multiplication.
    auto fold = [&](Index i, Word const& w) {
      for (char c : w) {
        i = right[i][*x.index_of(c)];
      }
      return i;
    };
    s.mult.assign(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        FreeElem const& v = s.elements[j].representative;
        Index           r = 0;
        switch (tag.variety) {
          case Variety::pset:
            r = v.is_bottom() ? s.zero : fold(i, v.single_word());
            break;
          case Variety::inv:
            r = fold(i, v.single_word());
            r = v.is_complemented() ? s.involution[r] : r;
            break;
          case Variety::jsl:
            r = s.zero;
            for (auto const& [w, _] : v.terms()) {
              r = s.add[r][fold(i, w)];
            }
            break;
          default:
            r = fold(i, v.single_word());
            break;
        }
        s.mult[i][j] = r;
      }
    }
    if (tag.variety == Variety::pos) {
      s.leq.assign(n, std::vector<bool>(n));
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          bool le = true;
          for (std::size_t b = 0; b < profiles[i].size() && le; ++b) {
            le = (profiles[i][b] & ~profiles[j][b]) == 0;
          }
          s.leq[i][j] = le;
        }
      }
    }
    s.classify = [oracle, classes](FreeElem const& u) {
      auto it = classes->find(oracle->profile(u));
      if (it == classes->end()) {
        throw std::logic_error("context profile of " + to_string(u) + " matches no class");
      }
      return it->second;
    };
    return s;
  }

  std::vector<FreeElem> small_elements(VarietyTag tag, Alphabet const& alphabet,
                                       std::size_t max_length) {
    auto const            words = words_up_to(alphabet, max_length);
    std::vector<FreeElem> out;
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos:
        for (auto const& w : words) {
          out.push_back(FreeElem::word(tag, w));
        }
        break;
      case Variety::pset:
        out.push_back(FreeElem::bottom());
        for (auto const& w : words) {
          out.push_back(FreeElem::word(tag, w));
        }
        break;
      case Variety::inv:
        for (auto const& w : words) {
          out.push_back(FreeElem::word(tag, w));
          out.push_back(FreeElem::complemented(w));
        }
        break;
      case Variety::jsl:
        out.push_back(FreeElem::word_set({}));
        for (std::size_t i = 0; i < words.size(); ++i) {
          out.push_back(FreeElem::word_set({words[i]}));
          for (std::size_t j = i + 1; j < words.size(); ++j) {
            out.push_back(FreeElem::word_set({words[i], words[j]}));
          }
        }
        break;
      case Variety::vect: {
        std::int64_t const p = tag.prime;
        out.push_back(FreeElem::polynomial(tag.prime, {}));
        for (std::size_t i = 0; i < words.size(); ++i) {
          out.push_back(FreeElem::polynomial(tag.prime, {{words[i], 1}}));
          for (std::size_t j = i + 1; j < words.size(); ++j) {
            out.push_back(FreeElem::polynomial(tag.prime, {{words[i], 1}, {words[j], 1}}));
            if (p > 2) {
              out.push_back(FreeElem::polynomial(tag.prime, {{words[i], 1}, {words[j], p - 1}}));
            }
          }
        }
        break;
      }
    }
    return out;
  }

  EquivalenceReport compare_with_oracle(SynAlgebra const&            s,
                                        ContextOracle const&         oracle,
                                        std::vector<FreeElem> const& elements) {
    EquivalenceReport report;
    report.elements = elements.size();
    auto mismatch   = [&report](std::string msg) {
      ++report.mismatches;
      if (report.witnesses.size() < 20) {
        report.witnesses.push_back(std::move(msg));
      }
    };
    if (s.is_linear()) {
      // the map e(u) -> profile(u) must be a well-defined injective linear map;
      // compare the two kernels through the joint span
      fp::Field const   field(s.tag.prime);
      std::size_t const d = s.linear.dimension;
      std::size_t const k = oracle.contexts().size();
      fp::Basis         joint(field, d + k * k), left(field, d), right(field, k * k);
      std::vector<FreeElem const*> used;
      for (auto const& u : elements) {
        fp::Vector c = coordinates_of(s, u);
        fp::Vector p = oracle.values(u);
        bool const l = left.contains(c);
        bool const r = right.contains(p);
        fp::Vector both = c;
        both.insert(both.end(), p.begin(), p.end());
        bool const joint_new = joint.insert(both);
        if (l != r || (joint_new && l)) {
          mismatch("e(" + to_string(u) + ") and its context profile are not related linearly");
        }
        if (!l) {
          left.insert(c);
        }
        if (!r) {
          right.insert(p);
        }
      }
      return report;
    }
    std::map<Index, std::pair<std::string, FreeElem const*>> by_class;
    std::map<std::string, std::pair<Index, FreeElem const*>> by_profile;
    for (auto const& u : elements) {
      Index const c = class_of(s, u);
      std::string p = oracle.profile(u);
      auto        ic = by_class.find(c);
      auto        ip = by_profile.find(p);
      if (ic != by_class.end() && ic->second.first != p) {
        mismatch(to_string(u) + " and " + to_string(*ic->second.second)
                 + " share a class but are not congruent");
      } else if (ic == by_class.end() && ip != by_profile.end()) {
        mismatch(to_string(u) + " and " + to_string(*ip->second.second)
                 + " are congruent but lie in different classes");
      }
      by_class.emplace(c, std::make_pair(p, &u));
      by_profile.emplace(std::move(p), std::make_pair(c, &u));
    }
    if (s.tag.variety == Variety::pos) {
      // compare the order on the classes met with the oracle preorder
      std::vector<std::pair<Index, FreeElem const*>> reps;
      for (auto const& [c, pu] : by_class) {
        reps.emplace_back(c, pu.second);
      }
      for (auto const& [ci, ui] : reps) {
        for (auto const& [cj, uj] : reps) {
          if (s.leq[ci][cj] != oracle.leq(*ui, *uj)) {
            mismatch("order disagrees on " + to_string(*ui) + " <= " + to_string(*uj));
          }
        }
      }
    }
    return report;
  }

}  // namespace synmon
