#include "synmon/duality.hpp"

#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "synmon/errors.hpp"

namespace synmon {

  namespace {

    Transformation step(Dfa const& d, Transformation t, std::size_t letter) {
      for (auto& q : t) {
        q = d.next(q, letter);
      }
      return t;
    }

    Transformation letter_map(Dfa const& d, std::size_t letter) {
      Transformation t(d.number_of_states());
      for (State q = 0; q < t.size(); ++q) {
        t[q] = d.next(q, letter);
      }
      return t;
    }

    // first `first`, then `second`
    Transformation then(Transformation const& first, Transformation const& second) {
      Transformation t(first.size());
      for (std::size_t q = 0; q < first.size(); ++q) {
        t[q] = second[first[q]];
      }
      return t;
    }

    Transformation word_map(Dfa const& d, std::string_view w) {
      Transformation t(d.number_of_states());
      for (State q = 0; q < t.size(); ++q) {
        auto r = d.run(q, w);
        if (!r) {
          throw std::invalid_argument("word leaves the alphabet " + d.alphabet().letters());
        }
        t[q] = *r;
      }
      return t;
    }

    struct BaseMonoid {
      std::vector<Transformation> maps;
      std::vector<Word>           words;
    };

    // Extended transitions of d, breadth-first with letters in order.
    BaseMonoid base_monoid(Dfa const& d, Limits const& limits) {
      BaseMonoid                      m;
      std::map<Transformation, Index> seen;
      Transformation                  id(d.number_of_states());
      for (State q = 0; q < id.size(); ++q) {
        id[q] = q;
      }
      seen.emplace(id, 0);
      m.maps.push_back(std::move(id));
      m.words.emplace_back();
      for (Index i = 0; i < m.maps.size(); ++i) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
          Transformation t = step(d, m.maps[i], a);
          if (seen.emplace(t, m.maps.size()).second) {
            if (m.maps.size() >= limits.max_elements) {
              throw CapacityError("transition monoid of the reversed language exceeds the element limit",
                                  m.maps.size() + 1);
            }
            m.maps.push_back(std::move(t));
            m.words.push_back(m.words[i] + d.alphabet()[a]);
          }
        }
      }
      return m;
    }

  }  // namespace

  DerivativeSystem build_derivative_system(Dfa const& l0) {
    DerivativeSystem d;
    d.base              = minimize(reverse_language(l0));
    Dfa const&        b = d.base;
    std::size_t const n = b.number_of_states();

    // right derivatives L^rev v^{-1} correspond to G_v = {s : delta(s, v) in F}
    std::vector<std::vector<bool>> sets;
    std::set<std::vector<bool>>    seen;
    std::vector<bool>              finals(n);
    for (State q = 0; q < n; ++q) {
      finals[q] = b.is_final(q);
    }
    sets.push_back(finals);
    seen.insert(finals);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t a = 0; a < b.alphabet().size(); ++a) {
        std::vector<bool> pre(n);
        for (State s = 0; s < n; ++s) {
          pre[s] = sets[i][b.next(s, a)];
        }
        if (seen.insert(pre).second) {
          sets.push_back(std::move(pre));
        }
      }
    }
    std::set<std::string> keys;
    for (State q = 0; q < n; ++q) {
      for (auto const& g : sets) {
        Dfa lang = minimize(b.with_initial(q).with_finals(g));
        if (keys.insert(canonical_key(lang)).second) {
          d.pairs.emplace_back(q, g);
          d.languages.push_back(std::move(lang));
        }
      }
    }
    return d;
  }

  AtomSystem compute_atoms(DerivativeSystem const& d, Limits const& limits) {
    AtomSystem a;
    a.base                 = d.base;
    a.alphabet             = d.base.alphabet();
    Dfa const&       b     = a.base;
    BaseMonoid const monoid = base_monoid(b, limits);

    std::map<std::vector<std::uint8_t>, Index> by_profile;
    for (Index i = 0; i < monoid.maps.size(); ++i) {
      auto const&               t = monoid.maps[i];
      std::vector<std::uint8_t> profile;
      for (auto const& [q, g] : d.pairs) {
        profile.push_back(g[t[q]] ? 1 : 0);
      }
      auto [it, fresh] = by_profile.emplace(profile, a.atoms.size());
      if (fresh) {
        Atom z;
        z.member_word         = monoid.words[i];
        z.profile             = profile;
        z.in_reverse_language = b.is_final(t[b.initial()]);
        a.atoms.push_back(std::move(z));
      }
      a.atoms[it->second].members.push_back(t);
      a.atom_of_map.emplace(t, it->second);
    }
    a.initial = 0;  // the identity comes first

    a.transitions.assign(a.atoms.size(), std::vector<Index>(a.alphabet.size()));
    for (Index z = 0; z < a.atoms.size(); ++z) {
      for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        Transformation const ax = letter_map(b, x);
        Index const target = a.atom_of_map.at(then(ax, a.atoms[z].members.front()));
        for (auto const& t : a.atoms[z].members) {
          if (a.atom_of_map.at(then(ax, t)) != target) {
            throw std::logic_error("ambiguous atom transition from atom of "
                                   + a.atoms[z].member_word + " on " + a.alphabet[x]);
          }
        }
        a.transitions[z][x] = target;
      }
    }
    return a;
  }

  Index atom_of_word(AtomSystem const& a, std::string_view w) {
    return a.atom_of_map.at(word_map(a.base, w));
  }

  Dfa atom_language(AtomSystem const& a, Index z) {
    // the Cayley automaton of the base transition monoid
    std::map<Transformation, State> index;
    for (auto const& [t, _] : a.atom_of_map) {
      index.emplace(t, static_cast<State>(index.size()));
    }
    std::vector<std::vector<State>> trans(index.size());
    std::vector<State>              finals;
    State                           initial = 0;
    for (auto const& [t, i] : index) {
      for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        trans[i].push_back(index.at(then(t, letter_map(a.base, x))));
      }
      if (a.atom_of_map.at(t) == z) {
        finals.push_back(i);
      }
      bool identity = true;
      for (State q = 0; q < t.size() && identity; ++q) {
        identity = t[q] == q;
      }
      if (identity) {
        initial = i;
      }
    }
    return minimize(Dfa(a.alphabet, index.size(), initial, finals, trans));
  }

  SynAlgebra dual_monoid(AtomSystem const& a) {
    VarietyTag const tag = make_tag(Variety::set);
    SynAlgebra       s;
    s.tag      = tag;
    s.alphabet = a.alphabet;
    s.unit     = a.initial;
    auto run   = [&a](Index z, Word const& w) {
      for (char c : w) {
        z = a.transitions[z][*a.alphabet.index_of(c)];
      }
      return z;
    };
    for (auto const& z : a.atoms) {
      s.elements.push_back({{}, {}, FreeElem::word(tag, reversed(z.member_word))});
      s.output.push_back({z.in_reverse_language ? 1u : 0u});
    }
    std::size_t const n = a.atoms.size();
    s.mult.assign(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        s.mult[i][j] = run(a.initial, s.elements[i].representative.single_word()
                                          + s.elements[j].representative.single_word());
      }
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
      s.gen.push_back(a.transitions[a.initial][x]);
    }
    // e(u) read off the base transition map of reverse(u), independently of
    // the atom transitions
    auto atoms = std::make_shared<AtomSystem const>(a);
    s.classify = [atoms](FreeElem const& u) {
      return atom_of_word(*atoms, reversed(u.single_word()));
    };
    return s;
  }

  SynAlgebra member_monoid(AtomSystem const& a) {
    VarietyTag const tag = make_tag(Variety::set);
    SynAlgebra       s;
    s.tag      = tag;
    s.alphabet = a.alphabet;
    s.unit     = a.initial;
    for (auto const& z : a.atoms) {
      s.elements.push_back({z.members.front(), {}, FreeElem::word(tag, z.member_word)});
      s.output.push_back({z.in_reverse_language ? 1u : 0u});
    }
    std::size_t const n = a.atoms.size();
    s.mult.assign(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        s.mult[i][j] = a.atom_of_map.at(then(a.atoms[i].members.front(), a.atoms[j].members.front()));
      }
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
      s.gen.push_back(a.atom_of_map.at(letter_map(a.base, x)));
    }
    auto atoms = std::make_shared<AtomSystem const>(a);
    s.classify = [atoms](FreeElem const& u) { return atom_of_word(*atoms, u.single_word()); };
    return s;
  }

  DualityReport verify_syntactic_duality(Dfa const& l0, Limits const& limits) {
    DualityReport report;
    Dfa const     m = l0.is_minimal() ? l0 : minimize(l0);
    auto const    d = build_derivative_system(m);
    auto const    a = compute_atoms(d, limits);
    auto const    syn = syntactic_algebra(make_tag(Variety::set), m, limits);
    report.derivatives = d.pairs.size();
    report.atoms       = a.atoms.size();
    report.syn_size    = syn.size();
    if (report.atoms != report.syn_size) {
      report.witnesses.push_back("atom count " + std::to_string(report.atoms)
                                 + " differs from |Syn L| = " + std::to_string(report.syn_size));
    }

    SynAlgebra const dual = dual_monoid(a);
    report.isomorphic     = iso_as_quotients(dual, syn);
    if (!report.isomorphic) {
      report.witnesses.push_back("dual monoid is not isomorphic to Syn L over the generators");
    }
    report.opposite_isomorphic = iso_as_quotients(member_monoid(a), opposite(syn));
    if (!report.opposite_isomorphic) {
      report.witnesses.push_back(
          "monoid of member words is not isomorphic to the opposite of Syn L");
    }
    auto rec          = verify_recognition(dual, m, 0, 200);
    report.recognizes = rec.passed;
    for (auto& w : rec.counterexamples) {
      report.witnesses.push_back("recognition: " + w);
    }

    // second member word of every atom, by length-lexicographic enumeration
    std::vector<std::vector<Word>> members(a.atoms.size());
    std::size_t                    missing = a.atoms.size();
    std::vector<Word>              layer{Word()};
    std::size_t                    enumerated = 0;
    while (missing > 0 && !layer.empty() && enumerated < (std::size_t(1) << 16)) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        ++enumerated;
        auto& list = members[atom_of_word(a, w)];
        if (list.size() < 2) {
          list.push_back(w);
          if (list.size() == 2) {
            --missing;
          }
        }
        for (char c : a.alphabet.letters()) {
          next.push_back(w + c);
        }
      }
      layer = std::move(next);
    }
    report.well_defined = true;
    auto run            = [&a](Word const& w) {
      Index z = a.initial;
      for (char c : w) {
        z = a.transitions[z][*a.alphabet.index_of(c)];
      }
      return z;
    };
    for (Index i = 0; i < a.atoms.size(); ++i) {
      for (Index j = 0; j < a.atoms.size(); ++j) {
        Word const& wi = members[i].back();
        Word const& wj = members[j].back();
        if (run(reversed(wi) + reversed(wj)) != dual.mult[i][j]) {
          report.well_defined = false;
          report.witnesses.push_back("product of atoms of " + a.atoms[i].member_word + " and "
                                     + a.atoms[j].member_word + " changes with representatives "
                                     + wi + ", " + wj);
        }
      }
    }

    report.transitions_verified = true;
    std::vector<Dfa> langs;
    for (Index z = 0; z < a.atoms.size(); ++z) {
      langs.push_back(atom_language(a, z));
    }
    for (Index z = 0; z < a.atoms.size(); ++z) {
      for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        Index const t = a.transitions[z][x];
        if (!language_included(langs[z], left_derivative(langs[t], a.alphabet[x]))) {
          report.transitions_verified = false;
          report.witnesses.push_back("atom of " + a.atoms[z].member_word + " is not contained in "
                                     + a.alphabet[x] + "^-1 of the atom of "
                                     + a.atoms[t].member_word);
        }
      }
    }
    return report;
  }

  MinimalDualityReport verify_minimal_duality(Dfa const& l0, Limits const& limits) {
    MinimalDualityReport report;
    Dfa const            m = l0.is_minimal() ? l0 : minimize(l0);
    Dfa const            b = minimize(reverse_language(m));
    BaseMonoid const     monoid = base_monoid(b, limits);
    std::size_t const    n      = b.number_of_states();
    report.states               = m.number_of_states();

    // profile of a map over the left derivatives q^{-1}: [t(q) in F]
    std::map<std::vector<bool>, State> atoms;
    std::vector<State>                 atom_of(monoid.maps.size());
    std::vector<bool>                  final_atom;
    for (Index i = 0; i < monoid.maps.size(); ++i) {
      std::vector<bool> p(n);
      for (State q = 0; q < n; ++q) {
        p[q] = b.is_final(monoid.maps[i][q]);
      }
      auto [it, fresh] = atoms.emplace(p, static_cast<State>(atoms.size()));
      if (fresh) {
        final_atom.push_back(p[b.initial()]);
      }
      atom_of[i] = it->second;
    }
    report.atoms = atoms.size();

    // prefix transitions on atoms; accepted inputs are those u with
    // reverse(u) in L^rev
    std::map<Transformation, Index> index;
    for (Index i = 0; i < monoid.maps.size(); ++i) {
      index.emplace(monoid.maps[i], i);
    }
    std::vector<std::vector<State>> trans(atoms.size(), std::vector<State>(b.alphabet().size()));
    std::vector<bool>               assigned(atoms.size(), false);
    for (Index i = 0; i < monoid.maps.size(); ++i) {
      State const z = atom_of[i];
      for (std::size_t x = 0; x < b.alphabet().size(); ++x) {
        State const t = atom_of[index.at(then(letter_map(b, x), monoid.maps[i]))];
        if (assigned[z] && trans[z][x] != t) {
          report.witnesses.push_back("left-derivative atom transition is ambiguous at "
                                     + monoid.words[i]);
        }
        trans[z][x] = t;
      }
      assigned[z] = true;
    }
    std::vector<State> finals;
    for (State z = 0; z < final_atom.size(); ++z) {
      if (final_atom[z]) {
        finals.push_back(z);
      }
    }
    Dfa const dual(b.alphabet(), atoms.size(), atom_of[0], finals, trans);
    report.language_equal = report.witnesses.empty() && language_equal(dual, m);
    if (!report.language_equal) {
      report.witnesses.push_back("automaton on atoms does not accept L");
    }
    if (report.atoms != report.states) {
      report.witnesses.push_back("atom count " + std::to_string(report.atoms)
                                 + " differs from the " + std::to_string(report.states)
                                 + " states of Min L");
    }
    return report;
  }

  std::string to_json(DualityReport const& r) {
    nlohmann::ordered_json j;
    j["derivatives"]         = r.derivatives;
    j["atoms"]               = r.atoms;
    j["synSize"]             = r.syn_size;
    j["isomorphic"]          = r.isomorphic;
    j["oppositeIsomorphic"]  = r.opposite_isomorphic;
    j["wellDefined"]         = r.well_defined;
    j["recognizes"]          = r.recognizes;
    j["transitionsVerified"] = r.transitions_verified;
    j["passed"]              = r.passed();
    j["witnesses"]           = r.witnesses;
    return j.dump();
  }

  std::string to_json(MinimalDualityReport const& r) {
    nlohmann::ordered_json j;
    j["atoms"]         = r.atoms;
    j["states"]        = r.states;
    j["languageEqual"] = r.language_equal;
    j["passed"]        = r.passed();
    j["witnesses"]     = r.witnesses;
    return j.dump();
  }

  std::string to_dot(AtomSystem const& a) {
    std::ostringstream os;
    os << "digraph atoms {\n  rankdir=LR;\n  start [shape=point];\n";
    for (Index z = 0; z < a.atoms.size(); ++z) {
      Word const& w = a.atoms[z].member_word;
      os << "  z" << z << " [label=\"" << (w.empty() ? "ε" : w) << "\", shape="
         << (a.atoms[z].in_reverse_language ? "doublecircle" : "circle") << "];\n";
    }
    os << "  start -> z" << a.initial << ";\n";
    for (Index z = 0; z < a.atoms.size(); ++z) {
      std::map<Index, std::string> labels;
      for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        auto& l = labels[a.transitions[z][x]];
        l += (l.empty() ? "" : ",") + std::string(1, a.alphabet[x]);
      }
      for (auto const& [t, l] : labels) {
        os << "  z" << z << " -> z" << t << " [label=\"" << l << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace synmon
