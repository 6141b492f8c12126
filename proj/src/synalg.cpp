#include "synmon/synalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "synmon/errors.hpp"

namespace synmon {

  namespace {

    using MapIndex = std::map<Transformation, Index>;

    Transformation identity_map(std::size_t n) {
      Transformation t(n);
      for (State q = 0; q < n; ++q) {
        t[q] = q;
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

    Transformation pointwise_join(DAutomaton const& a, Transformation const& f, Transformation const& g) {
      Transformation t(f.size());
      for (std::size_t q = 0; q < f.size(); ++q) {
        t[q] = a.join[f[q]][g[q]];
      }
      return t;
    }

    std::size_t letter_index(Alphabet const& alphabet, char c) {
      auto x = alphabet.index_of(c);
      if (!x) {
        throw std::invalid_argument(std::string("letter '") + c + "' outside alphabet "
                                    + alphabet.letters());
      }
      return *x;
    }

    Transformation word_map(DAutomaton const& a, Word const& w) {
      Transformation t = identity_map(a.size);
      for (char c : w) {
        auto const& d = a.delta[letter_index(a.alphabet, c)];
        for (auto& q : t) {
          q = d[q];
        }
      }
      return t;
    }

    // The endomap delta_u for any element u of X*.
    Transformation element_map(DAutomaton const& a, FreeElem const& u) {
      switch (a.tag.variety) {
        case Variety::set:
        case Variety::pos:
          return word_map(a, u.single_word());
        case Variety::pset:
          return u.is_bottom() ? Transformation(a.size, a.bottom) : word_map(a, u.single_word());
        case Variety::inv: {
          Transformation t = word_map(a, u.single_word());
          if (u.is_complemented()) {
            for (auto& q : t) {
              q = a.involution[q];
            }
          }
          return t;
        }
        case Variety::jsl: {
          Transformation t(a.size, a.zero);
          for (auto const& [w, _] : u.terms()) {
            t = pointwise_join(a, t, word_map(a, w));
          }
          return t;
        }
        case Variety::vect:
          break;
      }
      throw std::logic_error("element_map on a linear automaton");
    }

    FreeElem letter_elem(VarietyTag tag, char c) {
      return FreeElem::word(tag, Word(1, c));
    }

    fp::Matrix word_matrix(fp::Field const& field, LinearAutomaton const& l, Alphabet const& alphabet, Word const& w) {
      fp::Matrix m = fp::Matrix::identity(l.dimension);
      for (char c : w) {
        m = fp::multiply(field, m, l.transitions[letter_index(alphabet, c)]);
      }
      return m;
    }

    SynAlgebra linear_algebra(DAutomaton const& a, Limits const& limits) {
      LinearAutomaton const& l = a.linear;
      fp::Field const        field(l.prime);
      std::size_t const      d = l.dimension;

      SynAlgebra s;
      s.tag          = a.tag;
      s.alphabet     = a.alphabet;
      s.linear.prime = l.prime;

      auto                    basis = std::make_shared<fp::Basis>(field, d * d);
      std::vector<fp::Matrix> mats;
      std::vector<Word>       reps;
      if (d > 0) {
        auto id = fp::Matrix::identity(d);
        basis->insert(id.flat());
        mats.push_back(id);
        reps.emplace_back();
      }
      for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
          fp::Matrix p = fp::multiply(field, mats[i], l.transitions[x]);
          if (basis->insert(p.flat())) {
            if (mats.size() >= limits.max_elements) {
              throw CapacityError("algebra dimension exceeds the element limit", mats.size() + 1);
            }
            mats.push_back(std::move(p));
            reps.push_back(reps[i] + a.alphabet[x]);
          }
        }
      }
      std::size_t const k = mats.size();
      s.linear.dimension  = k;
      auto coords         = [&](fp::Matrix const& m) {
        if (d == 0) {
          return fp::Vector();
        }
        auto c = basis->coordinates(m.flat());
        if (!c) {
          throw std::logic_error("matrix outside the span of the transition algebra");
        }
        return *c;
      };
      s.linear.product.assign(k, std::vector<fp::Vector>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          s.linear.product[i][j] = coords(fp::multiply(field, mats[i], mats[j]));
        }
      }
      s.linear.unit = coords(fp::Matrix::identity(d));
      for (auto const& m : l.transitions) {
        s.linear.generators.push_back(coords(m));
      }
      for (std::size_t i = 0; i < k; ++i) {
        s.linear.output.push_back(
            fp::dot(field, fp::multiply(field, l.initial, mats[i]), l.output));
        s.elements.push_back({{}, mats[i], FreeElem::word(a.tag, reps[i])});
      }
      auto automaton = std::make_shared<DAutomaton const>(a);
      s.coordinates  = [automaton, basis](FreeElem const& u) {
        LinearAutomaton const& l = automaton->linear;
        fp::Field const        field(l.prime);
        if (l.dimension == 0) {
          return fp::Vector();
        }
        fp::Matrix sum(l.dimension, l.dimension);
        for (auto const& [w, c] : u.terms()) {
          sum = fp::add(field, sum,
                        fp::scale(field, c, word_matrix(field, l, automaton->alphabet, w)));
        }
        return *basis->coordinates(sum.flat());
      };
      return s;
    }

    std::string show_vector(fp::Vector const& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
      }
      return s + "]";
    }

    void require_same_shape(SynAlgebra const& s1, SynAlgebra const& s2) {
      if (!(s1.tag == s2.tag)) {
        throw TagMismatch("cannot compare algebras of varieties " + to_string(s1.tag) + " and "
                          + to_string(s2.tag));
      }
      if (!(s1.alphabet == s2.alphabet)) {
        throw AlphabetMismatch("alphabets " + s1.alphabet.letters() + " and "
                               + s2.alphabet.letters() + " differ");
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  SynAlgebra transition_monoid(DAutomaton const& a, Limits const& limits) {
    if (a.is_linear()) {
      return linear_algebra(a, limits);
    }
    SynAlgebra s;
    s.tag      = a.tag;
    s.alphabet = a.alphabet;

    auto index  = std::make_shared<MapIndex>();
    auto insert = [&](Transformation t, FreeElem rep) -> Index {
      auto it = index->find(t);
      if (it != index->end()) {
        return it->second;
      }
      if (s.elements.size() >= limits.max_elements) {
        throw CapacityError("transition monoid exceeds the element limit",
                            s.elements.size() + 1);
      }
      Index const i = s.elements.size();
      index->emplace(t, i);
      s.elements.push_back({std::move(t), {}, std::move(rep)});
      return i;
    };

    // Breadth-first in letter order, so the first witness found is the
    // length-lexicographically least one.
    insert(identity_map(a.size), FreeElem::unit(a.tag));
    for (Index i = 0; i < s.elements.size(); ++i) {
      for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        auto const& e = s.elements[i];
        insert(then(e.map, a.delta[x]),
               free_mul(a.tag, e.representative, letter_elem(a.tag, a.alphabet[x])));
      }
    }
    switch (a.tag.variety) {
      case Variety::inv: {
        std::size_t const plain = s.elements.size();
        for (Index i = 0; i < plain; ++i) {
          Transformation t = s.elements[i].map;
          for (auto& q : t) {
            q = a.involution[q];
          }
          insert(std::move(t), free_complement(s.elements[i].representative));
        }
        break;
      }
      case Variety::pset:
        insert(Transformation(a.size, a.bottom), FreeElem::bottom());
        break;
      case Variety::jsl:
        insert(Transformation(a.size, a.zero), FreeElem::word_set({}));
        for (Index i = 0; i < s.elements.size(); ++i) {
          for (Index j = 0; j < i; ++j) {
            insert(pointwise_join(a, s.elements[j].map, s.elements[i].map),
                   free_add(s.elements[j].representative, s.elements[i].representative));
          }
        }
        break;
      default:
        break;
    }

    std::size_t const n      = s.elements.size();
    auto              lookup = [&index](Transformation const& t) {
      auto it = index->find(t);
      if (it == index->end()) {
        throw std::logic_error("transition monoid is not closed");
      }
      return it->second;
    };
    s.unit = 0;
    s.mult.assign(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        s.mult[i][j] = lookup(then(s.elements[i].map, s.elements[j].map));
      }
    }
    for (auto const& d : a.delta) {
      s.gen.push_back(lookup(d));
    }
    for (auto const& e : s.elements) {
      s.output.push_back({a.output[e.map[a.initial]]});
    }
    switch (a.tag.variety) {
      case Variety::pos:
        s.leq.assign(n, std::vector<bool>(n));
        for (Index i = 0; i < n; ++i) {
          for (Index j = 0; j < n; ++j) {
            bool le = true;
            for (State q = 0; q < a.size && le; ++q) {
              le = a.leq[s.elements[i].map[q]][s.elements[j].map[q]];
            }
            s.leq[i][j] = le;
          }
        }
        break;
      case Variety::pset:
        s.zero = lookup(Transformation(a.size, a.bottom));
        break;
      case Variety::inv:
        for (Index i = 0; i < n; ++i) {
          Transformation t = s.elements[i].map;
          for (auto& q : t) {
            q = a.involution[q];
          }
          s.involution.push_back(lookup(t));
        }
        break;
      case Variety::jsl:
        s.zero = lookup(Transformation(a.size, a.zero));
        s.add.assign(n, std::vector<Index>(n));
        for (Index i = 0; i < n; ++i) {
          for (Index j = 0; j < n; ++j) {
            s.add[i][j] = lookup(pointwise_join(a, s.elements[i].map, s.elements[j].map));
          }
        }
        break;
      default:
        break;
    }
    auto automaton = std::make_shared<DAutomaton const>(a);
    s.classify     = [automaton, index](FreeElem const& u) {
      auto it = index->find(element_map(*automaton, u));
      if (it == index->end()) {
        throw std::logic_error("element outside the transition monoid");
      }
      return it->second;
    };
    return s;
  }

  SynAlgebra syntactic_algebra(VarietyTag tag, Dfa const& l0, Limits const& limits) {
    Dfa const  m = l0.is_minimal() ? l0 : minimize(l0);
    SynAlgebra s = transition_monoid(minimal_dautomaton(tag, m, limits), limits);
    if (s.is_linear()) {
      for (std::size_t i = 0; i < s.elements.size(); ++i) {
        s.linear.output[i] = eval_language(tag, m, s.elements[i].representative).value;
      }
    } else {
      for (std::size_t i = 0; i < s.elements.size(); ++i) {
        s.output[i] = eval_language(tag, m, s.elements[i].representative);
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  fp::Vector linear_mult(SynAlgebra const& s, fp::Vector const& x, fp::Vector const& y) {
    fp::Field const   field(s.linear.prime);
    std::size_t const k = s.linear.dimension;
    fp::Vector        r(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (y[j] == 0) {
          continue;
        }
        fp::Scalar const c = field.mul(x[i], y[j]);
        auto const&      p = s.linear.product[i][j];
        for (std::size_t t = 0; t < k; ++t) {
          r[t] = field.add(r[t], field.mul(c, p[t]));
        }
      }
    }
    return r;
  }

  Index table_class_of(SynAlgebra const& s, FreeElem const& u) {
    if (!(u.tag() == s.tag)) {
      throw TagMismatch("element of " + to_string(u.tag()) + " in an algebra of "
                        + to_string(s.tag));
    }
    auto fold = [&s](Word const& w) {
      Index i = s.unit;
      for (char c : w) {
        i = s.mult[i][s.gen[letter_index(s.alphabet, c)]];
      }
      return i;
    };
    switch (s.tag.variety) {
      case Variety::set:
      case Variety::pos:
        return fold(u.single_word());
      case Variety::pset:
        return u.is_bottom() ? s.zero : fold(u.single_word());
      case Variety::inv: {
        Index i = fold(u.single_word());
        return u.is_complemented() ? s.involution[i] : i;
      }
      case Variety::jsl: {
        Index i = s.zero;
        for (auto const& [w, _] : u.terms()) {
          i = s.add[i][fold(w)];
        }
        return i;
      }
      case Variety::vect:
        break;
    }
    throw std::invalid_argument("table_class_of on a linear algebra");
  }

  fp::Vector table_coordinates_of(SynAlgebra const& s, FreeElem const& u) {
    if (!(u.tag() == s.tag)) {
      throw TagMismatch("element of " + to_string(u.tag()) + " in an algebra of "
                        + to_string(s.tag));
    }
    fp::Field const field(s.linear.prime);
    fp::Vector      r(s.linear.dimension, 0);
    for (auto const& [w, c] : u.terms()) {
      fp::Vector x = s.linear.unit;
      for (char ch : w) {
        x = linear_mult(s, x, s.linear.generators[letter_index(s.alphabet, ch)]);
      }
      for (std::size_t t = 0; t < r.size(); ++t) {
        r[t] = field.add(r[t], field.mul(c, x[t]));
      }
    }
    return r;
  }

  Index class_of(SynAlgebra const& s, FreeElem const& u) {
    if (s.is_linear()) {
      throw std::invalid_argument("class_of on a linear algebra; use coordinates_of");
    }
    if (!(u.tag() == s.tag)) {
      throw TagMismatch("element of " + to_string(u.tag()) + " in an algebra of "
                        + to_string(s.tag));
    }
    return s.classify ? s.classify(u) : table_class_of(s, u);
  }

  fp::Vector coordinates_of(SynAlgebra const& s, FreeElem const& u) {
    if (!s.is_linear()) {
      throw std::invalid_argument("coordinates_of on a finite algebra; use class_of");
    }
    if (!(u.tag() == s.tag)) {
      throw TagMismatch("element of " + to_string(u.tag()) + " in an algebra of "
                        + to_string(s.tag));
    }
    return s.coordinates ? s.coordinates(u) : table_coordinates_of(s, u);
  }

  OutputValue algebra_output(SynAlgebra const& s, FreeElem const& u) {
    if (s.is_linear()) {
      return {fp::dot(fp::Field(s.linear.prime), coordinates_of(s, u), s.linear.output)};
    }
    return s.output[class_of(s, u)];
  }

  std::optional<Index> multiplicative_zero(SynAlgebra const& s) {
    for (Index z = 0; z < s.mult.size(); ++z) {
      bool ok = true;
      for (Index m = 0; m < s.mult.size() && ok; ++m) {
        ok = s.mult[z][m] == z && s.mult[m][z] == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  FreeElem random_free_elem(VarietyTag       tag,
                            Alphabet const&  alphabet,
                            std::mt19937_64& rng,
                            std::size_t      max_length) {
    auto random_word = [&] {
      std::uniform_int_distribution<std::size_t> length(0, max_length);
      std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
      Word                                       w(length(rng), ' ');
      for (auto& c : w) {
        c = alphabet[letter(rng)];
      }
      return w;
    };
    switch (tag.variety) {
      case Variety::set:
      case Variety::pos:
        return FreeElem::word(tag, random_word());
      case Variety::pset:
        if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) {
          return FreeElem::bottom();
        }
        return FreeElem::word(tag, random_word());
      case Variety::inv: {
        Word w = random_word();
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
          return FreeElem::complemented(std::move(w));
        }
        return FreeElem::word(tag, std::move(w));
      }
      case Variety::jsl: {
        std::vector<Word> words(std::uniform_int_distribution<std::size_t>(0, 3)(rng));
        for (auto& w : words) {
          w = random_word();
        }
        return FreeElem::word_set(std::move(words));
      }
      case Variety::vect: {
        std::vector<std::pair<Word, std::int64_t>> terms(
            std::uniform_int_distribution<std::size_t>(1, 3)(rng));
        std::uniform_int_distribution<std::int64_t> coeff(1, tag.prime - 1);
        for (auto& [w, c] : terms) {
          w = random_word();
          c = coeff(rng);
        }
        return FreeElem::polynomial(tag.prime, terms);
      }
    }
    throw std::logic_error("unreachable");
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  RecognitionReport verify_recognition(SynAlgebra const& s,
                                       Dfa const&        l0,
                                       std::uint64_t     seed,
                                       std::size_t       samples) {
    if (!(l0.alphabet() == s.alphabet)) {
      throw AlphabetMismatch("automaton alphabet " + l0.alphabet().letters()
                             + " differs from algebra alphabet " + s.alphabet.letters());
    }
    RecognitionReport report;
    auto              fail = [&report](std::string msg) {
      report.passed = false;
      if (report.counterexamples.size() < 20) {
        report.counterexamples.push_back(std::move(msg));
      }
    };
    VarietyTag const tag = s.tag;
    auto const&      el  = s.elements;
    auto             rep = [&el](Index i) -> FreeElem const& { return el[i].representative; };

    if (s.is_linear()) {
      auto check = [&](fp::Vector const& expected, FreeElem const& u, std::string const& what) {
        ++report.checked;
        auto got = coordinates_of(s, u);
        if (got != expected) {
          fail(what + ": table gives " + show_vector(expected) + " but e(" + to_string(u)
               + ") = " + show_vector(got));
        }
      };
      check(s.linear.unit, FreeElem::unit(tag), "unit");
      for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
        check(s.linear.generators[x], letter_elem(tag, s.alphabet[x]),
              std::string("generator ") + s.alphabet[x]);
      }
      for (Index i = 0; i < el.size(); ++i) {
        for (Index j = 0; j < el.size(); ++j) {
          check(s.linear.product[i][j], free_mul(tag, rep(i), rep(j)),
                "product " + element_name(s, i) + " * " + element_name(s, j));
        }
      }
    } else {
      auto check = [&](Index expected, FreeElem const& u, std::string const& what) {
        ++report.checked;
        Index got = class_of(s, u);
        if (got != expected) {
          fail(what + ": table gives " + element_name(s, expected) + " but e(" + to_string(u)
               + ") = " + element_name(s, got));
        }
      };
      check(s.unit, FreeElem::unit(tag), "unit");
      for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
        check(s.gen[x], letter_elem(tag, s.alphabet[x]), std::string("generator ") + s.alphabet[x]);
      }
      for (Index i = 0; i < el.size(); ++i) {
        check(i, rep(i), "representative of " + element_name(s, i));
        for (Index j = 0; j < el.size(); ++j) {
          check(s.mult[i][j], free_mul(tag, rep(i), rep(j)),
                "product " + element_name(s, i) + " * " + element_name(s, j));
        }
      }
      switch (tag.variety) {
        case Variety::pset:
          check(s.zero, FreeElem::bottom(), "zero");
          break;
        case Variety::inv:
          for (Index i = 0; i < el.size(); ++i) {
            check(s.involution[i], free_complement(rep(i)), "complement of " + element_name(s, i));
          }
          break;
        case Variety::jsl:
          check(s.zero, FreeElem::word_set({}), "zero");
          for (Index i = 0; i < el.size(); ++i) {
            for (Index j = 0; j < el.size(); ++j) {
              check(s.add[i][j], free_add(rep(i), rep(j)),
                    "join " + element_name(s, i) + " + " + element_name(s, j));
            }
          }
          break;
        default:
          break;
      }
    }

    auto check_output = [&](FreeElem const& u) {
      ++report.checked;
      OutputValue const expected = eval_language(tag, l0, u);
      OutputValue const got      = algebra_output(s, u);
      if (got != expected) {
        fail("f(e(" + to_string(u) + ")) = " + to_string(got, tag) + " but L gives "
             + to_string(expected, tag));
      }
    };
    for (Index i = 0; i < el.size(); ++i) {
      check_output(rep(i));
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      check_output(random_free_elem(tag, s.alphabet, rng));
    }
    return report;
  }

  std::vector<std::string> algebra_law_violations(SynAlgebra const& s) {
    std::vector<std::string> out;
    auto                     fail = [&out](std::string msg) {
      if (out.size() < 50) {
        out.push_back(std::move(msg));
      }
    };
    auto name = [&s](Index i) { return element_name(s, i); };

    if (s.is_linear()) {
      auto const&       ls = s.linear;
      std::size_t const k  = ls.dimension;
      fp::Field const   field(ls.prime);
      auto              basis = [k](std::size_t i) {
        fp::Vector v(k, 0);
        v[i] = 1;
        return v;
      };
      for (std::size_t i = 0; i < k; ++i) {
        if (linear_mult(s, ls.unit, basis(i)) != basis(i)
            || linear_mult(s, basis(i), ls.unit) != basis(i)) {
          fail("unit law fails at " + name(i));
        }
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t t = 0; t < k; ++t) {
            if (linear_mult(s, ls.product[i][j], basis(t))
                != linear_mult(s, basis(i), ls.product[j][t])) {
              fail("associativity fails at (" + name(i) + ", " + name(j) + ", " + name(t) + ")");
            }
          }
        }
      }
      fp::Basis span(field, k);
      if (k > 0 && !fp::is_zero(ls.unit)) {
        span.insert(ls.unit);
      }
      for (std::size_t i = 0; i < span.rank(); ++i) {
        for (auto const& g : ls.generators) {
          span.insert(linear_mult(s, span.vector(i), g));
        }
      }
      if (span.rank() != k) {
        fail("generators span only " + std::to_string(span.rank()) + " of "
             + std::to_string(k) + " dimensions");
      }
      return out;
    }

    std::size_t const n = s.elements.size();
    if (s.mult.size() != n || s.output.size() != n) {
      fail("tables do not match the number of elements");
      return out;
    }
    for (Index i = 0; i < n; ++i) {
      if (s.mult[s.unit][i] != i || s.mult[i][s.unit] != i) {
        fail("unit law fails at " + name(i));
      }
      for (Index j = 0; j < n; ++j) {
        Index const ij = s.mult[i][j];
        for (Index k = 0; k < n; ++k) {
          if (s.mult[ij][k] != s.mult[i][s.mult[j][k]]) {
            fail("associativity fails at (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
          }
        }
      }
    }
    switch (s.tag.variety) {
      case Variety::pos:
        for (Index i = 0; i < n; ++i) {
          if (!s.leq[i][i]) {
            fail("order not reflexive at " + name(i));
          }
          for (Index j = 0; j < n; ++j) {
            if (!s.leq[i][j]) {
              continue;
            }
            if (i != j && s.leq[j][i]) {
              fail("order not antisymmetric at " + name(i) + ", " + name(j));
            }
            if (s.output[i] > s.output[j]) {
              fail("f not monotone at " + name(i) + " <= " + name(j));
            }
            for (Index k = 0; k < n; ++k) {
              if (s.leq[j][k] && !s.leq[i][k]) {
                fail("order not transitive at " + name(i) + ", " + name(j) + ", " + name(k));
              }
              if (!s.leq[s.mult[i][k]][s.mult[j][k]] || !s.leq[s.mult[k][i]][s.mult[k][j]]) {
                fail("multiplication not monotone at " + name(i) + " <= " + name(j) + " by "
                     + name(k));
              }
            }
          }
        }
        break;
      case Variety::pset:
        if (s.output[s.zero].value != 0) {
          fail("f(zero) is not bottom");
        }
        for (Index i = 0; i < n; ++i) {
          if (s.mult[i][s.zero] != s.zero || s.mult[s.zero][i] != s.zero) {
            fail("zero not absorbing at " + name(i));
          }
        }
        break;
      case Variety::inv:
        for (Index i = 0; i < n; ++i) {
          Index const c = s.involution[i];
          if (s.involution[c] != i) {
            fail("involution not involutive at " + name(i));
          }
          if (s.output[c].value != 1 - s.output[i].value) {
            fail("f(~m) != 1 - f(m) at " + name(i));
          }
          for (Index j = 0; j < n; ++j) {
            Index const prod = s.involution[s.mult[i][j]];
            if (s.mult[c][j] != prod || s.mult[i][s.involution[j]] != prod) {
              fail("complement does not commute with multiplication at " + name(i) + ", "
                   + name(j));
            }
          }
        }
        break;
      case Variety::jsl:
        if (s.output[s.zero].value != 0) {
          fail("f(0) != 0");
        }
        for (Index i = 0; i < n; ++i) {
          if (s.add[i][i] != i || s.add[i][s.zero] != i) {
            fail("join not idempotent or 0 not neutral at " + name(i));
          }
          if (s.mult[i][s.zero] != s.zero || s.mult[s.zero][i] != s.zero) {
            fail("0 not absorbing at " + name(i));
          }
          for (Index j = 0; j < n; ++j) {
            Index const ij = s.add[i][j];
            if (ij != s.add[j][i]) {
              fail("join not commutative at " + name(i) + ", " + name(j));
            }
            if (s.output[ij].value != (s.output[i].value | s.output[j].value)) {
              fail("f not join-preserving (prime upset) at " + name(i) + ", " + name(j));
            }
            for (Index k = 0; k < n; ++k) {
              if (s.add[ij][k] != s.add[i][s.add[j][k]]) {
                fail("join not associative at (" + name(i) + ", " + name(j) + ", " + name(k)
                     + ")");
              }
              if (s.mult[k][ij] != s.add[s.mult[k][i]][s.mult[k][j]]
                  || s.mult[ij][k] != s.add[s.mult[i][k]][s.mult[j][k]]) {
                fail("multiplication does not distribute at (" + name(k) + ", " + name(i) + "+"
                     + name(j) + ")");
              }
            }
          }
        }
        break;
      default:
        break;
    }

    // generation from the letters under the operations of the variety
    std::vector<bool>  seen(n, false);
    std::vector<Index> order;
    auto               visit = [&](Index i) {
      if (!seen[i]) {
        seen[i] = true;
        order.push_back(i);
      }
    };
    visit(s.unit);
    if (s.tag.variety == Variety::pset || s.tag.variety == Variety::jsl) {
      visit(s.zero);
    }
    for (std::size_t p = 0; p < order.size(); ++p) {
      Index const i = order[p];
      for (Index g : s.gen) {
        visit(s.mult[i][g]);
      }
      if (s.tag.variety == Variety::inv) {
        visit(s.involution[i]);
      }
      if (s.tag.variety == Variety::jsl) {
        for (std::size_t q = 0; q <= p; ++q) {
          visit(s.add[i][order[q]]);
        }
      }
    }
    if (order.size() != n) {
      fail("generators reach only " + std::to_string(order.size()) + " of "
           + std::to_string(n) + " elements");
    }
    return out;
  }

  bool iso_as_quotients(SynAlgebra const& s1, SynAlgebra const& s2) {
    require_same_shape(s1, s2);
    if (s1.is_linear()) {
      std::size_t const k1 = s1.linear.dimension, k2 = s2.linear.dimension;
      if (k1 != k2) {
        return false;
      }
      fp::Field const         field(s1.linear.prime);
      fp::Basis               joint(field, k1 + k2), left(field, k1), right(field, k2);
      std::vector<fp::Vector> firsts, seconds;
      auto                    visit = [&](fp::Vector x, fp::Vector y) {
        fp::Vector both = x;
        both.insert(both.end(), y.begin(), y.end());
        if (joint.insert(both)) {
          left.insert(x);
          right.insert(y);
          firsts.push_back(std::move(x));
          seconds.push_back(std::move(y));
        }
      };
      if (k1 > 0) {
        visit(s1.linear.unit, s2.linear.unit);
      }
      for (std::size_t i = 0; i < firsts.size(); ++i) {
        for (std::size_t x = 0; x < s1.alphabet.size(); ++x) {
          visit(linear_mult(s1, firsts[i], s1.linear.generators[x]),
                linear_mult(s2, seconds[i], s2.linear.generators[x]));
        }
      }
      return joint.rank() == k1 && left.rank() == k1 && right.rank() == k2;
    }

    std::size_t const n1 = s1.elements.size(), n2 = s2.elements.size();
    if (n1 != n2) {
      return false;
    }
    Index const        none = Index(-1);
    std::vector<Index> f12(n1, none), f21(n2, none);
    std::vector<std::pair<Index, Index>> pairs;
    bool                                 ok    = true;
    auto                                 visit = [&](Index x, Index y) {
      if (f12[x] == none && f21[y] == none) {
        f12[x] = y;
        f21[y] = x;
        pairs.emplace_back(x, y);
      } else if (f12[x] != y || f21[y] != x) {
        ok = false;
      }
    };
    visit(s1.unit, s2.unit);
    if (s1.tag.variety == Variety::pset || s1.tag.variety == Variety::jsl) {
      visit(s1.zero, s2.zero);
    }
    for (std::size_t p = 0; p < pairs.size() && ok; ++p) {
      auto const [x, y] = pairs[p];
      for (std::size_t a = 0; a < s1.alphabet.size(); ++a) {
        visit(s1.mult[x][s1.gen[a]], s2.mult[y][s2.gen[a]]);
      }
      if (s1.tag.variety == Variety::inv) {
        visit(s1.involution[x], s2.involution[y]);
      }
      if (s1.tag.variety == Variety::jsl) {
        for (std::size_t q = 0; q <= p; ++q) {
          visit(s1.add[x][pairs[q].first], s2.add[y][pairs[q].second]);
        }
      }
    }
    if (!ok || pairs.size() != n1) {
      return false;
    }
    if (s1.tag.variety == Variety::pos) {
      for (Index i = 0; i < n1; ++i) {
        for (Index j = 0; j < n1; ++j) {
          if (s1.leq[i][j] != s2.leq[f12[i]][f12[j]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  SynAlgebra opposite(SynAlgebra const& s) {
    SynAlgebra o = s;
    for (auto& e : o.elements) {
      e.representative = free_reverse(e.representative);
    }
    if (s.is_linear()) {
      auto const k = s.linear.dimension;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          o.linear.product[i][j] = s.linear.product[j][i];
        }
      }
      if (s.coordinates) {
        o.coordinates = [f = s.coordinates](FreeElem const& u) { return f(free_reverse(u)); };
      }
      return o;
    }
    for (Index i = 0; i < s.mult.size(); ++i) {
      for (Index j = 0; j < s.mult.size(); ++j) {
        o.mult[i][j] = s.mult[j][i];
      }
    }
    if (s.classify) {
      o.classify = [f = s.classify](FreeElem const& u) { return f(free_reverse(u)); };
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  std::string element_name(SynAlgebra const& s, Index i) {
    if (i >= s.elements.size()) {
      return "#" + std::to_string(i);
    }
    return to_string(s.elements[i].representative);
  }

  namespace {
    std::string pad(std::string const& s, std::size_t width) {
      // ε is two bytes but one column
      std::size_t cols = 0;
      for (unsigned char c : s) {
        cols += (c & 0xC0) != 0x80;
      }
      return s + std::string(width > cols ? width - cols : 0, ' ');
    }

    std::string polynomial_of(SynAlgebra const& s, fp::Vector const& coords) {
      std::string out;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) {
          continue;
        }
        out += out.empty() ? "" : " + ";
        if (coords[i] != 1) {
          out += std::to_string(coords[i]) + "*";
        }
        out += "[" + element_name(s, i) + "]";
      }
      return out.empty() ? "0" : out;
    }

    void print_table(std::ostream&             os,
                     SynAlgebra const&         s,
                     Table const&              t,
                     std::string const&        corner) {
      std::size_t width = corner.size() + 1;
      for (Index i = 0; i < s.elements.size(); ++i) {
        width = std::max(width, element_name(s, i).size() + 1);
      }
      os << pad(corner, width);
      for (Index j = 0; j < t.size(); ++j) {
        os << pad(element_name(s, j), width);
      }
      os << "\n";
      for (Index i = 0; i < t.size(); ++i) {
        os << pad(element_name(s, i), width);
        for (Index j = 0; j < t.size(); ++j) {
          os << pad(element_name(s, t[i][j]), width);
        }
        os << "\n";
      }
    }
  }  // namespace

  std::string to_table(SynAlgebra const& s) {
    std::ostringstream os;
    os << "variety " << to_string(s.tag) << ", alphabet " << s.alphabet.letters();
    if (s.is_linear()) {
      auto const& ls = s.linear;
      os << ", dimension " << ls.dimension << "\n";
      os << "basis (representative, f):\n";
      for (std::size_t i = 0; i < ls.dimension; ++i) {
        os << "  b" << i << " = [" << element_name(s, i) << "]  f=" << ls.output[i] << "\n";
      }
      os << "unit = " << polynomial_of(s, ls.unit) << "\n";
      for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
        os << "[" << s.alphabet[x] << "] = " << polynomial_of(s, ls.generators[x]) << "\n";
      }
      os << "products:\n";
      for (std::size_t i = 0; i < ls.dimension; ++i) {
        for (std::size_t j = 0; j < ls.dimension; ++j) {
          os << "  [" << element_name(s, i) << "]*[" << element_name(s, j)
             << "] = " << polynomial_of(s, ls.product[i][j]) << "\n";
        }
      }
      return os.str();
    }
    auto zero = multiplicative_zero(s);
    os << ", " << s.elements.size() << " elements\n";
    os << "unit: " << element_name(s, s.unit);
    if (zero) {
      os << "   zero: " << element_name(s, *zero);
    }
    if (s.tag.variety == Variety::jsl) {
      os << "   additive zero: " << element_name(s, s.zero);
    }
    os << "\ngenerators:";
    for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
      os << " " << s.alphabet[x] << "->" << element_name(s, s.gen[x]);
    }
    os << "\nelements (representative, f):\n";
    for (Index i = 0; i < s.elements.size(); ++i) {
      os << "  " << pad(element_name(s, i), 8) << " " << to_string(s.output[i], s.tag);
      if (i == s.unit) {
        os << "  (unit)";
      }
      if (zero && i == *zero) {
        os << "  (zero)";
      }
      if (s.tag.variety == Variety::inv) {
        os << "  ~ = " << element_name(s, s.involution[i]);
      }
      os << "\n";
    }
    os << "multiplication (row * column):\n";
    print_table(os, s, s.mult, "*");
    if (s.tag.variety == Variety::pos) {
      os << "order:";
      for (Index i = 0; i < s.elements.size(); ++i) {
        for (Index j = 0; j < s.elements.size(); ++j) {
          if (i != j && s.leq[i][j]) {
            os << " " << element_name(s, i) << " < " << element_name(s, j) << ";";
          }
        }
      }
      os << "\n";
    }
    if (s.tag.variety == Variety::jsl) {
      os << "join:\n";
      print_table(os, s, s.add, "+");
    }
    return os.str();
  }

  std::string to_json(SynAlgebra const& s) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["variety"]  = std::string(variety_name(s.tag.variety));
    if (s.is_linear()) {
      j["prime"] = s.linear.prime;
    }
    j["alphabet"] = s.alphabet.letters();
    j["size"]     = s.size();
    auto& elems   = j["elements"];
    elems         = ordered_json::array();
    for (Index i = 0; i < s.elements.size(); ++i) {
      ordered_json e;
      e["representative"] = element_name(s, i);
      if (s.is_linear()) {
        std::vector<std::vector<fp::Scalar>> m;
        for (std::size_t r = 0; r < s.elements[i].matrix.rows(); ++r) {
          auto row = s.elements[i].matrix.row(r);
          m.emplace_back(row.begin(), row.end());
        }
        e["matrix"] = m;
        e["output"] = s.linear.output[i];
      } else {
        e["output"] = s.output[i].value;
        if (!s.elements[i].map.empty()) {
          e["map"] = s.elements[i].map;
        }
      }
      elems.push_back(std::move(e));
    }
    auto& gens = j["generators"];
    gens       = ordered_json::object();
    if (s.is_linear()) {
      for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
        gens[std::string(1, s.alphabet[x])] = s.linear.generators[x];
      }
      j["unit"]    = s.linear.unit;
      j["product"] = s.linear.product;
      return j.dump();
    }
    for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
      gens[std::string(1, s.alphabet[x])] = s.gen[x];
    }
    j["unit"] = s.unit;
    if (auto z = multiplicative_zero(s)) {
      j["zero"] = *z;
    } else {
      j["zero"] = nullptr;
    }
    j["mult"] = s.mult;
    switch (s.tag.variety) {
      case Variety::pos: {
        auto& order = j["order"];
        order       = ordered_json::array();
        for (Index a = 0; a < s.elements.size(); ++a) {
          for (Index b = 0; b < s.elements.size(); ++b) {
            if (a != b && s.leq[a][b]) {
              order.push_back({a, b});
            }
          }
        }
        break;
      }
      case Variety::pset:
        j["bottom"] = s.zero;
        break;
      case Variety::inv:
        j["involution"] = s.involution;
        break;
      case Variety::jsl:
        j["additiveZero"] = s.zero;
        j["add"]          = s.add;
        break;
      default:
        break;
    }
    return j.dump();
  }

  std::string to_csv(SynAlgebra const& s) {
    std::ostringstream os;
    auto quote = [](std::string const& x) {
      if (x.find_first_of(",\"") == std::string::npos) {
        return x;
      }
      std::string q = "\"";
      for (char c : x) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return q + "\"";
    };
    if (s.is_linear()) {
      os << "left,right";
      for (std::size_t k = 0; k < s.linear.dimension; ++k) {
        os << ",c" << k;
      }
      os << "\n";
      for (std::size_t i = 0; i < s.linear.dimension; ++i) {
        for (std::size_t j = 0; j < s.linear.dimension; ++j) {
          os << quote(element_name(s, i)) << "," << quote(element_name(s, j));
          for (auto c : s.linear.product[i][j]) {
            os << "," << c;
          }
          os << "\n";
        }
      }
      return os.str();
    }
    os << "*";
    for (Index j = 0; j < s.elements.size(); ++j) {
      os << "," << quote(element_name(s, j));
    }
    os << "\n";
    for (Index i = 0; i < s.elements.size(); ++i) {
      os << quote(element_name(s, i));
      for (Index j = 0; j < s.elements.size(); ++j) {
        os << "," << quote(element_name(s, s.mult[i][j]));
      }
      os << "\n";
    }
    return os.str();
  }

  std::string to_dot(SynAlgebra const& s) {
    std::ostringstream os;
    os << "digraph syn_" << variety_name(s.tag.variety) << " {\n";
    for (Index i = 0; i < s.elements.size(); ++i) {
      os << "  m" << i << " [label=\"" << element_name(s, i) << "\"";
      if (!s.is_linear() && i == s.unit) {
        os << ", shape=box";
      }
      os << "];\n";
    }
    for (std::size_t x = 0; x < s.alphabet.size(); ++x) {
      for (Index i = 0; i < s.elements.size(); ++i) {
        if (s.is_linear()) {
          fp::Vector e(s.linear.dimension, 0);
          e[i]        = 1;
          auto target = linear_mult(s, e, s.linear.generators[x]);
          for (Index j = 0; j < target.size(); ++j) {
            if (target[j] != 0) {
              os << "  m" << i << " -> m" << j << " [label=\"" << s.alphabet[x] << ":"
                 << target[j] << "\"];\n";
            }
          }
        } else {
          os << "  m" << i << " -> m" << s.mult[i][s.gen[x]] << " [label=\"" << s.alphabet[x]
             << "\"];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace synmon
