#include "synmon/dautomata.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "synmon/errors.hpp"

namespace synmon {

  namespace {

    std::string state_label(State q) {
      return "q" + std::to_string(q);
    }

    DAutomaton from_dfa(VarietyTag tag, Dfa const& d) {
      DAutomaton a;
      a.tag      = tag;
      a.alphabet = d.alphabet();
      a.size     = d.number_of_states();
      a.initial  = d.initial();
      a.delta.assign(d.alphabet().size(), Transformation(a.size));
      for (State q = 0; q < a.size; ++q) {
        for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
          a.delta[x][q] = d.next(q, x);
        }
        a.output.push_back(d.is_final(q) ? 1 : 0);
        a.labels.push_back(state_label(q));
      }
      return a;
    }

    // Moore refinement of a finite carrier by behaviour. Returns the class of
    // every element; classes are numbered by first appearance.
    std::vector<State> behaviour_classes(DAutomaton const& a) {
      std::vector<State> cls(a.size);
      for (State q = 0; q < a.size; ++q) {
        cls[q] = a.output[q];
      }
      std::size_t classes = 0;
      while (true) {
        std::map<std::vector<State>, State> signature;
        std::vector<State>                  next(a.size);
        for (State q = 0; q < a.size; ++q) {
          std::vector<State> sig{cls[q]};
          for (auto const& d : a.delta) {
            sig.push_back(cls[d[q]]);
          }
          auto [it, _] = signature.emplace(std::move(sig), static_cast<State>(signature.size()));
          next[q]      = it->second;
        }
        bool const stable = signature.size() == classes;
        classes           = signature.size();
        cls               = std::move(next);
        if (stable) {
          break;
        }
      }
      return cls;
    }

    // Quotient of a finite D-automaton by a congruence given as class indices
    // numbered by first appearance.
    DAutomaton quotient(DAutomaton const& a, std::vector<State> const& cls) {
      std::size_t const  m = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
      std::vector<State> rep(m, State(-1));
      for (State q = 0; q < a.size; ++q) {
        if (rep[cls[q]] == State(-1)) {
          rep[cls[q]] = q;
        }
      }
      DAutomaton b;
      b.tag      = a.tag;
      b.alphabet = a.alphabet;
      b.size     = m;
      b.initial  = cls[a.initial];
      b.delta.assign(a.delta.size(), Transformation(m));
      for (State c = 0; c < m; ++c) {
        for (std::size_t x = 0; x < a.delta.size(); ++x) {
          b.delta[x][c] = cls[a.delta[x][rep[c]]];
        }
        b.output.push_back(a.output[rep[c]]);
        b.labels.push_back(a.labels[rep[c]]);
      }
      if (!a.leq.empty()) {
        b.leq.assign(m, std::vector<bool>(m));
        for (State c = 0; c < m; ++c) {
          for (State e = 0; e < m; ++e) {
            b.leq[c][e] = a.leq[rep[c]][rep[e]];
          }
        }
      }
      b.bottom = cls[a.bottom];
      if (!a.involution.empty()) {
        for (State c = 0; c < m; ++c) {
          b.involution.push_back(cls[a.involution[rep[c]]]);
        }
      }
      if (!a.join.empty()) {
        b.join.assign(m, std::vector<State>(m));
        for (State c = 0; c < m; ++c) {
          for (State e = 0; e < m; ++e) {
            b.join[c][e] = cls[a.join[rep[c]][rep[e]]];
          }
        }
        b.zero = cls[a.zero];
      }
      return b;
    }

    // States from which no final state is reachable.
    std::vector<bool> dead_states(Dfa const& d) {
      std::size_t const               n = d.number_of_states();
      std::vector<std::vector<State>> pred(n);
      for (State q = 0; q < n; ++q) {
        for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
          pred[d.next(q, x)].push_back(q);
        }
      }
      std::vector<bool>  live(n, false);
      std::vector<State> stack = d.finals();
      for (State f : stack) {
        live[f] = true;
      }
      while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : pred[q]) {
          if (!live[p]) {
            live[p] = true;
            stack.push_back(p);
          }
        }
      }
      std::vector<bool> dead(n);
      for (State q = 0; q < n; ++q) {
        dead[q] = !live[q];
      }
      return dead;
    }

    DAutomaton minimal_pos(Dfa const& m) {
      DAutomaton       a = from_dfa(make_tag(Variety::pos), m);
      std::vector<Dfa> lang;
      for (State q = 0; q < a.size; ++q) {
        lang.push_back(state_language(m, q));
      }
      a.leq.assign(a.size, std::vector<bool>(a.size));
      for (State p = 0; p < a.size; ++p) {
        for (State q = 0; q < a.size; ++q) {
          a.leq[p][q] = p == q || language_included(lang[p], lang[q]);
        }
      }
      return a;
    }

    DAutomaton minimal_pset(Dfa const& m) {
      DAutomaton a    = from_dfa(make_tag(Variety::pset), m);
      auto       dead = dead_states(m);
      auto       it   = std::find(dead.begin(), dead.end(), true);
      if (it != dead.end()) {
        a.bottom = static_cast<State>(it - dead.begin());
        return a;
      }
      // full-support language: adjoin an unreachable basepoint
      a.bottom = static_cast<State>(a.size);
      ++a.size;
      for (auto& d : a.delta) {
        d.push_back(a.bottom);
      }
      a.output.push_back(0);
      a.labels.push_back("_|_");
      return a;
    }

    DAutomaton minimal_inv(Dfa const& m) {
      DAutomaton                   a = from_dfa(make_tag(Variety::inv), m);
      std::size_t const            n = a.size;
      std::map<std::string, State> by_language;
      for (State q = 0; q < n; ++q) {
        by_language.emplace(canonical_key(state_language(m, q)), q);
      }
      a.involution.assign(n, State(-1));
      for (State q = 0; q < n; ++q) {
        auto it = by_language.find(canonical_key(complement(state_language(m, q))));
        if (it != by_language.end()) {
          a.involution[q] = it->second;
        }
      }
      // complements with no counterpart among the states of m become new states
      for (State q = 0; q < n; ++q) {
        if (a.involution[q] == State(-1)) {
          State const c   = static_cast<State>(a.size++);
          a.involution[q] = c;
          a.involution.push_back(q);
          a.output.push_back(1 - a.output[q]);
          a.labels.push_back("~" + a.labels[q]);
        }
      }
      for (auto& d : a.delta) {
        d.resize(a.size);
        for (State q = 0; q < n; ++q) {
          d[a.involution[q]] = a.involution[d[q]];
        }
      }
      return a;
    }

    std::string subset_label(std::uint64_t mask, std::vector<State> const& states) {
      std::string s     = "{";
      bool        first = true;
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (mask >> i & 1) {
          s += (first ? "" : ",") + state_label(states[i]);
          first = false;
        }
      }
      return s + "}";
    }

    fp::Vector unit_vector(std::size_t n, std::size_t i) {
      fp::Vector v(n, 0);
      v[i] = 1;
      return v;
    }

  }  // namespace

  DAutomaton powerset_lifting(Dfa const& l0, Limits const& limits) {
    // reachable states, in breadth-first order
    std::vector<State> states{l0.initial()};
    std::vector<int>   position(l0.number_of_states(), -1);
    position[l0.initial()] = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t x = 0; x < l0.alphabet().size(); ++x) {
        State t = l0.next(states[i], x);
        if (position[t] < 0) {
          position[t] = static_cast<int>(states.size());
          states.push_back(t);
        }
      }
    }
    std::size_t const n = states.size();
    if (n >= 63 || (std::uint64_t(1) << n) > limits.max_jsl_states) {
      throw CapacityError("join-semilattice closure exceeds --max-jsl-states",
                          n >= 63 ? std::size_t(-1) : std::size_t(1) << n);
    }
    // Every union of reachable singletons is reachable; subsets are encoded
    // as bit masks over the reachable states, element index == mask.
    std::size_t const total = std::size_t(1) << n;
    DAutomaton        a;
    a.tag      = make_tag(Variety::jsl);
    a.alphabet = l0.alphabet();
    a.size     = total;
    a.initial  = 1;  // {initial}
    a.zero     = 0;
    a.delta.assign(l0.alphabet().size(), Transformation(total));
    for (std::size_t x = 0; x < l0.alphabet().size(); ++x) {
      std::vector<std::uint64_t> single(n);
      for (std::size_t i = 0; i < n; ++i) {
        single[i] = std::uint64_t(1) << position[l0.next(states[i], x)];
      }
      for (std::uint64_t mask = 1; mask < total; ++mask) {
        // image of mask = image of mask without lowest bit, plus lowest bit's image
        std::size_t const low = static_cast<std::size_t>(__builtin_ctzll(mask));
        a.delta[x][mask] =
            static_cast<State>(a.delta[x][mask & (mask - 1)] | single[low]);
      }
    }
    a.output.assign(total, 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::size_t const low = static_cast<std::size_t>(__builtin_ctzll(mask));
      a.output[mask]        = a.output[mask & (mask - 1)] | (l0.is_final(states[low]) ? 1 : 0);
    }
    a.labels.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      a.labels.push_back(subset_label(mask, states));
    }
    a.join.assign(total, std::vector<State>(total));
    for (std::uint64_t s = 0; s < total; ++s) {
      for (std::uint64_t t = 0; t < total; ++t) {
        a.join[s][t] = static_cast<State>(s | t);
      }
    }
    return a;
  }

  DAutomaton linear_lifting(Dfa const& d, std::uint32_t prime, Limits const& limits) {
    std::size_t const n = d.number_of_states();
    if (n > limits.max_dim) {
      throw CapacityError("linear lifting exceeds --max-dim", n);
    }
    DAutomaton a;
    a.tag               = make_tag(Variety::vect, prime);
    a.alphabet          = d.alphabet();
    a.linear.prime      = prime;
    a.linear.dimension  = n;
    a.linear.initial    = unit_vector(n, d.initial());
    a.linear.output     = fp::Vector(n, 0);
    for (State q = 0; q < n; ++q) {
      a.linear.output[q] = d.is_final(q) ? 1 : 0;
    }
    for (std::size_t x = 0; x < d.alphabet().size(); ++x) {
      fp::Matrix m(n, n);
      for (State q = 0; q < n; ++q) {
        m(q, d.next(q, x)) = 1;
      }
      a.linear.transitions.push_back(std::move(m));
    }
    return a;
  }

  DAutomaton reduce_linear(DAutomaton const& a) {
    if (!a.is_linear()) {
      throw TagMismatch("reduce_linear expects a vect automaton");
    }
    fp::Field const        field(a.linear.prime);
    LinearAutomaton const& in = a.linear;
    std::size_t const      k  = in.transitions.size();

    // forward: span of initial * M_w
    fp::Basis forward(field, in.dimension);
    if (!fp::is_zero(in.initial)) {
      forward.insert(in.initial);
    }
    for (std::size_t i = 0; i < forward.rank(); ++i) {
      for (std::size_t x = 0; x < k; ++x) {
        forward.insert(fp::multiply(field, forward.vector(i), in.transitions[x]));
      }
    }
    std::size_t const       r = forward.rank();
    std::vector<fp::Matrix> fwd(k, fp::Matrix(r, r));
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t i = 0; i < r; ++i) {
        auto c = forward.coordinates(fp::multiply(field, forward.vector(i), in.transitions[x]));
        for (std::size_t j = 0; j < r; ++j) {
          fwd[x](i, j) = (*c)[j];
        }
      }
    }
    fp::Vector fwd_init = r > 0 ? unit_vector(r, 0) : fp::Vector();
    fp::Vector fwd_out(r);
    for (std::size_t i = 0; i < r; ++i) {
      fwd_out[i] = fp::dot(field, forward.vector(i), in.output);
    }

    // backward: span of M_w * output; states are identified modulo its
    // annihilator
    fp::Basis backward(field, r);
    if (!fp::is_zero(fwd_out)) {
      backward.insert(fwd_out);
    }
    for (std::size_t i = 0; i < backward.rank(); ++i) {
      for (std::size_t x = 0; x < k; ++x) {
        backward.insert(fp::multiply(field, fwd[x], backward.vector(i)));
      }
    }
    std::size_t const d = backward.rank();
    fp::Matrix        basis(r, d);  // columns
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        basis(i, j) = backward.vector(j)[i];
      }
    }
    DAutomaton b;
    b.tag              = a.tag;
    b.alphabet         = a.alphabet;
    b.linear.prime     = in.prime;
    b.linear.dimension = d;
    for (std::size_t x = 0; x < k; ++x) {
      fp::Matrix m(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        auto c = backward.coordinates(fp::multiply(field, fwd[x], backward.vector(j)));
        for (std::size_t i = 0; i < d; ++i) {
          m(i, j) = (*c)[i];
        }
      }
      b.linear.transitions.push_back(std::move(m));
    }
    b.linear.initial = r > 0 ? fp::multiply(field, fwd_init, basis) : fp::Vector(d, 0);
    b.linear.output  = d > 0 ? unit_vector(d, 0) : fp::Vector();
    return b;
  }

  DAutomaton minimal_dautomaton(VarietyTag tag, Dfa const& l0, Limits const& limits) {
    Dfa const m = l0.is_minimal() ? l0 : minimize(l0);
    switch (tag.variety) {
      case Variety::set:
        return from_dfa(tag, m);
      case Variety::pos:
        return minimal_pos(m);
      case Variety::pset:
        return minimal_pset(m);
      case Variety::inv:
        return minimal_inv(m);
      case Variety::jsl: {
        DAutomaton lifted = powerset_lifting(m, limits);
        return quotient(lifted, behaviour_classes(lifted));
      }
      case Variety::vect:
        return reduce_linear(linear_lifting(m, tag.prime, limits));
    }
    throw std::logic_error("unreachable");
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  ReachSimpleReport check_reachable_simple(DAutomaton const& a) {
    ReachSimpleReport report;
    if (a.is_linear()) {
      fp::Field const        field(a.linear.prime);
      LinearAutomaton const& l = a.linear;
      fp::Basis              fwd(field, l.dimension), bwd(field, l.dimension);
      if (!fp::is_zero(l.initial)) {
        fwd.insert(l.initial);
      }
      for (std::size_t i = 0; i < fwd.rank(); ++i) {
        for (auto const& m : l.transitions) {
          fwd.insert(fp::multiply(field, fwd.vector(i), m));
        }
      }
      if (!fp::is_zero(l.output)) {
        bwd.insert(l.output);
      }
      for (std::size_t i = 0; i < bwd.rank(); ++i) {
        for (auto const& m : l.transitions) {
          bwd.insert(fp::multiply(field, m, bwd.vector(i)));
        }
      }
      if (fwd.rank() < l.dimension) {
        report.reachable = false;
        report.violations.push_back("reachable span has dimension " + std::to_string(fwd.rank())
                                    + " < " + std::to_string(l.dimension));
      }
      if (bwd.rank() < l.dimension) {
        report.simple = false;
        report.violations.push_back("observable span has dimension "
                                    + std::to_string(bwd.rank()) + " < "
                                    + std::to_string(l.dimension));
      }
      return report;
    }

    std::vector<bool>  seen(a.size, false);
    std::vector<State> order;
    auto               visit = [&](State q) {
      if (!seen[q]) {
        seen[q] = true;
        order.push_back(q);
      }
    };
    visit(a.initial);
    if (a.tag.variety == Variety::pset) {
      visit(a.bottom);
    }
    if (a.tag.variety == Variety::jsl) {
      visit(a.zero);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      State const q = order[i];
      for (auto const& d : a.delta) {
        visit(d[q]);
      }
      if (a.tag.variety == Variety::inv) {
        visit(a.involution[q]);
      }
      if (a.tag.variety == Variety::jsl) {
        for (std::size_t j = 0; j <= i; ++j) {
          visit(a.join[q][order[j]]);
        }
      }
    }
    for (State q = 0; q < a.size; ++q) {
      if (!seen[q]) {
        report.reachable = false;
        report.violations.push_back("unreachable element " + a.labels[q]);
      }
    }

    auto                                 cls = behaviour_classes(a);
    std::unordered_map<State, State>     first;
    for (State q = 0; q < a.size; ++q) {
      auto [it, inserted] = first.emplace(cls[q], q);
      if (!inserted) {
        report.simple = false;
        report.violations.push_back("elements " + a.labels[it->second] + " and " + a.labels[q]
                                    + " have the same behaviour");
      }
    }
    return report;
  }

  std::vector<std::string> structure_violations(DAutomaton const& a) {
    std::vector<std::string> out;
    auto                     fail = [&out](std::string s) { out.push_back(std::move(s)); };
    if (a.is_linear()) {
      auto const& l = a.linear;
      if (l.initial.size() != l.dimension || l.output.size() != l.dimension
          || l.transitions.size() != a.alphabet.size()) {
        fail("linear automaton has inconsistent dimensions");
      }
      for (auto const& m : l.transitions) {
        if (m.rows() != l.dimension || m.cols() != l.dimension) {
          fail("transition matrix is not square of the automaton dimension");
        }
      }
      return out;
    }
    std::size_t const n = a.size;
    for (auto const& d : a.delta) {
      if (d.size() != n
          || std::any_of(d.begin(), d.end(), [n](State q) { return q >= n; })) {
        fail("transition table out of range");
        return out;
      }
    }
    switch (a.tag.variety) {
      case Variety::set:
        break;
      case Variety::pos:
        for (State p = 0; p < n; ++p) {
          if (!a.leq[p][p]) {
            fail("order not reflexive at " + a.labels[p]);
          }
          for (State q = 0; q < n; ++q) {
            if (p != q && a.leq[p][q] && a.leq[q][p]) {
              fail("order not antisymmetric at " + a.labels[p] + ", " + a.labels[q]);
            }
            for (State r = 0; r < n; ++r) {
              if (a.leq[p][q] && a.leq[q][r] && !a.leq[p][r]) {
                fail("order not transitive");
              }
            }
            if (a.leq[p][q]) {
              if (a.output[p] > a.output[q]) {
                fail("final states are not an upper set: " + a.labels[p] + " <= "
                     + a.labels[q]);
              }
              for (std::size_t x = 0; x < a.delta.size(); ++x) {
                if (!a.leq[a.delta[x][p]][a.delta[x][q]]) {
                  fail(std::string("transition ") + a.alphabet[x] + " not monotone at "
                       + a.labels[p] + " <= " + a.labels[q]);
                }
              }
            }
          }
        }
        break;
      case Variety::pset:
        if (a.output[a.bottom] != 0) {
          fail("basepoint is final");
        }
        for (std::size_t x = 0; x < a.delta.size(); ++x) {
          if (a.delta[x][a.bottom] != a.bottom) {
            fail(std::string("transition ") + a.alphabet[x] + " moves the basepoint");
          }
        }
        break;
      case Variety::inv:
        for (State q = 0; q < n; ++q) {
          State const c = a.involution[q];
          if (a.involution[c] != q) {
            fail("involution not involutive at " + a.labels[q]);
          }
          if (a.output[c] != 1 - a.output[q]) {
            fail("output not complementary at " + a.labels[q]);
          }
          for (std::size_t x = 0; x < a.delta.size(); ++x) {
            if (a.delta[x][c] != a.involution[a.delta[x][q]]) {
              fail(std::string("transition ") + a.alphabet[x]
                   + " does not commute with the involution at " + a.labels[q]);
            }
          }
        }
        break;
      case Variety::jsl:
        if (a.output[a.zero] != 0) {
          fail("least element is final");
        }
        for (std::size_t x = 0; x < a.delta.size(); ++x) {
          if (a.delta[x][a.zero] != a.zero) {
            fail(std::string("transition ") + a.alphabet[x] + " does not preserve 0");
          }
        }
        for (State s = 0; s < n; ++s) {
          if (a.join[s][s] != s || a.join[s][a.zero] != s) {
            fail("join not idempotent or 0 not neutral at " + a.labels[s]);
          }
          for (State t = 0; t < n; ++t) {
            State const st = a.join[s][t];
            if (st != a.join[t][s]) {
              fail("join not commutative");
            }
            if ((a.output[st] != 0) != (a.output[s] != 0 || a.output[t] != 0)) {
              fail("final states are not a prime upset at " + a.labels[s] + ", "
                   + a.labels[t]);
            }
            for (std::size_t x = 0; x < a.delta.size(); ++x) {
              if (a.delta[x][st] != a.join[a.delta[x][s]][a.delta[x][t]]) {
                fail(std::string("transition ") + a.alphabet[x] + " does not preserve joins");
              }
            }
            for (State u = 0; u < n; ++u) {
              if (a.join[st][u] != a.join[s][a.join[t][u]]) {
                fail("join not associative");
              }
            }
          }
        }
        break;
      case Variety::vect:
        break;
    }
    return out;
  }

  OutputValue accepts(DAutomaton const& a, FreeElem const& u) {
    if (!(u.tag() == a.tag)) {
      throw TagMismatch("element variety " + to_string(u.tag()) + " differs from automaton "
                        + to_string(a.tag));
    }
    auto run = [&a](State q, Word const& w) {
      for (char c : w) {
        auto x = a.alphabet.index_of(c);
        if (!x) {
          throw std::invalid_argument(std::string("letter '") + c + "' outside alphabet");
        }
        q = a.delta[*x][q];
      }
      return q;
    };
    switch (a.tag.variety) {
      case Variety::set:
      case Variety::pos:
        return {a.output[run(a.initial, u.single_word())]};
      case Variety::pset:
        return {u.is_bottom() ? a.output[a.bottom] : a.output[run(a.initial, u.single_word())]};
      case Variety::inv: {
        State q = run(a.initial, u.single_word());
        return {a.output[u.is_complemented() ? a.involution[q] : q]};
      }
      case Variety::jsl: {
        State s = a.zero;
        for (auto const& [w, _] : u.terms()) {
          s = a.join[s][run(a.initial, w)];
        }
        return {a.output[s]};
      }
      case Variety::vect: {
        fp::Field const field(a.linear.prime);
        fp::Scalar      sum = 0;
        for (auto const& [w, c] : u.terms()) {
          fp::Vector x = a.linear.initial;
          for (char ch : w) {
            auto i = a.alphabet.index_of(ch);
            if (!i) {
              throw std::invalid_argument(std::string("letter '") + ch + "' outside alphabet");
            }
            x = fp::multiply(field, x, a.linear.transitions[*i]);
          }
          sum = field.add(sum, field.mul(c, fp::dot(field, x, a.linear.output)));
        }
        return {sum};
      }
    }
    throw std::logic_error("unreachable");
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::vector<fp::Scalar>> rows(fp::Matrix const& m) {
      std::vector<std::vector<fp::Scalar>> r;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        r.emplace_back(row.begin(), row.end());
      }
      return r;
    }
  }  // namespace

  std::string to_table(DAutomaton const& a) {
    std::ostringstream os;
    os << "variety " << to_string(a.tag) << ", alphabet " << a.alphabet.letters() << "\n";
    if (a.is_linear()) {
      auto const& l = a.linear;
      os << "dimension " << l.dimension << "\n";
      auto vec = [&os](fp::Vector const& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << (i ? " " : "") << v[i];
        }
        os << "]";
      };
      os << "initial ";
      vec(l.initial);
      os << "\noutput  ";
      vec(l.output);
      os << "\n";
      for (std::size_t x = 0; x < l.transitions.size(); ++x) {
        os << "M_" << a.alphabet[x] << " =\n";
        for (auto const& r : rows(l.transitions[x])) {
          os << "  ";
          vec(r);
          os << "\n";
        }
      }
      return os.str();
    }
    std::size_t width = 6;
    for (auto const& l : a.labels) {
      width = std::max(width, l.size() + 1);
    }
    auto cell = [&os, width](std::string const& s) {
      os << s << std::string(width - std::min(width, s.size()), ' ');
    };
    os << "size " << a.size << ", initial " << a.labels[a.initial];
    if (a.tag.variety == Variety::pset) {
      os << ", bottom " << a.labels[a.bottom];
    }
    if (a.tag.variety == Variety::jsl) {
      os << ", zero " << a.labels[a.zero];
    }
    os << "\n";
    cell("state");
    for (char c : a.alphabet.letters()) {
      cell(std::string(1, c));
    }
    cell("out");
    if (a.tag.variety == Variety::inv) {
      cell("compl");
    }
    os << "\n";
    for (State q = 0; q < a.size; ++q) {
      cell(a.labels[q]);
      for (auto const& d : a.delta) {
        cell(a.labels[d[q]]);
      }
      cell(to_string(OutputValue{a.output[q]}, a.tag));
      if (a.tag.variety == Variety::inv) {
        cell(a.labels[a.involution[q]]);
      }
      os << "\n";
    }
    if (a.tag.variety == Variety::pos) {
      os << "order:";
      for (State p = 0; p < a.size; ++p) {
        for (State q = 0; q < a.size; ++q) {
          if (p != q && a.leq[p][q]) {
            os << " " << a.labels[p] << "<" << a.labels[q];
          }
        }
      }
      os << "\n";
    }
    return os.str();
  }

  std::string to_json(DAutomaton const& a) {
    nlohmann::ordered_json j;
    j["variety"]  = std::string(variety_name(a.tag.variety));
    j["alphabet"] = a.alphabet.letters();
    if (a.is_linear()) {
      auto const& l   = a.linear;
      j["prime"]      = l.prime;
      j["dimension"]  = l.dimension;
      j["initial"]    = l.initial;
      j["output"]     = l.output;
      auto& mats      = j["transitions"];
      mats            = nlohmann::ordered_json::object();
      for (std::size_t x = 0; x < l.transitions.size(); ++x) {
        mats[std::string(1, a.alphabet[x])] = rows(l.transitions[x]);
      }
      return j.dump();
    }
    j["size"]    = a.size;
    j["labels"]  = a.labels;
    j["initial"] = a.initial;
    j["output"]  = a.output;
    auto& trans  = j["transitions"];
    trans        = nlohmann::ordered_json::object();
    for (std::size_t x = 0; x < a.delta.size(); ++x) {
      trans[std::string(1, a.alphabet[x])] = a.delta[x];
    }
    switch (a.tag.variety) {
      case Variety::pos: {
        auto& order = j["order"];
        order       = nlohmann::ordered_json::array();
        for (State p = 0; p < a.size; ++p) {
          for (State q = 0; q < a.size; ++q) {
            if (p != q && a.leq[p][q]) {
              order.push_back({p, q});
            }
          }
        }
        break;
      }
      case Variety::pset:
        j["bottom"] = a.bottom;
        break;
      case Variety::inv:
        j["involution"] = a.involution;
        break;
      case Variety::jsl:
        j["zero"] = a.zero;
        j["join"] = a.join;
        break;
      default:
        break;
    }
    return j.dump();
  }

  std::string to_dot(DAutomaton const& a) {
    std::ostringstream os;
    os << "digraph min_" << variety_name(a.tag.variety) << " {\n  rankdir=LR;\n";
    if (a.is_linear()) {
      auto const& l = a.linear;
      os << "  // states are row vectors over F_" << l.prime << "; nodes are basis vectors\n";
      for (std::size_t i = 0; i < l.dimension; ++i) {
        os << "  e" << i << " [shape=circle, label=\"e" << i << "\\ni=" << l.initial[i]
           << " f=" << l.output[i] << "\"];\n";
      }
      for (std::size_t x = 0; x < l.transitions.size(); ++x) {
        for (std::size_t i = 0; i < l.dimension; ++i) {
          for (std::size_t k = 0; k < l.dimension; ++k) {
            if (auto c = l.transitions[x](i, k); c != 0) {
              os << "  e" << i << " -> e" << k << " [label=\"" << a.alphabet[x] << ":" << c
                 << "\"];\n";
            }
          }
        }
      }
      os << "}\n";
      return os.str();
    }
    os << "  start [shape=point];\n";
    for (State q = 0; q < a.size; ++q) {
      os << "  s" << q << " [label=\"" << a.labels[q] << "\", shape="
         << (a.output[q] ? "doublecircle" : "circle");
      if (a.tag.variety == Variety::pset && q == a.bottom) {
        os << ", style=filled, fillcolor=lightgray";
      }
      os << "];\n";
    }
    os << "  start -> s" << a.initial << ";\n";
    for (State q = 0; q < a.size; ++q) {
      std::map<State, std::string> labels;
      for (std::size_t x = 0; x < a.delta.size(); ++x) {
        auto& l = labels[a.delta[x][q]];
        l += (l.empty() ? "" : ",") + std::string(1, a.alphabet[x]);
      }
      for (auto const& [t, l] : labels) {
        os << "  s" << q << " -> s" << t << " [label=\"" << l << "\"];\n";
      }
    }
    if (a.tag.variety == Variety::pos) {
      // covering relation of the state order
      for (State p = 0; p < a.size; ++p) {
        for (State q = 0; q < a.size; ++q) {
          if (p == q || !a.leq[p][q]) {
            continue;
          }
          bool covers = true;
          for (State r = 0; r < a.size && covers; ++r) {
            covers = r == p || r == q || !(a.leq[p][r] && a.leq[r][q]);
          }
          if (covers) {
            os << "  s" << p << " -> s" << q << " [style=dashed, arrowhead=none];\n";
          }
        }
      }
    }
    if (a.tag.variety == Variety::inv) {
      for (State q = 0; q < a.size; ++q) {
        if (q < a.involution[q]) {
          os << "  s" << q << " -> s" << a.involution[q]
             << " [style=dotted, dir=both, constraint=false];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace synmon
