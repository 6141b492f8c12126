#include "synmon/checks.hpp"

#include <algorithm>

#include "synmon/dautomata.hpp"
#include "synmon/duality.hpp"
#include "synmon/oracle.hpp"
#include "synmon/synalg.hpp"

namespace synmon {

  namespace {

    CheckResult from_list(std::string name, std::vector<std::string> const& violations) {
      return {std::move(name), violations.empty(),
              violations.empty() ? "" : violations.front()};
    }

    // class(uv) = class(u) * class(v) on all pairs of short words
    CheckResult morphism_law(SynAlgebra const& s, std::size_t max_length) {
      auto const words = words_up_to(s.alphabet, max_length);
      for (auto const& u : words) {
        for (auto const& v : words) {
          FreeElem const eu = FreeElem::word(s.tag, u);
          FreeElem const ev = FreeElem::word(s.tag, v);
          FreeElem const uv = FreeElem::word(s.tag, u + v);
          bool const     ok = s.is_linear()
                                  ? coordinates_of(s, uv)
                                        == linear_mult(s, coordinates_of(s, eu), coordinates_of(s, ev))
                                  : class_of(s, uv) == s.mult[class_of(s, eu)][class_of(s, ev)];
          if (!ok) {
            return {"syn.morphism", false, "e(" + u + v + ") != e(" + u + ") * e(" + v + ")"};
          }
        }
      }
      return {"syn.morphism", true, std::to_string(words.size() * words.size()) + " pairs"};
    }

    // dimension of the algebra = rank of {M_w : |w| < 2d}
    CheckResult linear_rank(DAutomaton const& a, SynAlgebra const& s) {
      auto const&       l = a.linear;
      std::size_t const d = l.dimension;
      fp::Field const   field(l.prime);
      fp::Basis         span(field, d * d);
      if (d > 0) {
        std::vector<fp::Matrix> layer{fp::Matrix::identity(d)};
        for (std::size_t len = 0; len < 2 * d; ++len) {
          std::vector<fp::Matrix> next;
          for (auto const& m : layer) {
            span.insert(m.flat());
            if (len + 1 < 2 * d) {
              for (auto const& t : l.transitions) {
                next.push_back(fp::multiply(field, m, t));
              }
            }
          }
          if (next.size() > (std::size_t(1) << 18)) {
            return {"vect.rank", true, "skipped: too many words below length 2d"};
          }
          layer = std::move(next);
        }
      }
      bool const ok = span.rank() == s.linear.dimension;
      return {"vect.rank", ok,
              "rank " + std::to_string(span.rank()) + ", dimension "
                  + std::to_string(s.linear.dimension)};
    }

  }  // namespace

  std::vector<CheckResult> check_variety(VarietyTag    tag,
                                         Dfa const&    l0,
                                         std::uint64_t seed,
                                         Limits const& limits) {
    std::vector<CheckResult> out;
    Dfa const                m = l0.is_minimal() ? l0 : minimize(l0);

    DAutomaton const a = minimal_dautomaton(tag, m, limits);
    out.push_back(from_list("min.structure", structure_violations(a)));
    auto rs = check_reachable_simple(a);
    out.push_back(from_list("min.reachable_simple", rs.violations));
    {
      CheckResult lang{"min.language", true, ""};
      for (auto const& u : small_elements(tag, m.alphabet(), 6)) {
        if (accepts(a, u) != eval_language(tag, m, u)) {
          lang = {"min.language", false, "Min(L) and L disagree on " + to_string(u)};
          break;
        }
      }
      out.push_back(lang);
    }

    SynAlgebra const s = syntactic_algebra(tag, m, limits);
    out.push_back(from_list("syn.laws", algebra_law_violations(s)));
    auto rec = verify_recognition(s, m, seed, 1000);
    out.push_back({"syn.recognition", rec.passed,
                   rec.passed ? std::to_string(rec.checked) + " checks"
                              : rec.counterexamples.front()});
    out.push_back(morphism_law(s, 4));

    ContextOracle const oracle(tag, m, limits);
    auto eq = compare_with_oracle(s, oracle, small_elements(tag, m.alphabet(), 4));
    out.push_back({"syn.oracle_equivalence", eq.mismatches == 0,
                   eq.mismatches == 0 ? std::to_string(eq.elements) + " elements"
                                      : eq.witnesses.front()});
    SynAlgebra const q = congruence_quotient(tag, m, limits);
    bool const       iso = iso_as_quotients(s, q);
    out.push_back({"syn.quotient_iso", iso,
                   "transition " + std::to_string(s.size()) + ", quotient "
                       + std::to_string(q.size())});
    if (tag.variety == Variety::vect) {
      out.push_back(linear_rank(a, s));
    }
    return out;
  }

  std::vector<CheckResult> check_duality(Dfa const& l0, Limits const& limits) {
    std::vector<CheckResult> out;
    auto const               r = verify_syntactic_duality(l0, limits);
    out.push_back({"dual.syntactic", r.passed(),
                   "atoms=" + std::to_string(r.atoms) + " syn=" + std::to_string(r.syn_size)
                       + (r.witnesses.empty() ? "" : " " + r.witnesses.front())});
    auto const mr = verify_minimal_duality(l0, limits);
    out.push_back({"dual.minimal", mr.passed(),
                   "atoms=" + std::to_string(mr.atoms) + " states=" + std::to_string(mr.states)
                       + (mr.witnesses.empty() ? "" : " " + mr.witnesses.front())});
    return out;
  }

  bool all_passed(std::vector<CheckResult> const& results) {
    return std::all_of(results.begin(), results.end(),
                       [](CheckResult const& r) { return r.passed; });
  }

}  // namespace synmon
