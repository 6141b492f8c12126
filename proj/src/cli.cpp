#include "synmon/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "synmon/checks.hpp"
#include "synmon/corpus.hpp"
#include "synmon/dautomata.hpp"
#include "synmon/duality.hpp"
#include "synmon/errors.hpp"
#include "synmon/synalg.hpp"

namespace synmon::cli {

  namespace {

    using nlohmann::ordered_json;

    struct Input {
      Dfa         dfa;
      std::string description;
    };

    Input load_input(RunConfig const& c) {
      if (c.regex && c.dfa_path) {
        throw std::invalid_argument("--regex and --dfa are mutually exclusive");
      }
      if (c.regex) {
        return {min_dfa(*c.regex, Alphabet(c.alphabet)), *c.regex};
      }
      if (c.dfa_path) {
        std::ifstream in(*c.dfa_path);
        if (!in) {
          throw std::invalid_argument("cannot read DFA file " + *c.dfa_path);
        }
        std::stringstream text;
        text << in.rdbuf();
        Dfa d = dfa_from_json(text.str());
        return {minimize(d), *c.dfa_path};
      }
      throw std::invalid_argument("one of --regex or --dfa is required");
    }

    std::vector<VarietyTag> selected(RunConfig const& c) {
      if (c.variety) {
        return {make_tag(*c.variety, c.prime)};
      }
      return all_varieties(c.prime);
    }

    VarietyTag single(RunConfig const& c) {
      return make_tag(c.variety.value_or(Variety::set), c.prime);
    }

    std::string header(RunConfig const& c) {
      std::string const s = "seed " + std::to_string(c.seed);
      switch (c.format) {
        case Format::dot:
          return "// " + s + "\n";
        case Format::json:
          return "";
        default:
          return "# " + s + "\n";
      }
    }

    ordered_json envelope(RunConfig const& c, std::string_view command, std::string const& input) {
      ordered_json j;
      j["seed"]    = c.seed;
      j["command"] = command;
      if (!input.empty()) {
        j["input"] = input;
      }
      return j;
    }

    int run_syn(RunConfig const& c, std::ostream& out, std::ostream& err) {
      Input const      in   = load_input(c);
      VarietyTag const tag  = single(c);
      SynAlgebra       s    = syntactic_algebra(tag, in.dfa, c.limits);
      if (c.tamper) {
        c.tamper(s);
      }
      auto const       rec  = verify_recognition(s, in.dfa, c.seed);
      auto const       laws = algebra_law_violations(s);
      bool const       ok   = rec.passed && laws.empty();
      switch (c.format) {
        case Format::table:
          out << header(c) << "# language " << in.description << "\n" << to_table(s);
          out << "recognition: " << (rec.passed ? "pass" : "FAIL") << " (" << rec.checked
              << " checks)\n";
          out << "laws: " << (laws.empty() ? "pass" : "FAIL") << "\n";
          break;
        case Format::csv:
          out << header(c) << to_csv(s);
          break;
        case Format::dot:
          out << header(c) << to_dot(s);
          break;
        case Format::json: {
          auto j         = envelope(c, "syn", in.description);
          j["algebra"]   = ordered_json::parse(to_json(s));
          j["recognition"] = {{"passed", rec.passed},
                              {"checked", rec.checked},
                              {"counterexamples", rec.counterexamples}};
          j["lawViolations"] = laws;
          out << j.dump() << "\n";
          break;
        }
      }
      for (auto const& w : rec.counterexamples) {
        err << "recognition: " << w << "\n";
      }
      for (auto const& w : laws) {
        err << "law: " << w << "\n";
      }
      return ok ? exit_ok : exit_verification;
    }

    std::string automaton_csv(DAutomaton const& a) {
      std::ostringstream os;
      if (a.is_linear()) {
        os << "letter,row";
        for (std::size_t k = 0; k < a.linear.dimension; ++k) {
          os << ",c" << k;
        }
        os << "\n";
        for (std::size_t x = 0; x < a.linear.transitions.size(); ++x) {
          for (std::size_t r = 0; r < a.linear.dimension; ++r) {
            os << a.alphabet[x] << "," << r;
            for (auto v : a.linear.transitions[x].row(r)) {
              os << "," << v;
            }
            os << "\n";
          }
        }
        return os.str();
      }
      os << "state";
      for (char x : a.alphabet.letters()) {
        os << "," << x;
      }
      os << ",output\n";
      for (State q = 0; q < a.size; ++q) {
        os << a.labels[q];
        for (auto const& d : a.delta) {
          os << "," << a.labels[d[q]];
        }
        os << "," << int(a.output[q]) << "\n";
      }
      return os.str();
    }

    int run_min(RunConfig const& c, std::ostream& out, std::ostream& err) {
      Input const      in  = load_input(c);
      DAutomaton const a   = minimal_dautomaton(single(c), in.dfa, c.limits);
      auto const       rs  = check_reachable_simple(a);
      auto const       sv  = structure_violations(a);
      bool const       ok  = rs.reachable && rs.simple && sv.empty();
      switch (c.format) {
        case Format::table:
          out << header(c) << "# language " << in.description << "\n" << to_table(a);
          out << "reachable: " << (rs.reachable ? "yes" : "no")
              << ", simple: " << (rs.simple ? "yes" : "no")
              << ", structure: " << (sv.empty() ? "ok" : "violated") << "\n";
          break;
        case Format::csv:
          out << header(c) << automaton_csv(a);
          break;
        case Format::dot:
          out << header(c) << to_dot(a);
          break;
        case Format::json: {
          auto j          = envelope(c, "min", in.description);
          j["automaton"]  = ordered_json::parse(to_json(a));
          j["reachable"]  = rs.reachable;
          j["simple"]     = rs.simple;
          j["violations"] = rs.violations;
          j["structureViolations"] = sv;
          out << j.dump() << "\n";
          break;
        }
      }
      for (auto const& v : rs.violations) {
        err << v << "\n";
      }
      for (auto const& v : sv) {
        err << v << "\n";
      }
      return ok ? exit_ok : exit_verification;
    }

    std::string yes(bool b) {
      return b ? "true" : "false";
    }

    int run_dual(RunConfig const& c, std::ostream& out, std::ostream& err) {
      Input const in = load_input(c);
      auto const  r  = verify_syntactic_duality(in.dfa, c.limits);
      auto const  mr = verify_minimal_duality(in.dfa, c.limits);
      switch (c.format) {
        case Format::table:
          out << header(c) << "# language " << in.description << "\n";
          out << "atoms=" << r.atoms << " syn=" << r.syn_size
              << " isomorphic=" << yes(r.isomorphic) << "\n";
          out << "derivatives=" << r.derivatives
              << " opposite_isomorphic=" << yes(r.opposite_isomorphic)
              << " well_defined=" << yes(r.well_defined) << " recognizes=" << yes(r.recognizes)
              << " transitions_verified=" << yes(r.transitions_verified) << "\n";
          out << "left-derivative atoms=" << mr.atoms << " states=" << mr.states
              << " language_equal=" << yes(mr.language_equal) << "\n";
          break;
        case Format::csv:
          out << header(c) << "derivatives,atoms,syn,isomorphic,left_atoms,states\n"
              << r.derivatives << "," << r.atoms << "," << r.syn_size << ","
              << yes(r.isomorphic) << "," << mr.atoms << "," << mr.states << "\n";
          break;
        case Format::dot: {
          Dfa const m = in.dfa;
          out << header(c) << to_dot(compute_atoms(build_derivative_system(m), c.limits));
          break;
        }
        case Format::json: {
          auto j         = envelope(c, "dual", in.description);
          j["syntactic"] = ordered_json::parse(to_json(r));
          j["minimal"]   = ordered_json::parse(to_json(mr));
          out << j.dump() << "\n";
          break;
        }
      }
      for (auto const& w : r.witnesses) {
        err << w << "\n";
      }
      for (auto const& w : mr.witnesses) {
        err << w << "\n";
      }
      return r.passed() && mr.passed() ? exit_ok : exit_verification;
    }

    struct Row {
      std::string              variety;
      std::vector<CheckResult> results;
      std::optional<std::string> capacity;
    };

    std::vector<Row> check_language(RunConfig const& c, Dfa const& dfa,
                                    std::vector<VarietyTag> const& tags) {
      std::vector<Row> rows;
      for (auto const& tag : tags) {
        Row row{to_string(tag), {}, std::nullopt};
        try {
          row.results = check_variety(tag, dfa, c.seed, c.limits);
        } catch (CapacityError const& e) {
          row.capacity = e.what();
        }
        rows.push_back(std::move(row));
      }
      Row dual{"dual", {}, std::nullopt};
      try {
        dual.results = check_duality(dfa, c.limits);
      } catch (CapacityError const& e) {
        dual.capacity = e.what();
      }
      rows.push_back(std::move(dual));
      return rows;
    }

    int status_of(std::vector<Row> const& rows) {
      bool capacity = false;
      for (auto const& r : rows) {
        if (!all_passed(r.results)) {
          return exit_verification;
        }
        capacity = capacity || r.capacity.has_value();
      }
      return capacity ? exit_capacity : exit_ok;
    }

    int run_check(RunConfig const& c, std::ostream& out, std::ostream& err) {
      Input const in   = load_input(c);
      auto const  rows = check_language(c, in.dfa, selected(c));
      if (c.format == Format::json) {
        auto  j     = envelope(c, "check", in.description);
        auto& suite = j["results"];
        suite       = ordered_json::array();
        for (auto const& r : rows) {
          for (auto const& res : r.results) {
            suite.push_back({{"variety", r.variety},
                             {"check", res.name},
                             {"passed", res.passed},
                             {"detail", res.detail}});
          }
          if (r.capacity) {
            suite.push_back({{"variety", r.variety}, {"check", "capacity"}, {"passed", false},
                             {"detail", *r.capacity}});
          }
        }
        out << j.dump() << "\n";
      } else {
        out << header(c) << "# language " << in.description << "\n";
        if (c.format == Format::csv) {
          out << "variety,check,result\n";
        }
        for (auto const& r : rows) {
          for (auto const& res : r.results) {
            if (c.format == Format::csv) {
              out << r.variety << "," << res.name << "," << (res.passed ? "pass" : "fail") << "\n";
            } else {
              out << (res.passed ? "PASS " : "FAIL ") << r.variety << " " << res.name
                  << (res.detail.empty() ? "" : "  (" + res.detail + ")") << "\n";
            }
          }
          if (r.capacity) {
            out << (c.format == Format::csv ? r.variety + ",capacity,fail\n"
                                            : "CAPACITY " + r.variety + " " + *r.capacity + "\n");
          }
        }
      }
      for (auto const& r : rows) {
        for (auto const& res : r.results) {
          if (!res.passed) {
            err << r.variety << " " << res.name << ": " << res.detail << "\n";
          }
        }
      }
      return status_of(rows);
    }

    int run_corpus(RunConfig const& c, std::ostream& out, std::ostream& err) {
      Alphabet const alphabet(corpus_alphabet);
      auto const     tags = selected(c);
      std::vector<std::future<std::vector<Row>>> jobs;
      for (auto const& e : corpus) {
        jobs.push_back(std::async(std::launch::async, [&c, &tags, &alphabet, e] {
          return check_language(c, min_dfa(e.regex, alphabet), tags);
        }));
      }
      std::vector<std::vector<Row>> results;
      for (auto& j : jobs) {
        results.push_back(j.get());
      }
      auto cell = [](Row const& r) -> std::string {
        if (!all_passed(r.results)) {
          return "FAIL";
        }
        return r.capacity ? "CAP" : "ok";
      };
      int status = exit_ok;
      for (auto const& rows : results) {
        int const s = status_of(rows);
        if (s == exit_verification || (s == exit_capacity && status == exit_ok)) {
          status = s;
        }
      }
      if (c.format == Format::json) {
        auto  j    = envelope(c, "corpus", "");
        auto& list = j["languages"];
        list       = ordered_json::array();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          ordered_json row;
          row["index"] = i;
          row["name"]  = corpus[i].name;
          row["regex"] = corpus[i].regex;
          for (auto const& r : results[i]) {
            row[r.variety] = cell(r);
          }
          list.push_back(std::move(row));
        }
        j["passed"] = status == exit_ok;
        out << j.dump() << "\n";
      } else {
        bool const  csv = c.format == Format::csv;
        std::string sep = csv ? "," : " ";
        out << header(c);
        auto pad = [csv](std::string s, std::size_t w) {
          if (csv) {
            return s;
          }
          std::size_t cols = 0;
          for (unsigned char ch : s) {
            cols += (ch & 0xC0) != 0x80;
          }
          return s + std::string(w > cols ? w - cols : 0, ' ');
        };
        out << pad("#", 3) << sep << pad("language", 16);
        for (auto const& r : results.front()) {
          out << sep << pad(r.variety, 8);
        }
        out << "\n";
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          out << pad(std::to_string(i), 3) << sep << pad(std::string(corpus[i].name), 16);
          for (auto const& r : results[i]) {
            out << sep << pad(cell(r), 8);
          }
          out << "\n";
        }
        if (!csv) {
          out << (status == exit_ok ? "all checks passed" : "some checks failed") << "\n";
        }
      }
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (auto const& r : results[i]) {
          for (auto const& res : r.results) {
            if (!res.passed) {
              err << corpus[i].name << " " << r.variety << " " << res.name << ": " << res.detail
                  << "\n";
            }
          }
        }
      }
      return status;
    }

  }  // namespace

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      Alphabet const check_alphabet(config.alphabet);
      (void) check_alphabet;
      make_tag(config.variety.value_or(Variety::set), config.prime);
      switch (config.command) {
        case Command::syn:
          return run_syn(config, out, err);
        case Command::min:
          return run_min(config, out, err);
        case Command::dual:
          return run_dual(config, out, err);
        case Command::check:
          return run_check(config, out, err);
        case Command::corpus:
          return run_corpus(config, out, err);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_config;
    } catch (CapacityError const& e) {
      err << "capacity: " << e.what() << "\n";
      return exit_capacity;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return exit_config;
    }
    return exit_config;
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Syntactic monoids and algebras of regular languages"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig   c;
    std::string variety;
    std::string format = "table";
    app.add_option("--variety", variety, "set, pos, pset, inv, jsl or vect")
        ->check(CLI::IsMember({"set", "pos", "pset", "inv", "jsl", "vect"}));
    app.add_option("--prime", c.prime, "characteristic of the field for vect")
        ->capture_default_str();
    app.add_option("--alphabet", c.alphabet, "letters, one character each")->capture_default_str();
    auto* regex = app.add_option("--regex", c.regex, "regular expression");
    auto* dfa   = app.add_option("--dfa", c.dfa_path, "DFA in JSON form");
    regex->excludes(dfa);
    app.add_option("--format", format, "table, json, dot or csv")
        ->check(CLI::IsMember({"table", "json", "dot", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", c.seed, "seed for sampled verification")->capture_default_str();
    app.add_option("--max-jsl-states", c.limits.max_jsl_states)->capture_default_str();
    app.add_option("--max-dim", c.limits.max_dim)->capture_default_str();
    app.add_option("--max-elements", c.limits.max_elements)->capture_default_str();

    app.add_subcommand("syn", "print the syntactic algebra")->callback([&] { c.command = Command::syn; });
    app.add_subcommand("min", "print the minimal automaton")->callback([&] { c.command = Command::min; });
    app.add_subcommand("dual", "verify the duality with the atoms of the reversed language")
        ->callback([&] { c.command = Command::dual; });
    app.add_subcommand("check", "run every invariant suite on one language")
        ->callback([&] { c.command = Command::check; });
    app.add_subcommand("corpus", "run the invariant suites on the built-in corpus")
        ->callback([&] { c.command = Command::corpus; });

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
      app.parse(reversed_args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_config;
    }
    if (!variety.empty()) {
      try {
        c.variety = parse_variety(variety, c.prime).variety;
      } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
      }
    }
    c.format = format == "json"  ? Format::json
               : format == "dot" ? Format::dot
               : format == "csv" ? Format::csv
                                 : Format::table;
    return run(c, out, err);
  }

}  // namespace synmon::cli
