#pragma once

// Brute-force reference implementations used only by the tests. None of
// these go through the library's automata: regexes are matched by naive
// backtracking over the syntax tree.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synmon/langcore.hpp"

namespace oracle {

  using synmon::Regex;

  // End positions of matches of r in w starting at i.
  inline std::set<std::size_t> ends(Regex const& r, std::string const& w, std::size_t i) {
    switch (r.kind) {
      case Regex::Kind::empty:
        return {};
      case Regex::Kind::epsilon:
        return {i};
      case Regex::Kind::literal:
        if (i < w.size() && w[i] == r.letter) {
          return {i + 1};
        }
        return {};
      case Regex::Kind::alternation: {
        auto l = ends(r.children[0], w, i);
        auto s = ends(r.children[1], w, i);
        l.insert(s.begin(), s.end());
        return l;
      }
      case Regex::Kind::concatenation: {
        std::set<std::size_t> out;
        for (auto j : ends(r.children[0], w, i)) {
          auto s = ends(r.children[1], w, j);
          out.insert(s.begin(), s.end());
        }
        return out;
      }
      case Regex::Kind::star: {
        std::set<std::size_t>    out{i};
        std::vector<std::size_t> todo{i};
        while (!todo.empty()) {
          auto j = todo.back();
          todo.pop_back();
          for (auto k : ends(r.children[0], w, j)) {
            if (out.insert(k).second) {
              todo.push_back(k);
            }
          }
        }
        return out;
      }
    }
    return {};
  }

  inline bool matches(Regex const& r, std::string const& w) {
    return ends(r, w, 0).count(w.size()) > 0;
  }

  // All words over `letters` of length <= n, shortest first.
  inline std::vector<std::string> words(std::string const& letters, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() == n) {
        continue;
      }
      for (char c : letters) {
        out.push_back(out[i] + c);
      }
    }
    return out;
  }

  // Random regex text over {a, b}.
  inline std::string random_regex(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
    switch (pick(rng)) {
      case 0:
        return "a";
      case 1:
        return "b";
      case 2:
        return std::uniform_int_distribution<int>(0, 5)(rng) == 0 ? "ε" : "a";
      case 3:
      case 4:
        return "(" + random_regex(rng, depth - 1) + random_regex(rng, depth - 1) + ")";
      case 5:
        return "(" + random_regex(rng, depth - 1) + "|" + random_regex(rng, depth - 1) + ")";
      default:
        return "(" + random_regex(rng, depth - 1) + ")*";
    }
  }

  // Distinct residual functions v -> [u v in L] over words u, v of length <= n.
  inline std::set<std::vector<bool>> residual_rows(Regex const&       r,
                                                   std::string const& letters,
                                                   std::size_t        n) {
    auto const                  ws = words(letters, n);
    std::set<std::vector<bool>> seen;
    for (auto const& u : ws) {
      std::vector<bool> row;
      for (auto const& v : ws) {
        row.push_back(matches(r, u + v));
      }
      seen.insert(row);
    }
    return seen;
  }

  inline std::size_t residual_count(Regex const& r, std::string const& letters, std::size_t n) {
    return residual_rows(r, letters, n).size();
  }

  // Distinct unions of residuals (the empty union included).
  inline std::size_t union_count(std::set<std::vector<bool>> const& rows) {
    std::set<std::vector<bool>> unions;
    std::size_t const           width = rows.begin()->size();
    unions.insert(std::vector<bool>(width, false));
    for (auto const& row : rows) {
      std::set<std::vector<bool>> next = unions;
      for (auto u : unions) {
        for (std::size_t i = 0; i < width; ++i) {
          u[i] = u[i] || row[i];
        }
        next.insert(u);
      }
      unions = std::move(next);
    }
    return unions.size();
  }

  // Rank over F_p of the 0/1 matrix [u v in L], by plain Gaussian elimination.
  inline std::size_t hankel_rank(Regex const& r, std::string const& letters, std::size_t n,
                                 std::uint64_t p) {
    auto const                              ws = words(letters, n);
    std::vector<std::vector<std::uint64_t>> m;
    for (auto const& u : ws) {
      std::vector<std::uint64_t> row;
      for (auto const& v : ws) {
        row.push_back(matches(r, u + v) ? 1 : 0);
      }
      m.push_back(row);
    }
    auto power = [p](std::uint64_t b, std::uint64_t e) {
      std::uint64_t x = 1;
      for (; e > 0; --e) {
        x = x * b % p;
      }
      return x;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ws.size() && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) {
        ++piv;
      }
      if (piv == m.size()) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      std::uint64_t const inv = power(m[rank][c], p - 2);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != rank && m[i][c] != 0) {
          std::uint64_t const f = m[i][c] * inv % p;
          for (std::size_t j = 0; j < ws.size(); ++j) {
            m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  // Syntactic profile of u: [x u y in L] over contexts x, y of length <= k.
  inline std::vector<bool> context_profile(Regex const& r, std::string const& letters,
                                           std::string const& u, std::size_t k) {
    auto const        ctx = words(letters, k);
    std::vector<bool> p;
    for (auto const& x : ctx) {
      for (auto const& y : ctx) {
        p.push_back(matches(r, x + u + y));
      }
    }
    return p;
  }

  // Number of syntactic classes met by words of length <= n, separated by
  // contexts of length <= k.
  inline std::size_t syntactic_class_count(Regex const& r, std::string const& letters,
                                           std::size_t n, std::size_t k) {
    std::set<std::vector<bool>> seen;
    for (auto const& u : words(letters, n)) {
      seen.insert(context_profile(r, letters, u, k));
    }
    return seen.size();
  }

}  // namespace oracle
