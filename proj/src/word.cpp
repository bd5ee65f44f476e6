#include "raag/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <queue>
#include <unordered_set>

#include "raag/errors.hpp"

namespace raag {

namespace {

constexpr int kMarker = -1;

void check_letters(const SimplicialGraph& g, const Word& w) {
  for (Letter x : w) {
    if (!g.contains(x.vertex)) throw LookupError("letter names unknown vertex index " + std::to_string(x.vertex.index));
    if (x.sign != 1 && x.sign != -1) throw UsageError("letter sign must be +1 or -1");
  }
}

void require_same_graph(const RaagElement& x, const RaagElement& y) {
  if (x.graph() != y.graph()) throw UsageError("elements belong to different graphs");
}

}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word parse_word(const SimplicialGraph& g, std::string_view text) {
  Word out;
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.size() == 1 && tokens.front() == "1" && !g.lookup("1")) return out;

  for (std::string_view token : tokens) {
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    long long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
        throw ParseError(0, "bad exponent in token '" + std::string(token) + "'");
      }
      if (exponent == 0) throw ParseError(0, "zero exponent in token '" + std::string(token) + "'");
    }
    if (name.empty()) throw ParseError(0, "missing generator in token '" + std::string(token) + "'");
    auto v = g.lookup(name);
    if (!v) throw LookupError("unknown generator '" + std::string(name) + "'");
    Letter letter{*v, exponent > 0 ? 1 : -1};
    out.insert(out.end(), static_cast<std::size_t>(exponent > 0 ? exponent : -exponent), letter);
  }
  return out;
}

std::string format_word(const SimplicialGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i].vertex);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

// Piling: one stack per vertex holding letter positions or markers. A letter
// on v pushes itself on v's stack and a marker on every stack of a vertex
// not commuting with v. A letter meeting its inverse on top of its own stack
// cancels it; the markers that inverse left are then the only entries above
// it on the other stacks, so popping one marker from each is exact.
Word free_reduce(const SimplicialGraph& g, const Word& w) {
  check_letters(g, w);
  std::vector<std::vector<int>> stacks(g.size());
  std::vector<bool> alive(w.size(), true);

  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter x = w[i];
    auto& own = stacks[x.vertex.index];
    if (!own.empty() && own.back() != kMarker && w[static_cast<std::size_t>(own.back())] == x.inverse()) {
      alive[static_cast<std::size_t>(own.back())] = false;
      alive[i] = false;
      own.pop_back();
      for (auto u : g.non_commuting(x.vertex)) stacks[u].pop_back();
      continue;
    }
    own.push_back(static_cast<int>(i));
    for (auto u : g.non_commuting(x.vertex)) stacks[u].push_back(kMarker);
  }

  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alive[i]) out.push_back(w[i]);
  }
  return out;
}

// Lexicographic normal form of a trace: topological sort of the dependency
// order (letters on equal or non-commuting vertices keep their relative
// order), always emitting the least available letter.
Word lex_normal_form(const SimplicialGraph& g, const Word& w) {
  check_letters(g, w);
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::size_t> pending(n, 0);
  std::vector<long> last(g.size(), -1);

  for (std::size_t j = 0; j < n; ++j) {
    const auto v = w[j].vertex.index;
    auto depend_on = [&](std::uint32_t u) {
      if (last[u] >= 0) {
        successors[static_cast<std::size_t>(last[u])].push_back(j);
        ++pending[j];
      }
    };
    depend_on(v);
    for (auto u : g.non_commuting(w[j].vertex)) depend_on(u);
    last[v] = static_cast<long>(j);
  }

  using Entry = std::pair<Letter, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t j = 0; j < n; ++j) {
    if (pending[j] == 0) ready.push({w[j], j});
  }
  Word out;
  out.reserve(n);
  while (!ready.empty()) {
    auto [letter, j] = ready.top();
    ready.pop();
    out.push_back(letter);
    for (auto k : successors[j]) {
      if (--pending[k] == 0) ready.push({w[k], k});
    }
  }
  return out;
}

RaagElement reduce(GraphPtr g, const Word& w) {
  if (!g) throw UsageError("null graph");
  Word nf = lex_normal_form(*g, free_reduce(*g, w));
  return RaagElement(std::move(g), std::move(nf));
}

RaagElement RaagElement::identity(GraphPtr g) { return reduce(std::move(g), {}); }

RaagElement RaagElement::generator(GraphPtr g, VertexId v, int sign) {
  return reduce(std::move(g), Word{Letter{v, sign}});
}

RaagElement multiply(const RaagElement& x, const RaagElement& y) {
  require_same_graph(x, y);
  Word w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return reduce(x.graph(), w);
}

RaagElement invert(const RaagElement& x) { return reduce(x.graph(), inverse_word(x.word())); }

RaagElement conjugate(const RaagElement& x, const RaagElement& by) {
  require_same_graph(x, by);
  Word w = by.word();
  w.insert(w.end(), x.word().begin(), x.word().end());
  Word tail = inverse_word(by.word());
  w.insert(w.end(), tail.begin(), tail.end());
  return reduce(x.graph(), w);
}

RaagElement power(const RaagElement& x, long long k) {
  const RaagElement base = k < 0 ? invert(x) : x;
  Word w;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) w.insert(w.end(), base.word().begin(), base.word().end());
  return reduce(x.graph(), w);
}

std::vector<long long> exponent_sums(const SimplicialGraph& g, const Word& w) {
  check_letters(g, w);
  std::vector<long long> sums(g.size(), 0);
  for (Letter x : w) sums[x.vertex.index] += x.sign;
  return sums;
}

std::vector<long long> exponent_sums(const RaagElement& x) { return exponent_sums(*x.graph(), x.word()); }

bool is_central(const RaagElement& x) {
  return std::all_of(x.word().begin(), x.word().end(),
                     [&](Letter l) { return x.graph()->is_central_vertex(l.vertex); });
}

bool oracle_equal(const SimplicialGraph& g, const Word& w1, const Word& w2, std::size_t budget) {
  check_letters(g, w1);
  check_letters(g, w2);

  // Two bytes per letter: vertex index (14 bits) and sign bit.
  auto encode = [](const Word& w) {
    std::string s;
    s.reserve(2 * w.size());
    for (Letter x : w) {
      const unsigned code = (x.vertex.index << 1) | (x.sign < 0 ? 1u : 0u);
      s.push_back(static_cast<char>(code & 0xff));
      s.push_back(static_cast<char>(code >> 8));
    }
    return s;
  };
  auto letter_at = [](const std::string& s, std::size_t i) {
    const unsigned code = static_cast<unsigned char>(s[2 * i]) | (static_cast<unsigned char>(s[2 * i + 1]) << 8);
    return Letter{VertexId{code >> 1}, (code & 1u) ? -1 : 1};
  };
  if (g.size() >= (1u << 14)) throw UsageError("graph too large for the word oracle");

  Word start = inverse_word(w1);
  start.insert(start.end(), w2.begin(), w2.end());
  std::string origin = encode(start);
  if (origin.empty()) return true;

  std::unordered_set<std::string> visited{origin};
  std::deque<std::string> frontier{origin};
  while (!frontier.empty()) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t len = current.size() / 2;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const Letter x = letter_at(current, i);
      const Letter y = letter_at(current, i + 1);
      std::string next;
      if (y == x.inverse()) {
        next = current.substr(0, 2 * i) + current.substr(2 * i + 4);
        if (next.empty()) return true;
      } else if (g.commute(x.vertex, y.vertex)) {
        next = current;
        std::swap(next[2 * i], next[2 * i + 2]);
        std::swap(next[2 * i + 1], next[2 * i + 3]);
      } else {
        continue;
      }
      if (visited.insert(next).second) {
        if (visited.size() > budget) {
          throw InconclusiveError("word oracle exceeded its budget of " + std::to_string(budget) + " states");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace raag
