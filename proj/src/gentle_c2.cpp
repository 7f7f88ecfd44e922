#include "schurlat/gentle_c2.hpp"

#include <algorithm>
#include <sstream>

#include "schurlat/error.hpp"

namespace schurlat {

namespace {

struct LetterInfo {
  Letter base;
  char const* name;
  std::size_t source;
  std::size_t target;
};

constexpr LetterInfo kLetters[] = {
    {Letter::E1, "e1", 0, 0},
    {Letter::E3, "e3", 2, 2},
    {Letter::A12, "a12", 1, 0},
    {Letter::A23, "a23", 2, 1},
};

LetterInfo const& info(Letter l) { return kLetters[static_cast<int>(l)]; }

bool is_loop(Letter l) { return l == Letter::E1 || l == Letter::E3; }

std::string letter_text(SignedLetter l) { return std::string(info(l.base).name) + (l.inverse ? "-" : ""); }

StringWord words(std::initializer_list<StringWord> parts) {
  StringWord out = *parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) out = concat(out, *it);
  return out;
}

StringWord checked(StringWord w) {
  w = reduce(w);
  if (!string_validate(w)) throw Error(ErrorCode::InvalidString, serialize(w) + " is not a string");
  return w;
}

std::size_t find_arrow(HPresentation const& pres, std::size_t target, std::size_t source) {
  auto const& arrows = pres.arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].target == target && arrows[a].source == source) return a;
  throw Error(ErrorCode::DimensionMismatch, "presentation has no arrow " + std::to_string(source + 1) + " -> " +
                                                std::to_string(target + 1));
}

}  // namespace

std::size_t SignedLetter::source() const noexcept { return inverse ? info(base).target : info(base).source; }
std::size_t SignedLetter::target() const noexcept { return inverse ? info(base).source : info(base).target; }

StringWord StringWord::of(std::vector<SignedLetter> letters) {
  std::size_t const v = letters.empty() ? 0 : letters.front().target();
  return StringWord{std::move(letters), v};
}

std::vector<std::size_t> StringWord::walk() const {
  std::vector<std::size_t> z{vertex};
  for (auto const& l : letters) z.push_back(l.source());
  return z;
}

StringWord inverse(StringWord const& w) {
  StringWord out;
  out.vertex = w.walk().back();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverted());
  return out;
}

StringWord concat(StringWord const& a, StringWord const& b) {
  if (a.empty()) return b;
  StringWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

StringWord power(StringWord const& w, int k) {
  StringWord const base = k < 0 ? inverse(w) : w;
  StringWord out = StringWord::trivial(base.vertex);
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

StringWord reduce(StringWord const& w) {
  StringWord out;
  out.vertex = w.vertex;
  for (auto const& l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

StringWord canonical(StringWord const& w) {
  StringWord const inv = inverse(w);
  return serialize(inv) < serialize(w) ? inv : w;
}

bool string_validate(StringWord const& w) {
  if (w.vertex > 2) return false;
  if (w.empty()) return true;
  if (w.letters.front().target() != w.vertex) return false;
  for (std::size_t k = 1; k < w.letters.size(); ++k) {
    SignedLetter const prev = w.letters[k - 1], cur = w.letters[k];
    if (cur.target() != prev.source()) return false;
    if (cur == prev.inverted()) return false;
    if (is_loop(cur.base) && cur == prev) return false;
  }
  return true;
}

std::string serialize(StringWord const& w) {
  if (w.empty()) return "1_" + std::to_string(w.vertex + 1);
  std::string s;
  for (auto const& l : w.letters) s += (s.empty() ? "" : " ") + letter_text(l);
  return s;
}

StringWord parse_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "empty string word");
  if (tokens.size() == 1 && tokens[0].size() == 3 && tokens[0].starts_with("1_")) {
    char const v = tokens[0][2];
    if (v >= '1' && v <= '3') return StringWord::trivial(static_cast<std::size_t>(v - '1'));
  }
  std::vector<SignedLetter> letters;
  for (auto tok : tokens) {
    bool const inv = tok.ends_with("-");
    if (inv) tok.pop_back();
    auto it = std::find_if(std::begin(kLetters), std::end(kLetters), [&](LetterInfo const& li) { return tok == li.name; });
    if (it == std::end(kLetters)) throw Error(ErrorCode::ParseError, "unknown letter '" + tok + "'");
    letters.push_back({it->base, inv});
  }
  return StringWord::of(std::move(letters));
}

CartanData c2_datum() { return named_datum("C2~"); }

HPresentation c2_presentation(FieldSpec field) { return presentation(c2_datum(), field); }

GenModule string_module(HPresentation const& pres, StringWord const& w) {
  if (!string_validate(w)) throw Error(ErrorCode::InvalidString, serialize(w) + " is not a string");
  if (pres.vertices() != 3) throw Error(ErrorCode::DimensionMismatch, "string modules live on three vertices");
  std::size_t const a12 = find_arrow(pres, 0, 1);
  std::size_t const a23 = find_arrow(pres, 1, 2);

  std::vector<std::size_t> const z = w.walk();
  GenModule m = zero_module(pres);
  std::vector<std::size_t> position(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) position[k] = m.dims[z[k]]++;
  for (std::size_t i = 0; i < 3; ++i) m.eps[i] = FpMatrix(m.dims[i], m.dims[i]);
  for (auto const& a : pres.arrows()) {
    std::size_t const idx = find_arrow(pres, a.target, a.source);
    m.arrows[idx] = FpMatrix(m.dims[a.target], m.dims[a.source]);
  }
  for (std::size_t k = 1; k < z.size(); ++k) {
    SignedLetter const l = w.letters[k - 1];
    // Direct: z_k -> z_{k-1}; inverse: z_{k-1} -> z_k.
    std::size_t const from = l.inverse ? k - 1 : k;
    std::size_t const to = l.inverse ? k : k - 1;
    FpMatrix* target = nullptr;
    switch (l.base) {
      case Letter::E1: target = &m.eps[0]; break;
      case Letter::E3: target = &m.eps[2]; break;
      case Letter::A12: target = &m.arrows[a12]; break;
      case Letter::A23: target = &m.arrows[a23]; break;
    }
    (*target)(position[to], position[from]) = 1;
  }
  return m;
}

std::optional<RootVector> rank_of_string(HPresentation const& pres, StringWord const& w) {
  return is_locally_free(pres, string_module(pres, w));
}

StringWord named_string(std::string_view name) {
  static constexpr std::pair<std::string_view, std::string_view> kNamed[] = {
      {"p1", "e1"},
      {"p2", "e1 a12"},
      {"p3", "e1 a12 a23 e3 a23- a12- e1-"},
      {"q1", "e3- a23- a12- e1 a12 a23 e3"},
      {"q2", "a23 e3"},
      {"q3", "e3"},
      {"h1", "a12"},
      {"h2", "a23 e3- a23- a12- e1-"},
      {"c2", "a12- e1 a12 a23 e3"},
      {"c3", "a23-"},
      {"p1'", "1_1"},
      {"p3'", "a23- a12- e1-"},
      {"q1'", "a12 a23 e3"},
      {"q3'", "1_3"},
      {"R1", "1_2"},
      {"R2", "e1 a12 a23 e3"},
      {"1_1", "1_1"},
      {"1_2", "1_2"},
      {"1_3", "1_3"},
  };
  for (auto const& [key, text] : kNamed)
    if (key == name) return parse_string(text);
  throw Error(ErrorCode::ParseError, "unknown named string '" + std::string(name) + "'");
}

StringWord tau_string(TauDirection dir, std::size_t vertex, std::size_t m) {
  if (vertex > 2) throw Error(ErrorCode::IndexOutOfRange, "vertex must be 1, 2 or 3");
  int const n = static_cast<int>(m / 2);
  bool const odd = m % 2 == 1;
  std::string const idx = std::to_string(vertex + 1);
  if (dir == TauDirection::Minus) {
    StringWord const h1 = named_string("h1"), h2 = named_string("h2");
    StringWord const h12 = concat(h1, h2), h21 = concat(h2, h1);
    StringWord const p = named_string("p" + idx);
    if (vertex == 1) {
      StringWord const core = words({power(h12, -n), p, power(h21, n)});
      return checked(odd ? words({inverse(h1), core, h2}) : core);
    }
    StringWord const core = words({power(h12, -n), p, power(h12, n)});
    return checked(odd ? words({inverse(h1), core, h1}) : core);
  }
  StringWord const c2 = named_string("c2"), c3 = named_string("c3");
  StringWord const c23 = concat(c2, c3), c32 = concat(c3, c2);
  StringWord const q = named_string("q" + idx);
  if (vertex == 1) {
    StringWord const core = words({power(c23, -n), q, power(c32, n)});
    return checked(odd ? words({inverse(c2), core, c3}) : core);
  }
  StringWord const core = words({power(c32, -n), q, power(c32, n)});
  return checked(odd ? words({inverse(c3), core, c3}) : core);
}

std::vector<StringWord> tau_orbit(TauDirection dir, std::size_t vertex, std::size_t steps) {
  std::vector<StringWord> out;
  for (std::size_t m = 0; m <= steps; ++m) out.push_back(tau_string(dir, vertex, m));
  return out;
}

StringWord dij_string(TauDirection dir, std::size_t vertex, std::size_t m) {
  if (vertex > 2) throw Error(ErrorCode::UndefinedCase, "no brick formula for vertex " + std::to_string(vertex + 1));
  if (vertex == 1) return tau_string(dir, vertex, m);
  int const n = static_cast<int>(m / 2);
  bool const odd = m % 2 == 1;
  std::string const idx = std::to_string(vertex + 1);
  if (dir == TauDirection::Minus) {
    StringWord const h1 = named_string("h1");
    StringWord const core = concat(named_string("p" + idx + "'"), power(concat(h1, named_string("h2")), n));
    return checked(odd ? concat(core, h1) : core);
  }
  StringWord const c3 = named_string("c3");
  StringWord const core = concat(named_string("q" + idx + "'"), power(concat(c3, named_string("c2")), n));
  return checked(odd ? concat(core, c3) : core);
}

}  // namespace schurlat
