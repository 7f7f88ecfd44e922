#include "schurlat/schur.hpp"

#include <deque>
#include <set>

#include "schurlat/error.hpp"

namespace schurlat {

bool is_exceptional(CartanData const& data, ExceptionalSequence const& seq) {
  if (seq.entries.size() != data.rank()) return false;
  for (std::size_t i = 0; i < seq.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (euler_form(data, seq.entries[j], seq.entries[i]) != 0) return false;
  return true;
}

namespace {

RootVector positive_part(RootVector v) {
  if (v.is_positive()) return v;
  if ((-v).is_positive()) return -v;
  throw Error(ErrorCode::InvariantBroken, v.str() + " is neither a positive nor a negative root");
}

}  // namespace

ExceptionalSequence braid_move(CartanData const& data, ExceptionalSequence const& seq, std::size_t i,
                               BraidDirection direction) {
  if (i + 1 >= seq.entries.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "braid generator " + std::to_string(i + 1));
  }
  ExceptionalSequence out = seq;
  RootVector const& a = seq.entries[i];
  RootVector const& b = seq.entries[i + 1];
  if (direction == BraidDirection::Forward) {
    out.entries[i] = positive_part(reflect(data, a, b));
    out.entries[i + 1] = a;
  } else {
    out.entries[i] = b;
    out.entries[i + 1] = positive_part(reflect(data, b, a));
  }
  if (!is_exceptional(data, out)) {
    throw Error(ErrorCode::InvariantBroken, "braid move left the set of exceptional sequences");
  }
  return out;
}

ExceptionalSequence standard_sequence(CartanData const& data) {
  ExceptionalSequence seq;
  for (std::size_t i = 0; i < data.rank(); ++i) seq.entries.push_back(RootVector::unit(data.rank(), i));
  return seq;
}

namespace {

bool inside(ExceptionalSequence const& seq, Int bound) {
  for (auto const& e : seq.entries)
    if (e.max_abs() > bound) return false;
  return true;
}

template <class Visit>
void braid_bfs(CartanData const& data, Int bound, Visit&& visit) {
  if (bound < 1) throw Error(ErrorCode::BoundTooSmall, "bound must be >= 1");
  std::set<ExceptionalSequence> seen;
  std::deque<ExceptionalSequence> queue;
  ExceptionalSequence start = standard_sequence(data);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    ExceptionalSequence const seq = std::move(queue.front());
    queue.pop_front();
    visit(seq);
    for (std::size_t i = 0; i + 1 < data.rank(); ++i) {
      for (auto dir : {BraidDirection::Forward, BraidDirection::Inverse}) {
        ExceptionalSequence next = braid_move(data, seq, i, dir);
        if (!inside(next, bound)) continue;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
}

}  // namespace

RootSet enumerate_schur(CartanData const& data, Int bound, SchurSearchStats* stats) {
  std::set<RootVector> roots;
  std::size_t visited = 0;
  braid_bfs(data, bound, [&](ExceptionalSequence const& seq) {
    ++visited;
    roots.insert(seq.entries.begin(), seq.entries.end());
  });
  if (stats) stats->sequences_visited = visited;
  return RootSet{bound, {roots.begin(), roots.end()}};
}

std::vector<ExceptionalSequence> braid_orbit(CartanData const& data, Int bound) {
  std::vector<ExceptionalSequence> out;
  braid_bfs(data, bound, [&](ExceptionalSequence const& seq) { out.push_back(seq); });
  return out;
}

bool is_schur_absolute(CartanData const& data, AbsoluteLengthTable const& table, RootVector const& beta) {
  if (!beta.is_positive()) throw Error(ErrorCode::NotARealRoot, beta.str() + " is not positive");
  WeylElement s;
  try {
    s = reflection_matrix(data, beta);
    dual_root(data, beta);
  } catch (Error const&) {
    throw Error(ErrorCode::NotARealRoot, beta.str() + " is not a real root");
  }
  WeylElement const c = coxeter_element(data);
  return table.length(compose(s, c)) + 1 == static_cast<int>(data.rank());
}

bool is_schur_absolute(CartanData const& data, RootVector const& beta) {
  return is_schur_absolute(data, AbsoluteLengthTable(data), beta);
}

RootSet schur_roots_absolute(CartanData const& data) {
  AbsoluteLengthTable const table(data);
  RootSet out{0, {}};
  for (auto const& beta : positive_roots(data)) {
    out.bound = std::max(out.bound, beta.max_abs());
    if (is_schur_absolute(data, table, beta)) out.roots.push_back(beta);
  }
  return out;
}

std::vector<std::pair<RootVector, RootVector>> dual_schur_check(CartanData const& data, Int bound) {
  CartanData const dual_data = transpose_data(data);
  RootSet const s = enumerate_schur(data, bound);
  RootSet const s_dual = enumerate_schur(dual_data, checked_mul(data.lcm(), bound));
  std::vector<std::pair<RootVector, RootVector>> pairs;
  std::set<RootVector> image;
  for (auto const& beta : s.roots) {
    RootVector d = dual_root(data, beta);
    if (!s_dual.contains(d)) {
      throw Error(ErrorCode::DualMissing, "dual " + d.str() + " of " + beta.str() + " not found");
    }
    if (!image.insert(d).second) throw Error(ErrorCode::InvariantBroken, "dual map not injective");
    pairs.emplace_back(beta, std::move(d));
  }
  if (is_finite_type(data) && image.size() != s_dual.roots.size()) {
    throw Error(ErrorCode::DualMissing, "dual map is not onto the dual Schur roots");
  }
  return pairs;
}

}  // namespace schurlat
