#include "shiftmax/debruijn.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace shiftmax {

DeBruijnGraph::DeBruijnGraph(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxGraphLevel)
    throw Error("de Bruijn level must lie in 1.." + std::to_string(kMaxGraphLevel));
}

namespace {

Word rotate(const Word& w, unsigned r) {
  if (w.empty() || r == 0) return w;
  return Word(((w.bits() << r) | (w.bits() >> (w.length() - r))) & (word_count(w.length()) - 1), w.length());
}

Word primitive_root(const Word& w) {
  const unsigned len = w.length();
  for (unsigned d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    if (rotate(w, d) == w) return w.prefix(d);
  }
  return w;
}

unsigned least_rotation(const Word& w) {
  unsigned best = 0;
  for (unsigned r = 1; r < w.length(); ++r)
    if (rotate(w, r).bits() < rotate(w, best).bits()) best = r;
  return best;
}

}  // namespace

PeriodicMeasure::PeriodicMeasure(const Word& word) {
  if (word.empty()) throw Error("a periodic orbit needs a nonempty word");
  Word root = primitive_root(word);
  word_ = rotate(root, least_rotation(root));
}

Word PeriodicMeasure::orbit_prefix(unsigned i, unsigned k) const {
  std::uint64_t bits = 0;
  const unsigned p = period();
  for (unsigned j = 0; j < k; ++j) bits = (bits << 1) | static_cast<std::uint64_t>(word_.at((i + j) % p));
  return Word(bits, k);
}

std::vector<Rational> PeriodicMeasure::frequencies(unsigned k) const {
  if (k > kMaxGraphLevel) throw Error("frequency level too large");
  std::vector<Rational> pi(word_count(k), Rational(0));
  const Rational unit(1, period());
  for (unsigned i = 0; i < period(); ++i) pi[orbit_prefix(i, k).bits()] += unit;
  return pi;
}

PeriodicMeasure Cycle::measure() const {
  std::uint64_t bits = 0;
  for (auto a : arcs) bits = (bits << 1) | ((a >> (n - 1)) & 1U);
  return PeriodicMeasure(Word(bits, length()));
}

ArcSet Cycle::arc_set() const {
  ArcSet s(word_count(n));
  for (auto a : arcs) s.set(a);
  return s;
}

namespace {

class CircuitSearch {
 public:
  explicit CircuitSearch(const DeBruijnGraph& g)
      : g_(g), blocked_(g.node_count(), false), blocked_by_(g.node_count()) {}

  std::vector<Cycle> run() {
    for (start_ = 0; start_ < g_.node_count(); ++start_) {
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto& b : blocked_by_) b.clear();
      circuit(start_);
    }
    return std::move(found_);
  }

 private:
  bool circuit(std::uint64_t v) {
    bool closed = false;
    blocked_[v] = true;
    for (auto arc : g_.out_arcs(v)) {
      auto w = g_.target(arc);
      if (w < start_) continue;
      path_.push_back(arc);
      if (w == start_) {
        emit();
        closed = true;
      } else if (!blocked_[w] && circuit(w)) {
        closed = true;
      }
      path_.pop_back();
    }
    if (closed) {
      unblock(v);
    } else {
      for (auto arc : g_.out_arcs(v)) {
        auto w = g_.target(arc);
        if (w >= start_) blocked_by_[w].insert(v);
      }
    }
    return closed;
  }

  void unblock(std::uint64_t u) {
    blocked_[u] = false;
    auto waiting = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (auto w : waiting)
      if (blocked_[w]) unblock(w);
  }

  void emit() {
    Cycle c{g_.n(), path_};
    // Rotate so the arc sequence starts at the canonical rotation.
    std::uint64_t bits = 0;
    for (auto a : c.arcs) bits = (bits << 1) | ((a >> (g_.n() - 1)) & 1U);
    unsigned r = least_rotation(Word(bits, c.length()));
    std::rotate(c.arcs.begin(), c.arcs.begin() + r, c.arcs.end());
    found_.push_back(std::move(c));
  }

  const DeBruijnGraph& g_;
  std::uint64_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::set<std::uint64_t>> blocked_by_;
  std::vector<std::uint64_t> path_;
  std::vector<Cycle> found_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const DeBruijnGraph& g, unsigned cap) {
  if (g.n() > cap) throw Error("cycle enumeration cap exceeded (n = " + std::to_string(g.n()) + " > " +
                               std::to_string(cap) + ")");
  auto cycles = CircuitSearch(g).run();
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) keys.emplace_back(cycles[i].measure().str(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    return x.first.size() != y.first.size() ? x.first.size() < y.first.size() : x.first < y.first;
  });
  std::vector<Cycle> sorted;
  sorted.reserve(cycles.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(cycles[i]));
  return sorted;
}

const std::vector<Cycle>& cycles_of(unsigned n, unsigned cap) {
  if (n > cap) throw Error("cycle enumeration cap exceeded (n = " + std::to_string(n) + " > " +
                           std::to_string(cap) + ")");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const std::vector<Cycle>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const std::vector<Cycle>>(enumerate_cycles(DeBruijnGraph(n), cap));
  return *slot;
}

std::uint64_t hamiltonian_count(unsigned n, unsigned cap) {
  if (n < 2) throw Error("Hamiltonian count needs n >= 2");
  const auto full = static_cast<unsigned>(word_count(n - 1));
  const auto& cycles = cycles_of(n, cap);
  return static_cast<std::uint64_t>(
      std::count_if(cycles.begin(), cycles.end(), [&](const Cycle& c) { return c.length() == full; }));
}

mpz_class hamiltonian_formula(unsigned n) {
  if (n < 2) throw Error("Hamiltonian count needs n >= 2");
  mpz_class r;
  long e = (1L << (n - 2)) - static_cast<long>(n) + 1;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

unsigned recursive_complexity(const PeriodicMeasure& m) {
  for (unsigned len = 0;; ++len) {
    std::set<Word> seen;
    bool distinct = true;
    for (unsigned i = 0; i < m.period() && distinct; ++i) distinct = seen.insert(m.orbit_prefix(i, len)).second;
    if (distinct) return len + 1;
  }
}

std::set<Word> basin(const PeriodicMeasure& m, unsigned k) {
  std::set<Word> out;
  for (unsigned i = 0; i < m.period(); ++i) out.insert(m.orbit_prefix(i, k));
  return out;
}

std::set<Word> basin_preimage_intersection(const PeriodicMeasure& m, unsigned n, unsigned s) {
  if (n + s > kMaxGraphLevel) throw Error("basin level too large");
  const auto base = basin(m, n);
  std::set<Word> out;
  for (std::uint64_t x = 0; x < word_count(n + s); ++x) {
    Word w(x, n + s);
    bool inside = true;
    for (unsigned j = 0; j <= s && inside; ++j) inside = base.contains(w.suffix_from(j).prefix(n));
    if (inside) out.insert(w);
  }
  return out;
}

bool basin_intersection_check(const PeriodicMeasure& m, unsigned n, unsigned s) {
  if (recursive_complexity(m) > n)
    throw Error("measure " + m.str() + " is not in C_" + std::to_string(n));
  return basin_preimage_intersection(m, n, s) == basin(m, n + s);
}

}  // namespace shiftmax
