#include "revlex/groebner.hpp"

#include <algorithm>
#include <set>

namespace revlex {

namespace {

// Monomial with cached degree and support mask for fast divisibility tests.
struct Mono {
  ExponentVector e;
  std::int64_t deg = 0;
  std::uint64_t mask = 0;

  Mono() = default;
  explicit Mono(ExponentVector v)
      : e(std::move(v)), deg(e.degree()), mask(e.support_mask()) {}
};

bool mono_divides(const Mono& a, const Mono& b) {
  if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

struct Element {
  Mono head;
  Mono tail;
};

// Replaces m by its normal form modulo the heads of `basis`. Each step
// swaps a head factor for the corresponding tail, so m strictly decreases.
void reduce_mono(Mono& m, const std::vector<Element>& basis,
                 const std::vector<bool>* active = nullptr) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active != nullptr && !(*active)[k]) continue;
      const auto& g = basis[k];
      if (!mono_divides(g.head, m)) continue;
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        m.e[i] = detail::checked_add(m.e[i] - g.head.e[i], g.tail.e[i]);
      }
      m.mask = m.e.support_mask();
      progress = true;
      break;
    }
  }
}

// Orients (p, q), optionally after cancelling their gcd; nullopt if p == q.
std::optional<Element> make_element(ExponentVector p, ExponentVector q,
                                    const MonomialOrder& order, bool cancel) {
  if (p == q) return std::nullopt;
  for (std::size_t i = 0; cancel && i < p.size(); ++i) {
    const Exponent c = std::min(p[i], q[i]);
    p[i] -= c;
    q[i] -= c;
  }
  Element el{Mono(std::move(p)), Mono(std::move(q))};
  if (order.compare(el.head.e, el.head.deg, el.tail.e, el.tail.deg) ==
      std::strong_ordering::less) {
    std::swap(el.head, el.tail);
  }
  return el;
}

struct Pair {
  Mono lcm;
  std::size_t i;
  std::size_t j;
};

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& order)
      : pairs_(Less{&order}) {}

  void push(Pair p) { pairs_.insert(std::move(p)); }
  bool empty() const { return pairs_.empty(); }
  Pair pop() {
    auto node = pairs_.extract(pairs_.begin());
    return std::move(node.value());
  }

 private:
  struct Less {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      const auto c = order->compare(a.lcm.e, a.lcm.deg, b.lcm.e, b.lcm.deg);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, Less> pairs_;
};

Mono mono_lcm(const Mono& a, const Mono& b) {
  return Mono(lcm(a.e, b.e));
}

// Symmetric table of pairs still waiting in the queue.
class PendingTable {
 public:
  void grow(std::size_t n) {
    for (auto& row : rows_) row.resize(n, false);
    rows_.resize(n, std::vector<bool>(n, false));
  }
  void set(std::size_t i, std::size_t j, bool v) {
    rows_[i][j] = v;
    rows_[j][i] = v;
  }
  bool get(std::size_t i, std::size_t j) const { return rows_[i][j]; }

 private:
  std::vector<std::vector<bool>> rows_;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, BuchbergerStats* stats, bool cancel = true)
      : order_(order), queue_(order), stats_(stats), cancel_(cancel) {}

  void add_generator(const ExponentVector& plus, const ExponentVector& minus) {
    Mono p(plus);
    Mono q(minus);
    reduce_mono(p, basis_);
    reduce_mono(q, basis_);
    auto el = make_element(std::move(p.e), std::move(q.e), order_, cancel_);
    if (el) insert(std::move(*el));
  }

  void run() {
    while (!queue_.empty()) {
      Pair pair = queue_.pop();
      pending_.set(pair.i, pair.j, false);
      if (stats_) ++stats_->pairs_considered;
      const auto& gi = basis_[pair.i];
      const auto& gj = basis_[pair.j];
      if ((gi.head.mask & gj.head.mask) == 0) {
        if (stats_) ++stats_->pairs_skipped_coprime;
        continue;
      }
      if (chain_criterion(pair)) {
        if (stats_) ++stats_->pairs_skipped_chain;
        continue;
      }
      // S(gi, gj) = (L/hi) ti - (L/hj) tj
      Mono a(pair.lcm.e - gi.head.e + gi.tail.e);
      Mono b(pair.lcm.e - gj.head.e + gj.tail.e);
      reduce_mono(a, basis_);
      reduce_mono(b, basis_);
      auto el = make_element(std::move(a.e), std::move(b.e), order_, cancel_);
      if (!el) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(std::move(*el));
    }
  }

  std::vector<detail::RawBinomial> reduced_basis() const {
    const std::size_t n = basis_.size();
    std::vector<bool> keep(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        if (mono_divides(basis_[j].head, basis_[i].head)) keep[i] = false;
      }
    }
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < n; ++i) {
      if (keep[i]) minimal.push_back(basis_[i]);
    }
    std::vector<detail::RawBinomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<bool> others(minimal.size(), true);
      others[i] = false;
      Mono tail = minimal[i].tail;
      reduce_mono(tail, minimal, &others);
      // Any common factor of head and reduced tail is kept; cancelling it is
      // only valid modulo a prime ideal.
      out.push_back({minimal[i].head.e, std::move(tail.e)});
    }
    std::sort(out.begin(), out.end(),
              [this](const detail::RawBinomial& x, const detail::RawBinomial& y) {
                return order_.less(x.head, y.head);
              });
    return out;
  }

 private:
  bool chain_criterion(const Pair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (pending_.get(pair.i, k) || pending_.get(pair.j, k)) continue;
      if (mono_divides(basis_[k].head, pair.lcm)) return true;
    }
    return false;
  }

  void insert(Element el) {
    const std::size_t t = basis_.size();
    basis_.push_back(std::move(el));
    pending_.grow(basis_.size());
    if (stats_) ++stats_->elements_added;
    for (std::size_t k = 0; k < t; ++k) {
      queue_.push(Pair{mono_lcm(basis_[k].head, basis_[t].head), k, t});
      pending_.set(k, t, true);
    }
  }

  const MonomialOrder& order_;
  std::vector<Element> basis_;
  PairQueue queue_;
  PendingTable pending_;
  BuchbergerStats* stats_;
  bool cancel_;
};

std::vector<Element> to_elements(std::span<const Binomial> basis) {
  std::vector<Element> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back({Mono(g.plus()), Mono(g.minus())});
  return out;
}

void require_vars(const MonomialOrder& order, std::size_t n) {
  if (order.num_vars() != n) {
    throw Error("monomial order has " + std::to_string(order.num_vars()) +
                " variables, binomials have " + std::to_string(n));
  }
  if (n > 64) throw Error("at most 64 variables are supported");
}

}  // namespace

bool GroebnerBasis::is_quadratic() const noexcept {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const Binomial& g) { return g.degree() == 2; });
}

std::int64_t GroebnerBasis::max_degree() const noexcept {
  std::int64_t d = 0;
  for (const auto& g : elements_) d = std::max(d, g.degree());
  return d;
}

ExponentVector normal_form(ExponentVector m, std::span<const Binomial> basis) {
  const auto elements = to_elements(basis);
  Mono mono(std::move(m));
  reduce_mono(mono, elements);
  return std::move(mono.e);
}

std::optional<Binomial> reduce(const Binomial& g, std::span<const Binomial> basis,
                               const MonomialOrder& order) {
  require_vars(order, g.num_vars());
  const auto elements = to_elements(basis);
  Mono p(g.plus());
  Mono q(g.minus());
  reduce_mono(p, elements);
  reduce_mono(q, elements);
  auto b = Binomial::make(std::move(p.e), std::move(q.e));
  if (!b) return std::nullopt;
  return b->oriented(order);
}

GroebnerBasis buchberger(std::span<const Binomial> generators,
                         const MonomialOrder& order, BuchbergerStats* stats) {
  if (generators.empty()) return GroebnerBasis(order, {});
  Engine engine(order, stats);
  for (const auto& g : generators) {
    require_vars(order, g.num_vars());
    engine.add_generator(g.plus(), g.minus());
  }
  engine.run();
  std::vector<Binomial> elements;
  for (auto& raw : engine.reduced_basis()) {
    // Inside a prime ideal a reduced element never has a common factor, so
    // this never changes the basis there.
    elements.push_back(*Binomial::make(std::move(raw.head), std::move(raw.tail)));
  }
  return GroebnerBasis(order, std::move(elements));
}

namespace detail {

std::vector<RawBinomial> buchberger_raw(std::span<const RawBinomial> generators,
                                        const MonomialOrder& order,
                                        BuchbergerStats* stats, bool cancel_common_factors) {
  Engine engine(order, stats, cancel_common_factors);
  for (const auto& g : generators) {
    require_vars(order, g.head.size());
    detail::require_same_length(g.head, g.tail);
    engine.add_generator(g.head, g.tail);
  }
  engine.run();
  return engine.reduced_basis();
}

}  // namespace detail

std::vector<ExponentVector> initial_ideal_min_gens(const GroebnerBasis& gb) {
  std::vector<ExponentVector> out;
  out.reserve(gb.size());
  for (const auto& g : gb.elements()) out.push_back(g.plus());
  return out;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const auto l = lcm(els[i].plus(), els[j].plus());
      ExponentVector a = l - els[i].plus() + els[i].minus();
      ExponentVector b = l - els[j].plus() + els[j].minus();
      if (normal_form(std::move(a), els) != normal_form(std::move(b), els)) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!gb.order().less(els[i].minus(), els[i].plus())) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (divides(els[j].plus(), els[i].minus())) return false;
      if (i != j && divides(els[j].plus(), els[i].plus())) return false;
    }
  }
  return true;
}

}  // namespace revlex
