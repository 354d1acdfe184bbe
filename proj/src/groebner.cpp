#include "gbinterp/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gbinterp/errors.hpp"

namespace gbinterp {

namespace {

using Term = std::pair<ExponentVector, Rational>;
using OrdPoly = std::vector<Term>;  // strictly descending under the active order

OrdPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrdPoly out;
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, c);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.first, b.first);
  });
  return out;
}

Polynomial from_ordered(const OrdPoly& p, std::size_t nvars) {
  Polynomial out(nvars);
  for (const auto& [e, c] : p) out.add_term(e, c);
  return out;
}

void make_monic(OrdPoly& p) {
  if (p.empty() || p.front().second.is_one()) return;
  Rational inv = p.front().second.inverse();
  for (auto& [e, c] : p) c *= inv;
}

// out = f with f[pos] replaced by (tail of f) - c * X^shift * (tail of g);
// the leading term of the scaled g cancels f[pos] exactly (g is monic).
OrdPoly merge_subtract(const OrdPoly& f, std::size_t pos, const OrdPoly& g,
                       const ExponentVector& shift, const Rational& c,
                       const MonomialOrder& order) {
  OrdPoly out;
  out.reserve(f.size() + g.size());
  out.insert(out.end(), f.begin(), f.begin() + pos);
  std::size_t i = pos + 1, j = 1;
  ExponentVector ge;
  bool ge_valid = false;
  while (i < f.size() && j < g.size()) {
    if (!ge_valid) {
      ge = g[j].first.plus(shift);
      ge_valid = true;
    }
    auto cmp = order.compare(f[i].first, ge);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(f[i]);
      ++i;
    } else if (cmp == std::strong_ordering::less) {
      out.emplace_back(ge, -(c * g[j].second));
      ++j;
      ge_valid = false;
    } else {
      Rational nc = f[i].second - c * g[j].second;
      if (!nc.is_zero()) out.emplace_back(f[i].first, std::move(nc));
      ++i;
      ++j;
      ge_valid = false;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j)
    out.emplace_back(g[j].first.plus(shift), -(c * g[j].second));
  return out;
}

struct Generator {
  OrdPoly poly;  // monic
  ExponentVector lead;
  bool redundant = false;  // leading exponent covered by a newer generator
};

constexpr std::size_t kNoExclude = static_cast<std::size_t>(-1);

// Full (head and tail) reduction against every generator, first divisor in
// list order; deterministic. `exclude` skips one generator (autoreduction).
OrdPoly reduce_full(OrdPoly f, const std::vector<Generator>& gens,
                    const MonomialOrder& order,
                    std::size_t exclude = kNoExclude) {
  std::size_t pos = 0;
  while (pos < f.size()) {
    const ExponentVector& e = f[pos].first;
    const Generator* reducer = nullptr;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (g == exclude) continue;
      if (gens[g].lead.divides(e)) {
        reducer = &gens[g];
        break;
      }
    }
    if (!reducer) {
      ++pos;
      continue;
    }
    f = merge_subtract(f, pos, reducer->poly, e.minus(reducer->lead),
                       f[pos].second, order);
  }
  return f;
}

OrdPoly s_polynomial(const Generator& a, const Generator& b,
                     const MonomialOrder& order) {
  ExponentVector lcm = ExponentVector::lcm(a.lead, b.lead);
  ExponentVector sa = lcm.minus(a.lead);
  OrdPoly shifted;
  shifted.reserve(a.poly.size());
  for (const auto& [e, c] : a.poly) shifted.emplace_back(e.plus(sa), c);
  return merge_subtract(shifted, 0, b.poly, lcm.minus(b.lead), Rational(1),
                        order);
}

struct PendingPair {
  std::size_t i, j;  // i < j
  ExponentVector lcm;
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    auto c = order->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (auto s = a.lcm <=> b.lcm; s != std::strong_ordering::equal)
      return s == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

class BuchbergerRun {
 public:
  BuchbergerRun(const MonomialOrder& order, std::size_t nvars,
                std::size_t initial_count,
                const std::function<bool(std::size_t, std::size_t)>& keep)
      : order_(order),
        nvars_(nvars),
        initial_count_(initial_count),
        keep_initial_pair_(keep),
        queue_(PairLess{&order_}) {}

  void add_generator(OrdPoly poly) {
    const std::size_t t = gens_.size();
    ExponentVector lead = poly.front().first;

    // Chain criterion against pairs already queued.
    for (auto it = queue_.begin(); it != queue_.end();) {
      const PendingPair& p = *it;
      if (lead.divides(p.lcm) &&
          ExponentVector::lcm(gens_[p.i].lead, lead) != p.lcm &&
          ExponentVector::lcm(gens_[p.j].lead, lead) != p.lcm) {
        it = queue_.erase(it);
      } else {
        ++it;
      }
    }

    // Candidate pairs with the new generator.
    struct Cand {
      std::size_t i;
      ExponentVector lcm;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (gens_[i].redundant) continue;
      if (t < initial_count_ && keep_initial_pair_ &&
          !keep_initial_pair_(i, t))
        continue;
      cands.push_back({i, ExponentVector::lcm(gens_[i].lead, lead)});
    }
    // Drop candidates whose lcm is properly divided by another candidate's.
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (!a.alive || &a == &b) continue;
        if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
          a.alive = false;
          break;
        }
      }
    }
    // Equal-lcm classes: a coprime member kills the class, else keep one.
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].alive) continue;
      bool class_coprime = coprime(gens_[cands[x].i].lead, lead);
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (!cands[y].alive || cands[y].lcm != cands[x].lcm) continue;
        cands[y].alive = false;
        class_coprime =
            class_coprime || coprime(gens_[cands[y].i].lead, lead);
      }
      if (class_coprime) cands[x].alive = false;
    }
    for (const auto& c : cands)
      if (c.alive) queue_.insert({c.i, t, c.lcm});

    for (std::size_t i = 0; i < t; ++i)
      if (!gens_[i].redundant && lead.divides(gens_[i].lead))
        gens_[i].redundant = true;

    gens_.push_back({std::move(poly), std::move(lead)});
  }

  // True once the basis contains a unit.
  bool saw_unit() const {
    return !gens_.empty() && gens_.back().lead.is_zero();
  }

  void run() {
    while (!queue_.empty()) {
      PendingPair pair = *queue_.begin();
      queue_.erase(queue_.begin());
      OrdPoly s = s_polynomial(gens_[pair.i], gens_[pair.j], order_);
      s = reduce_full(std::move(s), gens_, order_);
      if (s.empty()) continue;
      make_monic(s);
      add_generator(std::move(s));
      if (saw_unit()) {
        queue_.clear();
        break;
      }
    }
  }

  GroebnerBasis finish() {
    // Minimal basis: keep generators whose leading exponent is not
    // divisible by another kept one; scan ascending so smaller leads win.
    std::vector<std::size_t> idx(gens_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      auto c = order_.compare(gens_[a].lead, gens_[b].lead);
      if (c != std::strong_ordering::equal)
        return c == std::strong_ordering::less;
      return a < b;
    });
    std::vector<Generator> minimal;
    for (std::size_t i : idx) {
      bool covered = false;
      for (const auto& kept : minimal)
        if (kept.lead.divides(gens_[i].lead)) {
          covered = true;
          break;
        }
      if (!covered)
        minimal.push_back({std::move(gens_[i].poly), gens_[i].lead});
    }

    // Autoreduce tails until stable.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        OrdPoly r = reduce_full(minimal[i].poly, minimal, order_, i);
        if (r != minimal[i].poly) {
          minimal[i].poly = std::move(r);
          changed = true;
        }
      }
    }

    GroebnerBasis gb;
    gb.order = order_;
    gb.nvars = nvars_;
    gb.reduced = true;
    for (auto& g : minimal) {
      gb.generators.push_back(from_ordered(g.poly, nvars_));
      gb.leading_exponents.push_back(std::move(g.lead));
    }
    return gb;
  }

 private:
  MonomialOrder order_;
  std::size_t nvars_;
  std::size_t initial_count_;
  std::function<bool(std::size_t, std::size_t)> keep_initial_pair_;
  std::vector<Generator> gens_;
  std::set<PendingPair, PairLess> queue_;
};

}  // namespace

namespace detail {

GroebnerBasis buchberger_filtered(
    const std::vector<Polynomial>& generators, const MonomialOrder& order,
    const std::function<bool(std::size_t, std::size_t)>& keep_initial_pair) {
  const std::size_t nvars = generators.empty() ? 0 : generators.front().nvars();
  std::vector<OrdPoly> inputs;
  for (const auto& g : generators) {
    if (g.nvars() != nvars)
      throw DimensionError("generators in different rings");
    if (g.is_zero()) continue;
    OrdPoly p = to_ordered(g, order);
    make_monic(p);
    inputs.push_back(std::move(p));
  }
  if (inputs.empty()) {
    GroebnerBasis gb;
    gb.order = order;
    gb.nvars = nvars;
    gb.reduced = true;
    return gb;
  }

  BuchbergerRun run(order, nvars, inputs.size(), keep_initial_pair);
  for (auto& p : inputs) {
    run.add_generator(std::move(p));
    if (run.saw_unit()) break;
  }
  run.run();
  return run.finish();
}

}  // namespace detail

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order) {
  return detail::buchberger_filtered(generators, order, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.nvars != 0 && f.nvars() != gb.nvars)
    throw DimensionError("polynomial and basis in different rings");
  if (gb.generators.empty()) return f;
  std::vector<Generator> gens;
  gens.reserve(gb.generators.size());
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    gens.push_back({to_ordered(gb.generators[i], gb.order),
                    gb.leading_exponents[i]});
  OrdPoly r = reduce_full(to_ordered(f, gb.order), gens, gb.order);
  return from_ordered(r, f.nvars());
}

GroebnerBasis intersect(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.nvars != b.nvars)
    throw DimensionError("intersecting ideals in different rings");
  if (!(a.order == b.order))
    throw Error("intersecting bases under different monomial orders");
  if (a.order.kind() == OrderKind::block)
    throw Error("ambient block orders are not supported in intersect");
  if (a.is_zero_ideal()) return a;
  if (b.is_zero_ideal()) return b;
  if (a.is_unit_ideal()) return b;
  if (b.is_unit_ideal()) return a;

  const std::size_t n = a.nvars;
  auto embed = [n](const Polynomial& p) {
    Polynomial out(n + 1);
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::uint32_t> raw(n + 1, 0);
      for (std::size_t k = 0; k < n; ++k) raw[k + 1] = e[k];
      out.add_term(ExponentVector(std::move(raw)), c);
    }
    return out;
  };
  const ExponentVector aux = ExponentVector::unit(n + 1, 0);

  std::vector<Polynomial> gens;
  gens.reserve(a.generators.size() + b.generators.size());
  const std::size_t na = a.generators.size();
  for (const auto& f : a.generators)
    gens.push_back(embed(f).times_monomial(aux, Rational(1)));
  for (const auto& g : b.generators) {
    Polynomial ge = embed(g);
    gens.push_back(ge.times_monomial(aux, Rational(1)) - ge);
  }

  MonomialOrder elim =
      MonomialOrder::block(1, OrderKind::lex, a.order.kind());
  // S-pairs inside either block reduce to zero against that block alone
  // (the factors t and 1-t carry through a's and b's own standard
  // representations), so only cross pairs need processing.
  GroebnerBasis big = detail::buchberger_filtered(
      gens, elim,
      [na](std::size_t i, std::size_t j) { return (i < na) != (j < na); });

  GroebnerBasis out;
  out.order = a.order;
  out.nvars = n;
  out.reduced = true;
  for (std::size_t i = 0; i < big.generators.size(); ++i) {
    if (big.leading_exponents[i][0] != 0) continue;
    // Under the elimination order a t-free lead forces a t-free tail.
    Polynomial p(n);
    for (const auto& [e, c] : big.generators[i].terms()) {
      std::vector<std::uint32_t> raw(e.values().begin() + 1, e.values().end());
      p.add_term(ExponentVector(std::move(raw)), c);
    }
    out.leading_exponents.push_back(p.leading_exponent(out.order));
    out.generators.push_back(std::move(p));
  }
  return out;
}

bool Staircase::contains(const ExponentVector& e) const {
  return std::find(exponents.begin(), exponents.end(), e) != exponents.end();
}

Staircase staircase(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars;
  if (gb.generators.empty())
    throw NonCofiniteError("zero ideal has an infinite staircase");

  std::vector<std::uint32_t> box(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    bool pure_power = false;
    for (const auto& lead : gb.leading_exponents) {
      bool pure = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != v && lead[k] != 0) pure = false;
      if (pure) pure_power = true;
      box[v] = std::max(box[v], lead[v]);
    }
    if (!pure_power)
      throw NonCofiniteError(
          "ideal is not cofinite: no leading exponent is a pure power of "
          "variable " +
          std::to_string(v + 1));
  }

  Staircase result;
  std::vector<std::uint32_t> h(n, 0);
  bool done = std::any_of(box.begin(), box.end(),
                          [](std::uint32_t m) { return m == 0; });
  while (!done) {
    auto e = ExponentVector(std::vector<std::uint32_t>(h));
    bool divisible = false;
    for (const auto& lead : gb.leading_exponents)
      if (lead.divides(e)) {
        divisible = true;
        break;
      }
    if (!divisible) result.exponents.push_back(std::move(e));
    // Odometer step over the box.
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (++h[v] < box[v]) break;
      h[v] = 0;
    }
    done = v == n;
  }
  std::sort(result.exponents.begin(), result.exponents.end(),
            [&](const ExponentVector& x, const ExponentVector& y) {
              return gb.order.less(x, y);
            });
  return result;
}

}  // namespace gbinterp
