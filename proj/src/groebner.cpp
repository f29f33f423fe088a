#include "singlab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace singlab {

namespace {

// A polynomial together with its expression in the input generators.
struct Tracked {
  Poly p;
  std::vector<Poly> cof;
};

void check_rings(const Ring& ring, const std::vector<Poly>& gens) {
  for (const auto& g : gens)
    if (!(g.ring() == ring)) fail(ErrorCode::RingMismatch, "generators from different rings");
}

Monomial zero_mono(const Ring& r) { return Monomial(r.nvars(), 0); }

void make_monic(Tracked& t) {
  if (t.p.is_zero()) return;
  const Scalar inv = t.p.leading().coef.inverse();
  t.p = t.p.scaled(inv);
  for (auto& c : t.cof) c = c.scaled(inv);
}

// Full reduction of f by the basis. Returns the remainder; the multiples that were
// removed are recorded in `quot` (cofactors with respect to the input generators).
Poly reduce_tracked(Poly f, const std::vector<Tracked>& basis, std::vector<Poly>* quot) {
  const Ring ring = f.ring();
  Poly rem(ring);
  Tracked work{std::move(f), {}};
  if (quot) work.cof = *quot;
  while (!work.p.is_zero()) {
    const auto& lt = work.p.leading();
    const Tracked* hit = nullptr;
    for (const auto& g : basis)
      if (!g.p.is_zero() && divides(g.p.leading().mono, lt.mono)) {
        hit = &g;
        break;
      }
    if (!hit) {
      rem += Poly::monomial(ring, lt.mono, lt.coef);
      work.p -= Poly::monomial(ring, lt.mono, lt.coef);
      continue;
    }
    const Monomial m = quotient(lt.mono, hit->p.leading().mono);
    const Scalar c = lt.coef / hit->p.leading().coef;
    if (quot) {
      for (std::size_t i = 0; i < work.cof.size(); ++i) work.cof[i] += hit->cof[i].times_monomial(m, c);
    }
    work.p -= hit->p.times_monomial(m, c);
  }
  if (quot) *quot = std::move(work.cof);
  return rem;
}

// Buchberger with the coprime-leading-term criterion and the normal selection
// strategy (smallest lcm first). Each element keeps its cofactors when `track`.
std::vector<Tracked> buchberger_tracked(const Ring& ring, const std::vector<Poly>& gens, bool track) {
  std::vector<Tracked> basis;
  const std::size_t n = gens.size();
  auto unit_cof = [&](std::size_t i) {
    std::vector<Poly> c;
    if (!track) return c;
    c.assign(n, Poly(ring));
    c[i] = Poly::constant(ring, 1);
    return c;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (gens[i].is_zero()) continue;
    Tracked t{gens[i], unit_cof(i)};
    make_monic(t);
    basis.push_back(std::move(t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(basis[pr.first].p.leading().mono, basis[pr.second].p.leading().mono);
  };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_l = pair_lcm(*best);
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (ring.compare(l, best_l) < 0) {
        best = it;
        best_l = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    const Monomial& li = basis[i].p.leading().mono;
    const Monomial& lj = basis[j].p.leading().mono;
    bool coprime = true;
    for (std::size_t k = 0; k < li.size(); ++k)
      if (li[k] > 0 && lj[k] > 0) coprime = false;
    if (coprime) continue;

    Tracked s{Poly(ring), track ? std::vector<Poly>(n, Poly(ring)) : std::vector<Poly>{}};
    const Scalar one = Scalar::one(ring.field());
    s.p = basis[i].p.times_monomial(quotient(best_l, li), one) - basis[j].p.times_monomial(quotient(best_l, lj), one);
    for (std::size_t k = 0; k < s.cof.size(); ++k)
      s.cof[k] = basis[i].cof[k].times_monomial(quotient(best_l, li), one) -
                 basis[j].cof[k].times_monomial(quotient(best_l, lj), one);

    // Reduce: s = Σ q_k g_k + r, so r has cofactors s.cof − Σ q_k cof(g_k).
    std::vector<Poly> q = s.cof;
    if (track)
      for (auto& c : q) c = -c;
    Poly r = reduce_tracked(s.p, basis, track ? &q : nullptr);
    if (r.is_zero()) continue;
    Tracked t{std::move(r), {}};
    if (track) {
      t.cof = std::move(q);
      for (auto& c : t.cof) c = -c;
    }
    make_monic(t);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(t));
    for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }
  return basis;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.leading().mono);
  return out;
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens) {
  check_rings(ring, gens);
  auto basis = buchberger_tracked(ring, gens, false);

  // Minimalise: drop elements whose leading monomial is divisible by another's.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].p.leading().mono;
      const auto& mj = basis[j].p.leading().mono;
      if (divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce.
  GroebnerBasis gb{ring, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Tracked> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& lt = minimal[i].p.leading();
    Poly tail = minimal[i].p - Poly::monomial(ring, lt.mono, lt.coef);
    Poly g = Poly::monomial(ring, lt.mono, lt.coef) + reduce_tracked(tail, others, nullptr);
    gb.gens.push_back(g.scaled(g.leading().coef.inverse()));
  }
  std::sort(gb.gens.begin(), gb.gens.end(),
            [&](const Poly& a, const Poly& b) { return ring.compare(a.leading().mono, b.leading().mono) > 0; });
  return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!(f.ring() == gb.ring)) fail(ErrorCode::RingMismatch, "normal form across rings");
  std::vector<Tracked> basis;
  for (const auto& g : gb.gens) basis.push_back({g, {}});
  return reduce_tracked(f, basis, nullptr);
}

bool in_ideal(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

QuotientBasis quotient_basis(const GroebnerBasis& gb, std::optional<long> degree_bound) {
  const Ring& ring = gb.ring;
  const auto lts = gb.leading_monomials();
  QuotientBasis qb;
  qb.finite = true;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    bool pure = false;
    for (const auto& m : lts) {
      bool only_v = m[v] > 0;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != v && m[k] != 0) only_v = false;
      if (only_v) pure = true;
    }
    if (!pure) qb.finite = false;
  }
  if (gb.is_unit_ideal()) {
    qb.finite = true;
    return qb;
  }
  if (!qb.finite && !degree_bound) return qb;

  auto standard = [&](const Monomial& m) {
    for (const auto& lt : lts)
      if (divides(lt, m)) return false;
    return true;
  };
  // Breadth-first walk of the staircase; it is an order ideal, so every standard
  // monomial is reached from 1 through standard monomials.
  std::set<Monomial> seen;
  std::deque<Monomial> queue{zero_mono(ring)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    qb.monomials.push_back(m);
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      Monomial next = m;
      ++next[v];
      if (degree_bound && Ring::total_degree(next) > *degree_bound) continue;
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::sort(qb.monomials.begin(), qb.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return qb;
}

std::vector<Monomial> standard_monomials_of_weight(const GroebnerBasis& gb, long w) {
  auto all = monomials_of_weight(gb.ring, w);
  const auto lts = gb.leading_monomials();
  std::erase_if(all, [&](const Monomial& m) {
    for (const auto& lt : lts)
      if (divides(lt, m)) return true;
    return false;
  });
  return all;
}

std::vector<Poly> maximal_ideal_power(const Ring& ring, long n) {
  std::vector<Poly> out;
  Monomial cur(ring.nvars(), 0);
  const Scalar one = Scalar::one(ring.field());
  auto rec = [&](auto&& self, std::size_t i, long rest) -> void {
    if (i + 1 == ring.nvars() || ring.nvars() == 0) {
      if (ring.nvars() == 0) {
        if (rest == 0) out.push_back(Poly::constant(ring, 1));
        return;
      }
      cur[i] = static_cast<int>(rest);
      out.push_back(Poly::monomial(ring, cur, one));
      cur[i] = 0;
      return;
    }
    for (long e = rest; e >= 0; --e) {
      cur[i] = static_cast<int>(e);
      self(self, i + 1, rest - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

std::vector<Poly> division_coefficients(const Poly& sigma, const std::vector<Poly>& gens) {
  const Ring& ring = sigma.ring();
  check_rings(ring, gens);
  const std::size_t n = gens.size();

  // Plain division in the given generator order.
  {
    std::vector<Poly> q(n, Poly(ring));
    Poly f = sigma;
    bool stuck = false;
    while (!f.is_zero()) {
      const auto& lt = f.leading();
      std::size_t k = 0;
      for (; k < n; ++k)
        if (!gens[k].is_zero() && divides(gens[k].leading().mono, lt.mono)) break;
      if (k == n) {
        stuck = true;
        break;
      }
      const Monomial m = quotient(lt.mono, gens[k].leading().mono);
      const Scalar c = lt.coef / gens[k].leading().coef;
      q[k] += Poly::monomial(ring, m, c);
      f -= gens[k].times_monomial(m, c);
    }
    if (!stuck) return q;
  }

  auto basis = buchberger_tracked(ring, gens, true);
  std::vector<Poly> q(n, Poly(ring));
  Poly r = reduce_tracked(sigma, basis, &q);
  if (!r.is_zero()) fail(ErrorCode::NotInIdeal, sigma.to_string() + " is not in the ideal (normal form " + r.to_string() + ")");
  return q;
}

}  // namespace singlab
