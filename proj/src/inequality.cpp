#include "polymat/inequality.hpp"

#include <sstream>
#include <thread>

#include "polymat/rng.hpp"

namespace polymat {

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  switch (axiom) {
    case Axiom::normalization:
      os << "R1: h(empty) != 0";
      break;
    case Axiom::monotonicity:
      os << "R2: h(full) < h(full minus element " << i << ")";
      break;
    case Axiom::submodularity:
      os << "R3: submodularity fails for elements " << i << "," << j << " given K=0x" << std::hex
         << k_mask;
      break;
  }
  return os.str();
}

namespace {

template <class Value, class Vec>
std::optional<AxiomViolation> violation_impl(const Vec& v, std::uint32_t n) {
  const Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
  if (!(v[0] == Value(0))) return AxiomViolation{Axiom::normalization};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (v[full] < v[full ^ (Mask(1) << i)])
      return AxiomViolation{Axiom::monotonicity, i};
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const Mask bi = Mask(1) << i, bj = Mask(1) << j;
      const Mask comp = full ^ bi ^ bj;
      Mask k = 0;
      while (true) {
        // h(K∪i) + h(K∪j) >= h(K∪i∪j) + h(K)
        if (v[k | bi] + v[k | bj] < v[k | bi | bj] + v[k])
          return AxiomViolation{Axiom::submodularity, i, j, k};
        if (k == comp) break;
        k = (k - comp) & comp;  // next subset of comp, ascending
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> polymatroid_violation(const RankVector& h) {
  if (auto fast = to_scaled_int64(h))
    return violation_impl<std::int64_t>(fast->v, h.n());
  return violation_impl<Rational>(h.values(), h.n());
}

Rational eval_expr(const RankVector& h, const LinearRankExpr& e) {
  Rational total = 0;
  for (const auto& term : e.terms) {
    Mask u = 0;
    for (Mask s : term.sets) {
      h.check_mask(s);
      u |= s;
    }
    total += term.coeff * h.at(u);
  }
  return total;
}

Rational ingleton_score(const RankVector& h, Mask a1, Mask a2, Mask a3, Mask a4) {
  for (Mask a : {a1, a2, a3, a4}) h.check_mask(a);
  const auto& v = h.values();
  return v[a1 | a2] + v[a1 | a3] + v[a1 | a4] + v[a2 | a3] + v[a2 | a4] - v[a1] - v[a2] -
         v[a3 | a4] - v[a1 | a2 | a3] - v[a1 | a2 | a4];
}

namespace {

struct ScanState {
  bool any = false;
  Rational best;
  std::array<Mask, 4> arg{};
  std::uint64_t index = 0;  // position in canonical scan order, for tie-breaks
};

template <class Value, class Vec>
void exhaustive_range(const Vec& v, Mask subsets, Mask a1_begin, Mask a1_end, Value& best,
                      std::array<Mask, 4>& arg, bool& any) {
  for (Mask a1 = a1_begin; a1 < a1_end; ++a1) {
    for (Mask a2 = a1; a2 < subsets; ++a2) {
      const Mask m12 = a1 | a2;
      const Value c12 = v[m12] - v[a1] - v[a2];
      for (Mask a3 = 0; a3 < subsets; ++a3) {
        const Value c3 = v[a1 | a3] + v[a2 | a3] - v[m12 | a3];
        for (Mask a4 = a3; a4 < subsets; ++a4) {
          Value score = c12 + c3 + v[a1 | a4] + v[a2 | a4] - v[a3 | a4] - v[m12 | a4];
          if (!any || score < best) {
            any = true;
            best = score;
            arg = {a1, a2, a3, a4};
          }
        }
      }
    }
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

}  // namespace

IngletonReport ingleton_scan(const RankVector& h, const ScanOptions& opts) {
  const std::uint32_t n = h.n();
  const Mask subsets = Mask(1) << n;
  IngletonReport report;
  report.mode = opts.mode;

  if (opts.mode == ScanMode::exhaustive) {
    if (n > 7)
      throw size_error("exhaustive scan limited to n <= 7 (got n=" + std::to_string(n) +
                       "); use sampled mode");
    const std::uint64_t pair_count = std::uint64_t(subsets) * (subsets + 1) / 2;
    report.quadruples_checked = pair_count * pair_count;

    const unsigned threads = std::min<unsigned>(resolve_threads(opts.threads), subsets);
    auto fast = to_scaled_int64(h);

    std::vector<bool> found(threads, false);
    std::vector<std::array<Mask, 4>> args(threads);
    std::vector<Rational> bests(threads, Rational(0));
    std::vector<std::int64_t> ibests(threads, 0);

    auto run_chunk = [&](unsigned t) {
      Mask begin = Mask(std::uint64_t(subsets) * t / threads);
      Mask end = Mask(std::uint64_t(subsets) * (t + 1) / threads);
      bool any = false;
      if (fast) {
        std::int64_t best = 0;
        exhaustive_range<std::int64_t>(fast->v, subsets, begin, end, best, args[t], any);
        ibests[t] = best;
      } else {
        Rational best;
        exhaustive_range<Rational>(h.values(), subsets, begin, end, best, args[t], any);
        bests[t] = best;
      }
      found[t] = any;
    };

    if (threads == 1) {
      run_chunk(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
      for (auto& th : pool) th.join();
    }

    bool any = false;
    for (unsigned t = 0; t < threads; ++t) {
      if (!found[t]) continue;
      Rational score = fast ? Rational(ibests[t]) / fast->denom : bests[t];
      // Chunks are in ascending a1 order, so the first strictly-smaller win
      // keeps the canonical (first in scan order) argmin.
      if (!any || score < report.min_score) {
        any = true;
        report.min_score = score;
        report.argmin = args[t];
      }
    }
    if (!any) throw internal_error("empty exhaustive scan");
    return report;
  }

  // Sampled mode. Quadruple i uses counter outputs 4i..4i+3, so the sequence
  // is a pure function of (seed, i) and threading cannot change it.
  report.quadruples_checked = opts.trials;
  if (opts.trials == 0) throw input_error("sampled scan needs at least one trial");
  const unsigned threads = resolve_threads(opts.threads);
  auto fast = to_scaled_int64(h);

  struct Best {
    bool any = false;
    Rational score;
    std::array<Mask, 4> arg{};
    std::uint64_t trial = 0;
  };
  std::vector<Best> bests(threads);

  auto run_range = [&](unsigned t, std::uint64_t begin, std::uint64_t end) {
    Best local;
    for (std::uint64_t i = begin; i < end; ++i) {
      std::array<Mask, 4> quad;
      for (int k = 0; k < 4; ++k)
        quad[k] = Mask(sample_at(opts.seed, 4 * i + k) & (subsets - 1));
      Rational score;
      if (fast) {
        const auto& v = fast->v;
        std::int64_t s = v[quad[0] | quad[1]] + v[quad[0] | quad[2]] + v[quad[0] | quad[3]] +
                         v[quad[1] | quad[2]] + v[quad[1] | quad[3]] - v[quad[0]] - v[quad[1]] -
                         v[quad[2] | quad[3]] - v[quad[0] | quad[1] | quad[2]] -
                         v[quad[0] | quad[1] | quad[3]];
        score = Rational(s) / fast->denom;
      } else {
        score = ingleton_score(h, quad[0], quad[1], quad[2], quad[3]);
      }
      if (!local.any || score < local.score) {
        local.any = true;
        local.score = score;
        local.arg = quad;
        local.trial = i;
      }
    }
    bests[t] = local;
  };

  if (threads == 1) {
    run_range(0, 0, opts.trials);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = opts.trials * t / threads;
      std::uint64_t end = opts.trials * (t + 1) / threads;
      pool.emplace_back(run_range, t, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  bool any = false;
  std::uint64_t best_trial = 0;
  for (const Best& b : bests) {
    if (!b.any) continue;
    if (!any || b.score < report.min_score ||
        (b.score == report.min_score && b.trial < best_trial)) {
      any = true;
      report.min_score = b.score;
      report.argmin = b.arg;
      best_trial = b.trial;
    }
  }
  if (!any) throw internal_error("empty sampled scan");
  return report;
}

Rational dfz_ratio(const RankVector& h, const std::vector<Mask>& numerators,
                   const std::vector<Mask>& denominators) {
  if (numerators.empty() || denominators.empty())
    throw input_error("ratio needs nonempty numerator and denominator sets");
  for (Mask d : denominators) {
    h.check_mask(d);
    if (h.at(d) <= 0) throw input_error("undefined ratio: denominator subset has rank 0");
  }
  for (Mask m : numerators) h.check_mask(m);
  Rational num = h.at(numerators[0]);
  for (Mask m : numerators) num = std::min(num, h.at(m));
  Rational den = h.at(denominators[0]);
  for (Mask d : denominators) den = std::max(den, h.at(d));
  return num / den;
}

}  // namespace polymat
