// Search for D in Z_v with D^n = b e + m Z_v.
//
// Applying chi_j gives chi_j(D)^n = b for j != 0, and D is recovered from
// alpha_d = chi_{v/d}(D) in Z[zeta_d], one value per divisor d > 1 of v:
//
//   v D[x] = k + sum_{d | v, d > 1} Tr(alpha_d zeta_d^(-x)).
//
// Every alpha with alpha^n rational satisfies sigma_u(alpha) = zeta^w(u) alpha
// for a 1-cocycle w of the Galois group with values in the n-th roots of
// unity. For each such cocycle the resolvent sum_u zeta^(-w(u)) sigma_u(theta)
// gives a nonzero alpha_0 with the same cocycle, and every other solution is
// a rational multiple q alpha_0. So the candidates for alpha_d are finite and
// explicit, and the search is over tuples of candidates instead of subsets.

#include <algorithm>
#include <cmath>
#include <map>

#include "drg/design_sets.hpp"
#include "drg/numtheory.hpp"

namespace drg {

namespace {

struct Rational {
  std::int64_t num = 0, den = 1;
};

std::int64_t iroot(std::int64_t x, int n) {
  // exact n-th root of x >= 0, or -1
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::pow(static_cast<long double>(x), 1.0L / n)));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c) {
    std::int64_t p = 1;
    bool over = false;
    for (int i = 0; i < n && !over; ++i) over = __builtin_mul_overflow(p, c, &p);
    if (!over && p == x) return c;
  }
  return -1;
}

// All rationals q with q^n = a / b.
std::vector<Rational> rational_roots(std::int64_t a, std::int64_t b, int n) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  std::int64_t g = std::gcd(a < 0 ? -a : a, b);
  a /= g;
  b /= g;
  if (a == 0) return {Rational{0, 1}};
  const bool negative = a < 0;
  if (negative && n % 2 == 0) return {};
  std::int64_t ra = iroot(negative ? -a : a, n), rb = iroot(b, n);
  if (ra < 0 || rb < 0) return {};
  if (n % 2 == 1) return {Rational{negative ? -ra : ra, rb}};
  return {Rational{ra, rb}, Rational{-ra, rb}};
}

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  if (n > 1) r = -r;
  return r;
}

// Tr_{Q(zeta_M)/Q}(zeta_M^e)
std::int64_t ramanujan(int M, long long e) {
  int g = std::gcd(static_cast<int>(mod(e, M)), M);
  int q = M / g;
  return static_cast<std::int64_t>(mobius(q)) * euler_phi(M) / euler_phi(q);
}

struct Candidate {
  CycInt alpha0;          // conductor M
  std::int64_t norm = 0;  // alpha0^n, a rational integer
  std::vector<std::int64_t> trace;  // Tr(alpha0 zeta_d^(-x)) for x in Z_v
};

// One alpha_0 per cocycle of (Z/M)^* with values in the n-th roots of unity.
std::vector<Candidate> cocycle_candidates(int v, int d, int n) {
  const int M = std::lcm(2, d);
  std::vector<int> units;
  for (int u = 1; u < M; ++u)
    if (std::gcd(u, M) == 1) units.push_back(u);
  std::vector<int> gens;
  {
    std::vector<char> span(M, 0);
    span[1] = 1;
    for (int u : units) {
      if (span[u]) continue;
      gens.push_back(u);
      std::vector<int> frontier;
      for (int x = 0; x < M; ++x)
        if (span[x]) frontier.push_back(x);
      for (size_t i = 0; i < frontier.size(); ++i) {
        int y = frontier[i] * u % M;
        if (!span[y]) {
          span[y] = 1;
          frontier.push_back(y);
        }
        for (int gg : gens) {
          int z = frontier[i] * gg % M;
          if (!span[z]) {
            span[z] = 1;
            frontier.push_back(z);
          }
        }
      }
    }
  }
  std::vector<int> roots;  // exponents e with n e = 0 mod M
  for (int e = 0; e < M; ++e)
    if (static_cast<long long>(n) * e % M == 0) roots.push_back(e);

  std::vector<Candidate> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> w(M, -1);
    w[1] = 0;
    std::vector<int> queue{1};
    bool ok = true;
    for (size_t i = 0; i < queue.size() && ok; ++i) {
      int u = queue[i];
      for (size_t t = 0; t < gens.size(); ++t) {
        int gg = gens[t];
        int y = gg * u % M;
        int val = static_cast<int>((roots[choice[t]] + static_cast<long long>(gg) * w[u]) % M);
        if (w[y] < 0) {
          w[y] = val;
          queue.push_back(y);
        } else if (w[y] != val) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (int j = 0; j < M; ++j) {
        std::vector<std::int64_t> counts(M, 0);
        for (int u : units) counts[mod(static_cast<long long>(u) * j - w[u], M)] += 1;
        CycInt a0 = CycInt::from_exponent_counts(M, counts);
        if (a0.is_zero()) continue;
        for (int u : units)
          if (!(a0.galois(u) == CycInt::root(M, w[u]) * a0)) bug_trap("resolvent does not follow its cocycle");
        CycInt pw = a0.pow(n);
        if (!pw.is_rational_integer()) bug_trap("n-th power of a resolvent is not rational");
        Candidate c{a0, pw.rational_value(), std::vector<std::int64_t>(v, 0)};
        const auto& co = a0.coeffs();
        for (int x = 0; x < v; ++x) {
          std::int64_t s = 0;
          const long long shift = static_cast<long long>(x) * (M / d);
          for (size_t i = 0; i < co.size(); ++i)
            if (co[i]) s += co[i] * ramanujan(M, static_cast<long long>(i) - shift);
          c.trace[x] = s;
        }
        out.push_back(std::move(c));
        break;
      }
    }
    size_t t = 0;
    while (t < choice.size() && ++choice[t] == static_cast<int>(roots.size())) choice[t++] = 0;
    if (t == choice.size()) break;
  }
  return out;
}

bool reportable(int k, int v, const PasSearchOptions& opt) {
  if (k == 0) return false;
  if (k == 1 || k >= v - 1) return opt.include_trivial_sizes;
  return true;
}

bool confirmed(int v, int n, const PasHit& h) {
  AbelianGroup g({v});
  std::vector<std::int64_t> f(n + 1, 0);
  f[0] = 1;
  f[n] = -h.b;
  return is_polynomial_addition_set(g, h.d, f).m.has_value();
}

void trap_nontrivial(int v, int n, const std::vector<PasHit>& hits, const PasSearchOptions& opt) {
  if (opt.include_trivial_sizes) return;
  for (const auto& h : hits)
    bug_trap("cyclic polynomial addition set with f = x^" + std::to_string(n) + " - " + std::to_string(h.b) +
             " in Z_" + std::to_string(v) + " of size " + std::to_string(h.k));
}

}  // namespace

std::vector<PasHit> monomial_pas_search(int v, int n, std::int64_t bound, PasSearchOptions opt) {
  if (v < 2 || v > 40) throw Error(ErrorCode::size_limit_exceeded, "PAS search supports 2 <= v <= 40");
  if (n < 1 || n > 5) throw Error(ErrorCode::size_limit_exceeded, "PAS search supports 1 <= n <= 5");
  if (bound < 0) throw Error(ErrorCode::precondition, "bound must be non-negative");
  std::vector<int> divs;
  std::vector<std::vector<Candidate>> cands;
  for (int d : divisors(v))
    if (d > 1) {
      divs.push_back(d);
      cands.push_back(cocycle_candidates(v, d, n));
    }
  std::vector<PasHit> hits;
  for (std::int64_t b = -bound; b <= bound; ++b) {
    // per divisor: list of (trace vector, q)
    std::vector<std::vector<std::pair<const Candidate*, Rational>>> opts(divs.size());
    bool possible = true;
    for (size_t i = 0; i < divs.size(); ++i) {
      if (b == 0) {
        opts[i].push_back({nullptr, Rational{0, 1}});
        continue;
      }
      for (const Candidate& c : cands[i])
        for (Rational q : rational_roots(b, c.norm, n)) opts[i].push_back({&c, q});
      if (opts[i].empty()) possible = false;
    }
    if (!possible) continue;
    std::vector<size_t> pick(divs.size(), 0);
    while (true) {
      std::int64_t L = 1;
      for (size_t i = 0; i < divs.size(); ++i) L = std::lcm(L, opts[i][pick[i]].second.den);
      // base[x] = sum_d q_d L Tr(...), then v L D[x] = k L + base[x]
      std::vector<__int128> base(v, 0);
      for (size_t i = 0; i < divs.size(); ++i) {
        const auto& [c, q] = opts[i][pick[i]];
        if (!c || q.num == 0) continue;
        __int128 scale = static_cast<__int128>(q.num) * (L / q.den);
        for (int x = 0; x < v; ++x) base[x] += scale * c->trace[x];
      }
      for (int k = 0; k <= v; ++k) {
        if (!reportable(k, v, opt)) continue;
        ElementSet d;
        bool ok = true;
        for (int x = 0; x < v && ok; ++x) {
          __int128 num = static_cast<__int128>(k) * L + base[x];
          if (num == 0) continue;
          if (num == static_cast<__int128>(v) * L)
            d.push_back(x);
          else
            ok = false;
        }
        if (!ok || static_cast<int>(d.size()) != k) continue;
        PasHit h{d, k, b};
        if (!confirmed(v, n, h)) bug_trap("search hit fails the convolution check");
        hits.push_back(h);
      }
      size_t t = 0;
      while (t < pick.size() && ++pick[t] == opts[t].size()) pick[t++] = 0;
      if (t == pick.size()) break;
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  trap_nontrivial(v, n, hits, opt);
  return hits;
}

std::vector<PasHit> monomial_pas_search_brute(int v, int n, std::int64_t bound, PasSearchOptions opt) {
  if (v < 2 || v > 22) throw Error(ErrorCode::size_limit_exceeded, "brute-force PAS search supports 2 <= v <= 22");
  if (n < 1 || n > 5) throw Error(ErrorCode::size_limit_exceeded, "PAS search supports 1 <= n <= 5");
  std::vector<std::complex<long double>> zeta(v);
  for (int e = 0; e < v; ++e) zeta[e] = std::polar(1.0L, 2 * std::acos(-1.0L) * e / v);
  const long long total = 1LL << v;
  std::vector<PasHit> hits;
#pragma omp parallel for schedule(static)
  for (long long mask = 1; mask < total; ++mask) {
    int k = __builtin_popcountll(mask);
    if (!reportable(k, v, opt)) continue;
    // chi_j(D)^n must be the same real integer b for every j != 0
    long double b = 0;
    bool ok = true;
    for (int j = 1; j < v && ok; ++j) {
      std::complex<long double> s = 0;
      for (int x = 0; x < v; ++x)
        if (mask >> x & 1) s += zeta[(static_cast<long long>(j) * x) % v];
      std::complex<long double> p = std::pow(s, n);
      if (std::fabs(p.imag()) > 1e-6L) ok = false;
      if (j == 1) b = std::round(p.real());
      if (std::fabs(p.real() - b) > 1e-6L) ok = false;
    }
    if (!ok || std::fabs(b) > bound) continue;
    ElementSet d;
    for (int x = 0; x < v; ++x)
      if (mask >> x & 1) d.push_back(x);
    PasHit h{d, k, static_cast<std::int64_t>(b)};
    // the floating filter only proposes; the convolution decides
    if (!confirmed(v, n, h)) continue;
#pragma omp critical
    hits.push_back(h);
  }
  std::sort(hits.begin(), hits.end());
  trap_nontrivial(v, n, hits, opt);
  return hits;
}

}  // namespace drg
