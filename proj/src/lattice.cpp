#include "sfs/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sfs {

IntMatrix LatticeEmbedding::matrix() const {
  IntMatrix m(vertices(), ambient());
  for (std::size_t r = 0; r < vertices(); ++r)
    for (std::size_t c = 0; c < ambient(); ++c) m(r, c) = rows[r][c];
  return m;
}

LatticeEmbedding LatticeEmbedding::canonical() const {
  const std::size_t n = vertices(), N = ambient();
  std::vector<std::vector<long>> cols(N, std::vector<long>(n));
  for (std::size_t c = 0; c < N; ++c) {
    for (std::size_t r = 0; r < n; ++r) cols[c][r] = rows[r][c];
    auto first = std::find_if(cols[c].begin(), cols[c].end(), [](long x) { return x != 0; });
    if (first != cols[c].end() && *first < 0)
      for (auto& x : cols[c]) x = -x;
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  LatticeEmbedding out;
  out.rows.assign(n, std::vector<long>(N));
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = 0; r < n; ++r) out.rows[r][c] = cols[c][r];
  return out;
}

bool preserves_pairing(const LatticeEmbedding& a, const IntMatrix& q) {
  if (a.vertices() != q.rows() || q.rows() != q.cols()) return false;
  return a.matrix() * a.matrix().transpose() == q;
}

namespace {

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::invalid_argument("form entry too large for lattice search");
  return v.get_si();
}

long isqrt(long x) {
  long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct Searcher {
  std::size_t n = 0, N = 0;
  std::vector<std::vector<long>> q;
  std::vector<long> leading_arm;  // arm index for leading vertices, else -1
  std::vector<Rational> arm_beta;
  bool chain_pruning = false;
  bool structure = false;
  std::size_t e = 0;
  std::uint64_t budget = 0;
  std::size_t max_results = 0;

  std::uint64_t nodes = 0;
  bool exhausted = false;
  bool truncated = false;
  std::vector<std::vector<long>> rows;
  std::vector<std::vector<long>> suffix;  // suffix[u][c] = sum_{c' >= c} rows[u][c']^2
  std::size_t touched = 0;
  std::vector<Rational> col_sum;
  std::vector<int> col_big;  // count of contributing entries with |x| > 1
  std::set<LatticeEmbedding> found;

  bool tick() {
    if (++nodes > budget) exhausted = true;
    return !exhausted && !truncated;
  }

  void set_suffix(std::size_t u) {
    suffix[u].assign(N + 1, 0);
    for (std::size_t c = N; c-- > 0;) suffix[u][c] = suffix[u][c + 1] + rows[u][c] * rows[u][c];
  }

  // Chain inequality on each column met by a completed leading row.
  bool apply_chain(std::size_t v, int dir) {
    if (!chain_pruning || leading_arm[v] < 0) return true;
    const Rational& b = arm_beta[static_cast<std::size_t>(leading_arm[v])];
    bool ok = true;
    for (std::size_t c = 0; c < N; ++c) {
      long x = rows[v][c];
      if (x == 0) continue;
      if (dir > 0) {
        col_sum[c] += b;
        if (x > 1 || x < -1) ++col_big[c];
      } else {
        col_sum[c] -= b;
        if (x > 1 || x < -1) --col_big[c];
      }
      if (dir > 0 && (col_sum[c] > Rational(1) || (col_sum[c] == Rational(1) && col_big[c] > 0))) ok = false;
    }
    return ok;
  }

  void record() {
    LatticeEmbedding emb;
    emb.rows = rows;
    found.insert(emb.canonical());
    if (max_results && found.size() >= max_results) truncated = true;
  }

  void assign_vertex(std::size_t v) {
    if (!tick()) return;
    if (v == n) {
      record();
      return;
    }
    std::vector<long> residual(v);
    for (std::size_t u = 0; u < v; ++u) residual[u] = q[v][u];
    rows[v].assign(N, 0);
    column_step(v, 0, q[v][v], residual);
  }

  void column_step(std::size_t v, std::size_t c, long rem, std::vector<long>& residual) {
    if (!tick()) return;
    if (c == touched) {
      for (long r : residual)
        if (r != 0) return;
      fill_untouched(v, touched, rem, rem);
      return;
    }
    long bound = isqrt(rem);
    long lo = -bound, hi = bound;
    if (structure && c < e) {
      // Leading vertices meet the central coordinates in one -1; all others avoid them.
      if (leading_arm[v] < 0) {
        lo = hi = 0;
      } else {
        bool used = false;
        for (std::size_t c2 = 0; c2 < c; ++c2)
          if (rows[v][c2] != 0) used = true;
        lo = used ? 0 : -1;
        hi = 0;
        if (!used && c + 1 == e) hi = -1;
      }
    }
    for (long x = lo; x <= hi; ++x) {
      long rem2 = rem - x * x;
      if (rem2 < 0) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        long r = residual[u] - x * rows[u][c];
        // Cauchy-Schwarz on the columns still to be chosen.
        if (r * r > rem2 * suffix[u][c + 1]) ok = false;
      }
      if (!ok) continue;
      for (std::size_t u = 0; u < v; ++u) residual[u] -= x * rows[u][c];
      rows[v][c] = x;
      column_step(v, c + 1, rem2, residual);
      rows[v][c] = 0;
      for (std::size_t u = 0; u < v; ++u) residual[u] += x * rows[u][c];
      if (exhausted || truncated) return;
    }
  }

  // Untouched columns: positive, non-increasing entries packed from `c`.
  void fill_untouched(std::size_t v, std::size_t c, long rem, long cap) {
    if (!tick()) return;
    if (rem == 0) {
      std::size_t saved = touched;
      touched = std::max(touched, c);
      bool ok = apply_chain(v, +1);
      if (ok) {
        set_suffix(v);
        assign_vertex(v + 1);
      }
      apply_chain(v, -1);
      touched = saved;
      return;
    }
    if (c >= N) return;
    if (structure && c < e) return;
    for (long x = std::min(cap, isqrt(rem)); x >= 1; --x) {
      rows[v][c] = x;
      fill_untouched(v, c + 1, rem - x * x, x);
      rows[v][c] = 0;
      if (exhausted || truncated) return;
    }
  }
};

LatticeSearchResult run_search(Searcher& s) {
  s.rows.assign(s.n, std::vector<long>(s.N, 0));
  s.suffix.assign(s.n, std::vector<long>(s.N + 1, 0));
  s.col_sum.assign(s.N, Rational());
  s.col_big.assign(s.N, 0);
  if (s.structure) {
    if (s.e == 0 || s.e > s.N || s.q[0][0] != static_cast<long>(s.e))
      throw std::invalid_argument("structure constraint needs central weight e with 1 <= e <= N");
    for (std::size_t c = 0; c < s.e; ++c) s.rows[0][c] = 1;
    s.touched = s.e;
    s.set_suffix(0);
    s.assign_vertex(1);
  } else if (s.n > 0) {
    s.assign_vertex(0);
  }
  LatticeSearchResult res;
  res.embeddings.assign(s.found.begin(), s.found.end());
  res.budget_exceeded = s.exhausted;
  res.truncated = s.truncated;
  res.nodes = s.nodes;
  return res;
}

void load_form(Searcher& s, const IntMatrix& q, const LatticeSearchOptions& opts) {
  if (q.rows() != q.cols()) throw std::invalid_argument("form must be square");
  if (!is_positive_definite(q)) throw std::invalid_argument("lattice search requires a positive definite form");
  s.n = q.rows();
  s.N = opts.ambient ? opts.ambient : s.n;
  if (s.N < s.n) throw std::invalid_argument("ambient rank below the lattice rank");
  s.q.assign(s.n, std::vector<long>(s.n));
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) s.q[i][j] = to_long(q(i, j));
  s.leading_arm.assign(s.n, -1);
  s.budget = opts.node_budget;
  s.max_results = opts.max_results;
}

}  // namespace

LatticeSearchResult enumerate_embeddings(const IntMatrix& q, const LatticeSearchOptions& opts) {
  Searcher s;
  load_form(s, q, opts);
  return run_search(s);
}

LatticeSearchResult enumerate_embeddings(const PlumbingGraph& g, const LatticeSearchOptions& opts) {
  Searcher s;
  load_form(s, intersection_form(g), opts);
  for (std::size_t i = 0; i < g.arms.size(); ++i) {
    s.leading_arm[g.arm_start(i)] = static_cast<long>(i);
    s.arm_beta.push_back(neg_cfrac_eval(g.arms[i]).reciprocal());
  }
  s.chain_pruning = opts.chain_pruning;
  s.structure = opts.structure;
  if (s.structure) s.e = static_cast<std::size_t>(to_long(g.central_weight));
  return run_search(s);
}

InducedPartition induced_partition(const LatticeEmbedding& a, const StandardForm& s) {
  PlumbingGraph g = build_plumbing(s);
  if (a.vertices() != g.vertex_count()) throw std::invalid_argument("embedding size differs from the plumbing graph");
  const std::size_t N = a.ambient();
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < N; ++c) {
    long x = a.rows[0][c];
    if (x == 0) continue;
    if (x != 1 && x != -1) throw StructureError("central vertex has an entry other than 0 or +-1", 0, static_cast<long>(c));
    cols.push_back(c);
  }
  if (BigInt(cols.size()) != s.central)
    throw StructureError("central vertex is not a sum of e basis vectors", 0, -1);
  std::vector<long> arm = g.arm_of_vertex();
  Partition classes(cols.size());
  for (std::size_t v = 1; v < a.vertices(); ++v) {
    bool leading = g.arm_start(static_cast<std::size_t>(arm[v])) == v;
    long hit = -1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (a.rows[v][cols[i]] == 0) continue;
      if (!leading) throw StructureError("non-leading vertex pairs with a central basis vector",
                                         static_cast<long>(v), static_cast<long>(cols[i]));
      if (hit >= 0) throw StructureError("leading vertex pairs with two central basis vectors",
                                         static_cast<long>(v), static_cast<long>(cols[i]));
      hit = static_cast<long>(i);
    }
    if (leading) {
      if (hit < 0) throw StructureError("leading vertex avoids every central basis vector", static_cast<long>(v), -1);
      classes[static_cast<std::size_t>(hit)].push_back(static_cast<std::size_t>(arm[v]));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].empty()) throw StructureError("central basis vector meets no leading vertex", 0, static_cast<long>(cols[i]));
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  Rational deficit = Rational(1) - Rational(BigInt(1), fiber_lcm(s));
  InducedPartition out{classes, classes.size()};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Rational sum = class_sum(s, classes[i]);
    if (sum == deficit && out.deficit == classes.size()) {
      out.deficit = i;
    } else if (sum != Rational(1)) {
      throw StructureError("class sum " + sum.str() + " is neither 1 nor the deficit value", -1, -1);
    }
  }
  if (out.deficit == classes.size()) throw StructureError("no class has the deficit sum", -1, -1);
  return out;
}

bool pair_surjective(const LatticeEmbedding& a1, const LatticeEmbedding& a2) {
  if (a1.vertices() != a2.vertices()) throw std::invalid_argument("embedding shapes differ");
  const std::size_t n = a1.vertices();
  IntMatrix m(n, a1.ambient() + a2.ambient());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < a1.ambient(); ++c) m(r, c) = a1.rows[r][c];
    for (std::size_t c = 0; c < a2.ambient(); ++c) m(r, a1.ambient() + c) = a2.rows[r][c];
  }
  auto d = smith_diagonal(m);
  if (d.size() != n) return false;
  return std::all_of(d.begin(), d.end(), [](const BigInt& x) { return x == 1; });
}

bool complementary_union_check(const Partition& p1, std::size_t deficit1, const Partition& p2,
                               std::size_t deficit2) {
  std::vector<const IndexClass*> c1, c2;
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (i != deficit1) c1.push_back(&p1[i]);
  for (std::size_t i = 0; i < p2.size(); ++i)
    if (i != deficit2) c2.push_back(&p2[i]);
  if (c1.size() > 30) throw std::invalid_argument("too many complementary classes");
  for (unsigned long mask = 1; mask < (1UL << c1.size()); ++mask) {
    std::set<std::size_t> u;
    for (std::size_t i = 0; i < c1.size(); ++i)
      if (mask >> i & 1UL) u.insert(c1[i]->begin(), c1[i]->end());
    // Is u a union of complementary classes of p2?
    std::set<std::size_t> covered;
    bool fits = true;
    for (const auto* c : c2) {
      std::size_t inside = 0;
      for (auto x : *c) inside += u.count(x);
      if (inside == c->size())
        covered.insert(c->begin(), c->end());
      else if (inside != 0)
        fits = false;
    }
    if (fits && covered == u) return false;
  }
  return true;
}

}  // namespace sfs
