#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace loops::oracle {

Table raw(const LoopTable& loop) {
  Table t(loop.order(), std::vector<int>(loop.order()));
  for (std::size_t a = 0; a < loop.order(); ++a)
    for (std::size_t b = 0; b < loop.order(); ++b)
      t[a][b] = loop.mul(static_cast<Element>(a), static_cast<Element>(b));
  return t;
}

namespace {

bool can_place(const Table& t, int i, int j, int v) {
  for (int k = 0; k < j; ++k)
    if (t[i][k] == v) return false;
  for (int k = 0; k < i; ++k)
    if (t[k][j] == v) return false;
  return true;
}

void complete(Table& t, int n, int cell, std::vector<Table>& out) {
  if (cell == n * n) {
    out.push_back(t);
    return;
  }
  const int i = cell / n, j = cell % n;
  if (i == 0 || j == 0) {
    t[i][j] = i == 0 ? j : i;
    complete(t, n, cell + 1, out);
    return;
  }
  for (int v = 0; v < n; ++v)
    if (can_place(t, i, j, v)) {
      t[i][j] = v;
      complete(t, n, cell + 1, out);
    }
  t[i][j] = -1;
}

std::vector<int> relabeled(const Table& t, const std::vector<int>& p) {
  const int n = static_cast<int>(t.size());
  std::vector<int> flat(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[p[a] * n + p[b]] = p[t[a][b]];
  return flat;
}

}  // namespace

std::vector<Table> reduced_latin_squares(int n) {
  std::vector<Table> out;
  if (n <= 0) return out;
  Table t(n, std::vector<int>(n, -1));
  complete(t, n, 0, out);
  return out;
}

std::size_t count_loop_classes(int n) {
  std::set<std::vector<int>> classes;
  for (const auto& t : reduced_latin_squares(n)) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> least;
    do {
      auto flat = relabeled(t, p);
      if (least.empty() || flat < least) least = std::move(flat);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    classes.insert(least);
  }
  return classes.size();
}

std::vector<std::vector<int>> half_isomorphisms(const Table& a, const Table& b) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size())) return out;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        const int img = f[a[x][y]];
        ok = img == b[f[x]][f[y]] || img == b[f[y]][f[x]];
      }
    if (ok) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

std::vector<std::vector<int>> automorphisms(const Table& a) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(a.size());
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = f[a[x][y]] == a[f[x]][f[y]];
    if (ok) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

bool is_automorphic(const Table& a) {
  // Inner mappings are exactly the permutations in Mlt fixing the identity;
  // build Mlt by closure over translations and test each stabilizer member.
  const int n = static_cast<int>(a.size());
  int e = 0;
  while (!(a[e][0] == 0 && a[0][e] == 0 && [&] {
    for (int x = 0; x < n; ++x)
      if (a[e][x] != x || a[x][e] != x) return false;
    return true;
  }()))
    ++e;
  std::vector<std::vector<int>> gens;
  for (int k = 0; k < n; ++k) {
    std::vector<int> l(n), r(n);
    for (int x = 0; x < n; ++x) {
      l[x] = a[k][x];
      r[x] = a[x][k];
    }
    gens.push_back(l);
    gens.push_back(r);
  }
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(n);
        for (int x = 0; x < n; ++x) q[x] = g[p[x]];
        if (group.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  for (const auto& p : group) {
    if (p[e] != e) continue;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p[a[x][y]] != a[p[x]][p[y]]) return false;
  }
  return true;
}

}  // namespace loops::oracle
