#include "mvs/poset.hpp"

#include <array>
#include <functional>
#include <set>

namespace mvs {

Poset Poset::chain(int k) {
  Poset p;
  p.n = k;
  p.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) p.leq[i][j] = true;
  return p;
}

Poset Poset::antichain(int k) {
  Poset p;
  p.n = k;
  p.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) p.leq[i][i] = true;
  return p;
}

bool Poset::valid() const {
  for (int x = 0; x < n; ++x)
    if (!leq[x][x]) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) return false;
      for (int z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z]) return false;
    }
  return true;
}

bool Poset::is_chain() const {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!leq[x][y] && !leq[y][x]) return false;
  return true;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    bool maximal = true;
    for (int y = 0; y < n; ++y)
      if (y != x && leq[x][y]) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    bool minimal = true;
    for (int y = 0; y < n; ++y)
      if (y != x && leq[y][x]) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

Mask Poset::up_set(int x) const {
  Mask m = 0;
  for (int y = 0; y < n; ++y)
    if (leq[x][y]) m |= Mask{1} << y;
  return m;
}

Mask Poset::down_set(int x) const {
  Mask m = 0;
  for (int y = 0; y < n; ++y)
    if (leq[y][x]) m |= Mask{1} << y;
  return m;
}

bool Poset::is_up_set(Mask m) const {
  for (int x = 0; x < n; ++x)
    if (has_bit(m, x) && (up_set(x) & ~m)) return false;
  return true;
}

bool Poset::is_down_set(Mask m) const {
  for (int x = 0; x < n; ++x)
    if (has_bit(m, x) && (down_set(x) & ~m)) return false;
  return true;
}

std::vector<Mask> Poset::all_down_sets() const {
  check_size_guard(n, "all_down_sets");
  // Grow downward-closed sets one addable element at a time.
  std::set<Mask> seen = {0};
  std::vector<Mask> frontier = {0};
  while (!frontier.empty()) {
    Mask m = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < n; ++x) {
      if (has_bit(m, x)) continue;
      if (down_set(x) & ~(m | (Mask{1} << x))) continue;  // x not addable yet
      Mask next = m | (Mask{1} << x);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return std::vector<Mask>(seen.begin(), seen.end());
}

std::vector<Mask> Poset::all_up_sets() const {
  auto downs = all_down_sets();
  std::vector<Mask> out;
  out.reserve(downs.size());
  Mask full = full_mask(n);
  for (Mask d : downs) out.push_back(full & ~d);
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::is_root_system() const {
  for (int x = 0; x < n; ++x) {
    auto ups = mask_to_vec(up_set(x));
    for (size_t i = 0; i < ups.size(); ++i)
      for (size_t j = i + 1; j < ups.size(); ++j)
        if (!leq[ups[i]][ups[j]] && !leq[ups[j]][ups[i]]) return false;
  }
  return true;
}

namespace {

// Degree profile: (|down-set|, |up-set|) per element, used to prune the
// bijection search.
std::vector<std::pair<int, int>> profile(const Poset& p) {
  std::vector<std::pair<int, int>> out(p.n);
  for (int x = 0; x < p.n; ++x)
    out[x] = {popcount(p.down_set(x)), popcount(p.up_set(x))};
  return out;
}

bool extend(const Poset& a, const Poset& b,
            const std::vector<std::pair<int, int>>& pa,
            const std::vector<std::pair<int, int>>& pb, std::vector<int>& map,
            std::vector<bool>& used, int x) {
  if (x == a.n) return true;
  for (int y = 0; y < b.n; ++y) {
    if (used[y] || pa[x] != pb[y]) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (a.leq[x][z] != b.leq[y][map[z]]) ok = false;
      if (a.leq[z][x] != b.leq[map[z]][y]) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(a, b, pa, pb, map, used, x + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
  if (a.n != b.n) return false;
  auto pa = profile(a), pb = profile(b);
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(a.n, false);
  return extend(a, b, pa, pb, map, used, 0);
}

}  // namespace mvs
