#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

using tropmat::Rational;

tropmat::Rational minkowski_volume(const NdType& a) {
  const int n = a.n();
  const int d = a.d();
  Rational total = 0;
  std::vector<int> c(static_cast<std::size_t>(n));
  std::function<void(int, int)> fill = [&](int i, int left) {
    if (i == n - 1) {
      c[i] = left;
      // Draconian condition over all nonempty S ⊆ [n].
      for (unsigned s = 1; s < (1u << n); ++s) {
        Mask un = 0;
        int sum = 0;
        for (int k = 0; k < n; ++k) {
          if (s & (1u << k)) {
            un |= a[k];
            sum += c[k];
          }
        }
        if (tropmat::popcount(un) < sum + 1) return;
      }
      Rational term = 1;
      for (int k = 2; k <= d - 1; ++k) term *= k;
      for (int k = 0; k < n; ++k) {
        for (int f = 2; f <= c[k]; ++f) term /= f;
      }
      total += term;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, d - 1);
  return total;
}

std::vector<tropmat::OrderedPartition> ordered_partitions(int d) {
  std::vector<tropmat::OrderedPartition> out;
  std::vector<Mask> blocks;
  std::function<void(Mask)> grow = [&](Mask left) {
    if (left == 0) {
      out.push_back({blocks});
      return;
    }
    for (Mask b = left; b != 0; b = static_cast<Mask>((b - 1) & left)) {
      blocks.push_back(b);
      grow(static_cast<Mask>(left & ~b));
      blocks.pop_back();
    }
  };
  grow(tropmat::full_mask(d));
  return out;
}

std::vector<NdType> faces(const NdType& a) {
  std::vector<NdType> out;
  for (const auto& p : ordered_partitions(a.d())) {
    std::vector<Mask> entries;
    for (Mask e : a.entries()) {
      for (Mask b : p.blocks) {
        if (e & b) {
          entries.push_back(static_cast<Mask>(e & b));
          break;
        }
      }
    }
    out.emplace_back(a.d(), entries);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool acyclic(const NdType& a, const NdType& b) {
  const int d = a.d();
  std::vector<std::vector<bool>> und(d + 1, std::vector<bool>(d + 1));
  std::vector<std::vector<bool>> dir(d + 1, std::vector<bool>(d + 1));
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 1; j <= d; ++j) {
      for (int k = 1; k <= d; ++k) {
        if (j == k || !tropmat::contains(a[i], j) || !tropmat::contains(b[i], k)) continue;
        const Mask both = a[i] & b[i];
        if (tropmat::contains(both, j) && tropmat::contains(both, k)) {
          und[j][k] = und[k][j] = true;
        } else {
          dir[j][k] = true;
        }
      }
    }
  }
  for (int u = 1; u <= d; ++u) {
    for (int v = 1; v <= d; ++v) {
      if (!dir[u][v]) continue;
      std::vector<bool> seen(d + 1);
      std::vector<int> stack{v};
      seen[v] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (x == u) return false;
        for (int y = 1; y <= d; ++y) {
          if (!seen[y] && (und[x][y] || dir[x][y])) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return true;
}

long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<NdType> sampled_types(const tropmat::WeightMatrix& w, int steps) {
  std::vector<NdType> out;
  const int d = w.d();
  std::vector<Rational> p(static_cast<std::size_t>(d), Rational(0));
  Rational lo = 0;
  Rational hi = 0;
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = 1; j <= d; ++j) {
      lo = std::min(lo, Rational(-w(i, j)));
      hi = std::max(hi, Rational(-w(i, j)));
    }
  }
  lo -= 2;
  hi += 2;
  std::function<void(int)> fill = [&](int j) {
    if (j == d - 1) {
      out.push_back(tropmat::point_type(w, p));
      return;
    }
    for (int s = 0; s <= steps; ++s) {
      p[j] = lo + (hi - lo) * s / steps;
      fill(j + 1);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool eliminates(const std::vector<NdType>& m, const NdType& a, const NdType& b, int j) {
  for (const NdType& c : m) {
    bool ok = c.at(j) == (a.at(j) | b.at(j));
    for (int k = 1; k <= a.n() && ok; ++k) {
      const Mask x = c.at(k);
      ok = x == a.at(k) || x == b.at(k) || x == (a.at(k) | b.at(k));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
