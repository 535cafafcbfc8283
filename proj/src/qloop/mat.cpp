#include "qloop/mat.hpp"

#include <cassert>
#include <numeric>
#include <vector>

namespace qloop {

Mat Mat::eye(int n) {
  Mat m(n, n);
  const Rat one = Rat::from_int(1);
  for (int i = 0; i < n; ++i) m.e[{i, i}] = one;
  return m;
}

Rat Mat::get(int r, int c) const {
  auto it = e.find({r, c});
  return it == e.end() ? Rat() : it->second;
}

void Mat::set(int r, int c, const Rat& v) {
  if (v.is_zero())
    e.erase({r, c});
  else
    e[{r, c}] = v;
}

void Mat::add_to(int r, int c, const Rat& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = e.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  }
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  return (*this - o).is_zero();
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r = *this;
  for (const auto& [rc, v] : o.e) r.add_to(rc.first, rc.second, v);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r = *this;
  for (const auto& [rc, v] : o.e) r.add_to(rc.first, rc.second, -v);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols == o.rows);
  Mat r(rows, o.cols);
  for (const auto& [rc, va] : e) {
    auto it = o.e.lower_bound({rc.second, 0});
    for (; it != o.e.end() && it->first.first == rc.second; ++it)
      r.add_to(rc.first, it->first.second, va * it->second);
  }
  return r;
}

Mat Mat::scale(const Rat& s) const {
  Mat r(rows, cols);
  if (s.is_zero()) return r;
  for (const auto& [rc, v] : e) r.e[rc] = v * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols, rows);
  for (const auto& [rc, v] : e) r.e[{rc.second, rc.first}] = v;
  return r;
}

Mat kron(const Mat& A, const Mat& B) {
  Mat r(A.rows * B.rows, A.cols * B.cols);
  for (const auto& [ra, va] : A.e)
    for (const auto& [rb, vb] : B.e)
      r.e[{ra.first * B.rows + rb.first, ra.second * B.cols + rb.second}] = va * vb;
  return r;
}

Mat embed_pair(const Mat& R, int N, int nfac, int p1, int p2) {
  assert(R.rows == N * N && R.cols == N * N && p1 != p2);
  assert(p1 >= 0 && p1 < nfac && p2 >= 0 && p2 < nfac);
  long dim = 1;
  for (int i = 0; i < nfac; ++i) dim *= N;
  Mat out(static_cast<int>(dim), static_cast<int>(dim));
  // Spectator slots enumerate independently; p1/p2 carry R's indices.
  std::vector<int> spect;
  for (int i = 0; i < nfac; ++i)
    if (i != p1 && i != p2) spect.push_back(i);
  long nspect = 1;
  for (size_t i = 0; i < spect.size(); ++i) nspect *= N;
  std::vector<long> weight(static_cast<size_t>(nfac), 1);
  for (int i = nfac - 2; i >= 0; --i)
    weight[static_cast<size_t>(i)] = weight[static_cast<size_t>(i) + 1] * N;
  for (const auto& [rc, v] : R.e) {
    int i1 = rc.first / N, i2 = rc.first % N;
    int j1 = rc.second / N, j2 = rc.second % N;
    for (long m = 0; m < nspect; ++m) {
      long base = 0, mm = m;
      for (size_t k = spect.size(); k-- > 0;) {
        base += (mm % N) * weight[static_cast<size_t>(spect[k])];
        mm /= N;
      }
      long row = base + i1 * weight[static_cast<size_t>(p1)] + i2 * weight[static_cast<size_t>(p2)];
      long col = base + j1 * weight[static_cast<size_t>(p1)] + j2 * weight[static_cast<size_t>(p2)];
      out.e[{static_cast<int>(row), static_cast<int>(col)}] = v;
    }
  }
  return out;
}

Mat flip_op(int N) {
  Mat p(N * N, N * N);
  const Rat one = Rat::from_int(1);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p.e[{i * N + j, j * N + i}] = one;
  return p;
}

Mat mat_subst(const Mat& M, const std::map<int, Rat>& vals) {
  Mat r(M.rows, M.cols);
  for (const auto& [rc, v] : M.e) r.set(rc.first, rc.second, rat_subst(v, vals));
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) {
      p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
      x = p[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

Mat inverse(const Mat& M) {
  assert(M.rows == M.cols);
  const int n = M.rows;
  UnionFind uf(n);
  for (const auto& [rc, v] : M.e) uf.unite(rc.first, rc.second);
  // Collect member lists per component root.
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
  Mat out(n, n);
  for (const auto& [root, idx] : comps) {
    (void)root;
    const int k = static_cast<int>(idx.size());
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[idx[static_cast<size_t>(i)]] = i;
    // Dense augmented [A | I] elimination on this block.
    std::vector<std::vector<Rat>> aug(static_cast<size_t>(k),
                                      std::vector<Rat>(static_cast<size_t>(2 * k)));
    for (int i = 0; i < k; ++i) aug[static_cast<size_t>(i)][static_cast<size_t>(k + i)] = Rat::from_int(1);
    for (int i = 0; i < k; ++i) {
      auto it = M.e.lower_bound({idx[static_cast<size_t>(i)], 0});
      for (; it != M.e.end() && it->first.first == idx[static_cast<size_t>(i)]; ++it)
        aug[static_cast<size_t>(i)][static_cast<size_t>(pos.at(it->first.second))] = it->second;
    }
    for (int col = 0; col < k; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r)
        if (!aug[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw pole_error("singular matrix");
      std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(piv)]);
      Rat pinv = aug[static_cast<size_t>(col)][static_cast<size_t>(col)].inv();
      for (int c = 0; c < 2 * k; ++c) {
        auto& x = aug[static_cast<size_t>(col)][static_cast<size_t>(c)];
        if (!x.is_zero()) x = x * pinv;
      }
      for (int r = 0; r < k; ++r) {
        if (r == col) continue;
        Rat f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f.is_zero()) continue;
        for (int c = 0; c < 2 * k; ++c) {
          const auto& src = aug[static_cast<size_t>(col)][static_cast<size_t>(c)];
          if (!src.is_zero())
            aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * src;
        }
      }
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        out.set(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)],
                aug[static_cast<size_t>(i)][static_cast<size_t>(k + j)]);
  }
  return out;
}

bool is_scalar_mat(const Mat& M, Rat* out) {
  if (M.rows != M.cols) return false;
  if (M.is_zero()) {
    if (out) *out = Rat();
    return true;
  }
  Rat c = M.get(0, 0);
  for (const auto& [rc, v] : M.e) {
    if (rc.first != rc.second) return false;
    if (!(v == c)) return false;
  }
  // All diagonal entries must be present and equal to c (c = 0 handled above).
  if (static_cast<int>(M.e.size()) != M.rows) return false;
  if (out) *out = c;
  return true;
}

}  // namespace qloop
