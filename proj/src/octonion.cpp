#include "fg/octonion.hpp"

#include <array>

namespace fg {
namespace oct {

namespace {

// basis products: entry 0 means the product vanishes, k > 0 means x_k
constexpr std::array<std::array<int, 9>, 9> tab = {{
    {},
    {0, 0, 0, 0, 0, 1, 2, 3, 4},
    {0, 0, 0, 1, 2, 0, 0, 5, 6},
    {0, 0, 1, 0, 3, 0, 5, 0, 7},
    {0, 1, 0, 0, 4, 0, 6, 7, 0},
    {0, 0, 2, 3, 0, 5, 0, 0, 8},
    {0, 2, 0, 4, 0, 6, 0, 8, 0},
    {0, 3, 4, 0, 0, 7, 8, 0, 0},
    {0, 5, 6, 7, 8, 0, 0, 0, 0},
}};

// ambient indices (0-based) of the polar-complement basis x1,x8,x2,x7,x3,x6
// followed by the idempotent e = x4 + x5
constexpr std::array<int, 6> eperp_plain = {0, 7, 1, 6, 2, 5};

int tf(const Algebra& A, const Vec& a, const Vec& b, int i, int j) {
  return gf::mul(A.F, a[i], b[j]);
}

void check8(const Vec& a) {
  if (a.size() != 8) throw error("octonion vector must have 8 coords");
}

}  // namespace

Algebra make_algebra(int q) {
  auto F = [&] {
    int d = 0, rest = q;
    while (rest % 2 == 0) {
      rest /= 2;
      ++d;
    }
    if (rest != 1 || d == 0)
      throw error("make_algebra: field size must be a power of 2");
    return gf::make_field(2, d);
  }();
  return Algebra{F};
}

Vec zero() { return Vec(8, 0); }

Vec basis(int i) {
  if (i < 1 || i > 8) throw error("basis index out of range");
  Vec v(8, 0);
  v[i - 1] = 1;
  return v;
}

Vec add(const Algebra& A, const Vec& a, const Vec& b) {
  check8(a);
  check8(b);
  Vec out(8);
  for (int i = 0; i < 8; ++i) out[i] = gf::add(A.F, a[i], b[i]);
  return out;
}

Vec scale(const Algebra& A, int c, const Vec& a) {
  check8(a);
  Vec out(8);
  for (int i = 0; i < 8; ++i) out[i] = gf::mul(A.F, c, a[i]);
  return out;
}

Vec mul(const Algebra& A, const Vec& a, const Vec& b) {
  check8(a);
  check8(b);
  Vec out(8, 0);
  for (int i = 1; i <= 8; ++i) {
    if (a[i - 1] == 0) continue;
    for (int j = 1; j <= 8; ++j) {
      int k = tab[i][j];
      if (k == 0 || b[j - 1] == 0) continue;
      out[k - 1] = gf::add(A.F, out[k - 1], tf(A, a, b, i - 1, j - 1));
    }
  }
  return out;
}

int norm(const Algebra& A, const Vec& a) {
  check8(a);
  int acc = tf(A, a, a, 0, 7);
  acc = gf::add(A.F, acc, tf(A, a, a, 1, 6));
  acc = gf::add(A.F, acc, tf(A, a, a, 2, 5));
  acc = gf::add(A.F, acc, tf(A, a, a, 3, 4));
  return acc;
}

int bil(const Algebra& A, const Vec& a, const Vec& b) {
  check8(a);
  check8(b);
  int acc = 0;
  for (int i = 0; i < 8; ++i)
    acc = gf::add(A.F, acc, gf::mul(A.F, a[i], b[7 - i]));
  return acc;
}

Vec idem() {
  Vec v(8, 0);
  v[3] = 1;
  v[4] = 1;
  return v;
}

bool in_eperp(const Vec& a) { return a.size() == 8 && a[3] == a[4]; }

Vec eperp_vec(const Algebra& A, const std::vector<int>& coords7) {
  (void)A;
  if (coords7.size() != 7) throw error("eperp_vec: need 7 coords");
  Vec v(8, 0);
  for (int i = 0; i < 6; ++i) v[eperp_plain[i]] = coords7[i];
  v[3] = coords7[6];
  v[4] = coords7[6];
  return v;
}

std::vector<int> eperp_coords(const Algebra& A, const Vec& a) {
  (void)A;
  check8(a);
  if (!in_eperp(a)) throw error("vector is not orthogonal to e");
  std::vector<int> c(7);
  for (int i = 0; i < 6; ++i) c[i] = a[eperp_plain[i]];
  c[6] = a[3];
  return c;
}

namespace {

// structure constants of the trilinear form in the 7-coordinate basis,
// built once: five generating triples, symmetrized
struct TripleTensor {
  // nonzero entries only; value is always 1
  std::vector<std::array<int, 3>> entries;

  TripleTensor() {
    // positions in the ordered basis x1,x8,x2,x7,x3,x6,e
    auto pos = [](int label) {
      switch (label) {
        case 1: return 0;
        case 8: return 1;
        case 2: return 2;
        case 7: return 3;
        case 3: return 4;
        case 6: return 5;
        default: return 6;  // 0 stands for e
      }
    };
    const int raw[5][3] = {
        {0, 1, 8}, {0, 2, 7}, {0, 3, 6}, {1, 6, 7}, {2, 3, 8}};
    for (auto& r : raw) {
      int a = pos(r[0]), b = pos(r[1]), c = pos(r[2]);
      int perms[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                         {b, c, a}, {c, a, b}, {c, b, a}};
      for (auto& p : perms) entries.push_back({p[0], p[1], p[2]});
    }
  }
};

const TripleTensor& tensor() {
  static TripleTensor t;
  return t;
}

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(const Algebra& A, std::vector<std::vector<int>>& rows) {
  const auto& F = A.F;
  std::vector<int> pivots;
  size_t r = 0;
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < width && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    int s = gf::inv(F, rows[r][col]);
    for (auto& x : rows[r]) x = gf::mul(F, s, x);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      int factor = rows[i][col];
      for (size_t j = 0; j < width; ++j)
        rows[i][j] = gf::sub(F, rows[i][j], gf::mul(F, factor, rows[r][j]));
    }
    pivots.push_back(int(col));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

int triple(const Algebra& A, const Vec& a, const Vec& b, const Vec& c) {
  auto ca = eperp_coords(A, a);
  auto cb = eperp_coords(A, b);
  auto cc = eperp_coords(A, c);
  int acc = 0;
  for (const auto& ent : tensor().entries) {
    int term = gf::mul(A.F, ca[ent[0]], gf::mul(A.F, cb[ent[1]], cc[ent[2]]));
    acc = gf::add(A.F, acc, term);
  }
  return acc;
}

std::vector<Vec> delta_subspace(const Algebra& A, const Vec& x) {
  auto cx = eperp_coords(A, x);
  // constraint matrix: row per z-basis vector, column per y coordinate
  std::vector<std::vector<int>> mat(7, std::vector<int>(7, 0));
  for (const auto& ent : tensor().entries) {
    // t(x, y, z) contribution: x at ent[0], y at ent[1], z at ent[2]
    mat[ent[2]][ent[1]] =
        gf::add(A.F, mat[ent[2]][ent[1]], cx[ent[0]]);
  }
  auto pivots = rref(A, mat);
  // kernel basis: one vector per free column
  std::vector<char> is_pivot(7, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<Vec> out;
  for (int col = 0; col < 7; ++col) {
    if (is_pivot[col]) continue;
    std::vector<int> y(7, 0);
    y[col] = 1;
    for (size_t r = 0; r < mat.size(); ++r)
      y[pivots[r]] = gf::neg(A.F, mat[r][col]);
    out.push_back(eperp_vec(A, y));
  }
  return out;
}

}  // namespace oct
}  // namespace fg
