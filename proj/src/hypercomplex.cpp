#include "jlp/hypercomplex.hpp"

namespace jlp {
namespace {

// Imaginary 7x7 block of the multiplication table, rows/cols e1..e7.
// Entry {s, k}: e_i * e_j = s * e_k (k = 0 is the unit).
struct Entry {
  int s, k;
};

constexpr Entry kImagTable[7][7] = {
    {{-1, 0}, {+1, 4}, {+1, 7}, {-1, 2}, {+1, 6}, {-1, 5}, {-1, 3}},
    {{-1, 4}, {-1, 0}, {+1, 5}, {+1, 1}, {-1, 3}, {+1, 7}, {-1, 6}},
    {{-1, 7}, {-1, 5}, {-1, 0}, {+1, 6}, {+1, 2}, {-1, 4}, {+1, 1}},
    {{+1, 2}, {-1, 1}, {-1, 6}, {-1, 0}, {+1, 7}, {+1, 3}, {-1, 5}},
    {{-1, 6}, {+1, 3}, {-1, 2}, {-1, 7}, {-1, 0}, {+1, 1}, {+1, 4}},
    {{+1, 5}, {-1, 7}, {+1, 4}, {-1, 3}, {-1, 1}, {-1, 0}, {+1, 2}},
    {{+1, 3}, {+1, 6}, {-1, 1}, {+1, 5}, {-1, 4}, {-1, 2}, {-1, 0}},
};

void check_table(const OctonionTable& t) {
  for (int j = 0; j < 8; ++j) {
    if (t.index(0, j) != j || t.sign(0, j) != 1) throw std::logic_error("octonion table: bad unit row");
    if (t.index(j, 0) != j || t.sign(j, 0) != 1) throw std::logic_error("octonion table: bad unit column");
  }
  for (int i = 1; i < 8; ++i) {
    if (t.index(i, i) != 0 || t.sign(i, i) != -1)
      throw std::logic_error("octonion table: diagonal is not -1");
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      if (t.index(i, j) == 0 || t.index(i, j) == i || t.index(i, j) == j)
        throw std::logic_error("octonion table: off-diagonal index collision");
      // e_i e_j + e_j e_i = 0 for i != j
      if (t.index(i, j) != t.index(j, i) || t.sign(i, j) != -t.sign(j, i))
        throw std::logic_error("octonion table: anticommutation broken");
    }
    // each imaginary row must hit every basis index exactly once
    int seen = 0;
    for (int j = 0; j < 8; ++j) seen |= 1 << t.index(i, j);
    if (seen != 0xFF) throw std::logic_error("octonion table: row is not a permutation");
  }
}

}  // namespace

OctonionTable::OctonionTable() {
  for (int j = 0; j < 8; ++j) {
    sign(0, j) = 1;
    index(0, j) = j;
    sign(j, 0) = 1;
    index(j, 0) = j;
  }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      sign(i + 1, j + 1) = kImagTable[i][j].s;
      index(i + 1, j + 1) = kImagTable[i][j].k;
    }
  check_table(*this);
}

const OctonionTable& octonion_table() {
  static const OctonionTable table;
  return table;
}

Eigen::Matrix2cd quat_embed(const Quaternion& q) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << q.a + i * q.b, q.c + i * q.d, -q.c + i * q.d, q.a - i * q.b;
  return m;
}

}  // namespace jlp
