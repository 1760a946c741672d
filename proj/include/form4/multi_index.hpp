#pragma once

#include <array>
#include <cstdint>

// Canonical multi-index tables for antisymmetric tensors over a
// 4-dimensional (co)tangent space.  A grade-r component array is indexed
// by strictly increasing index tuples in lexicographic order, e.g. for
// r = 2: (01, 02, 03, 12, 13, 23).  All operator sign logic reduces to
// permutation parity on these tuples.

namespace form4 {

inline constexpr int kDim = 4;

inline constexpr std::array<int, 5> kGradeCount = {1, 4, 6, 4, 1};

// kCanon[r][k][j] = j-th index of the k-th canonical tuple of grade r.
// Unused slots are -1.
inline constexpr int kCanon[5][6][4] = {
    {{-1, -1, -1, -1}, {}, {}, {}, {}, {}},
    {{0, -1, -1, -1}, {1, -1, -1, -1}, {2, -1, -1, -1}, {3, -1, -1, -1}, {}, {}},
    {{0, 1, -1, -1}, {0, 2, -1, -1}, {0, 3, -1, -1},
     {1, 2, -1, -1}, {1, 3, -1, -1}, {2, 3, -1, -1}},
    {{0, 1, 2, -1}, {0, 1, 3, -1}, {0, 2, 3, -1}, {1, 2, 3, -1}, {}, {}},
    {{0, 1, 2, 3}, {}, {}, {}, {}, {}},
};

// Position of a strictly increasing tuple within the canonical list.
inline constexpr int canon_position(int grade, const int* idx) {
  for (int k = 0; k < kGradeCount[static_cast<std::size_t>(grade)]; ++k) {
    bool match = true;
    for (int j = 0; j < grade; ++j) {
      if (kCanon[grade][k][j] != idx[j]) { match = false; break; }
    }
    if (match) return k;
  }
  return -1;
}

// Merge two disjoint sorted tuples I (size r) and J (size s).  Returns the
// parity sign of sorting the concatenation (I, J) and writes the merged
// tuple; returns 0 if the tuples share an index.
inline int merge_sign(const int* I, int r, const int* J, int s, int* out) {
  int sign = 1;
  int i = 0, j = 0, k = 0;
  while (i < r && j < s) {
    if (I[i] == J[j]) return 0;
    if (I[i] < J[j]) {
      out[k++] = I[i++];
    } else {
      // J[j] jumps over the remaining r - i entries of I.
      if ((r - i) % 2 != 0) sign = -sign;
      out[k++] = J[j++];
    }
  }
  while (i < r) out[k++] = I[i++];
  while (j < s) out[k++] = J[j++];
  return sign;
}

// Parity of the concatenation (I, K) as a permutation of (0,1,2,3);
// 0 if I and K overlap.  |I| + |K| must be 4.
inline int permutation_sign(const int* I, int r, const int* K, int s) {
  int seq[4];
  for (int a = 0; a < r; ++a) seq[a] = I[a];
  for (int b = 0; b < s; ++b) seq[r + b] = K[b];
  int sign = 1;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) sign = -sign;
    }
  }
  return sign;
}

// Complementary canonical tuple: indices of {0,1,2,3} not in I.
inline void complement(const int* I, int r, int* out) {
  int k = 0;
  for (int v = 0; v < 4; ++v) {
    bool present = false;
    for (int a = 0; a < r; ++a) {
      if (I[a] == v) { present = true; break; }
    }
    if (!present) out[k++] = v;
  }
}

// Reversion sign (-1)^{r(r-1)/2}: + + - - + for grades 0..4.
inline constexpr double reversion_sign(int grade) {
  return (grade == 2 || grade == 3) ? -1.0 : 1.0;
}

}  // namespace form4
