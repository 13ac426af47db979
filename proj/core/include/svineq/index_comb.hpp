// Copyright 2026 The svineq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVINEQ_INDEX_COMB_HPP
#define SVINEQ_INDEX_COMB_HPP

#include <utility>
#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

// Strictly increasing sequence of integers in [1, n]. May be empty.
class IndexSeq {
 public:
  IndexSeq() = default;
  IndexSeq(int n, std::vector<int> indices);

  int n() const { return n_; }
  int m() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }

  // 1-based: i_k
  int operator[](int k) const { return indices_[static_cast<size_t>(k - 1)]; }

  bool operator==(const IndexSeq& o) const = default;

 private:
  int n_ = 0;
  std::vector<int> indices_;
};

// Admissible pair of increasing sequences with i_m + j_m <= n + m.
class TFPair {
 public:
  TFPair() = default;
  TFPair(IndexSeq i_seq, IndexSeq j_seq);

  const IndexSeq& i_seq() const { return i_seq_; }
  const IndexSeq& j_seq() const { return j_seq_; }
  int n() const { return i_seq_.n(); }
  int m() const { return i_seq_.m(); }

  bool operator==(const TFPair& o) const = default;

 private:
  IndexSeq i_seq_, j_seq_;
};

// Every admissible TFPair for (n, m), lexicographic in (i_seq, j_seq).
std::vector<TFPair> enumerate_tf_pairs(int n, int m);

// Every strictly increasing length-m sequence in [1, n], lexicographic.
std::vector<IndexSeq> enumerate_index_seqs(int n, int m);

enum class PartFlag { C, A };

enum class Window {
  Left,      // positions b..m
  LeftBar,   // positions 1..b-1
  Right,     // positions 1..m-b+1
  RightBar,  // positions m-b+2..m
};

// A C/A split of an index set together with the window threshold b.
// b lives in [1, m+1]; b = m+1 empties the L/R/J windows.
class IndexPartition {
 public:
  IndexPartition() = default;
  IndexPartition(IndexSeq i, int b, std::vector<PartFlag> flags);

  const IndexSeq& I() const { return I_; }
  int b() const { return b_; }
  const std::vector<PartFlag>& flags() const { return flags_; }
  int m() const { return I_.m(); }

  // Index values of I carrying `flag` within `window`.
  std::vector<int> select(PartFlag flag, Window window) const;

  bool operator==(const IndexPartition& o) const = default;

 private:
  bool in_window(int pos, Window w) const;

  IndexSeq I_;
  int b_ = 1;
  std::vector<PartFlag> flags_;
};

// The pairing (t_k, s_k) = (i_k, i_{k+b-1}) with its four-way classification.
struct PairClassification {
  std::vector<std::pair<int, int>> pairs;  // (t_k, s_k), k = 1..m-b+1
  std::vector<int> k1, k2, k3, k4;         // 1-based k values
  int r = 0;                               // |K3| + |K4|
};

PairClassification classify_pairs(const IndexPartition& p);

// Indices {t_k : k in K3} u {2n+1-s_k : k in K4}, sorted increasing, for the
// TF instance on the doubled (Wielandt) dimension with j_l = l + b - 1.
// Throws TFViolation if the assembled pair were inadmissible, which would
// signal a bug: r <= m-b+1 guarantees admissibility.
IndexSeq tfw_index_build(const PairClassification& c, int n, int b);

}  // namespace svineq

#endif  // SVINEQ_INDEX_COMB_HPP
