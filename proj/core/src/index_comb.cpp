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

#include "svineq/index_comb.hpp"

#include <algorithm>
#include <string>

namespace svineq {

IndexSeq::IndexSeq(int n, std::vector<int> indices)
    : n_(n), indices_(std::move(indices)) {
  if (n < 0) throw InvalidDims("ambient dimension must be >= 0");
  int prev = 0;
  for (int i : indices_) {
    if (i <= prev || i > n_)
      throw InvalidDims("index sequence must be strictly increasing in [1, " +
                        std::to_string(n_) + "]");
    prev = i;
  }
}

TFPair::TFPair(IndexSeq i_seq, IndexSeq j_seq)
    : i_seq_(std::move(i_seq)), j_seq_(std::move(j_seq)) {
  if (i_seq_.n() != j_seq_.n() || i_seq_.m() != j_seq_.m())
    throw InvalidDims("TF pair sequences must share n and m");
  const int m = i_seq_.m();
  if (m > 0 && i_seq_[m] + j_seq_[m] > i_seq_.n() + m)
    throw TFViolation("i_m + j_m <= n + m fails: " + std::to_string(i_seq_[m]) +
                      " + " + std::to_string(j_seq_[m]) + " > " +
                      std::to_string(i_seq_.n() + m));
}

std::vector<IndexSeq> enumerate_index_seqs(int n, int m) {
  if (m < 1 || m > n) throw InvalidDims("need 1 <= m <= n");
  std::vector<IndexSeq> out;
  std::vector<int> cur(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) cur[static_cast<size_t>(k)] = k + 1;
  while (true) {
    out.emplace_back(n, cur);
    int k = m - 1;
    while (k >= 0 && cur[static_cast<size_t>(k)] == n - (m - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<size_t>(k)];
    for (int j = k + 1; j < m; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<TFPair> enumerate_tf_pairs(int n, int m) {
  if (m < 1 || m > n) throw InvalidDims("need 1 <= m <= n");
  const std::vector<IndexSeq> seqs = enumerate_index_seqs(n, m);
  std::vector<TFPair> out;
  for (const IndexSeq& i : seqs)
    for (const IndexSeq& j : seqs)
      if (i[m] + j[m] <= n + m) out.emplace_back(i, j);
  return out;
}

IndexPartition::IndexPartition(IndexSeq i, int b, std::vector<PartFlag> flags)
    : I_(std::move(i)), b_(b), flags_(std::move(flags)) {
  if (b_ < 1 || b_ > I_.m() + 1)
    throw InvalidDims("b must lie in [1, m+1], got " + std::to_string(b_));
  if (flags_.size() != static_cast<size_t>(I_.m()))
    throw InvalidDims("need one C/A flag per element of I");
}

bool IndexPartition::in_window(int pos, Window w) const {
  const int m = I_.m();
  switch (w) {
    case Window::Left:
      return pos >= b_ && pos <= m;
    case Window::LeftBar:
      return pos >= 1 && pos <= b_ - 1;
    case Window::Right:
      return pos >= 1 && pos <= m - b_ + 1;
    case Window::RightBar:
      return pos >= m - b_ + 2 && pos <= m;
  }
  return false;
}

std::vector<int> IndexPartition::select(PartFlag flag, Window window) const {
  std::vector<int> out;
  for (int pos = 1; pos <= I_.m(); ++pos)
    if (flags_[static_cast<size_t>(pos - 1)] == flag && in_window(pos, window))
      out.push_back(I_[pos]);
  return out;
}

PairClassification classify_pairs(const IndexPartition& p) {
  PairClassification c;
  const int m = p.m();
  const int b = p.b();
  // Positionally, s_k always lies in I_L and t_k always in I_R, so membership
  // is decided by the C/A flag alone.
  for (int k = 1; k <= m - b + 1; ++k) {
    const int t = p.I()[k];
    const int s = p.I()[k + b - 1];
    c.pairs.emplace_back(t, s);
    const bool s_in_c = p.flags()[static_cast<size_t>(k + b - 2)] == PartFlag::C;
    const bool t_in_c = p.flags()[static_cast<size_t>(k - 1)] == PartFlag::C;
    if (s_in_c && !t_in_c)
      c.k1.push_back(k);
    else if (!s_in_c && t_in_c)
      c.k2.push_back(k);
    else if (s_in_c && t_in_c)
      c.k3.push_back(k);
    else
      c.k4.push_back(k);
  }
  c.r = static_cast<int>(c.k3.size() + c.k4.size());
  return c;
}

IndexSeq tfw_index_build(const PairClassification& c, int n, int b) {
  std::vector<int> idx;
  for (int k : c.k3) idx.push_back(c.pairs[static_cast<size_t>(k - 1)].first);
  for (int k : c.k4)
    idx.push_back(2 * n + 1 - c.pairs[static_cast<size_t>(k - 1)].second);
  std::sort(idx.begin(), idx.end());
  for (int i : idx)
    if (i < 1 || i > 2 * n)
      throw TFViolation("assembled index " + std::to_string(i) +
                        " outside [1, 2n]");
  const int r = static_cast<int>(idx.size());
  if (r > 0 && idx.back() + (r + b - 1) > 2 * n + r)
    throw TFViolation("assembled pair violates i_r + j_r <= 2n + r");
  return IndexSeq(2 * n, std::move(idx));
}

}  // namespace svineq
