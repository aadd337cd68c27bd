#include "parthom/set_partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace parthom {

namespace {

void check_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw std::invalid_argument("ground set size must lie in [0, " + std::to_string(kMaxGroundSet) + "]");
  }
}

}  // namespace

SetPartition::SetPartition(int n) {
  check_ground_set(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) rgs_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  blocks_ = static_cast<std::uint8_t>(n);
}

SetPartition SetPartition::from_rgs(std::span<const std::uint8_t> labels) {
  check_ground_set(static_cast<int>(labels.size()));
  SetPartition x(0);
  x.n_ = static_cast<std::uint8_t>(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > next) throw std::invalid_argument("not a restricted growth string");
    if (labels[i] == next) ++next;
    x.rgs_[i] = labels[i];
  }
  x.blocks_ = static_cast<std::uint8_t>(next);
  return x;
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  check_ground_set(static_cast<int>(labels.size()));
  std::array<std::uint8_t, kMaxGroundSet> rgs{};
  std::map<int, std::uint8_t> relabel;
  std::array<int, 2 * kMaxGroundSet> small;
  small.fill(-1);
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int l = labels[i];
    if (l >= 0 && l < static_cast<int>(small.size())) {
      auto& r = small[static_cast<std::size_t>(l)];
      if (r < 0) r = next++;
      rgs[i] = static_cast<std::uint8_t>(r);
    } else {
      auto [it, inserted] = relabel.try_emplace(l, static_cast<std::uint8_t>(next));
      if (inserted) ++next;
      rgs[i] = it->second;
    }
  }
  return from_rgs(std::span<const std::uint8_t>(rgs.data(), labels.size()));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_ground_set(n);
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
      auto& slot = labels[static_cast<std::size_t>(e - 1)];
      if (slot != -1) throw std::invalid_argument("element " + std::to_string(e) + " appears twice");
      slot = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) throw std::invalid_argument("blocks do not cover {1..n}");
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  const bool commas = text.find(',') != std::string_view::npos;
  int n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view chunk = text.substr(start, bar - start);
    std::vector<int> block;
    if (commas) {
      std::size_t s = 0;
      while (s <= chunk.size()) {
        std::size_t c = chunk.find(',', s);
        if (c == std::string_view::npos) c = chunk.size();
        std::string_view tok = chunk.substr(s, c - s);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw std::invalid_argument("malformed set partition '" + std::string(text) + "'");
        }
        block.push_back(v);
        s = c + 1;
      }
    } else {
      for (char ch : chunk) {
        if (ch < '1' || ch > '9') throw std::invalid_argument("malformed set partition '" + std::string(text) + "'");
        block.push_back(ch - '0');
      }
    }
    for (int v : block) n = std::max(n, v);
    blocks.push_back(std::move(block));
    start = bar + 1;
  }
  return from_blocks(n, blocks);
}

SetPartition SetPartition::top(int n) {
  std::vector<std::uint8_t> zeros(static_cast<std::size_t>(n), 0);
  return from_rgs(zeros);
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes(blocks_, 0);
  for (int i = 0; i < n_; ++i) ++sizes[rgs_[static_cast<std::size_t>(i)]];
  return sizes;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < n_; ++i) out[rgs_[static_cast<std::size_t>(i)]].push_back(i + 1);
  return out;
}

std::uint64_t SetPartition::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(rgs_[static_cast<std::size_t>(i)]) << (4 * i);
  return k;
}

std::string SetPartition::to_string() const {
  std::string out;
  const bool commas = n_ > 9;
  const auto bl = blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (b) out += '|';
    for (std::size_t j = 0; j < bl[b].size(); ++j) {
      if (commas && j) out += ',';
      out += std::to_string(bl[b][j]);
    }
  }
  return out;
}

bool leq(const SetPartition& x, const SetPartition& y) {
  if (x.n() != y.n()) throw std::invalid_argument("leq: partitions of different ground sets");
  std::array<int, kMaxGroundSet> image;
  image.fill(-1);
  for (int i = 0; i < x.n(); ++i) {
    auto& slot = image[static_cast<std::size_t>(x.block_of(i))];
    if (slot == -1) {
      slot = y.block_of(i);
    } else if (slot != y.block_of(i)) {
      return false;
    }
  }
  return true;
}

IntPartition type_of(const SetPartition& x) { return IntPartition::from_unsorted(x.block_sizes()); }

Permutation Permutation::identity(int n) {
  Permutation g;
  g.image_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.image_[static_cast<std::size_t>(i)] = i;
  return g;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  Permutation g;
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
    g.image_.push_back(v - 1);
  }
  return g;
}

Permutation Permutation::canonical_of_type(const IntPartition& cycle_type) {
  Permutation g = identity(cycle_type.weight());
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int j = 0; j < len; ++j) g.image_[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  return g;
}

IntPartition Permutation::cycle_type() const {
  std::vector<bool> seen(image_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return IntPartition::from_unsorted(std::move(lengths));
}

SetPartition act(const Permutation& g, const SetPartition& x) {
  if (g.n() != x.n()) throw std::invalid_argument("act: permutation and partition sizes differ");
  std::array<int, kMaxGroundSet> labels{};
  for (int i = 0; i < x.n(); ++i) labels[static_cast<std::size_t>(g(i))] = x.block_of(i);
  std::array<int, kMaxGroundSet> relabel;
  relabel.fill(-1);
  std::array<std::uint8_t, kMaxGroundSet> rgs{};
  int next = 0;
  for (int i = 0; i < x.n(); ++i) {
    auto& r = relabel[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    if (r < 0) r = next++;
    rgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r);
  }
  return SetPartition::from_rgs(std::span<const std::uint8_t>(rgs.data(), static_cast<std::size_t>(x.n())));
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex mutex;
  static std::vector<std::vector<Integer>> table{{Integer(1)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const auto m = table.size();
    std::vector<Integer> row(m + 1, Integer(0));
    for (std::size_t j = 1; j <= m; ++j) {
      row[j] = table[m - 1][j - 1] + (j < m ? Integer(static_cast<unsigned long>(j)) * table[m - 1][j] : Integer(0));
    }
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace parthom
