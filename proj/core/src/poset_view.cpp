#include "parthom/poset_view.hpp"

#include <algorithm>
#include <charconv>

namespace parthom {

namespace {

int parse_int(std::string_view tok, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InvalidView("malformed integer '" + std::string(tok) + "' in '" + std::string(context) + "'");
  }
  return v;
}

int parse_k(std::string_view params, std::string_view context) {
  if (params.substr(0, 2) != "k=") throw InvalidView("expected 'k=<int>' in view '" + std::string(context) + "'");
  return parse_int(params.substr(2), context);
}

bool is_modular_of_size(const std::vector<int>& sizes, int lo, int hi) {
  int nontrivial = 0;
  int size = 0;
  for (int s : sizes) {
    if (s > 1) {
      ++nontrivial;
      size = s;
    }
  }
  return nontrivial == 1 && size >= lo && size <= hi;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(start, comma - start);
    const auto dash = tok.find('-');
    if (dash == std::string_view::npos) {
      out.push_back(parse_int(tok, text));
    } else {
      const int lo = parse_int(tok.substr(0, dash), text);
      const int hi = parse_int(tok.substr(dash + 1), text);
      if (lo > hi) throw InvalidView("empty range '" + std::string(tok) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ViewSpec ViewSpec::rank_selected(std::vector<int> ranks) {
  ViewSpec v;
  v.family = Family::ranks;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  v.ranks = std::move(ranks);
  return v;
}

ViewSpec ViewSpec::with_k(Family family, int k) {
  ViewSpec v;
  v.family = family;
  v.k = k;
  return v;
}

ViewSpec ViewSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  auto no_params = [&] {
    if (colon != std::string_view::npos) throw InvalidView("view '" + std::string(head) + "' takes no parameters");
  };
  if (head == "full") {
    no_params();
    return full();
  }
  if (head == "even") {
    no_params();
    ViewSpec v;
    v.family = Family::even;
    return v;
  }
  if (head == "ranks") return rank_selected(parse_int_list(params));
  if (head == "qnk") return with_k(Family::qnk, parse_k(params, text));
  if (head == "pnk") return with_k(Family::pnk, parse_k(params, text));
  if (head == "le") return with_k(Family::le, parse_k(params, text));
  if (head == "ne") return with_k(Family::ne, parse_k(params, text));
  if (head == "even-top") return with_k(Family::even_top, parse_k(params, text));
  throw InvalidView("unknown view '" + std::string(text) + "'");
}

std::string ViewSpec::to_string() const {
  switch (family) {
    case Family::full: return "full";
    case Family::even: return "even";
    case Family::ranks: {
      std::string s = "ranks:";
      for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
      return s;
    }
    case Family::qnk: return "qnk:k=" + std::to_string(k);
    case Family::pnk: return "pnk:k=" + std::to_string(k);
    case Family::le: return "le:k=" + std::to_string(k);
    case Family::ne: return "ne:k=" + std::to_string(k);
    case Family::even_top: return "even-top:k=" + std::to_string(k);
  }
  return "?";
}

PosetView::PosetView(int n, ViewSpec spec) : n_(n), spec_(std::move(spec)) {
  if (n < 2 || n > kMaxN) {
    throw InvalidView("n = " + std::to_string(n) + " outside the supported range [2, " + std::to_string(kMaxN) + "]");
  }
  const int k = spec_.k;
  switch (spec_.family) {
    case Family::full: break;
    case Family::ranks:
      for (int r : spec_.ranks) {
        if (r < 1 || r > n - 2) throw InvalidView("rank " + std::to_string(r) + " outside [1, n-2]");
      }
      break;
    case Family::qnk:
    case Family::pnk:
    case Family::le:
      if (k < 2 || k > n - 1) throw InvalidView("k = " + std::to_string(k) + " outside [2, n-1]");
      break;
    case Family::ne:
      if (k < 1 || k > n - 1) throw InvalidView("k = " + std::to_string(k) + " outside [1, n-1]");
      break;
    case Family::even:
      if (n % 2 != 0) throw InvalidView("even-block view needs even n");
      break;
    case Family::even_top:
      if (n % 2 != 0) throw InvalidView("even-block view needs even n");
      if (k < 1 || k > n / 2 - 1) throw InvalidView("k = " + std::to_string(k) + " outside [1, n/2-1]");
      break;
  }
  generate();
}

std::string PosetView::name() const { return spec_.to_string() + ",n=" + std::to_string(n_); }

bool PosetView::rank_allowed(int r) const {
  if (r < 1 || r > n_ - 2) return false;
  switch (spec_.family) {
    case Family::ranks: return std::binary_search(spec_.ranks.begin(), spec_.ranks.end(), r);
    case Family::even: return r % 2 == 0;
    case Family::even_top: return r % 2 == 0 && r >= n_ - 2 * spec_.k;
    default: return true;
  }
}

bool PosetView::contains(const SetPartition& x) const {
  if (x.n() != n_ || !rank_allowed(x.rank())) return false;
  const int k = spec_.k;
  switch (spec_.family) {
    case Family::qnk: return !is_modular_of_size(x.block_sizes(), k, k);
    case Family::pnk: return !is_modular_of_size(x.block_sizes(), 2, k);
    case Family::le: {
      const auto sizes = x.block_sizes();
      return *std::max_element(sizes.begin(), sizes.end()) <= k;
    }
    case Family::ne: {
      const auto sizes = x.block_sizes();
      return std::find(sizes.begin(), sizes.end(), k) == sizes.end();
    }
    default: return true;
  }
}

void PosetView::generate() {
  by_rank_.assign(static_cast<std::size_t>(n_), {});
  const int cap = spec_.family == Family::le ? spec_.k : n_;
  std::vector<std::uint8_t> rgs(static_cast<std::size_t>(n_));
  std::vector<int> sizes;
  for (int r = 1; r <= n_ - 2; ++r) {
    if (!rank_allowed(r)) continue;
    const int target = n_ - r;
    // Restricted growth strings with exactly `target` blocks, block sizes <= cap.
    auto rec = [&](auto&& self, int i) -> void {
      const int used = static_cast<int>(sizes.size());
      if (used + (n_ - i) < target) return;
      if (i == n_) {
        auto x = SetPartition::from_rgs(rgs);
        if (contains(x)) {
          const auto idx = static_cast<std::uint32_t>(elements_.size());
          index_.emplace(x.key(), idx);
          by_rank_[static_cast<std::size_t>(r)].push_back(idx);
          elements_.push_back(x);
        }
        return;
      }
      for (int b = 0; b < used; ++b) {
        if (sizes[static_cast<std::size_t>(b)] >= cap) continue;
        rgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b);
        ++sizes[static_cast<std::size_t>(b)];
        self(self, i + 1);
        --sizes[static_cast<std::size_t>(b)];
      }
      if (used < target) {
        rgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(used);
        sizes.push_back(1);
        self(self, i + 1);
        sizes.pop_back();
      }
    };
    rec(rec, 0);
  }
}

std::vector<int> PosetView::occupied_ranks() const {
  std::vector<int> out;
  for (std::size_t r = 0; r < by_rank_.size(); ++r) {
    if (!by_rank_[r].empty()) out.push_back(static_cast<int>(r));
  }
  return out;
}

std::span<const std::uint32_t> PosetView::rank_indices(int r) const {
  if (r < 0 || r >= static_cast<int>(by_rank_.size())) return {};
  return by_rank_[static_cast<std::size_t>(r)];
}

std::optional<std::uint32_t> PosetView::index_of(const SetPartition& x) const {
  if (x.n() != n_) return std::nullopt;
  auto it = index_.find(x.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> PosetView::below(std::uint32_t i) const {
  std::call_once(order_once_, [this] { build_order(); });
  return below_[i];
}

std::span<const std::uint32_t> PosetView::lower_covers(std::uint32_t i) const {
  std::call_once(order_once_, [this] { build_order(); });
  return covers_[i];
}

bool PosetView::is_maximal(std::uint32_t i) const {
  std::call_once(order_once_, [this] { build_order(); });
  return maximal_[i];
}

void PosetView::build_order() const {
  const auto count = elements_.size();
  below_.assign(count, {});
  covers_.assign(count, {});
  maximal_.assign(count, true);

  // Strict refinements of y are generated block by block: element e joins an
  // existing sub-block of its y-block or opens a new one.
  std::vector<int> labels(static_cast<std::size_t>(n_));
  std::vector<std::vector<int>> sub_blocks_of;  // per y-block: labels used so far
  for (std::uint32_t yi = 0; yi < count; ++yi) {
    const SetPartition& y = elements_[yi];
    sub_blocks_of.assign(static_cast<std::size_t>(y.block_count()), {});
    int next_label = 0;
    auto& out = below_[yi];
    auto rec = [&](auto&& self, int e) -> void {
      if (e == n_) {
        auto z = SetPartition::from_labels(labels);
        if (z == y) return;
        if (auto it = index_.find(z.key()); it != index_.end()) out.push_back(it->second);
        return;
      }
      auto& subs = sub_blocks_of[static_cast<std::size_t>(y.block_of(e))];
      for (std::size_t s = 0; s < subs.size(); ++s) {
        labels[static_cast<std::size_t>(e)] = subs[s];
        self(self, e + 1);
      }
      labels[static_cast<std::size_t>(e)] = next_label;
      subs.push_back(next_label++);
      self(self, e + 1);
      subs.pop_back();
      --next_label;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    for (auto zi : out) maximal_[zi] = false;
  }

  const bool graded = spec_.family == Family::full || spec_.family == Family::ranks ||
                      spec_.family == Family::even || spec_.family == Family::even_top;
  if (graded) {
    for (std::uint32_t yi = 0; yi < count; ++yi) {
      int prev = -1;
      for (int r = elements_[yi].rank() - 1; r >= 1; --r) {
        if (rank_allowed(r) && !by_rank_[static_cast<std::size_t>(r)].empty()) {
          prev = r;
          break;
        }
      }
      for (auto zi : below_[yi]) {
        if (elements_[zi].rank() == prev) covers_[yi].push_back(zi);
      }
    }
    return;
  }
  std::vector<std::uint32_t> stamp(count, UINT32_MAX);
  for (std::uint32_t yi = 0; yi < count; ++yi) {
    for (auto wi : below_[yi]) {
      for (auto zi : below_[wi]) stamp[zi] = yi;
    }
    for (auto zi : below_[yi]) {
      if (stamp[zi] != yi) covers_[yi].push_back(zi);
    }
  }
}

bool PosetView::is_symmetric() const {
  std::vector<int> swap12(static_cast<std::size_t>(n_));
  std::vector<int> cycle(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    swap12[static_cast<std::size_t>(i)] = i + 1;
    cycle[static_cast<std::size_t>(i)] = (i + 1) % n_ + 1;
  }
  std::swap(swap12[0], swap12[1]);
  const auto a = Permutation::from_one_line(swap12);
  const auto b = Permutation::from_one_line(cycle);
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const SetPartition& x) { return contains(act(a, x)) && contains(act(b, x)); });
}

}  // namespace parthom
