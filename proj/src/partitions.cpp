#include "sjack/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sjack {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty()) return {};
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = strip(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool enumeration_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() > b.parts();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.part(1)), 0);
  for (int r : p.parts())
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

bool has_cell(const Partition& p, Cell s) { return s.row >= 1 && s.col >= 1 && s.col <= p.part(s.row); }

int arm(const Partition& p, Cell s) {
  if (!has_cell(p, s)) throw std::out_of_range("cell outside the diagram");
  return p.part(s.row) - s.col;
}

int leg(const Partition& p, Cell s) {
  if (!has_cell(p, s)) throw std::out_of_range("cell outside the diagram");
  int below = 0;
  while (p.part(s.row + below + 1) >= s.col) ++below;
  return below;
}

namespace {

AlphaPoly hook_product(const Partition& p, bool prime) {
  const Partition conj = conjugate(p);
  AlphaPoly prod(1);
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      const int a = p.part(i) - j;
      const int l = conj.part(j) - i;
      prod *= prime ? AlphaPoly::linear(l, a + 1) : AlphaPoly::linear(l + 1, a);
    }
  }
  return prod;
}

}  // namespace

AlphaPoly hook_H(const Partition& p) { return hook_product(p, false); }
AlphaPoly hook_Hprime(const Partition& p) { return hook_product(p, true); }

std::vector<Partition> grow_by_one_box(const Partition& p) {
  std::vector<Partition> out;
  for (int i = 1; i <= p.length() + 1; ++i) {
    if (i == 1 || p.part(i) < p.part(i - 1)) {
      std::vector<int> parts = p.parts();
      if (i > p.length()) parts.push_back(1);
      else ++parts[static_cast<std::size_t>(i - 1)];
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

std::vector<Partition> shrink_by_one_box(const Partition& p) {
  std::vector<Partition> out;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.part(i) > p.part(i + 1)) {
      std::vector<int> parts = p.parts();
      --parts[static_cast<std::size_t>(i - 1)];
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

bool is_horizontal_strip(const SkewShape& sk) {
  if (!contains(sk.outer, sk.inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
  for (int i = 1; i <= sk.outer.length(); ++i)
    if (sk.inner.part(i) < sk.outer.part(i + 1)) return false;
  return true;
}

bool is_vertical_strip(const SkewShape& sk) {
  if (!contains(sk.outer, sk.inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
  for (int i = 1; i <= sk.outer.length(); ++i)
    if (sk.outer.part(i) - sk.inner.part(i) > 1) return false;
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

void interval_rec(const Partition& inner, const Partition& outer, int row, std::vector<int>& cur,
                  std::vector<Partition>& out) {
  if (row > outer.length()) {
    out.emplace_back(cur);
    return;
  }
  const int hi = std::min(outer.part(row), row == 1 ? outer.part(1) : cur.back());
  const int lo = inner.part(row);
  for (int v = hi; v >= lo; --v) {
    cur.push_back(v);
    interval_rec(inner, outer, row + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> interval(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  if (!contains(outer, inner)) return out;
  std::vector<int> cur;
  interval_rec(inner, outer, 1, cur, out);
  std::stable_sort(out.begin(), out.end(), enumeration_less);
  return out;
}

}  // namespace sjack
