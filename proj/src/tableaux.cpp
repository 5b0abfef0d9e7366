#include "sjack/tableaux.hpp"

#include <stdexcept>
#include <utility>

#include "sjack/memo.hpp"

namespace sjack {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return PartitionHash{}(k.first) * 1000003u ^ PartitionHash{}(k.second);
  }
};

using StripMemo = ConcurrentMemo<std::pair<Partition, Partition>, AlphaRational, PairHash>;

StripMemo& psi_memo() {
  static StripMemo memo(memo_capacity_from_env());
  return memo;
}

void strip_inners_rec(const Partition& outer, int row, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row > outer.length()) {
    out.emplace_back(cur);
    return;
  }
  // outer_{row+1} <= inner_row <= outer_row
  for (int v = outer.part(row + 1); v <= outer.part(row); ++v) {
    cur.push_back(v);
    strip_inners_rec(outer, row + 1, cur, out);
    cur.pop_back();
  }
}

bool rssyt_rec(ShapeChain& chain, int n, ReverseTableau& scratch,
               const std::function<bool(const ReverseTableau&)>& visit) {
  const int k = static_cast<int>(chain.size());  // chain holds S_1..S_k
  if (k == n + 1) {
    scratch.chain = chain;
    return visit(scratch);
  }
  const Partition current = chain.back();
  for (auto& inner : horizontal_strip_inners(current)) {
    if (inner.length() > n - k) continue;
    chain.push_back(std::move(inner));
    const bool go_on = rssyt_rec(chain, n, scratch, visit);
    chain.pop_back();
    if (!go_on) return false;
  }
  return true;
}

bool syt_rec(ShapeChain& chain, const Partition& outer, const std::function<bool(const StandardChain&)>& visit) {
  const Partition& current = chain.back();
  if (current.size() == outer.size()) return visit(StandardChain{chain});
  for (auto& next : grow_by_one_box(current)) {
    if (!contains(outer, next)) continue;
    chain.push_back(std::move(next));
    const bool go_on = syt_rec(chain, outer, visit);
    chain.pop_back();
    if (!go_on) return false;
  }
  return true;
}

AlphaRational compute_psi_strip(const Partition& outer, const Partition& inner) {
  const Partition outer_conj = conjugate(outer);
  const Partition inner_conj = conjugate(inner);
  AlphaPoly num(1);
  AlphaPoly den(1);
  for (int i = 1; i <= inner.length(); ++i) {
    if (outer.part(i) == inner.part(i)) continue;  // row does not meet the strip
    for (int j = 1; j <= inner.part(i); ++j) {
      if (outer_conj.part(j) != inner_conj.part(j)) continue;  // column meets the strip
      const int a_out = outer.part(i) - j;
      const int l_out = outer_conj.part(j) - i;
      const int a_in = inner.part(i) - j;
      const int l_in = inner_conj.part(j) - i;
      num *= AlphaPoly::linear(l_out, a_out + 1) * AlphaPoly::linear(l_in + 1, a_in);
      den *= AlphaPoly::linear(l_out + 1, a_out) * AlphaPoly::linear(l_in, a_in + 1);
    }
  }
  return AlphaRational(num, den);
}

}  // namespace

std::vector<Partition> horizontal_strip_inners(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  strip_inners_rec(outer, 1, cur, out);
  return out;
}

bool for_each_rssyt(const Partition& shape, int n, const std::function<bool(const ReverseTableau&)>& visit) {
  if (n < 0 || shape.length() > n) return true;
  ShapeChain chain{shape};
  ReverseTableau scratch{shape, n, {}};
  return rssyt_rec(chain, n, scratch, visit);
}

std::vector<ReverseTableau> enumerate_rssyt(const Partition& shape, int n) {
  std::vector<ReverseTableau> out;
  for_each_rssyt(shape, n, [&](const ReverseTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool for_each_syt(const SkewShape& sk, const std::function<bool(const StandardChain&)>& visit) {
  if (!contains(sk.outer, sk.inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
  ShapeChain chain{sk.inner};
  return syt_rec(chain, sk.outer, visit);
}

std::vector<StandardChain> enumerate_syt(const SkewShape& sk) {
  std::vector<StandardChain> out;
  for_each_syt(sk, [&](const StandardChain& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

AlphaRational psi_strip(const Partition& outer, const Partition& inner) {
  if (!is_horizontal_strip({outer, inner})) throw std::invalid_argument("psi_strip: not a horizontal strip");
  return psi_memo().get_or_compute({outer, inner}, [&] { return compute_psi_strip(outer, inner); });
}

AlphaRational psi_tableau(const ReverseTableau& t) {
  AlphaRational w(1);
  for (std::size_t i = 0; i + 1 < t.chain.size(); ++i) w *= psi_strip(t.chain[i], t.chain[i + 1]);
  return w;
}

AlphaRational psi_prime_strip(const Partition& outer, const Partition& inner) {
  if (!is_vertical_strip({outer, inner})) throw std::invalid_argument("psi_prime_strip: not a vertical strip");
  return psi_strip(conjugate(outer), conjugate(inner)).substitute_reciprocal();
}

AlphaRational psi_prime_tableau(const StandardChain& t) {
  AlphaRational w(1);
  for (std::size_t i = 0; i + 1 < t.chain.size(); ++i) w *= psi_prime_strip(t.chain[i + 1], t.chain[i]);
  return w;
}

}  // namespace sjack
