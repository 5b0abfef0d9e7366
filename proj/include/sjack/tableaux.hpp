#pragma once

// Reverse semi-standard and standard tableaux, represented as chains of
// shapes, and the strip weights psi / psi' attached to them.

#include <functional>
#include <vector>

#include "sjack/algebra.hpp"
#include "sjack/partitions.hpp"

namespace sjack {

using ShapeChain = std::vector<Partition>;

/// chain[i-1] is the shape occupied by entries >= i, so chain.front() is the
/// full shape, chain.back() is empty, and chain has max_entry + 1 elements.
/// Entry i fills the horizontal strip chain[i-1] / chain[i].
struct ReverseTableau {
  Partition shape;
  int max_entry = 0;
  ShapeChain chain;
};

/// Saturated chain inner = chain.front() < ... < chain.back() = outer.
struct StandardChain {
  ShapeChain chain;
};

/// Every inner partition such that outer / inner is a horizontal strip, in
/// lexicographically ascending order of inner.
std::vector<Partition> horizontal_strip_inners(const Partition& outer);

/// Calls visit for every tableau in RSSYT(shape, n); stops early when visit
/// returns false.  Returns false iff enumeration was cut off.
bool for_each_rssyt(const Partition& shape, int n, const std::function<bool(const ReverseTableau&)>& visit);
std::vector<ReverseTableau> enumerate_rssyt(const Partition& shape, int n);

/// Calls visit for every saturated chain from inner to outer.
bool for_each_syt(const SkewShape& sk, const std::function<bool(const StandardChain&)>& visit);
std::vector<StandardChain> enumerate_syt(const SkewShape& sk);

/// Strip weight of a horizontal strip outer / inner (memoized).
/// Throws std::invalid_argument when outer / inner is not a horizontal strip.
AlphaRational psi_strip(const Partition& outer, const Partition& inner);
AlphaRational psi_tableau(const ReverseTableau& t);

/// psi of the conjugate strip with alpha replaced by 1 / alpha.  Throws
/// std::invalid_argument unless outer / inner is a vertical strip.
AlphaRational psi_prime_strip(const Partition& outer, const Partition& inner);
AlphaRational psi_prime_tableau(const StandardChain& t);

}  // namespace sjack
