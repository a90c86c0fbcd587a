#include "fibfub/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fibfub::enumeration {

int Tiling::length() const {
  return std::accumulate(pieces.begin(), pieces.end(), 0);
}

namespace {

// Restricted-growth strings: rgs[0] = 0 and rgs[i] <= max(rgs[0..i-1]) + 1;
// partitions into exactly k blocks are the strings with maximum k-1. The
// recursion emits them in lexicographic order.
template <typename Visit>
void walk_rgs(int n, int k, int pos, int max_so_far, std::vector<int>& rgs, Visit&& visit) {
  if (pos == n) {
    visit(rgs);
    return;
  }
  const int cap = std::min(max_so_far + 1, k - 1);
  for (int v = 0; v <= cap; ++v) {
    // Remaining positions must still be able to reach value k-1.
    const int new_max = std::max(max_so_far, v);
    if (k - 1 - new_max > n - 1 - pos) continue;
    rgs[pos] = v;
    walk_rgs(n, k, pos + 1, new_max, rgs, visit);
  }
}

template <typename Visit>
void for_each_rgs(int n, int k, Visit&& visit) {
  if (n < 0 || k < 0 || k > n) return;
  if (n == 0) {
    std::vector<int> empty;
    visit(empty);
    return;
  }
  if (k == 0) return;
  std::vector<int> rgs(n);
  walk_rgs(n, k, 0, -1, rgs, visit);
}

void blocks_from_rgs(const std::vector<int>& rgs, int k, SetPartition& out) {
  out.blocks.assign(k, {});
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
    out.blocks[rgs[i]].push_back(i + 1);
  }
}

template <typename Visit>
void walk_fib_perms(int k, int pos, std::vector<int>& sigma, Visit&& visit) {
  if (pos > k) {
    visit(sigma);
    return;
  }
  sigma[pos - 1] = pos;
  walk_fib_perms(k, pos + 1, sigma, visit);
  if (pos + 1 <= k) {
    sigma[pos - 1] = pos + 1;
    sigma[pos] = pos;
    walk_fib_perms(k, pos + 2, sigma, visit);
  }
}

template <typename Visit>
void walk_tilings(int k, std::vector<int>& pieces, Visit&& visit) {
  if (k == 0) {
    visit(pieces);
    return;
  }
  pieces.push_back(1);
  walk_tilings(k - 1, pieces, visit);
  pieces.pop_back();
  if (k >= 2) {
    pieces.push_back(2);
    walk_tilings(k - 2, pieces, visit);
    pieces.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, int k, const std::function<void(const SetPartition&)>& visit) {
  SetPartition scratch;
  for_each_rgs(n, k, [&](const std::vector<int>& rgs) {
    blocks_from_rgs(rgs, k, scratch);
    visit(scratch);
  });
}

std::vector<SetPartition> enumerate_partitions(int n, int k) {
  std::vector<SetPartition> out;
  for_each_partition(n, k, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

BigInt count_partitions(int n, int k) {
  BigInt count = 0;
  for_each_rgs(n, k, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<FibPermutation> enumerate_fib_permutations(int k) {
  if (k < 0) throw std::domain_error("enumerate_fib_permutations: negative k");
  std::vector<FibPermutation> out;
  std::vector<int> sigma(k);
  walk_fib_perms(k, 1, sigma, [&](const std::vector<int>& s) { out.push_back({s}); });
  return out;
}

std::vector<Tiling> enumerate_tilings(int k) {
  if (k < 0) throw std::domain_error("enumerate_tilings: negative k");
  std::vector<Tiling> out;
  std::vector<int> pieces;
  walk_tilings(k, pieces, [&](const std::vector<int>& p) { out.push_back({p}); });
  return out;
}

FibPermutation tiling_to_permutation(const Tiling& t) {
  FibPermutation perm;
  perm.sigma.resize(t.length());
  int i = 1;
  for (int piece : t.pieces) {
    if (piece == 1) {
      perm.sigma[i - 1] = i;
      i += 1;
    } else if (piece == 2) {
      // The box slides to the back of the container: positions swap.
      perm.sigma[i - 1] = i + 1;
      perm.sigma[i] = i;
      i += 2;
    } else {
      throw std::invalid_argument("tiling_to_permutation: piece length not 1 or 2");
    }
  }
  return perm;
}

Tiling permutation_to_tiling(const FibPermutation& p) {
  Tiling t;
  const int k = static_cast<int>(p.sigma.size());
  int i = 1;
  while (i <= k) {
    if (p.sigma[i - 1] == i) {
      t.pieces.push_back(1);
      i += 1;
    } else if (i + 1 <= k && p.sigma[i - 1] == i + 1 && p.sigma[i] == i) {
      t.pieces.push_back(2);
      i += 2;
    } else {
      throw std::invalid_argument("permutation_to_tiling: not a Fibonacci permutation");
    }
  }
  return t;
}

void for_each_fib_ordered_partition(
    int n, const std::function<void(const SetPartition&, const FibPermutation&)>& visit) {
  if (n < 0) throw std::domain_error("for_each_fib_ordered_partition: negative n");
  for (int k = 0; k <= n; ++k) {
    const auto perms = enumerate_fib_permutations(k);
    for_each_partition(n, k, [&](const SetPartition& p) {
      for (const auto& perm : perms) visit(p, perm);
    });
  }
}

std::vector<OrderedPartition> enumerate_fib_ordered_partitions(int n) {
  std::vector<OrderedPartition> out;
  for_each_fib_ordered_partition(n, [&](const SetPartition& p, const FibPermutation& s) {
    out.push_back({p, s});
  });
  return out;
}

BigInt count_fib_ordered_partitions(int n) {
  if (n < 0) throw std::domain_error("count_fib_ordered_partitions: negative n");
  BigInt count = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt perm_count = static_cast<long>(enumerate_fib_permutations(k).size());
    for_each_rgs(n, k, [&](const std::vector<int>&) { count += perm_count; });
  }
  return count;
}

std::string render_bar_notation(const OrderedPartition& p) {
  const int k = static_cast<int>(p.base.blocks.size());
  if (static_cast<int>(p.sigma.sigma.size()) != k) {
    throw std::invalid_argument("render_bar_notation: sigma length != block count");
  }
  bool commas = false;
  for (const auto& block : p.base.blocks) {
    for (int e : block) {
      if (e >= 10) commas = true;
    }
  }
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (i) out += '|';
    const auto& block = p.base.blocks[p.sigma.sigma[i] - 1];
    for (size_t j = 0; j < block.size(); ++j) {
      if (commas && j) out += ',';
      out += std::to_string(block[j]);
    }
  }
  return out;
}

OrderedPartition parse_bar_notation(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_bar_notation: empty input");
  const bool commas = text.find(',') != std::string::npos;
  std::vector<std::vector<int>> listed;
  listed.emplace_back();
  std::string digits;
  auto flush_element = [&]() {
    if (digits.empty()) throw std::invalid_argument("parse_bar_notation: empty element");
    listed.back().push_back(std::stoi(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (ch == '|') {
      if (!digits.empty()) flush_element();
      if (listed.back().empty()) {
        throw std::invalid_argument("parse_bar_notation: empty block");
      }
      listed.emplace_back();
    } else if (ch == ',') {
      flush_element();
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
      if (!commas) flush_element();  // single-digit elements
    } else {
      throw std::invalid_argument("parse_bar_notation: unexpected character");
    }
  }
  if (!digits.empty()) flush_element();

  int n = 0;
  std::vector<int> seen;
  for (auto& block : listed) {
    if (block.empty()) throw std::invalid_argument("parse_bar_notation: empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      seen.push_back(e);
      n = std::max(n, e);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < static_cast<int>(seen.size()); ++i) {
    if (seen[i] != i + 1) {
      throw std::invalid_argument("parse_bar_notation: elements must cover 1..n exactly once");
    }
  }
  if (n != static_cast<int>(seen.size())) {
    throw std::invalid_argument("parse_bar_notation: elements must cover 1..n exactly once");
  }

  OrderedPartition out;
  out.base.blocks = listed;
  std::sort(out.base.blocks.begin(), out.base.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& block : listed) {
    const auto it = std::find(out.base.blocks.begin(), out.base.blocks.end(), block);
    const int pos = static_cast<int>(it - out.base.blocks.begin()) + 1;
    out.sigma.sigma.push_back(pos);
  }
  for (int i = 0; i < static_cast<int>(out.sigma.sigma.size()); ++i) {
    if (std::abs(out.sigma.sigma[i] - (i + 1)) > 1) {
      throw std::invalid_argument("parse_bar_notation: block order is not a Fibonacci permutation");
    }
  }
  return out;
}

std::string render_tiling(const Tiling& t) {
  std::string out;
  for (int piece : t.pieces) out += piece == 1 ? "[]" : "[==]";
  return out;
}

std::vector<ShapeCount> count_by_shape(int n) {
  if (n < 1) throw std::domain_error("count_by_shape: requires n >= 1");
  std::vector<ShapeCount> table;
  for (int k = 1; k <= n; ++k) {
    const auto tilings = enumerate_tilings(k);
    const auto perms = enumerate_fib_permutations(k);
    // Index of the tiling each permutation maps back to, resolved once.
    std::map<std::vector<int>, int> tiling_index;
    for (int i = 0; i < static_cast<int>(tilings.size()); ++i) {
      tiling_index[tilings[i].pieces] = i;
    }
    std::vector<int> shape_of_perm;
    shape_of_perm.reserve(perms.size());
    for (const auto& perm : perms) {
      shape_of_perm.push_back(tiling_index.at(permutation_to_tiling(perm).pieces));
    }
    std::vector<BigInt> counts(tilings.size());
    for_each_partition(n, k, [&](const SetPartition&) {
      for (int shape : shape_of_perm) counts[shape] += 1;
    });
    for (int i = 0; i < static_cast<int>(tilings.size()); ++i) {
      table.push_back({k, tilings[i], counts[i]});
    }
  }
  return table;
}

}  // namespace fibfub::enumeration
