#include "steinberg_rsk/partitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace srsk {

namespace {

void check_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  check_partition(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase_if(parts, [](int v) { return v == 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v <= 0) throw std::invalid_argument("composition parts must be positive");
  }
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::prefix_sum(std::size_t i) const {
  if (i > parts_.size()) throw std::out_of_range("composition prefix index out of range");
  return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i), 0);
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

bool dominance_leq(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size()) {
    throw IncomparableSizes("dominance order compares partitions of equal size only: " +
                            lhs.to_string() + " vs " + rhs.to_string());
  }
  int left = 0;
  int right = 0;
  const std::size_t rows = std::max(lhs.length(), rhs.length());
  for (std::size_t i = 0; i < rows; ++i) {
    left += lhs[i];
    right += rhs[i];
    if (left > right) return false;
  }
  return true;
}

bool young_leq(const Partition& lhs, const Partition& rhs) {
  if (lhs.length() > rhs.length()) return false;
  for (std::size_t i = 0; i < lhs.length(); ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

Partition add(const Partition& lhs, const Partition& rhs) {
  std::vector<int> parts(std::max(lhs.length(), rhs.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = lhs[i] + rhs[i];
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> parts(static_cast<std::size_t>(p[0]), 0);
  for (int row : p.parts()) {
    for (int c = 0; c < row; ++c) ++parts[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(parts));
}

bool is_column_strip(const Partition& inner, const Partition& outer) {
  if (!young_leq(inner, outer)) return false;
  for (std::size_t i = 0; i < outer.length(); ++i) {
    if (outer[i] - inner[i] > 1) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!young_leq(inner, outer)) return false;
  // interlacing: outer(i+1) <= inner(i)
  for (std::size_t i = 0; i + 1 < outer.length(); ++i) {
    if (outer[i + 1] > inner[i]) return false;
  }
  return true;
}

std::int64_t nilpotent_orbit_dim(const Partition& p) {
  const std::int64_t n = p.size();
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    weighted += static_cast<std::int64_t>(i + 1) * p[i];
  }
  return n * (n + 1) - 2 * weighted;
}

std::int64_t count_syt(const Partition& p) {
  // Number of saturated chains from the empty partition up to p. Every
  // sub-diagram is reached by removing corners; memoize on the sub-partition.
  std::map<std::vector<int>, std::int64_t> memo;
  std::function<std::int64_t(std::vector<int>&)> chains = [&](std::vector<int>& shape) -> std::int64_t {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const bool corner = (i + 1 == shape.size()) || shape[i + 1] < shape[i];
      if (!corner) continue;
      std::vector<int> smaller = shape;
      --smaller[i];
      const std::int64_t sub = chains(smaller);
      if (total > std::numeric_limits<std::int64_t>::max() - sub) {
        throw CountOverflow("standard tableau count overflows 64 bits");
      }
      total += sub;
    }
    memo.emplace(shape, total);
    return total;
  };
  std::vector<int> shape = p.parts();
  return chains(shape);
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace srsk
