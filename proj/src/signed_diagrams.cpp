#include "steinberg_rsk/signed_diagrams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace srsk {

int SignedRow::count_in_columns(Sign s, int cols) const {
  const int m = std::min(cols, length);
  return s == first ? (m + 1) / 2 : m / 2;
}

std::string SignedRow::render() const {
  std::string out;
  Sign s = first;
  for (int i = 0; i < length; ++i, s = flip(s)) out.push_back(sign_char(s));
  return out;
}

bool canonical_before(const SignedRow& a, const SignedRow& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.first == Sign::Minus && b.first == Sign::Plus;
}

SignedYoungDiagram::SignedYoungDiagram(std::vector<SignedRow> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.length <= 0) throw std::invalid_argument("signed rows must have positive length");
  }
  std::stable_sort(rows_.begin(), rows_.end(), canonical_before);
}

SignedYoungDiagram SignedYoungDiagram::from_strings(const std::vector<std::string>& rows) {
  std::vector<SignedRow> parsed;
  for (const auto& text : rows) {
    if (text.empty()) throw std::invalid_argument("empty signed row");
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '+' && text[i] != '-') throw std::invalid_argument("signed row must use '+' and '-': " + text);
      if (i > 0 && text[i] == text[i - 1]) throw std::invalid_argument("signs must alternate along a row: " + text);
    }
    parsed.push_back({static_cast<int>(text.size()), text[0] == '+' ? Sign::Plus : Sign::Minus});
  }
  return SignedYoungDiagram(std::move(parsed));
}

Signature SignedYoungDiagram::signature() const {
  Signature sig;
  for (const auto& row : rows_) {
    sig.q += row.count(Sign::Plus);
    sig.p += row.count(Sign::Minus);
  }
  return sig;
}

std::vector<std::string> SignedYoungDiagram::render() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) out.push_back(row.render());
  return out;
}

std::string SignedYoungDiagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += '[' + rows_[i].render() + ']';
  }
  return out + '}';
}

bool operator<(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
  const std::size_t n = std::min(a.rows_.size(), b.rows_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.rows_[i] == b.rows_[i]) continue;
    return canonical_before(a.rows_[i], b.rows_[i]);
  }
  return a.rows_.size() < b.rows_.size();
}

namespace {

Partition per_row(const SignedYoungDiagram& d, Sign s) {
  std::vector<int> parts;
  for (const auto& row : d.rows()) parts.push_back(row.count(s));
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

Partition shape(const SignedYoungDiagram& d) {
  std::vector<int> parts;
  for (const auto& row : d.rows()) parts.push_back(row.length);
  return Partition::from_unsorted(std::move(parts));
}

Partition lambda_plus(const SignedYoungDiagram& d) { return per_row(d, Sign::Plus); }
Partition lambda_minus(const SignedYoungDiagram& d) { return per_row(d, Sign::Minus); }

bool is_admissible(const SignedYoungDiagram& d) { return shape(d) == add(lambda_plus(d), lambda_minus(d)); }

bool odd_rows_uniform(const SignedYoungDiagram& d) {
  std::map<int, Sign> seen;
  for (const auto& row : d.rows()) {
    if (row.length % 2 == 0) continue;
    auto [it, inserted] = seen.emplace(row.length, row.first);
    if (!inserted && it->second != row.first) return false;
  }
  return true;
}

bool satisfies_dimension_identity(const SignedYoungDiagram& d) {
  const Partition plus = lambda_plus(d);
  const Partition minus = lambda_minus(d);
  const std::int64_t lhs = 2 * orbit_dim(d);
  const std::int64_t rhs = 2 * static_cast<std::int64_t>(plus.size()) * minus.size() + nilpotent_orbit_dim(plus) +
                           nilpotent_orbit_dim(minus);
  return lhs == rhs;
}

bool is_closure_maximal(const SignedYoungDiagram& d) {
  const Partition plus = lambda_plus(d);
  const Partition minus = lambda_minus(d);
  for (const auto& other : enumerate_syd(d.signature())) {
    if (other == d || lambda_plus(other) != plus || lambda_minus(other) != minus) continue;
    if (closure_leq(d, other)) return false;
  }
  return true;
}

Partition z_shape(const SignedYoungDiagram& d) {
  // '+' boxes outside the first column are removed and become singleton rows.
  std::vector<int> parts;
  for (const auto& row : d.rows()) {
    const int first_plus = row.first == Sign::Plus ? 1 : 0;
    const int removed = row.count(Sign::Plus) - first_plus;
    parts.push_back(row.count(Sign::Minus) + first_plus);
    parts.insert(parts.end(), static_cast<std::size_t>(removed), 1);
  }
  return Partition::from_unsorted(std::move(parts));
}

int boxes_in_first_columns(const SignedYoungDiagram& d, Sign s, int cols) {
  if (cols <= 0 || cols % 2 == 0) throw std::invalid_argument("boxes_in_first_columns: column count must be odd");
  int total = 0;
  for (const auto& row : d.rows()) total += row.count_in_columns(s, cols);
  return total;
}

bool closure_leq(const SignedYoungDiagram& lhs, const SignedYoungDiagram& rhs) {
  if (!(lhs.signature() == rhs.signature())) {
    throw std::invalid_argument("closure order compares diagrams of equal signature only");
  }
  if (!dominance_leq(lambda_plus(lhs), lambda_plus(rhs))) return false;
  if (!dominance_leq(lambda_minus(lhs), lambda_minus(rhs))) return false;
  int longest = 0;
  for (const auto& row : lhs.rows()) longest = std::max(longest, row.length);
  for (const auto& row : rhs.rows()) longest = std::max(longest, row.length);
  for (int cols = 1; cols <= longest + 1; cols += 2) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      if (boxes_in_first_columns(lhs, s, cols) < boxes_in_first_columns(rhs, s, cols)) return false;
    }
  }
  return true;
}

std::int64_t orbit_dim(const SignedYoungDiagram& d) { return nilpotent_orbit_dim(shape(d)) / 2; }

SignedYoungDiagram dual(const SignedYoungDiagram& d) {
  std::vector<SignedRow> rows = d.rows();
  for (auto& row : rows) row.first = flip(row.first);
  return SignedYoungDiagram(std::move(rows));
}

std::vector<SignedYoungDiagram> enumerate_syd(Signature sig) {
  if (sig.q < 0 || sig.p < 0) throw std::invalid_argument("signature entries must be nonnegative");
  // Row types in canonical order; lengths are capped by what the signature can pay for.
  std::vector<SignedRow> types;
  for (int len = sig.q + sig.p; len >= 1; --len) {
    for (Sign s : {Sign::Minus, Sign::Plus}) {
      SignedRow row{len, s};
      if (row.count(Sign::Plus) <= sig.q && row.count(Sign::Minus) <= sig.p) types.push_back(row);
    }
  }
  std::vector<SignedYoungDiagram> out;
  std::vector<SignedRow> current;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t t, int plus_left, int minus_left) {
    if (plus_left == 0 && minus_left == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = t; i < types.size(); ++i) {
      const int dp = types[i].count(Sign::Plus);
      const int dm = types[i].count(Sign::Minus);
      if (dp > plus_left || dm > minus_left) continue;
      current.push_back(types[i]);
      rec(i, plus_left - dp, minus_left - dm);
      current.pop_back();
    }
  };
  rec(0, sig.q, sig.p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedYoungDiagram> enumerate_asyd(Signature sig) {
  auto all = enumerate_syd(sig);
  std::erase_if(all, [](const SignedYoungDiagram& d) { return !is_admissible(d); });
  return all;
}

std::vector<std::pair<std::size_t, std::size_t>> closure_hasse_edges(const std::vector<SignedYoungDiagram>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below[i][j] = i != j && closure_leq(nodes[i], nodes[j]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (below[i][k] && below[k][j]) covered = false;
      }
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace srsk
