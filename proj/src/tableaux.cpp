#include "steinberg_rsk/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace srsk {

namespace {

bool is_strip(const Partition& inner, const Partition& outer, StripKind kind) {
  return kind == StripKind::Column ? is_column_strip(inner, outer) : is_horizontal_strip(inner, outer);
}

std::vector<int> content_of(const std::vector<Partition>& chain) {
  std::vector<int> parts;
  int previous = 0;
  for (const auto& element : chain) {
    parts.push_back(element.size() - previous);
    previous = element.size();
  }
  return parts;
}

// Shape of the cells labelled <= label in a straight filling.
Partition shape_up_to(const Filling& filling, int label) {
  std::vector<int> rows;
  for (const auto& row : filling) {
    rows.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [&](int v) { return v <= label; })));
  }
  return Partition::from_unsorted(std::move(rows));
}

}  // namespace

bool is_valid_chain(const std::vector<Partition>& chain, StripKind kind) {
  Partition previous;
  for (const auto& element : chain) {
    if (element.size() <= previous.size()) return false;
    if (!is_strip(previous, element, kind)) return false;
    previous = element;
  }
  return true;
}

template <StripKind Kind>
ChainTableau<Kind>::ChainTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {
  if (!is_valid_chain(chain_, Kind)) {
    throw std::invalid_argument(Kind == StripKind::Column
                                    ? "chain is not a row-standard tableau (column strips, strictly growing)"
                                    : "chain is not a semistandard tableau (horizontal strips, strictly growing)");
  }
}

template <StripKind Kind>
ChainTableau<Kind>::ChainTableau(const Composition& content, std::vector<Partition> chain)
    : ChainTableau(std::move(chain)) {
  if (content_of(chain_) != content.parts()) {
    throw std::invalid_argument("tableau content does not match chain sizes");
  }
}

template <StripKind Kind>
Partition ChainTableau<Kind>::at(std::size_t i) const {
  if (i > chain_.size()) throw std::out_of_range("tableau chain index out of range");
  return i == 0 ? Partition{} : chain_[i - 1];
}

template <StripKind Kind>
Composition ChainTableau<Kind>::content() const {
  return Composition(content_of(chain_));
}

template <StripKind Kind>
Filling ChainTableau<Kind>::filling() const {
  const Partition sh = shape();
  Filling out(sh.length());
  for (std::size_t r = 0; r < sh.length(); ++r) out[r].assign(static_cast<std::size_t>(sh[r]), 0);
  Partition previous;
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    for (std::size_t r = 0; r < chain_[i].length(); ++r) {
      for (int c = previous[r]; c < chain_[i][r]; ++c) out[r][static_cast<std::size_t>(c)] = static_cast<int>(i + 1);
    }
    previous = chain_[i];
  }
  return out;
}

template <StripKind Kind>
ChainTableau<Kind> ChainTableau<Kind>::from_filling(const Filling& filling) {
  int max_label = 0;
  for (std::size_t r = 0; r < filling.size(); ++r) {
    if (filling[r].empty()) throw std::invalid_argument("filling has an empty row");
    if (r > 0 && filling[r].size() > filling[r - 1].size()) {
      throw std::invalid_argument("filling rows must weakly decrease in length");
    }
    for (int v : filling[r]) {
      if (v <= 0) throw std::invalid_argument("filling labels must be positive");
      max_label = std::max(max_label, v);
    }
  }
  std::vector<Partition> chain;
  for (int label = 1; label <= max_label; ++label) chain.push_back(shape_up_to(filling, label));
  ChainTableau result(std::move(chain));
  if (result.filling() != filling) {
    throw std::invalid_argument("filling is not a valid tableau of this kind");
  }
  return result;
}

template class ChainTableau<StripKind::Column>;
template class ChainTableau<StripKind::Horizontal>;

SemistandardTableau transpose(const RowStandardTableau& t) {
  std::vector<Partition> chain;
  for (const auto& p : t.chain()) chain.push_back(conjugate(p));
  return SemistandardTableau(std::move(chain));
}

RowStandardTableau transpose(const SemistandardTableau& t) {
  std::vector<Partition> chain;
  for (const auto& p : t.chain()) chain.push_back(conjugate(p));
  return RowStandardTableau(std::move(chain));
}

bool is_row_standard_filling(const Filling& filling) {
  for (std::size_t r = 0; r < filling.size(); ++r) {
    const auto& row = filling[r];
    if (r > 0 && row.size() > filling[r - 1].size()) return false;
    bool in_skew = false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 0) return false;
      if (v == 0) {
        if (in_skew) return false;  // inner cells are left-justified
        if (r > 0 && filling[r - 1][c] != 0) return false;
        continue;
      }
      in_skew = true;
      if (c > 0 && row[c - 1] != 0 && row[c - 1] >= v) return false;
      if (r > 0 && filling[r - 1][c] > v) return false;
    }
  }
  return true;
}

Partition shape(const RowStandardTableau& t) { return t.shape(); }

RowStandardTableau restrict(const RowStandardTableau& t, std::size_t i) {
  if (i < 1 || i > t.length()) throw std::out_of_range("restrict: index must satisfy 1 <= i <= n");
  return RowStandardTableau(std::vector<Partition>(t.chain().begin(), t.chain().begin() + static_cast<std::ptrdiff_t>(i)));
}

RowStandardTableau extend(const RowStandardTableau& t, const Partition& lam) {
  const Partition sh = t.shape();
  if (!young_leq(sh, lam) || lam.size() == sh.size()) {
    throw std::invalid_argument("extend: " + lam.to_string() + " must strictly contain " + sh.to_string());
  }
  if (!is_column_strip(sh, lam)) {
    throw std::invalid_argument("extend: " + lam.to_string() + " / " + sh.to_string() + " is not a column strip");
  }
  std::vector<Partition> chain = t.chain();
  chain.push_back(lam);
  return RowStandardTableau(std::move(chain));
}

SkewFilling SkewFilling::quotient(const RowStandardTableau& t, std::size_t i) {
  if (i > t.length()) throw std::out_of_range("quotient index out of range");
  SkewFilling out;
  out.inner = t.at(i);
  out.cells = t.filling();
  for (auto& row : out.cells) {
    for (auto& v : row) v = v <= static_cast<int>(i) ? 0 : v - static_cast<int>(i);
  }
  return out;
}

int SkewFilling::max_label() const {
  int m = 0;
  for (const auto& row : cells) {
    for (int v : row) m = std::max(m, v);
  }
  return m;
}

Filling SkewFilling::rectified(TieRule tie) const {
  Filling grid = cells;
  std::vector<int> inner_len(grid.size(), 0);
  for (std::size_t r = 0; r < inner.length() && r < grid.size(); ++r) inner_len[r] = inner[r];

  auto inner_nonempty = [&] {
    return std::any_of(inner_len.begin(), inner_len.end(), [](int v) { return v > 0; });
  };
  while (inner_nonempty()) {
    // Bottom-most inner corner.
    std::size_t r = inner_len.size();
    while (r-- > 0) {
      if (inner_len[r] > 0) break;
    }
    int c = inner_len[r] - 1;
    --inner_len[r];
    // Slide the hole towards the outer rim.
    for (;;) {
      const bool has_right = c + 1 < static_cast<int>(grid[r].size());
      const bool has_below = r + 1 < grid.size() && c < static_cast<int>(grid[r + 1].size());
      if (!has_right && !has_below) break;
      bool take_right;
      if (has_right && has_below) {
        const int right = grid[r][static_cast<std::size_t>(c + 1)];
        const int below = grid[r + 1][static_cast<std::size_t>(c)];
        take_right = right < below || (right == below && tie == TieRule::FromRight);
      } else {
        take_right = has_right;
      }
      if (take_right) {
        grid[r][static_cast<std::size_t>(c)] = grid[r][static_cast<std::size_t>(c + 1)];
        ++c;
      } else {
        grid[r][static_cast<std::size_t>(c)] = grid[r + 1][static_cast<std::size_t>(c)];
        ++r;
      }
    }
    grid[r].pop_back();
    if (grid[r].empty()) {
      grid.erase(grid.begin() + static_cast<std::ptrdiff_t>(r));
      inner_len.erase(inner_len.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  return grid;
}

RowStandardTableau rectify(const RowStandardTableau& t, std::size_t i, TieRule tie) {
  if (i > t.length()) throw std::out_of_range("rectify: index must satisfy 0 <= i <= n");
  if (i == 0) return t;
  if (i == t.length()) return RowStandardTableau{};
  const Filling straight = SkewFilling::quotient(t, i).rectified(tie);
  if (!is_row_standard_filling(straight)) {
    throw std::logic_error("rectify: jeu de taquin produced a filling that is not row-standard");
  }
  RowStandardTableau result = RowStandardTableau::from_filling(straight);
  const std::vector<int> parts = t.content().parts();
  if (result.content().parts() != std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end())) {
    throw std::logic_error("rectify: content mismatch after jeu de taquin");
  }
  return result;
}

RowStandardTableau evacuate(const RowStandardTableau& t, TieRule tie) {
  const std::size_t n = t.length();
  std::vector<Partition> chain;
  chain.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) chain.push_back(rectify(t, n - k, tie).shape());
  return RowStandardTableau(std::move(chain));
}

SemistandardTableau evacuate(const SemistandardTableau& t) { return transpose(evacuate(transpose(t))); }

namespace {

// Calls `emit` for every partition obtained from `base` by adding a column
// strip of `count` boxes, optionally bounded by `bound`.
void for_each_column_strip(const Partition& base, int count, const std::optional<Partition>& bound,
                           const std::function<void(const Partition&)>& emit) {
  std::vector<int> rows = base.parts();
  const std::size_t max_rows = bound ? bound->length() : base.length() + static_cast<std::size_t>(count);
  rows.resize(std::max(rows.size(), max_rows), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
    if (left == 0) {
      emit(Partition::from_unsorted(rows));
      return;
    }
    if (r >= rows.size()) return;
    if (rows.size() - r < static_cast<std::size_t>(left)) return;
    // Add a box in row r if the result stays a partition and inside the bound.
    const int grown = rows[r] + 1;
    const bool fits = (!bound || grown <= (*bound)[r]) && (r == 0 || grown <= rows[r - 1]);
    if (fits) {
      ++rows[r];
      rec(r + 1, left - 1);
      --rows[r];
    }
    rec(r + 1, left);
  };
  rec(0, count);
}

void enumerate_into(const Composition& content, const std::optional<Partition>& bound,
                    std::vector<RowStandardTableau>& out) {
  std::vector<Partition> chain;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == content.length()) {
      const Partition last = chain.empty() ? Partition{} : chain.back();
      if (!bound || last == *bound) out.emplace_back(chain);
      return;
    }
    const Partition base = chain.empty() ? Partition{} : chain.back();
    for_each_column_strip(base, content[i], bound, [&](const Partition& next) {
      chain.push_back(next);
      rec(i + 1);
      chain.pop_back();
    });
  };
  rec(0);
}

}  // namespace

std::vector<RowStandardTableau> enumerate_tableaux(const Partition& lam, const Composition& content) {
  std::vector<RowStandardTableau> out;
  if (lam.size() != content.total()) return out;
  enumerate_into(content, lam, out);
  return out;
}

std::vector<RowStandardTableau> enumerate_tableaux(const Composition& content) {
  std::vector<RowStandardTableau> out;
  enumerate_into(content, std::nullopt, out);
  return out;
}

std::vector<RowStandardTableau> enumerate_syt(const Partition& lam) {
  return enumerate_tableaux(lam, Composition(std::vector<int>(static_cast<std::size_t>(lam.size()), 1)));
}

std::string to_string(const RowStandardTableau& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.length(); ++i) {
    if (i) os << ';';
    os << t.chain()[i].to_string();
  }
  os << ')';
  return os.str();
}

}  // namespace srsk
