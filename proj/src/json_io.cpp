#include "steinberg_rsk/json_io.hpp"

#include <sstream>

namespace srsk {

namespace {

const Json& field(const Json& j, const char* key, const char* type) {
  if (!j.is_object()) throw SchemaError(std::string(type) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(type) + ": missing key \"" + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long long>();
}

std::vector<int> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(static_cast<int>(integer(v, where)));
  return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_array(row, where));
  return out;
}

// Re-throws constructor validation failures as schema errors.
template <class F>
auto guarded(const std::string& type, F&& make) {
  try {
    return make();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(type + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const Composition& c) { return c.parts(); }

Json to_json(const RowStandardTableau& t) {
  Json chain = Json::array();
  for (const auto& p : t.chain()) chain.push_back(to_json(p));
  return {{"content", to_json(t.content())}, {"chain", chain}, {"filling", t.filling()}};
}

Json to_json(const Signature& s) { return {{"q", s.q}, {"p", s.p}}; }

Json to_json(const SignedYoungDiagram& d) {
  Json rows = Json::array();
  for (const auto& row : d.rows()) rows.push_back({{"len", row.length}, {"first", std::string(1, sign_char(row.first))}});
  return {{"rows", rows}, {"signature", to_json(d.signature())}, {"render", d.render()}};
}

Json to_json(const PartialPermutation& t) {
  Json ones = Json::array();
  for (const auto& [r, c] : t.ones()) ones.push_back({r, c});
  return {{"p", t.p()}, {"q", t.q()}, {"ones", ones}};
}

Json to_json(const MarginMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}}; }

Json to_json(const FieldMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"mod", m.field().prime()}, {"entries", m.to_rows()}};
}

Json to_json(const CorrespondenceTriple& tr) {
  return {{"diagram", to_json(tr.diagram)}, {"q_tab", to_json(tr.q_tab)}, {"p_tab", to_json(tr.p_tab)}};
}

Json to_json(const CensusReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"diagram", to_json(e.diagram)}, {"predicted", e.predicted}, {"observed", e.observed}});
  }
  return {{"p", r.p},
          {"q", r.q},
          {"pp_count", r.pp_count},
          {"triple_count", r.triple_count},
          {"injective", r.injective},
          {"identity_holds", r.identity_holds},
          {"entries", entries},
          {"failures", r.failures}};
}

Json to_json(const CalibrationReport& r) {
  Json survivors = Json::array();
  for (const auto& c : r.survivors) survivors.push_back(c.name());
  const auto sel = r.selected();
  return {{"max_size", r.max_size},
          {"domain",
           {{"bordered_matrices", r.bordered_matrices},
            {"permutation_matrices", r.permutation_matrices},
            {"tested_matrices", r.tested_matrices}}},
          {"survivors", survivors},
          {"selected", sel ? Json(sel->name()) : Json(nullptr)}};
}

template <>
Partition from_json<Partition>(const Json& j) {
  return guarded("partition", [&] {
    const auto parts = int_array(j, "partition");
    for (int v : parts) {
      if (v <= 0) throw SchemaError("partition: parts must be positive");
    }
    return Partition(parts);
  });
}

template <>
Composition from_json<Composition>(const Json& j) {
  return guarded("composition", [&] { return Composition(int_array(j, "composition")); });
}

template <>
RowStandardTableau from_json<RowStandardTableau>(const Json& j) {
  return guarded("tableau", [&] {
    const Json& chain_json = field(j, "chain", "tableau");
    if (!chain_json.is_array()) throw SchemaError("tableau: chain must be an array of partitions");
    std::vector<Partition> chain;
    for (const auto& p : chain_json) chain.push_back(from_json<Partition>(p));
    if (j.contains("content")) return RowStandardTableau(from_json<Composition>(j.at("content")), std::move(chain));
    return RowStandardTableau(std::move(chain));
  });
}

template <>
Signature from_json<Signature>(const Json& j) {
  Signature s{static_cast<int>(integer(field(j, "q", "signature"), "signature.q")),
              static_cast<int>(integer(field(j, "p", "signature"), "signature.p"))};
  if (s.q < 0 || s.p < 0) throw SchemaError("signature: entries must be nonnegative");
  return s;
}

template <>
SignedYoungDiagram from_json<SignedYoungDiagram>(const Json& j) {
  return guarded("diagram", [&] {
    const Json& rows_json = field(j, "rows", "diagram");
    if (!rows_json.is_array()) throw SchemaError("diagram: rows must be an array");
    std::vector<SignedRow> rows;
    for (const auto& r : rows_json) {
      const int len = static_cast<int>(integer(field(r, "len", "diagram row"), "diagram row.len"));
      const Json& first = field(r, "first", "diagram row");
      if (!first.is_string() || (first != "+" && first != "-")) {
        throw SchemaError("diagram row: first must be \"+\" or \"-\"");
      }
      rows.push_back({len, first == "+" ? Sign::Plus : Sign::Minus});
    }
    return SignedYoungDiagram(std::move(rows));
  });
}

template <>
PartialPermutation from_json<PartialPermutation>(const Json& j) {
  return guarded("partial permutation", [&] {
    const int p = static_cast<int>(integer(field(j, "p", "partial permutation"), "partial permutation.p"));
    const int q = static_cast<int>(integer(field(j, "q", "partial permutation"), "partial permutation.q"));
    std::vector<PartialPermutation::Cell> ones;
    const Json& ones_json = j.contains("ones") ? j.at("ones") : Json::array();
    if (!ones_json.is_array()) throw SchemaError("partial permutation: ones must be an array of [row, col] pairs");
    for (const auto& cell : ones_json) {
      const auto rc = int_array(cell, "partial permutation.ones");
      if (rc.size() != 2) throw SchemaError("partial permutation: each cell must be a [row, col] pair");
      ones.emplace_back(rc[0], rc[1]);
    }
    return PartialPermutation(p, q, std::move(ones));
  });
}

template <>
MarginMatrix from_json<MarginMatrix>(const Json& j) {
  return guarded("margin matrix", [&] {
    auto entries = int_matrix(field(j, "entries", "margin matrix"), "margin matrix.entries");
    if (j.contains("rows") && integer(j.at("rows"), "margin matrix.rows") != static_cast<long long>(entries.size())) {
      throw SchemaError("margin matrix: rows does not match entries");
    }
    MarginMatrix m(std::move(entries));
    if (j.contains("cols") && integer(j.at("cols"), "margin matrix.cols") != m.cols()) {
      throw SchemaError("margin matrix: cols does not match entries");
    }
    return m;
  });
}

template <>
FieldMatrix from_json<FieldMatrix>(const Json& j) {
  return guarded("field matrix", [&] {
    const PrimeField f(j.contains("mod") ? static_cast<std::uint64_t>(integer(j.at("mod"), "field matrix.mod"))
                                         : kDefaultPrime);
    const Json& entries = field(j, "entries", "field matrix");
    if (!entries.is_array()) throw SchemaError("field matrix: entries must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : entries) {
      if (!row.is_array()) throw SchemaError("field matrix: entries must be an array of rows");
      std::vector<std::int64_t> values;
      for (const auto& v : row) values.push_back(integer(v, "field matrix.entries"));
      rows.push_back(std::move(values));
    }
    FieldMatrix m = FieldMatrix::from_rows(rows, f);
    if (j.contains("rows") && integer(j.at("rows"), "field matrix.rows") != static_cast<long long>(m.rows())) {
      throw SchemaError("field matrix: rows does not match entries");
    }
    if (j.contains("cols") && integer(j.at("cols"), "field matrix.cols") != static_cast<long long>(m.cols())) {
      throw SchemaError("field matrix: cols does not match entries");
    }
    return m;
  });
}

template <>
CorrespondenceTriple from_json<CorrespondenceTriple>(const Json& j) {
  CorrespondenceTriple tr{from_json<SignedYoungDiagram>(field(j, "diagram", "triple")),
                          from_json<RowStandardTableau>(field(j, "q_tab", "triple")),
                          from_json<RowStandardTableau>(field(j, "p_tab", "triple"))};
  guarded("triple", [&] {
    validate_triple(tr);
    return 0;
  });
  return tr;
}

FieldMatrix field_matrix_from_csv(const std::string& text, const PrimeField& f) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::int64_t> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw SchemaError("csv matrix: not an integer: \"" + cell + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  return guarded("csv matrix", [&] { return FieldMatrix::from_rows(rows, f); });
}

}  // namespace srsk
