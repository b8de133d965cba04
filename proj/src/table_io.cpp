#include "loophopf/table_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace loophopf {

namespace {

using ordered_json = nlohmann::ordered_json;

// Hard ceiling on N for imported files.  Desk-scale tables stay far below it;
// it only guards the N x N allocation against garbage input.
constexpr std::uint64_t max_import_dim = 4096;

std::uint64_t require_uint(const ordered_json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

ordered_json cell_json(const LoopElement& x) {
  ordered_json cell = ordered_json::array();
  for (const auto& [idx, c] : x.terms()) {
    ordered_json pair = ordered_json::array();
    pair.push_back(idx);
    pair.push_back(c.coords());
    cell.push_back(std::move(pair));
  }
  return cell;
}

LoopElement cell_from_json(const ordered_json& cell, const GfPtr& field, std::size_t N) {
  if (!cell.is_array()) throw ParseError("table cell must be an array of [index, coeff] pairs");
  LoopElement out(field, N);
  std::int64_t prev = -1;
  for (const auto& pair : cell) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("table cell entry must be a [index, coeff] pair");
    std::uint64_t idx = require_uint(pair[0], "path index");
    if (idx >= N) throw ParseError("path index out of range");
    if (static_cast<std::int64_t>(idx) <= prev)
      throw ParseError("cell indices must be strictly increasing");
    prev = static_cast<std::int64_t>(idx);
    const ordered_json& coeff = pair[1];
    if (!coeff.is_array() || coeff.size() != field->k())
      throw ParseError("coefficient must be an array of ext_degree residues");
    std::vector<std::uint32_t> coords;
    coords.reserve(coeff.size());
    bool nonzero = false;
    for (const auto& c : coeff) {
      std::uint64_t v = require_uint(c, "coefficient residue");
      if (v >= field->p()) throw ParseError("coefficient residue out of range");
      if (v != 0) nonzero = true;
      coords.push_back(static_cast<std::uint32_t>(v));
    }
    if (!nonzero) throw ParseError("zero coefficients must be omitted");
    out.set_coeff(idx, field->make_element(std::move(coords)));
  }
  return out;
}

FamilyTag family_from_json(const ordered_json& fam) {
  if (!fam.is_object()) throw ParseError("family must be an object");
  if (!fam.contains("name") || !fam["name"].is_string())
    throw ParseError("family requires a string name");
  FamilyTag tag;
  tag.name = fam["name"].get<std::string>();
  bool wants_n = false, wants_d = false;
  if (tag.name == "ld") {
    wants_n = wants_d = true;
  } else if (tag.name == "graded" || tag.name == "dual-cyclic") {
    wants_n = true;
  } else if (tag.name != "nc2") {
    throw ParseError("unknown family name: " + tag.name);
  }
  std::size_t expected = 1 + (wants_n ? 1 : 0) + (wants_d ? 1 : 0);
  if (fam.size() != expected) throw ParseError("family has wrong parameter set");
  if (wants_n) {
    if (!fam.contains("n")) throw ParseError("family requires n");
    tag.n = static_cast<std::uint32_t>(require_uint(fam["n"], "family n"));
    if (*tag.n == 0) throw ParseError("family n must be positive");
  }
  if (wants_d) {
    if (!fam.contains("d")) throw ParseError("family requires d");
    tag.d = static_cast<std::uint32_t>(require_uint(fam["d"], "family d"));
    if (*tag.d > *tag.n) throw ParseError("family d exceeds n");
  }
  return tag;
}

}  // namespace

std::string export_table(const MultTable& t) {
  const Gf& f = *t.field();
  ordered_json doc;
  doc["p"] = f.p();
  doc["ext_degree"] = f.k();
  if (f.k() != 1) doc["modulus"] = f.modulus();
  doc["N"] = t.dim();
  if (t.family) {
    ordered_json fam;
    fam["name"] = t.family->name;
    if (t.family->n) fam["n"] = *t.family->n;
    if (t.family->d) fam["d"] = *t.family->d;
    doc["family"] = std::move(fam);
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t a = 0; a < t.dim(); ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t b = 0; b < t.dim(); ++b) row.push_back(cell_json(t.entry(a, b)));
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  return doc.dump();
}

MultTable import_table(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("table file must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "p" && key != "ext_degree" && key != "modulus" && key != "N" &&
        key != "family" && key != "table")
      throw ParseError("unknown key: " + key);
  }
  for (const char* key : {"p", "ext_degree", "N", "table"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key: ") + key);

  std::uint64_t p_value = require_uint(doc["p"], "p");
  Prime p = [&] {
    try {
      return Prime(p_value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }();
  std::uint64_t k = require_uint(doc["ext_degree"], "ext_degree");
  if (k < 1 || k > 16) throw ParseError("ext_degree out of range");

  GfPtr field;
  if (k == 1) {
    if (doc.contains("modulus")) throw ParseError("modulus must be omitted when ext_degree = 1");
    field = Gf::make(p, 1);
  } else {
    if (!doc.contains("modulus")) throw ParseError("missing key: modulus");
    const ordered_json& mod = doc["modulus"];
    if (!mod.is_array() || mod.size() != k + 1)
      throw ParseError("modulus must be an array of ext_degree + 1 residues");
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : mod) {
      std::uint64_t v = require_uint(c, "modulus coefficient");
      if (v >= p.value) throw ParseError("modulus coefficient out of range");
      coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    try {
      field = Gf::make(p, static_cast<unsigned>(k), std::move(coeffs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  std::uint64_t N = require_uint(doc["N"], "N");
  if (N < 1 || N > max_import_dim) throw ParseError("N out of range");

  const ordered_json& rows = doc["table"];
  if (!rows.is_array() || rows.size() != N) throw ParseError("table must be an N x N array");
  MultTable t(field, N);
  for (std::size_t a = 0; a < N; ++a) {
    const ordered_json& row = rows[a];
    if (!row.is_array() || row.size() != N) throw ParseError("table must be an N x N array");
    for (std::size_t b = 0; b < N; ++b) t.set_entry(a, b, cell_from_json(row[b], field, N));
  }
  if (doc.contains("family")) t.family = family_from_json(doc["family"]);

  if (export_table(t) != text) throw ParseError("file is not in canonical form");
  return t;
}

void save_table(const std::filesystem::path& path, const MultTable& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << export_table(t);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

MultTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_table(buf.str());
}

}  // namespace loophopf
