#include "leibniz/ring_io.hpp"

#include "leibniz/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace leibniz {

namespace {

using Json = nlohmann::ordered_json;

Int int_from_json(const Json& v, const char* where) {
  if (!v.is_number_integer())
    fail(Errc::ParseError, std::string("expected an integer in ") + where);
  return Int(v.get<long long>());
}

long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(Errc::IoError, "coefficient " + v.str() + " does not fit the file format");
  return static_cast<long long>(v);
}

} // namespace

RingDocument parse_ring(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("bracket"))
    fail(Errc::ParseError, "ring document needs \"group\" and \"bracket\" fields");

  const Json& jg = doc["group"];
  if (!jg.is_array()) fail(Errc::ParseError, "\"group\" must be an array of factors");
  std::vector<Int> factors;
  for (const auto& v : jg) factors.push_back(int_from_json(v, "group factors"));
  FgAbelianGroup group(factors);
  const std::size_t n = group.generator_count();

  const Json& jb = doc["bracket"];
  if (!jb.is_array() || jb.size() != n)
    fail(Errc::ParseError, "\"bracket\" must be an n x n table");
  BracketTable table;
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = jb[i];
    if (!row.is_array() || row.size() != n)
      fail(Errc::ParseError, "bracket row " + std::to_string(i) + " must have n entries");
    std::vector<GroupElement> out_row;
    for (std::size_t j = 0; j < n; ++j) {
      const Json& cell = row[j];
      if (!cell.is_array() || cell.size() != n)
        fail(Errc::ParseError, "bracket entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") must be an n-vector");
      Vec coeffs;
      for (const auto& v : cell) coeffs.push_back(int_from_json(v, "bracket coefficients"));
      for (std::size_t k = 0; k < n; ++k) {
        const Int& d = group.factors()[k];
        if (d != 0 && (coeffs[k] < 0 || coeffs[k] >= d))
          fail(Errc::ParseError, "coefficient " + coeffs[k].str() + " at entry (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     ") is not normalized into [0," + d.str() + ")");
      }
      out_row.push_back(GroupElement{std::move(coeffs)});
    }
    table.push_back(std::move(out_row));
  }
  return RingDocument{std::move(group), std::move(table)};
}

RingDocument load_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring(buf.str());
}

std::string ring_to_string(const LeibnizRing& r) {
  Json doc;
  Json jg = Json::array();
  for (const auto& d : r.group().factors()) jg.push_back(to_int64(d));
  doc["group"] = jg;
  Json jb = Json::array();
  for (const auto& row : r.table()) {
    Json jrow = Json::array();
    for (const auto& e : row) {
      Json cell = Json::array();
      for (const auto& v : e.c) cell.push_back(to_int64(v));
      jrow.push_back(cell);
    }
    jb.push_back(jrow);
  }
  doc["bracket"] = jb;
  return doc.dump(2) + "\n";
}

void save_ring(const LeibnizRing& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write " + path);
  out << ring_to_string(r);
}

LeibnizRing ring_from_document(const RingDocument& doc) {
  return LeibnizRing(doc.group, doc.table);
}

} // namespace leibniz
