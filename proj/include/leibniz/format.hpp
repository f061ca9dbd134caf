#pragma once

// Algebra file format.
//
// A JSON document
//
//   {
//     "field": "Q",                 // "Q" or "F<p>", p prime
//     "dim": 2,
//     "basis": ["x", "x2"],         // dim labels
//     "table": [                    // sparse structure constants, 0-indexed
//       [0, 0, [1, 1, 1]],          // [i, j, [k, num, den], ...] means
//       [1, 0, [1, 1, 1]]           //   [e_i, e_j] = sum num/den e_k
//     ]
//   }
//
// Omitted products are zero. Numerators and denominators are JSON integers,
// or decimal strings when they do not fit in 64 bits. Over F<p> coefficients
// are reduced mod p (denominators must be units). print_algebra emits the
// canonical form: entries sorted by (i, j), then k, zero coefficients omitted,
// fractions in lowest terms, residues as [k, r, 1]. parse_algebra(print_algebra(L))
// == L, and print_algebra(parse_algebra(text)) == text for canonical text.

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

namespace detail {

using PathStep = std::variant<std::string, std::size_t>;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Minimal JSON walker used only to turn a path into a source offset for error
// messages; the document has already been validated by the real parser.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::size_t find(const std::vector<PathStep>& path) {
    pos_ = 0;
    skip_ws();
    for (const auto& step : path) {
      const std::size_t here = pos_;
      if (const auto* key = std::get_if<std::string>(&step)) {
        if (!enter_key(*key)) return here;
      } else if (!enter_index(std::get<std::size_t>(step))) {
        return here;
      }
    }
    return pos_;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' || text_[pos_] == '\t'))
      ++pos_;
  }
  std::string read_string() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }
  void skip_value() {
    skip_ws();
    const char c = peek();
    if (c == '"') {
      read_string();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      do {
        const char d = peek();
        if (d == '"') {
          read_string();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < text_.size());
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \n\r\t").find(text_[pos_]) == std::string_view::npos) ++pos_;
    }
    skip_ws();
  }
  bool enter_key(const std::string& key) {
    skip_ws();
    if (peek() != '{') return false;
    ++pos_;
    while (true) {
      skip_ws();
      if (peek() != '"') return false;
      const std::string k = read_string();
      skip_ws();
      ++pos_;  // ':'
      skip_ws();
      if (k == key) return true;
      skip_value();
      if (peek() != ',') return false;
      ++pos_;
    }
  }
  bool enter_index(std::size_t index) {
    skip_ws();
    if (peek() != '[') return false;
    ++pos_;
    skip_ws();
    for (std::size_t i = 0; i < index; ++i) {
      skip_value();
      if (peek() != ',') return false;
      ++pos_;
      skip_ws();
    }
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class AlgebraReader {
 public:
  explicit AlgebraReader(std::string_view text) : text_(text) {}

  LeibnizAlgebra read() {
    try {
      doc_ = nlohmann::json::parse(text_.begin(), text_.end());
    } catch (const nlohmann::json::parse_error& e) {
      const auto [line, column] = line_column(text_, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      if (auto cut = what.find("parse error"); cut != std::string::npos) what = what.substr(cut);
      throw ParseError("malformed JSON: " + what, line, column);
    }
    if (!doc_.is_object()) fail({}, "algebra document must be a JSON object");
    for (const auto& [key, value] : doc_.items())
      if (key != "field" && key != "dim" && key != "basis" && key != "table") fail({key}, "unknown field '" + key + "'");

    const auto& field_node = member("field");
    if (!field_node.is_string()) fail({"field"}, "'field' must be a string (\"Q\" or \"F<p>\")");
    FieldDesc field = FieldDesc::rationals();
    try {
      field = FieldDesc::parse(field_node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail({"field"}, e.what());
    }

    const auto& dim_node = member("dim");
    if (!dim_node.is_number_unsigned()) fail({"dim"}, "'dim' must be a non-negative integer");
    const auto n = dim_node.get<std::size_t>();

    const auto& basis_node = member("basis");
    if (!basis_node.is_array() || basis_node.size() != n)
      fail({"basis"}, "'basis' must be an array of " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (!basis_node[i].is_string()) fail({"basis", i}, "basis labels must be strings");
      labels.push_back(basis_node[i].get<std::string>());
    }

    const auto& table_node = member("table");
    if (!table_node.is_array()) fail({"table"}, "'table' must be an array");
    AlgebraBuilder builder(field, labels);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < table_node.size(); ++t) {
      const auto& entry = table_node[t];
      if (!entry.is_array() || entry.size() < 2)
        fail({"table", t}, "table entries have the form [i, j, [k, num, den], ...]");
      const std::size_t i = index(entry[0], n, {"table", t, std::size_t{0}});
      const std::size_t j = index(entry[1], n, {"table", t, std::size_t{1}});
      if (!seen.insert({i, j}).second)
        fail({"table", t}, "duplicate entry for product (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      std::set<std::size_t> ks;
      for (std::size_t c = 2; c < entry.size(); ++c) {
        const auto& term = entry[c];
        if (!term.is_array() || term.size() != 3) fail({"table", t, c}, "coefficients have the form [k, num, den]");
        const std::size_t k = index(term[0], n, {"table", t, c, std::size_t{0}});
        if (!ks.insert(k).second) fail({"table", t, c}, "duplicate coefficient for basis index " + std::to_string(k));
        const mpz_class num = integer(term[1], {"table", t, c, std::size_t{1}});
        const mpz_class den = integer(term[2], {"table", t, c, std::size_t{2}});
        if (den == 0) fail({"table", t, c, std::size_t{2}}, "zero denominator");
        try {
          builder.set(i, j, k, Scalar(field, mpq_class(num, den)));
        } catch (const std::domain_error& e) {
          fail({"table", t, c, std::size_t{2}}, e.what());
        }
      }
    }
    return builder.build();
  }

 private:
  [[noreturn]] void fail(const std::vector<PathStep>& path, const std::string& what) const {
    const std::size_t offset = Locator(text_).find(path);
    const auto [line, column] = line_column(text_, offset);
    throw ParseError(what, line, column);
  }

  const nlohmann::json& member(const std::string& key) const {
    if (!doc_.contains(key)) fail({}, "missing field '" + key + "'");
    return doc_.at(key);
  }

  std::size_t index(const nlohmann::json& node, std::size_t n, const std::vector<PathStep>& path) const {
    if (!node.is_number_unsigned() || node.get<std::size_t>() >= n)
      fail(path, "basis index must be an integer in [0, " + std::to_string(n) + ")");
    return node.get<std::size_t>();
  }

  mpz_class integer(const nlohmann::json& node, const std::vector<PathStep>& path) const {
    if (node.is_number_unsigned()) return mpz_class(std::to_string(node.get<std::uint64_t>()));
    if (node.is_number_integer()) return mpz_class(static_cast<long>(node.get<std::int64_t>()));
    if (node.is_string()) {
      mpz_class z;
      const auto s = node.get<std::string>();
      if (!s.empty() && z.set_str(s, 10) == 0) return z;
    }
    fail(path, "expected an integer");
  }

  std::string_view text_;
  nlohmann::json doc_;
};

inline std::string integer_token(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_str();
  return "\"" + z.get_str() + "\"";
}

}  // namespace detail

inline LeibnizAlgebra parse_algebra(std::string_view text) { return detail::AlgebraReader(text).read(); }

inline std::string print_algebra(const LeibnizAlgebra& L) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"field\": " << nlohmann::json(L.field().name()).dump() << ",\n";
  out << "  \"dim\": " << L.dim() << ",\n";
  out << "  \"basis\": [";
  for (std::size_t i = 0; i < L.dim(); ++i) out << (i ? ", " : "") << nlohmann::json(L.label(i)).dump();
  out << "],\n";
  out << "  \"table\": [";
  bool first = true;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector& p = L.product(i, j);
      if (is_zero(p)) continue;
      out << (first ? "\n" : ",\n") << "    [" << i << ", " << j;
      first = false;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        if (p[k].is_zero()) continue;
        if (L.field().is_rationals())
          out << ", [" << k << ", " << detail::integer_token(p[k].rational().get_num()) << ", "
              << detail::integer_token(p[k].rational().get_den()) << "]";
        else
          out << ", [" << k << ", " << p[k].residue() << ", 1]";
      }
      out << "]";
    }
  out << (first ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

inline LeibnizAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

inline void write_algebra_file(const std::string& path, const LeibnizAlgebra& L) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << print_algebra(L);
}

}  // namespace leibniz
