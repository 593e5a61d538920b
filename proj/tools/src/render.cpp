#include "render.hpp"

#include <algorithm>
#include <ostream>

namespace padic_ell::cli {
namespace {

std::vector<u64> base_p_digits(u64 value, u64 p, int count) {
  std::vector<u64> d(static_cast<size_t>(count));
  for (auto& x : d) {
    x = value % p;
    value /= p;
  }
  return d;
}

std::string join_digits(const std::vector<u64>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(d[i]);
  }
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_pretty(std::ostream& os, const Output& out) {
  const Table& t = out.table;
  std::vector<size_t> width(t.header.size());
  for (size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& r : t.rows)
    for (size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  if (!out.title.empty()) os << out.title << "\n\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

}  // namespace

void write_output(std::ostream& os, const Output& out, Format format) {
  switch (format) {
    case Format::json:
      os << out.doc.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(os, out.table);
      break;
    case Format::pretty:
      write_pretty(os, out);
      break;
  }
}

std::string valuation_string(int v) { return v == PadicElement::kInfinity ? "inf" : std::to_string(v); }

Json value_json(const PadicElement& x) {
  Json j;
  j["valuation"] = x.is_exact_zero() ? Json(nullptr) : Json(x.valuation());
  j["relative_precision"] = x.relative_precision();
  j["unit_digits"] = x.unit_digits();
  return j;
}

Json value_json(const ExtElement& x) {
  const u64 p = x.ring()->prime();
  Json j;
  j["valuation"] = x.is_exact_zero() ? Json(nullptr) : Json(x.valuation());
  j["relative_precision"] = x.relative_precision();
  Json coeffs = Json::array();
  for (u64 c : x.unit_coeffs()) coeffs.push_back(base_p_digits(c, p, x.relative_precision()));
  j["unit_digits"] = coeffs;
  return j;
}

Json ring_json(const ExtRing& ring) {
  Json j;
  j["root_order"] = ring.root_order();
  j["degree"] = ring.degree();
  j["modulus_poly"] = ring.modulus_poly();
  return j;
}

Json record_json(const CongruenceRecord& r) {
  Json j;
  j["claim"] = r.claim;
  Json params;
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["observed_valuation"] =
      r.observed_valuation == PadicElement::kInfinity ? Json(nullptr) : Json(r.observed_valuation);
  j["required_valuation"] = r.required_valuation;
  j["pass"] = r.pass;
  return j;
}

std::string digit_string(const PadicElement& x) { return join_digits(x.unit_digits()); }

std::string digit_string(const ExtElement& x) {
  const u64 p = x.ring()->prime();
  std::string s;
  const auto& cs = x.unit_coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += " | ";
    s += join_digits(base_p_digits(cs[i], p, x.relative_precision()));
  }
  return s;
}

}  // namespace padic_ell::cli
