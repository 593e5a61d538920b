#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "padic_ell/euler_ell.hpp"
#include "padic_ell/ext_ring.hpp"
#include "padic_ell/padic.hpp"

namespace padic_ell::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, pretty };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A command result: the canonical JSON document and its flat table view
/// (used for csv and pretty).
struct Output {
  Json doc;
  Table table;
  std::string title;
};

void write_output(std::ostream& os, const Output& out, Format format);

/// {valuation, relative_precision, unit_digits}; valuation is null for the
/// exact zero.
Json value_json(const PadicElement& x);
/// Same, with unit_digits holding one digit list per basis coefficient.
Json value_json(const ExtElement& x);
Json ring_json(const ExtRing& ring);
Json record_json(const CongruenceRecord& r);

/// Base-p unit digits, least significant first, as "d0 d1 d2".
std::string digit_string(const PadicElement& x);
/// Per-coefficient digit strings joined by " | ".
std::string digit_string(const ExtElement& x);
std::string valuation_string(int v);

}  // namespace padic_ell::cli
