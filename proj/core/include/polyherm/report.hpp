#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyherm/multi_index.hpp"

namespace polyherm {

enum class Mode { exact, numeric };

/// plain: the identity holds as printed. as_printed / corrected: the printed
/// statement and its repaired form, reported side by side.
enum class Variant { plain, as_printed, corrected };

const char* mode_name(Mode m);
const char* variant_name(Variant v);

/// Ordered key/value parameters; values are preformatted.
class Params {
 public:
  Params& add(std::string key, std::string value);
  Params& add(std::string key, const MultiIndex4& M) { return add(std::move(key), M.str()); }
  Params& add(std::string key, unsigned v) { return add(std::move(key), std::to_string(v)); }
  Params& add(std::string key, std::complex<double> v);
  const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

struct VerifyReport {
  std::string id;
  Variant variant = Variant::plain;
  Params params;
  Mode mode = Mode::exact;
  bool pass = true;
  double residual = 0.0;   // numeric modes only
  double tolerance = 0.0;  // numeric modes only
  std::string erratum;     // as-printed / corrected records
  std::string witness;     // set on every failure
};

enum class Format { json, csv, pretty };

std::string format_name(Format f);
/// One line, no trailing newline.
std::string render(const VerifyReport& r, Format f);
/// Column header for csv, empty otherwise.
std::string header(Format f);

/// Shortest round-trip text for a double; complex values as "a+bi".
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

/// Parses "a", "bi", "a+bi" or "a-bi" where each part is a decimal or a
/// fraction "p/q"; a bare "i" stands for 1i. Throws std::invalid_argument on
/// malformed or non-finite input.
std::complex<double> parse_complex(std::string_view text);

}  // namespace polyherm
