#include "polyherm/report.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <json.hpp>
#include <system_error>

namespace polyherm {

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "numeric"; }

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::as_printed: return "as-printed";
    case Variant::corrected: return "corrected";
  }
  return "?";
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::pretty: return "pretty";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return res.ec == std::errc() ? std::string(buf, res.ptr) : std::string("nan");
}

std::string format_complex(std::complex<double> z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(z.real()) + im + "i";
}

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  auto fail = [&] { return std::invalid_argument("malformed complex literal '" + std::string(whole) + "'"); };
  if (text.empty()) throw fail();
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const double num = parse_real(text.substr(0, slash), whole);
    const double den = parse_real(text.substr(slash + 1), whole);
    if (den == 0.0) throw fail();
    return num / den;
  }
  std::string_view body = text;
  if (body.front() == '+') body.remove_prefix(1);
  double x = 0.0;
  const auto res = std::from_chars(body.data(), body.data() + body.size(), x);
  if (res.ec != std::errc() || res.ptr != body.data() + body.size() || !std::isfinite(x)) throw fail();
  return x;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  const std::string_view s = compact;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (im_text.empty() || im_text == "+")
    im = 1.0;
  else if (im_text == "-")
    im = -1.0;
  else
    im = parse_real(im_text, text);
  return {re_text.empty() ? 0.0 : parse_real(re_text, text), im};
}

Params& Params::add(std::string key, std::string value) {
  items_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Params& Params::add(std::string key, std::complex<double> v) { return add(std::move(key), format_complex(v)); }

namespace {

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p.items()) {
    if (!s.empty()) s += ' ';
    s += k + '=' + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string header(Format f) {
  return f == Format::csv ? "id,variant,mode,verdict,residual,tolerance,params,erratum,witness" : "";
}

std::string render(const VerifyReport& r, Format f) {
  const char* verdict = r.pass ? "pass" : "fail";
  switch (f) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["id"] = r.id;
      j["variant"] = variant_name(r.variant);
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.params.items()) params[k] = v;
      j["params"] = std::move(params);
      j["mode"] = mode_name(r.mode);
      j["verdict"] = verdict;
      j["residual"] = r.residual;
      if (r.mode == Mode::numeric) j["tolerance"] = r.tolerance;
      if (!r.erratum.empty()) j["erratum"] = r.erratum;
      if (!r.witness.empty()) j["witness"] = r.witness;
      return j.dump();
    }
    case Format::csv:
      return csv_field(r.id) + ',' + variant_name(r.variant) + ',' + mode_name(r.mode) + ',' + verdict + ',' +
             format_double(r.residual) + ',' + (r.mode == Mode::numeric ? format_double(r.tolerance) : "") + ',' +
             csv_field(params_text(r.params)) + ',' + csv_field(r.erratum) + ',' + csv_field(r.witness);
    case Format::pretty: {
      std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.id;
      if (r.variant != Variant::plain) s += std::string(" [") + variant_name(r.variant) + "]";
      s += "  " + params_text(r.params);
      if (r.mode == Mode::numeric) s += "  residual=" + format_double(r.residual) + " tol=" + format_double(r.tolerance);
      if (!r.witness.empty()) s += "  witness: " + r.witness;
      if (!r.erratum.empty()) s += "  erratum: " + r.erratum;
      return s;
    }
  }
  return {};
}

}  // namespace polyherm
