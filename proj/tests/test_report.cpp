#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyherm/parallel.hpp"
#include "polyherm/report.hpp"
#include "polyherm/suites.hpp"

using namespace polyherm;
using cd = std::complex<double>;

namespace {

std::string render_all(const std::vector<VerifyReport>& recs) {
  std::string out;
  for (const auto& r : recs) out += render(r, Format::json) + '\n';
  return out;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("complex literals") {
    CHECK(parse_complex("1") == cd(1, 0));
    CHECK(parse_complex("i") == cd(0, 1));
    CHECK(parse_complex("-i") == cd(0, -1));
    CHECK(parse_complex("2.5i") == cd(0, 2.5));
    CHECK(parse_complex("1+i") == cd(1, 1));
    CHECK(parse_complex("0.5-0.25i") == cd(0.5, -0.25));
    CHECK(parse_complex("1/2+3/4i") == cd(0.5, 0.75));
    CHECK(parse_complex(" -1e-3 + 2e2i ") == cd(-1e-3, 200));
    for (const char* bad : {"", "x", "1+", "1/0", "1++2i", "ii", "nan", "1e400"})
      CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
  }

  TEST_CASE("formatted doubles round trip") {
    for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, std::numeric_limits<double>::denorm_min()}) {
      const std::string s = format_double(x);
      CHECK(parse_complex(s) == cd(x, 0));
    }
    for (cd z : {cd(1, -1), cd(-0.125, 3.5), cd(0, 0.1)}) CHECK(parse_complex(format_complex(z)) == z);
  }

  TEST_CASE("json record keys") {
    VerifyReport r;
    r.id = "moyal";
    r.params.add("f", "h10");
    r.mode = Mode::numeric;
    r.pass = false;
    r.residual = 0.5;
    r.tolerance = 1e-6;
    r.witness = "lhs=1 rhs=0.5";
    const auto j = nlohmann::json::parse(render(r, Format::json));
    CHECK(j["id"] == "moyal");
    CHECK(j["variant"] == "plain");
    CHECK(j["params"]["f"] == "h10");
    CHECK(j["mode"] == "numeric");
    CHECK(j["verdict"] == "fail");
    CHECK(j["residual"] == 0.5);
    CHECK(j["tolerance"] == 1e-6);
    CHECK(j["witness"] == "lhs=1 rhs=0.5");
    CHECK_FALSE(j.contains("erratum"));

    VerifyReport e;
    e.id = "four-routes";
    const auto k = nlohmann::json::parse(render(e, Format::json));
    CHECK(k["residual"] == 0.0);
    CHECK_FALSE(k.contains("tolerance"));
    CHECK_FALSE(k.contains("witness"));
  }

  TEST_CASE("csv rows match the header") {
    VerifyReport r;
    r.id = "x";
    r.params.add("M", MultiIndex4{1, 0, 0, 0}).add("note", "a,b");
    const std::string row = render(r, Format::csv);
    const std::string head = header(Format::csv);
    const auto columns = std::count(head.begin(), head.end(), ',');
    // The quoted "a,b" contributes one extra comma inside the params field.
    CHECK(row.find('"') != std::string::npos);
    CHECK(std::count(row.begin(), row.end(), ',') >= columns);
    CHECK(header(Format::json).empty());
  }

  TEST_CASE("erratum policy") {
    suites::RunConfig cfg;
    VerifyReport plain, printed, fixed;
    printed.variant = Variant::as_printed;
    fixed.variant = Variant::corrected;
    CHECK(suites::counts(plain, cfg));
    CHECK_FALSE(suites::counts(printed, cfg));
    CHECK(suites::counts(fixed, cfg));
    cfg.as_printed_only = true;
    CHECK(suites::counts(plain, cfg));
    CHECK(suites::counts(printed, cfg));
    CHECK_FALSE(suites::counts(fixed, cfg));

    printed.pass = false;
    const std::vector<VerifyReport> recs{plain, printed, fixed};
    CHECK_FALSE(suites::all_pass(recs, cfg));
    cfg.as_printed_only = false;
    CHECK(suites::all_pass(recs, cfg));
  }

  TEST_CASE("suite registry") {
    const auto& ids = suites::known_suites();
    CHECK(std::find(ids.begin(), ids.end(), "all") != ids.end());
    CHECK(suites::is_known("four-routes"));
    CHECK_FALSE(suites::is_known("nope"));
    CHECK_THROWS_AS(suites::run("nope", {}), std::invalid_argument);
  }

  TEST_CASE("every failure carries a witness and exact records carry zero residual") {
    suites::RunConfig cfg;
    for (const char* id : {"ladder", "realizations", "quadratic", "genfun", "wigner"}) {
      for (const auto& r : suites::run(id, cfg)) {
        if (!r.pass) CHECK_FALSE(r.witness.empty());
        if (r.mode == Mode::exact) CHECK(r.residual == 0.0);
        if (r.variant == Variant::as_printed) CHECK_FALSE(r.erratum.empty());
      }
    }
  }

  TEST_CASE("as-printed mode drops corrected records") {
    suites::RunConfig cfg;
    cfg.as_printed_only = true;
    for (const auto& r : suites::run("ladder", cfg)) CHECK(r.variant != Variant::corrected);
  }

  TEST_CASE("suite output is independent of the worker count") {
    suites::RunConfig cfg;
    set_thread_count(1);
    const std::string one = render_all(suites::run("wigner", cfg)) + render_all(suites::run("four-routes", cfg));
    set_thread_count(4);
    const std::string four = render_all(suites::run("wigner", cfg)) + render_all(suites::run("four-routes", cfg));
    set_thread_count(0);
    CHECK(one == four);
  }

  TEST_CASE("parallel_map keeps index order and rethrows") {
    set_thread_count(3);
    const auto v = parallel_map(100, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
    CHECK_THROWS_AS(parallel_map(10,
                                 [](std::size_t i) {
                                   if (i == 7) throw std::runtime_error("boom");
                                   return i;
                                 }),
                    std::runtime_error);
    set_thread_count(0);
  }
}
