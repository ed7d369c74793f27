#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "serre/commands.hpp"

using namespace serre;

namespace {

const std::string kFixtures = FIXTURES_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <typename Fn>
Captured run(Fn&& fn) {
  std::ostringstream out, err;
  int code = fn(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rep spec round trip") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    RepSpec spec;
    spec.l = std::vector<i64>{3, 5, 7}[rng() % 3];
    spec.f = 1 + static_cast<int>(rng() % 2);
    spec.e = 1 + static_cast<i64>(rng() % 9);
    const int shape = static_cast<int>(rng() % 3);
    if (shape == 0) {
      spec.shape = "irreducible";
      FieldParams p2(spec.l, 2 * spec.f);
      for (;;) {
        spec.psi.clear();
        for (int s = 0; s < 2 * spec.f; ++s)
          spec.psi.push_back(static_cast<i64>(rng() % spec.l));
        const auto psi = char_from_exponents(p2, spec.psi);
        if (!(psi == conjugate_c(psi))) break;
      }
    } else {
      spec.shape = shape == 1 ? "split" : "nonsplit";
      for (int s = 0; s < spec.f; ++s) {
        spec.chi1.push_back(static_cast<i64>(rng() % spec.l));
        spec.chi2.push_back(static_cast<i64>(rng() % spec.l));
      }
    }
    std::istringstream in(spec.emit());
    CHECK(parse_rep_spec(in) == spec);
  }
}

TEST_CASE("group spec round trip") {
  GroupSpec named;
  named.named = "SL2(9)";
  std::istringstream in(named.emit());
  CHECK(parse_group_spec(in) == named);

  GroupSpec direct;
  direct.n = 2;
  direct.l = 3;
  direct.m = 1;
  direct.generators = {{0, -1, 1, 0}, {1, 1, 1, -1}};
  std::istringstream in2(direct.emit());
  CHECK(parse_group_spec(in2) == direct);
  CHECK(direct.to_group().size() == 8);
}

TEST_CASE("parse errors") {
  std::istringstream missing("type rep\nl 3\nf 1\nshape split\nchi1 1\nchi2 0\n");
  CHECK_THROWS_AS((void)parse_rep_spec(missing), Error);  // no e
  std::istringstream bad_shape(
      "type rep\nl 3\nf 1\ne 1\nshape diagonal\nchi1 1\nchi2 0\n");
  CHECK_THROWS_AS((void)parse_rep_spec(bad_shape), Error);
  std::istringstream short_psi(
      "type rep\nl 3\nf 1\ne 1\nshape irreducible\npsi 1\n");
  CHECK_THROWS_AS((void)parse_rep_spec(short_psi), Error);
  std::istringstream wrong_type("type group\nnamed SL2(3)\n");
  CHECK_THROWS_AS((void)parse_rep_spec(wrong_type), Error);
  CHECK_THROWS_AS((void)parse_int_list("1,2,x"), Error);
}

TEST_CASE("cmd_weights") {
  CommandOptions opt;
  // membership query on the split counterexample: the weight is absent
  auto r = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("counterexample_split.rep"), "sch",
                       std::vector<i64>{6, 0, 1, 0}, opt, out, err);
  });
  CHECK(r.code == 0);
  CHECK(r.out == "absent\n");

  // full table for the small split input contains the class of ((2,0))
  auto table = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("split_small.rep"), "sch", std::nullopt, opt,
                       out, err);
  });
  CHECK(table.code == 0);
  CHECK(table.out.find("d=2\tt=0") != std::string::npos);

  // byte-determinism
  auto again = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("split_small.rep"), "sch", std::nullopt, opt,
                       out, err);
  });
  CHECK(table.out == again.out);

  // json-lines rows parse and carry the expected keys
  CommandOptions jopt;
  jopt.format = "json-lines";
  auto jr = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("nonsplit_small.rep"), "ghs", std::nullopt,
                       jopt, out, err);
  });
  CHECK(jr.code == 0);
  std::istringstream lines(jr.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto row = nlohmann::json::parse(line);
    CHECK(row.contains("d"));
    CHECK(row.contains("t"));
    CHECK(row.contains("representative"));
    CHECK(row.contains("witness"));
    CHECK(row["flags"]["superset"] == true);
    ++rows;
  }
  CHECK(rows == 4);

  // engine error: ghs on a split input
  auto bad = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("split_small.rep"), "ghs", std::nullopt, opt,
                       out, err);
  });
  CHECK(bad.code == 1);

  auto missing = run([&](auto& out, auto& err) {
    return cmd_weights(fixture("no_such_file.rep"), "sch", std::nullopt, opt,
                       out, err);
  });
  CHECK(missing.code == 1);
}

TEST_CASE("cmd_witness") {
  CommandOptions opt;
  auto none = run([&](auto& out, auto& err) {
    return cmd_witness(fixture("counterexample_induced.rep"),
                       {6, 0, 1, 0}, opt, out, err);
  });
  CHECK(none.code == 0);
  CHECK(none.out == "none\n");

  auto some = run([&](auto& out, auto& err) {
    return cmd_witness(fixture("split_small.rep"), {2, 0}, opt, out, err);
  });
  CHECK(some.code == 0);
  CHECK(some.out == "J{0};delta=0\n");
}

TEST_CASE("cmd_detset and cmd_equiv") {
  CommandOptions opt;
  auto ds = run([&](auto& out, auto& err) {
    return cmd_detset(7, 2, {12, 7}, 6, opt, out, err);
  });
  CHECK(ds.code == 0);
  CHECK(ds.out.find("d=6,1\tt=0") != std::string::npos);

  auto eq = run([&](auto& out, auto& err) {
    return cmd_equiv(3, 1, {2, 0}, {4, 2}, out, err);
  });
  CHECK(eq.code == 0);
  CHECK(eq.out == "true\n");
  auto ne = run([&](auto& out, auto& err) {
    return cmd_equiv(3, 1, {2, 0}, {3, 1}, out, err);
  });
  CHECK(ne.out == "false\n");
}

TEST_CASE("cmd_adequacy") {
  CommandOptions opt;
  auto sl25 = run([&](auto& out, auto& err) {
    return cmd_adequacy(fixture("sl2_5.group"), opt, out, err);
  });
  CHECK(sl25.code == 0);  // "not adequate" is data, not an error
  CHECK(sl25.out.find("cond4 (H1 vanishes): fail (dim H1 = 1)") !=
        std::string::npos);
  CHECK(sl25.out.find("adequate: no") != std::string::npos);

  CommandOptions jopt;
  jopt.format = "json-lines";
  auto gl23 = run([&](auto& out, auto& err) {
    return cmd_adequacy(fixture("gl2_3.group"), jopt, out, err);
  });
  CHECK(gl23.code == 0);
  const auto row = nlohmann::json::parse(gl23.out);
  CHECK(row["adequate"] == true);
  CHECK(row["order"] == 48);

  auto quat = run([&](auto& out, auto& err) {
    return cmd_adequacy(fixture("quaternion.group"), opt, out, err);
  });
  CHECK(quat.code == 0);
  CHECK(quat.out.find("order 8") != std::string::npos);

  auto sing = run([&](auto& out, auto& err) {
    return cmd_adequacy(fixture("singular.group"), opt, out, err);
  });
  CHECK(sing.code == 1);

  // resource cap -> exit 2
  CommandOptions tiny;
  tiny.cap = 10;
  auto capped = run([&](auto& out, auto& err) {
    return cmd_adequacy(fixture("sl2_5.group"), tiny, out, err);
  });
  CHECK(capped.code == 2);
}
