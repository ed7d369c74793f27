#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "serre/commands.hpp"
#include "serre/verify.hpp"

namespace py = pybind11;
using namespace serre;

namespace {

LocalModRep make_rep(i64 l, int f, i64 e, const std::string& shape,
                     const std::vector<std::vector<i64>>& chars) {
  RepSpec spec;
  spec.l = l;
  spec.f = f;
  spec.e = e;
  spec.shape = shape;
  if (shape == "irreducible") {
    if (chars.size() != 1)
      fail(ErrorKind::ParseError, "irreducible shape takes one character");
    spec.psi = chars[0];
  } else {
    if (chars.size() != 2)
      fail(ErrorKind::ParseError, "reducible shapes take two characters");
    spec.chi1 = chars[0];
    spec.chi2 = chars[1];
  }
  return spec.to_rep();
}

py::dict class_row(const LocalModRep& rep, const WeightClass& cls) {
  py::dict row;
  row["d"] = cls.d;
  row["t"] = cls.t;
  const auto a = class_representative(rep.l(), rep.f(), cls);
  std::vector<std::pair<i64, i64>> pairs(a.a.begin(), a.a.end());
  row["representative"] = pairs;
  const auto w = find_witness(rep, a);
  if (w) {
    py::dict wd;
    std::vector<i64> j;
    for (int s = 0; s < rep.f(); ++s) {
      const bool bit = w->j_mask >> s & 1;
      if (rep.shape() == RepShape::Irreducible)
        j.push_back(s + rep.f() * bit);
      else if (bit)
        j.push_back(s);
    }
    wd["J"] = j;
    wd["delta"] = w->delta;
    row["witness"] = wd;
  } else {
    row["witness"] = py::none();
  }
  return row;
}

py::list weight_set_py(i64 l, int f, i64 e, const std::string& shape,
                       const std::vector<std::vector<i64>>& chars,
                       const std::string& which, int jobs) {
  const auto rep = make_rep(l, f, e, shape, chars);
  SetOptions opt{jobs};
  WeightSet set;
  if (which == "bdj")
    set = bdj_set(rep, opt);
  else if (which == "sch")
    set = schein_set(rep, opt);
  else if (which == "ghs")
    set = ghs_inertial_set(rep, opt);
  else if (which == "explicit")
    set = explicit_set(rep, opt);
  else
    fail(ErrorKind::ParseError, "unknown weight set '" + which + "'");
  py::list rows;
  for (const auto& cls : set.classes) {
    auto row = class_row(rep, cls);
    row["superset"] = set.superset;
    rows.append(row);
  }
  return rows;
}

py::object find_witness_py(i64 l, int f, i64 e, const std::string& shape,
                           const std::vector<std::vector<i64>>& chars,
                           const std::vector<i64>& weight_flat) {
  const auto rep = make_rep(l, f, e, shape, chars);
  const auto a = weight_from_flat(l, f, weight_flat);
  const auto w = find_witness(rep, a);
  if (!w) return py::none();
  py::dict wd;
  std::vector<i64> j;
  for (int s = 0; s < f; ++s) {
    const bool bit = w->j_mask >> s & 1;
    if (rep.shape() == RepShape::Irreducible)
      j.push_back(s + f * bit);
    else if (bit)
      j.push_back(s);
  }
  wd["J"] = j;
  wd["delta"] = w->delta;
  return wd;
}

py::list det_weight_set_py(i64 l, int f, const std::vector<i64>& exponents,
                           i64 e) {
  FieldParams params(l, f);
  py::list rows;
  for (const auto& cls : det_weight_set(char_from_exponents(params, exponents),
                                        e)) {
    py::dict row;
    row["d"] = cls.d;
    row["t"] = cls.t;
    rows.append(row);
  }
  return rows;
}

bool equivalent_py(i64 l, int f, const std::vector<i64>& a,
                   const std::vector<i64>& b) {
  return weights_equivalent(weight_from_flat(l, f, a),
                            weight_from_flat(l, f, b));
}

py::dict report_dict(const MatGroup& G, const AdequacyReport& rep) {
  py::dict out;
  out["order"] = G.size();
  out["cond1"] = rep.cond1;
  out["ab_l_part"] = rep.ab_l_part;
  out["cond2"] = rep.cond2;
  out["cond3"] = rep.cond3;
  out["span_rank"] = rep.span_rank;
  out["cond4"] = rep.cond4;
  out["h1_dim"] = rep.h1_dim;
  out["adequate"] = rep.adequate;
  return out;
}

py::dict adequacy_named_py(const std::string& named, i64 cap) {
  const auto G = standard_group(named, cap);
  return report_dict(G, is_adequate(G, G.field().l()));
}

py::dict adequacy_py(int n, i64 l, int m,
                     const std::vector<std::vector<i64>>& generators,
                     i64 cap) {
  GroupSpec spec;
  spec.n = n;
  spec.l = l;
  spec.m = m;
  spec.generators = generators;
  const auto G = spec.to_group(cap);
  return report_dict(G, is_adequate(G, l));
}

py::list verify_py(int jobs) {
  py::list out;
  for (const auto& r : reference_checks(jobs)) {
    py::dict row;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    row["seconds"] = r.seconds;
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Explicit Serre-weight sets of tame local mod-l representations "
            "and adequacy of finite matrix subgroups";
  py::register_exception<Error>(m, "SerreError");
  m.def("weight_set", &weight_set_py, py::arg("l"), py::arg("f"), py::arg("e"),
        py::arg("shape"), py::arg("chars"), py::arg("which") = "explicit",
        py::arg("jobs") = 1,
        "weight classes of the chosen explicit set, with witnesses");
  m.def("find_witness", &find_witness_py, py::arg("l"), py::arg("f"),
        py::arg("e"), py::arg("shape"), py::arg("chars"), py::arg("weight"));
  m.def("det_weight_set", &det_weight_set_py, py::arg("l"), py::arg("f"),
        py::arg("exponents"), py::arg("e"));
  m.def("weights_equivalent", &equivalent_py, py::arg("l"), py::arg("f"),
        py::arg("a"), py::arg("b"));
  m.def("adequacy_named", &adequacy_named_py, py::arg("named"),
        py::arg("cap") = kDefaultGroupCap);
  m.def("adequacy", &adequacy_py, py::arg("n"), py::arg("l"), py::arg("m"),
        py::arg("generators"), py::arg("cap") = kDefaultGroupCap);
  m.def("verify_paper", &verify_py, py::arg("jobs") = 1,
        "run the published-example regression battery");
}
