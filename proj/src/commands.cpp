#include "serre/commands.hpp"

#include <functional>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "serre/verify.hpp"

namespace serre {

namespace {

using nlohmann::json;

std::string join(const std::vector<i64>& v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<i64> witness_j_list(const LocalModRep& rep, const WitnessJD& w) {
  std::vector<i64> out;
  for (int s = 0; s < rep.f(); ++s) {
    const bool bit = w.j_mask >> s & 1;
    if (rep.shape() == RepShape::Irreducible)
      out.push_back(s + rep.f() * bit);  // chosen extension of sigma_s
    else if (bit)
      out.push_back(s);
  }
  return out;
}

std::vector<i64> flat_weight(const SerreWeight& a) {
  std::vector<i64> out;
  for (const auto& [a1, a2] : a.a) {
    out.push_back(a1);
    out.push_back(a2);
  }
  return out;
}

json witness_json(const LocalModRep& rep, const WitnessJD& w) {
  return json{{"J", witness_j_list(rep, w)}, {"delta", w.delta}};
}

void emit_row(std::ostream& out, const std::string& format,
              const WeightClass& cls, const SerreWeight& rep_weight,
              const std::optional<std::pair<const LocalModRep*, WitnessJD>>&
                  witness,
              bool superset) {
  if (format == "json-lines") {
    json row;
    row["d"] = cls.d;
    row["t"] = cls.t;
    json rep_arr = json::array();
    for (const auto& [a1, a2] : rep_weight.a) rep_arr.push_back({a1, a2});
    row["representative"] = rep_arr;
    row["witness"] =
        witness ? witness_json(*witness->first, witness->second) : json();
    row["flags"] = json{{"superset", superset}};
    out << row.dump() << "\n";
  } else {
    out << "d=" << join(cls.d) << "\tt=" << cls.t
        << "\trep=" << join(flat_weight(rep_weight));
    if (witness)
      out << "\twitness=J{" << join(witness_j_list(*witness->first,
                                                   witness->second))
          << "};delta=" << join(witness->second.delta);
    else
      out << "\twitness=-";
    out << "\t" << (superset ? "superset" : "-") << "\n";
  }
}

WeightSet select_set(const LocalModRep& rep, const std::string& which,
                     const SetOptions& opt) {
  if (which == "bdj") return bdj_set(rep, opt);
  if (which == "sch") return schein_set(rep, opt);
  if (which == "ghs") return ghs_inertial_set(rep, opt);
  if (which == "explicit") return explicit_set(rep, opt);
  fail(ErrorKind::ParseError, "unknown weight set '" + which + "'");
}

int run_guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace

int exit_code_for(const Error& err) {
  return err.kind() == ErrorKind::CapExceeded ? 2 : 1;
}

int cmd_weights(const std::string& input_path, const std::string& which,
                const std::optional<std::vector<i64>>& query_weight,
                const CommandOptions& opt, std::ostream& out,
                std::ostream& err) {
  return run_guarded(err, [&] {
    const auto spec = parse_rep_spec_file(input_path);
    const auto rep = spec.to_rep();
    const auto set = select_set(rep, which, SetOptions{opt.jobs});
    if (query_weight) {
      const auto a = weight_from_flat(rep.l(), rep.f(), *query_weight);
      out << (set.contains(weight_class(a)) ? "present" : "absent") << "\n";
      return;
    }
    for (const auto& cls : set.classes) {
      const auto a = class_representative(rep.l(), rep.f(), cls);
      const auto w = find_witness(rep, a);
      std::optional<std::pair<const LocalModRep*, WitnessJD>> row_witness;
      if (w) row_witness = {&rep, *w};
      emit_row(out, opt.format, cls, a, row_witness, set.superset);
    }
  });
}

int cmd_detset(i64 l, int f, const std::vector<i64>& exponents, i64 e,
               const CommandOptions& opt, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, [&] {
    FieldParams params(l, f);
    const auto chi = char_from_exponents(params, exponents);
    for (const auto& cls : det_weight_set(chi, e)) {
      const auto a = class_representative(l, f, cls);
      emit_row(out, opt.format, cls, a, std::nullopt, false);
    }
  });
}

namespace {

// prefer the constructive solvers when they apply; fall back to the search
std::optional<WitnessJD> witness_for(const LocalModRep& rep,
                                     const SerreWeight& a) {
  if (rep.e() >= rep.l() && rep.semisimple()) {
    if (rep.shape() == RepShape::Split) {
      if (mul(rep.chi1(), rep.chi2()) != det_char(a, rep.e()))
        return std::nullopt;  // determinant obstruction
      return solve_niveau1_big_e(rep.chi1(), rep.chi2(), a, rep.e());
    }
    if (mul(rep.psi(), conjugate_c(rep.psi())) !=
        inflate(det_char(a, rep.e())))
      return std::nullopt;
    return solve_niveau2_big_e(rep.psi(), a, rep.e());
  }
  return find_witness(rep, a);
}

}  // namespace

int cmd_witness(const std::string& input_path, const std::vector<i64>& weight,
                const CommandOptions& opt, std::ostream& out,
                std::ostream& err) {
  return run_guarded(err, [&] {
    const auto spec = parse_rep_spec_file(input_path);
    const auto rep = spec.to_rep();
    const auto a = weight_from_flat(rep.l(), rep.f(), weight);
    a.require_serre_weight();
    const auto w = witness_for(rep, a);
    if (opt.format == "json-lines") {
      out << (w ? witness_json(rep, *w) : json()).dump() << "\n";
    } else if (w) {
      out << "J{" << join(witness_j_list(rep, *w)) << "};delta="
          << join(w->delta) << "\n";
    } else {
      out << "none\n";
    }
  });
}

int cmd_equiv(i64 l, int f, const std::vector<i64>& a,
              const std::vector<i64>& b, std::ostream& out,
              std::ostream& err) {
  return run_guarded(err, [&] {
    const auto wa = weight_from_flat(l, f, a);
    const auto wb = weight_from_flat(l, f, b);
    out << (weights_equivalent(wa, wb) ? "true" : "false") << "\n";
  });
}

int cmd_adequacy(const std::string& input_path, const CommandOptions& opt,
                 std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto spec = parse_group_spec_file(input_path);
    const auto G = spec.to_group(opt.cap);
    const auto rep = is_adequate(G, G.field().l());
    if (opt.format == "json-lines") {
      json row;
      row["order"] = G.size();
      row["l"] = G.field().l();
      row["n"] = G.n();
      row["cond1"] = json{{"pass", rep.cond1}, {"ab_l_part", rep.ab_l_part}};
      row["cond2"] = json{{"pass", rep.cond2}};
      row["cond3"] = json{{"pass", rep.cond3}, {"span_rank", rep.span_rank}};
      row["cond4"] = json{{"pass", rep.cond4}, {"h1_dim", rep.h1_dim}};
      row["adequate"] = rep.adequate;
      out << row.dump() << "\n";
    } else {
      out << "order " << G.size() << " over F_" << G.field().q() << ", n = "
          << G.n() << ", l = " << G.field().l() << "\n";
      out << "cond1 (no l-power quotient): "
          << (rep.cond1 ? "pass" : "fail") << " (l-part of |G^ab| = "
          << rep.ab_l_part << ")\n";
      out << "cond2 (l does not divide n): "
          << (rep.cond2 ? "pass" : "fail") << "\n";
      out << "cond3 (prime-to-l span): " << (rep.cond3 ? "pass" : "fail")
          << " (rank " << rep.span_rank << " of " << G.n() * G.n() << ")\n";
      out << "cond4 (H1 vanishes): " << (rep.cond4 ? "pass" : "fail")
          << " (dim H1 = " << rep.h1_dim << ")\n";
      out << "adequate: " << (rep.adequate ? "yes" : "no") << "\n";
    }
  });
}

int cmd_verify_paper(const CommandOptions& opt, std::ostream& out,
                     std::ostream& err) {
  try {
    const auto results = reference_checks(opt.jobs);
    bool all = true;
    for (const auto& r : results) {
      all = all && r.pass;
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
          << " (" << std::fixed << std::setprecision(1) << r.seconds
          << "s)\n";
    }
    out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all ? 0 : 1;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}

}  // namespace serre
