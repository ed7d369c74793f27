#include "serre/specio.hpp"

#include <fstream>
#include <sstream>

namespace serre {

namespace {

struct Doc {
  // key -> list of value token lines (a key may repeat, e.g. "gen")
  std::vector<std::pair<std::string, std::vector<i64>>> entries;
  std::vector<std::pair<std::string, std::string>> words;  // string-valued keys
};

Doc read_doc(std::istream& in) {
  Doc doc;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    std::istringstream vs(rest);
    std::vector<i64> nums;
    i64 x;
    bool numeric = true;
    std::string tok;
    std::istringstream probe(rest);
    while (probe >> tok) {
      try {
        size_t used = 0;
        (void)std::stoll(tok, &used);
        if (used != tok.size()) numeric = false;
      } catch (...) {
        numeric = false;
      }
    }
    if (numeric) {
      while (vs >> x) nums.push_back(x);
      doc.entries.push_back({key, std::move(nums)});
    } else {
      std::string value;
      std::istringstream ws(rest);
      ws >> value;
      std::string extra;
      if (ws >> extra)
        fail(ErrorKind::ParseError,
             "line " + std::to_string(lineno) + ": unexpected token '" +
                 extra + "' after " + key);
      doc.words.push_back({key, value});
    }
  }
  return doc;
}

i64 get_scalar(const Doc& doc, const std::string& key) {
  for (const auto& [k, v] : doc.entries)
    if (k == key) {
      if (v.size() != 1)
        fail(ErrorKind::ParseError, "field '" + key + "' needs one integer");
      return v[0];
    }
  fail(ErrorKind::ParseError, "missing field '" + key + "'");
}

std::vector<i64> get_list(const Doc& doc, const std::string& key) {
  for (const auto& [k, v] : doc.entries)
    if (k == key) return v;
  fail(ErrorKind::ParseError, "missing field '" + key + "'");
}

std::string get_word(const Doc& doc, const std::string& key) {
  for (const auto& [k, v] : doc.words)
    if (k == key) return v;
  fail(ErrorKind::ParseError, "missing field '" + key + "'");
}

bool has_word(const Doc& doc, const std::string& key) {
  for (const auto& [k, v] : doc.words)
    if (k == key) return true;
  return false;
}

}  // namespace

LocalModRep RepSpec::to_rep() const {
  FieldParams params(l, f);
  if (shape == "irreducible") {
    FieldParams params2(l, 2 * f);
    return LocalModRep::irreducible(l, f, e, char_from_exponents(params2, psi));
  }
  if (shape == "split")
    return LocalModRep::split(l, f, e, char_from_exponents(params, chi1),
                              char_from_exponents(params, chi2));
  if (shape == "nonsplit")
    return LocalModRep::non_split(l, f, e, char_from_exponents(params, chi1),
                                  char_from_exponents(params, chi2));
  fail(ErrorKind::ParseError, "unknown shape '" + shape + "'");
}

std::string RepSpec::emit() const {
  std::ostringstream os;
  os << "type rep\n"
     << "l " << l << "\nf " << f << "\ne " << e << "\nshape " << shape << "\n";
  auto list = [&](const char* key, const std::vector<i64>& v) {
    os << key;
    for (i64 x : v) os << " " << x;
    os << "\n";
  };
  if (shape == "irreducible")
    list("psi", psi);
  else {
    list("chi1", chi1);
    list("chi2", chi2);
  }
  return os.str();
}

RepSpec parse_rep_spec(std::istream& in) {
  Doc doc = read_doc(in);
  if (get_word(doc, "type") != "rep")
    fail(ErrorKind::ParseError, "expected 'type rep'");
  RepSpec spec;
  spec.l = get_scalar(doc, "l");
  spec.f = static_cast<int>(get_scalar(doc, "f"));
  spec.e = get_scalar(doc, "e");
  spec.shape = get_word(doc, "shape");
  if (spec.shape == "irreducible") {
    spec.psi = get_list(doc, "psi");
    if (static_cast<int>(spec.psi.size()) != 2 * spec.f)
      fail(ErrorKind::ParseError, "psi needs 2f exponents");
  } else if (spec.shape == "split" || spec.shape == "nonsplit") {
    spec.chi1 = get_list(doc, "chi1");
    spec.chi2 = get_list(doc, "chi2");
    if (static_cast<int>(spec.chi1.size()) != spec.f ||
        static_cast<int>(spec.chi2.size()) != spec.f)
      fail(ErrorKind::ParseError, "chi1/chi2 need f exponents each");
  } else {
    fail(ErrorKind::ParseError, "unknown shape '" + spec.shape + "'");
  }
  (void)spec.to_rep();  // validate parameters now
  return spec;
}

MatGroup GroupSpec::to_group(i64 cap) const {
  if (!named.empty()) return standard_group(named, cap);
  auto F = std::make_shared<const FiniteField>(l, m);
  std::vector<Mat> gens;
  for (const auto& flat : generators) {
    if (static_cast<int>(flat.size()) != n * n * m)
      fail(ErrorKind::ParseError, "generator needs n*n*m coefficients");
    Mat g;
    g.n = n;
    for (int i = 0; i < n * n; ++i) {
      std::vector<i64> coeffs(flat.begin() + static_cast<std::ptrdiff_t>(i) * m,
                              flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * m);
      g.v[i] = F->from_coeffs(coeffs);
    }
    gens.push_back(g);
  }
  return MatGroup(F, n, gens, cap);
}

std::string GroupSpec::emit() const {
  std::ostringstream os;
  os << "type group\n";
  if (!named.empty()) {
    os << "named " << named << "\n";
    return os.str();
  }
  os << "n " << n << "\nl " << l << "\nm " << m << "\n";
  for (const auto& g : generators) {
    os << "gen";
    for (i64 x : g) os << " " << x;
    os << "\n";
  }
  return os.str();
}

GroupSpec parse_group_spec(std::istream& in) {
  Doc doc = read_doc(in);
  if (get_word(doc, "type") != "group")
    fail(ErrorKind::ParseError, "expected 'type group'");
  GroupSpec spec;
  if (has_word(doc, "named")) {
    spec.named = get_word(doc, "named");
    return spec;
  }
  spec.n = static_cast<int>(get_scalar(doc, "n"));
  spec.l = get_scalar(doc, "l");
  spec.m = static_cast<int>(get_scalar(doc, "m"));
  for (const auto& [k, v] : doc.entries)
    if (k == "gen") spec.generators.push_back(v);
  if (spec.generators.empty() && spec.n < 1)
    fail(ErrorKind::ParseError, "group spec needs generators or a name");
  return spec;
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open input file " + path);
  return in;
}

}  // namespace

RepSpec parse_rep_spec_file(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_rep_spec(in);
}

GroupSpec parse_group_spec_file(const std::string& path) {
  auto in = open_or_fail(path);
  return parse_group_spec(in);
}

std::vector<i64> parse_int_list(const std::string& text) {
  std::string cleaned = text;
  for (auto& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream is(cleaned);
  std::vector<i64> out;
  i64 x;
  while (is >> x) out.push_back(x);
  std::string junk;
  if (is.clear(), is >> junk)
    fail(ErrorKind::ParseError, "bad integer list: " + text);
  return out;
}

SerreWeight weight_from_flat(i64 l, int f, const std::vector<i64>& flat) {
  if (static_cast<int>(flat.size()) != 2 * f)
    fail(ErrorKind::ParseError, "weight needs 2f integers");
  SerreWeight a{l, f, {}};
  for (int s = 0; s < f; ++s) a.a.push_back({flat[2 * s], flat[2 * s + 1]});
  return a;
}

}  // namespace serre
