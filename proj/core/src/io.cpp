#include "affgr/io.hpp"

#include <fstream>
#include <sstream>

#include "affgr/errors.hpp"

namespace affgr::io {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < 0) throw FormatError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

FieldElem decode_coef(const json& j, const Field& f) {
  if (j.is_string()) return f.parse_elem(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  throw FormatError("coefficient must be a string or an integer");
}

}  // namespace

json encode(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back(json::array({t.exp, t.coef.to_string()}));
  return out;
}

json encode(const ValuedScalar& s) {
  json out = {{"num", encode(s.num())}};
  if (!s.den().is_one()) out["den"] = encode(s.den());
  return out;
}

json encode(const ScalarMatrix& m) {
  json cols = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(encode(m(r, c)));
    cols.push_back(std::move(col));
  }
  return cols;
}

json encode(const Lattice& l) { return {{"n", l.rank()}, {"columns", encode(l.basis())}}; }

json encode(const DominantCoweight& a) { return a.values(); }

json encode(const ConjectureReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) cands.push_back({{"lattice", encode(c.lattice)}, {"cost", c.cost}});
  json out = {{"lhs", r.lhs},
              {"status", status_name(r.status)},
              {"witness", nullptr},
              {"candidates", std::move(cands)},
              {"strategy", strategy_name(r.strategy)},
              {"seed", r.seed},
              {"candidates_examined", r.candidates_examined},
              {"note", r.note}};
  if (auto w = r.witness()) out["witness"] = encode(*w);
  return out;
}

LaurentPoly decode_poly(const json& j, const Field& f) {
  if (!j.is_array()) throw FormatError("polynomial must be a list of [exp, coef] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw FormatError("polynomial term must be [exp, coef]");
    terms.push_back({as_int(t[0], "exponent"), decode_coef(t[1], f)});
  }
  return LaurentPoly(f, std::move(terms));
}

ValuedScalar decode_scalar(const json& j, const Field& f) {
  if (j.is_array()) return ValuedScalar(decode_poly(j, f));
  LaurentPoly num = decode_poly(field_of(j, "num"), f);
  if (!j.contains("den")) return ValuedScalar(std::move(num));
  LaurentPoly den = decode_poly(j.at("den"), f);
  if (den.is_zero()) throw FormatError("zero denominator");
  return ValuedScalar(std::move(num), std::move(den));
}

ScalarMatrix decode_matrix(const json& j, const Field& f) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty list of columns");
  std::vector<std::vector<ValuedScalar>> cols;
  for (const auto& col : j) {
    if (!col.is_array()) throw FormatError("column must be a list");
    std::vector<ValuedScalar> v;
    for (const auto& e : col) v.push_back(decode_scalar(e, f));
    if (!cols.empty() && v.size() != cols.front().size()) throw FormatError("columns differ in length");
    cols.push_back(std::move(v));
  }
  if (cols.front().empty()) throw FormatError("empty column");
  return ScalarMatrix::from_columns(cols);
}

Lattice decode_lattice(const json& j, const Field& f) {
  const std::size_t n = as_count(field_of(j, "n"), "n");
  const ScalarMatrix m = decode_matrix(field_of(j, "columns"), f);
  if (m.rows() != n) throw FormatError("column length differs from n");
  if (m.cols() < n) throw FormatError("fewer than n columns");
  if (m.cols() == n) return Lattice::from_columns(m);
  PolyMatrix gens(n, m.cols(), LaurentPoly(f));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_laurent()) throw FormatError("generating sets with more than n columns must be Laurent");
      gens(r, c) = m(r, c).num();
    }
  }
  return Lattice::from_generators(gens);
}

ConjectureReport decode_report(const json& j, const Field& f) {
  ConjectureReport r;
  r.lhs = as_int(field_of(j, "lhs"), "lhs");
  const json& status = field_of(j, "status");
  if (status == "verified") r.status = Status::verified;
  else if (status == "inconclusive") r.status = Status::inconclusive;
  else throw FormatError("unknown status");
  try {
    r.strategy = parse_strategy(field_of(j, "strategy").get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  const json& seed = field_of(j, "seed");
  if (!seed.is_number_unsigned()) throw FormatError("seed must be a nonnegative integer");
  r.seed = seed.get<std::uint64_t>();
  for (const auto& c : field_of(j, "candidates")) {
    Candidate cand{decode_lattice(field_of(c, "lattice"), f), as_int(field_of(c, "cost"), "cost")};
    if (!r.best_candidate || cand.cost < r.best_candidate->cost) r.best_candidate = cand;
    r.candidates.push_back(std::move(cand));
  }
  r.candidates_examined =
      j.contains("candidates_examined") ? as_count(j.at("candidates_examined"), "candidates_examined") : r.candidates.size();
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  const json& w = field_of(j, "witness");
  if (!w.is_null()) {
    Lattice wl = decode_lattice(w, f);
    if (!r.best_candidate || !(r.best_candidate->lattice == wl)) throw FormatError("witness is not the best candidate");
  }
  return r;
}

Field decode_field(const json& j) {
  if (!j.is_string()) throw FormatError("field must be a string");
  try {
    return Field::parse(j.get<std::string>());
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

json encode(const Instance& inst) {
  json lats = json::array();
  for (const auto& l : inst.lattices) lats.push_back(encode(l));
  json out = {{"n", inst.n}, {"field", inst.field.name()}, {"lattices", std::move(lats)}, {"indices", inst.indices}};
  if (!inst.frames.empty()) {
    json frames = json::array();
    for (const auto& m : inst.frames) frames.push_back(encode(m));
    out["frames"] = std::move(frames);
  }
  return out;
}

Instance decode_instance(const json& j) {
  Instance inst;
  inst.n = as_count(field_of(j, "n"), "n");
  if (inst.n == 0) throw FormatError("n must be positive");
  inst.field = j.contains("field") ? decode_field(j.at("field")) : Field::rational();
  const json& lats = field_of(j, "lattices");
  if (!lats.is_array()) throw FormatError("lattices must be a list");
  for (const auto& l : lats) {
    inst.lattices.push_back(decode_lattice(l, inst.field));
    if (inst.lattices.back().rank() != inst.n) throw FormatError("lattice rank differs from n");
  }
  if (j.contains("indices")) {
    if (!j.at("indices").is_array()) throw FormatError("indices must be a list");
    for (const auto& i : j.at("indices")) inst.indices.push_back(as_count(i, "index"));
  }
  if (j.contains("frames")) {
    if (!j.at("frames").is_array()) throw FormatError("frames must be a list");
    for (const auto& m : j.at("frames")) {
      inst.frames.push_back(decode_matrix(m, inst.field));
      if (inst.frames.back().rows() != inst.n || inst.frames.back().cols() != inst.n) {
        throw FormatError("frame must be n x n");
      }
    }
  }
  return inst;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace affgr::io
