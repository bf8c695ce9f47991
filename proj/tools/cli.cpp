#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "affgr/apartment.hpp"
#include "affgr/closecase.hpp"
#include "affgr/detval.hpp"
#include "affgr/errors.hpp"
#include "affgr/harness.hpp"
#include "affgr/io.hpp"
#include "affgr/metric.hpp"
#include "affgr/random.hpp"
#include "affgr/subspace_comb.hpp"

namespace affgr::cli {

namespace {

using io::json;

struct Globals {
  std::string field = "rational";
  std::uint64_t seed = 0;
  std::size_t budget = 100000;
  std::size_t threads = 1;
  bool json_out = false;
  std::string strategy = "auto";
};

json load(const std::string& path_or_text) {
  if (!path_or_text.empty() && (path_or_text.front() == '{' || path_or_text.front() == '[')) {
    return io::parse(path_or_text);
  }
  if (path_or_text == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str());
  }
  return io::read_file(path_or_text);
}

// The instance's own field wins; --field fills it in when absent.
io::Instance load_instance(const std::string& path, const Globals& g) {
  json j = load(path);
  if (j.is_object() && !j.contains("field")) j["field"] = g.field;
  return io::decode_instance(j);
}

Field field_for(const json& j, const Globals& g) {
  return io::decode_field(j.is_object() && j.contains("field") ? j.at("field") : json(g.field));
}

IndexVector parse_indices(const std::string& text) {
  IndexVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw FormatError("");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw FormatError("bad index list: " + text);
    }
  }
  return out;
}

std::string coweight_text(const DominantCoweight& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

json encode_assignment(const AssignmentResult& r) {
  return {{"value", r.value}, {"sigma", r.sigma}, {"a", r.a}, {"b", r.b}};
}

FieldVector decode_vector(const json& j, const Field& f, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw FormatError("vector must have n coordinates");
  FieldVector v;
  for (const auto& x : j) {
    if (x.is_string()) v.push_back(f.parse_elem(x.get<std::string>()));
    else if (x.is_number_integer()) v.push_back(f.from_int(x.get<std::int64_t>()));
    else throw FormatError("coordinate must be a string or an integer");
  }
  return v;
}

json encode_vector(const FieldVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

int cmd_compute_f(const std::string& path, const std::string& indices, const Globals& g, std::ostream& out) {
  const io::Instance inst = load_instance(path, g);
  const IndexVector idx = indices.empty() ? inst.indices : parse_indices(indices);
  const MultiFResult r = multi_f_detail(idx, inst.lattices);
  const json detail = {{"value", r.value}, {"indices", idx}, {"selection", r.selection}};
  if (g.json_out) {
    out << detail.dump() << "\n";
  } else {
    out << r.value << "\n" << detail.dump() << "\n";
  }
  return 0;
}

int cmd_distance(const std::string& path, const Globals& g, std::ostream& out) {
  const io::Instance inst = load_instance(path, g);
  json pairs = json::array();
  bool reversal_ok = true;
  for (std::size_t a = 0; a < inst.lattices.size(); ++a) {
    for (std::size_t b = a + 1; b < inst.lattices.size(); ++b) {
      const DominantCoweight ab = distance(inst.lattices[a], inst.lattices[b]);
      const DominantCoweight ba = distance(inst.lattices[b], inst.lattices[a]);
      const bool ok = ba == ab.reversed_negated();
      reversal_ok = reversal_ok && ok;
      pairs.push_back({{"from", a + 1}, {"to", b + 1}, {"distance", io::encode(ab)}, {"reverse", io::encode(ba)}});
      if (!g.json_out) {
        out << "d(L" << a + 1 << ",L" << b + 1 << ") = " << coweight_text(ab) << "\n";
        out << "d(L" << b + 1 << ",L" << a + 1 << ") = " << coweight_text(ba) << (ok ? "  reversal ok" : "  reversal FAILED")
            << "\n";
      }
    }
  }
  if (g.json_out) out << json{{"pairs", pairs}, {"reversal_ok", reversal_ok}}.dump() << "\n";
  return reversal_ok ? 0 : 1;
}

int cmd_verify(const std::string& path, const Globals& g, std::ostream& out) {
  const io::Instance inst = load_instance(path, g);
  VerifyOptions opts;
  opts.seed = g.seed;
  opts.budget = g.budget;
  opts.threads = g.threads;
  opts.frames = inst.frames;
  std::vector<Strategy> order;
  if (g.strategy == "auto") {
    order = {Strategy::close, Strategy::apartment, Strategy::enumerate, Strategy::random};
  } else {
    order = {parse_strategy(g.strategy)};
  }
  ConjectureReport r;
  for (Strategy s : order) {
    r = verify_star(inst.indices, inst.lattices, s, opts);
    if (r.status == Status::verified) break;
  }
  if (g.json_out) {
    out << io::encode(r).dump() << "\n";
  } else {
    out << "status: " << status_name(r.status) << "\n";
    out << "lhs: " << r.lhs << "\n";
    out << "strategy: " << strategy_name(r.strategy) << "\n";
    out << "seed: " << r.seed << "\n";
    out << "candidates examined: " << r.candidates_examined << "\n";
    if (r.best_candidate) out << "best cost: " << r.best_candidate->cost << "\n";
    if (auto w = r.witness()) out << "witness: " << *w << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
  }
  return r.status == Status::verified ? 0 : 2;
}

int cmd_close_case(const std::string& path, const Globals& g, std::ostream& out) {
  const io::Instance inst = load_instance(path, g);
  if (inst.lattices.size() != 3 || inst.indices.size() != 3) throw IndexError("close-case needs three lattices and three indices");
  const auto& [l, m, n] = std::tie(inst.lattices[0], inst.lattices[1], inst.lattices[2]);
  const std::size_t i = inst.indices[0], j = inst.indices[1], k = inst.indices[2];
  validate_indices(inst.indices, inst.lattices);
  const SubspaceTriple t = extract_triple(l, m, n);
  const QuiverMultiplicities q = decompose(t);
  const std::int64_t flow = max_flow(build_network(q, i, j, k));
  const std::int64_t formula = min_formula(t, i, j, k);
  const std::int64_t value = multi_f(inst.indices, inst.lattices);
  const CloseWitness w = close_witness(l, m, n, i, j, k);
  const json mult = {{"A", q.a}, {"A'", q.a1}, {"A''", q.a2}, {"B", q.b},  {"B'", q.b1},
                     {"B''", q.b2}, {"C", q.c}, {"D", q.d},     {"S", q.s}};
  const bool agree = flow == formula && formula == value && w.value == value;
  if (g.json_out) {
    out << json{{"multiplicities", mult},
                {"max_flow", flow},
                {"min_formula", formula},
                {"multi_f", value},
                {"cuts", w.cuts},
                {"costs", w.costs},
                {"witness_name", close_candidate_name(w.candidate_index)},
                {"witness", io::encode(w.witness)},
                {"agree", agree}}
               .dump()
        << "\n";
  } else {
    out << "multiplicities:";
    for (const auto& [name, v] : mult.items()) out << " " << name << "=" << v;
    out << "\nmax_flow: " << flow << "\nmin_formula: " << formula << "\nmulti_f: " << value << "\n";
    out << "witness: " << close_candidate_name(w.candidate_index) << " " << w.witness << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_apartment(const std::string& path, const Globals& g, std::ostream& out) {
  const json j = load(path);
  const Field f = field_for(j, g);
  const Apartment a(io::decode_matrix(j.at("basis"), f));
  std::vector<ApartmentPoint> points;
  for (const auto& p : j.at("points")) points.push_back(p.get<ApartmentPoint>());
  const IndexVector idx = j.at("indices").get<IndexVector>();
  for (const auto& p : points) {
    if (p.size() != a.rank()) throw FormatError("point length differs from the rank");
  }
  const ApartmentWitness w = apartment_witness(a, points, idx);
  const ApartmentValue v = apartment_value(a, points, idx);
  std::vector<Lattice> lattices;
  for (const auto& p : points) lattices.push_back(a.lattice(p));
  const std::int64_t cost = star_cost(idx, lattices, w.witness);
  const bool ok = certificate_valid(v.replicated, w.assignment) && cost == w.value;
  if (g.json_out) {
    out << json{{"value", w.value},
                {"witness", io::encode(w.witness)},
                {"star_cost", cost},
                {"assignment", encode_assignment(w.assignment)},
                {"certificate_valid", ok}}
               .dump()
        << "\n";
  } else {
    out << "value: " << w.value << "\nstar cost: " << cost << "\nwitness: " << w.witness
        << "\ncertificate: " << (ok ? "valid" : "INVALID") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_konig(const std::string& path, const Globals& g, std::ostream& out) {
  const json j = load(path);
  const Field f = field_for(j, g);
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Subspace> subs;
  for (const auto& s : j.at("subspaces")) {
    std::vector<FieldVector> gens;
    for (const auto& v : s) gens.push_back(decode_vector(v, f, n));
    subs.push_back(Subspace::span(f, n, gens));
  }
  const std::size_t value = konig_linear_value(subs);
  const auto minimizer = konig_minimizing_set(subs);
  const auto reps = konig_linear_witness(subs);
  const bool moshonkin = moshonkin_check(subs);
  json wit = json::array();
  for (const auto& r : reps) wit.push_back({{"index", r.index}, {"vector", encode_vector(r.vector)}});
  if (g.json_out) {
    out << json{{"value", value}, {"minimizing_set", minimizer}, {"witness", wit}, {"moshonkin", moshonkin}}.dump()
        << "\n";
  } else {
    out << "value: " << value << "\nminimizing set:";
    for (auto i : minimizer) out << " " << i;
    out << "\nrepresentatives: " << wit.dump() << "\nmoshonkin: " << (moshonkin ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_hungarian(const std::string& text, const Globals& g, std::ostream& out) {
  const json j = load(text);
  const IntMatrix c = j.get<IntMatrix>();
  const AssignmentResult r = kuhn_munkres(c);
  const bool ok = certificate_valid(c, r);
  if (g.json_out) {
    json o = encode_assignment(r);
    o["certificate_valid"] = ok;
    out << o.dump() << "\n";
  } else {
    out << "value: " << r.value << "\nsigma: " << json(r.sigma).dump() << "\na: " << json(r.a).dump()
        << "\nb: " << json(r.b).dump() << "\ncertificate: " << (ok ? "valid" : "INVALID") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t k, const Globals& g, std::ostream& out) {
  const Field f = io::decode_field(json(g.field));
  InstanceRng rng(g.seed);
  io::Instance inst;
  inst.field = f;
  inst.n = n;
  if (n == 0) throw FormatError("n must be positive");
  if (kind == "triple") {
    for (std::size_t j = 0; j < k; ++j) inst.lattices.push_back(rng.lattice(f, n, -2, 2));
  } else if (kind == "close") {
    for (std::size_t j = 0; j < k; ++j) inst.lattices.push_back(rng.close_lattice(f, n));
  } else if (kind == "apartment") {
    const Apartment a = rng.apartment(f, n, 2);
    for (std::size_t j = 0; j < k; ++j) inst.lattices.push_back(a.lattice(rng.point(n, -3, 3)));
    inst.frames.push_back(a.basis());
  } else {
    throw FormatError("unknown kind: " + kind + " (triple, close, apartment)");
  }
  inst.indices = rng.indices(n, k);
  json j = io::encode(inst);
  j["seed"] = g.seed;
  j["kind"] = kind;
  out << (g.json_out ? j.dump() : j.dump(2)) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical determinantal valuations on lattice configurations", "affgr"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "rational or prime:<p>")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--budget", g.budget, "cap on examined candidates")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for candidate evaluation")->capture_default_str();
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--strategy", g.strategy, "auto, close, apartment, enumerate or random")->capture_default_str();

  std::string path;
  std::string indices;
  auto* compute = app.add_subcommand("compute-f", "multi_f of an instance, with a maximizing selection");
  compute->add_option("instance", path, "instance JSON file (- for stdin)")->required();
  compute->add_option("--indices", indices, "comma-separated indices overriding the instance");
  auto* dist = app.add_subcommand("distance", "pairwise distances d(L_a, L_b)");
  dist->add_option("instance", path)->required();
  auto* verify = app.add_subcommand("verify", "search for a star witness");
  verify->add_option("instance", path)->required();
  auto* close = app.add_subcommand("close-case", "closed-form value and witness for a close triple");
  close->add_option("instance", path)->required();
  auto* apart = app.add_subcommand("apartment", "witness for lattices in one apartment");
  apart->add_option("input", path, "{\"basis\", \"points\", \"indices\"} JSON")->required();
  auto* konig = app.add_subcommand("konig", "independent representatives of subspaces");
  konig->add_option("input", path, "{\"n\", \"subspaces\"} JSON")->required();
  auto* hung = app.add_subcommand("hungarian", "maximal transversal with dual potentials");
  hung->add_option("matrix", path, "integer matrix as JSON text or file")->required();
  std::string kind = "triple";
  std::size_t gen_n = 3;
  std::size_t gen_k = 3;
  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--kind", kind, "triple, close or apartment")->capture_default_str();
  gen->add_option("--n", gen_n, "rank")->capture_default_str();
  gen->add_option("--k", gen_k, "number of lattices")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*compute) return cmd_compute_f(path, indices, g, out);
    if (*dist) return cmd_distance(path, g, out);
    if (*verify) return cmd_verify(path, g, out);
    if (*close) return cmd_close_case(path, g, out);
    if (*apart) return cmd_apartment(path, g, out);
    if (*konig) return cmd_konig(path, g, out);
    if (*hung) return cmd_hungarian(path, g, out);
    if (*gen) return cmd_gen(kind, gen_n, gen_k, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace affgr::cli
