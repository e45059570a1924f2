#include "quatspec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "quatspec/generate.hpp"
#include "quatspec/genvec.hpp"
#include "quatspec/io.hpp"
#include "quatspec/model.hpp"
#include "quatspec/spectral.hpp"
#include "quatspec/verify.hpp"

namespace quatspec::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  std::string output;
  std::string model_output;
  std::optional<double> tol;
  double cluster_tol = kDefaultClusterTol;
  std::string field;
  // gen / verify
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool simple = false;
  bool zero_atom = false;
  bool batch = false;  // --count given: verify generated instances
};

double resolve_tol(const Options& o) {
  if (o.tol) return *o.tol;
  if (const char* env = std::getenv("QUATSPEC_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0.0) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ParseError, std::string("QUATSPEC_TOL is not a positive number: ") + env);
  }
  return kDefaultTol;
}

Frame resolve_frame(const Options& o) {
  if (o.field.empty()) return Frame::standard();
  const Quaternion q = io::parse_quaternion_list(o.field);
  try {
    return Frame::build(make_imaginary_unit(q));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("--field: ") + e.what());
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

json frame_json(const Frame& fr) { return {{"f", io::to_json(fr.f())}, {"phi", io::to_json(fr.phi())}}; }

json residuals_json(const InvariantReport& rep) {
  json r = json::object();
  for (const auto& res : rep.residuals()) r[res.name] = {{"value", res.value}, {"threshold", res.threshold}};
  return r;
}

void describe_spectrum(json& report, const SpectralData& sd) {
  json atoms = json::array();
  json ranks = json::array();
  for (const auto& atom : sd.atoms) {
    atoms.push_back(atom.t);
    ranks.push_back(atom.h_rank());
  }
  report["atoms"] = atoms;
  report["h_ranks"] = ranks;
  report["simple_spectrum"] = has_simple_spectrum(sd);
}

// Images of e_l and e_l phi under J.
json j_action(const SpectralData& sd) {
  json arr = json::array();
  for (std::size_t l = 0; l < sd.n; ++l) {
    const QVector e = QVector::basis(sd.n, l);
    arr.push_back({{"index", l},
                   {"J_e", io::to_json(sd.apply_j(e))},
                   {"J_e_phi", io::to_json(sd.apply_j(right_mul(e, sd.frame.phi())))}});
  }
  return arr;
}

json base_report(const std::string& text, const Frame& fr, double tol) {
  return {{"input_hash", io::hash_hex(text)}, {"frame", frame_json(fr)}, {"tolerance", tol}};
}

void finish(json& report, const InvariantReport& rep) {
  report["residuals"] = residuals_json(rep);
  report["pass"] = rep.pass();
  json failed = json::array();
  for (const auto& name : rep.failures()) failed.push_back(name);
  report["failures"] = failed;
}

struct Loaded {
  std::string text;
  QMatrix a;
};

Loaded load(const Options& o, std::istream& in) {
  Loaded l;
  l.text = read_input(o.input, in);
  l.a = io::parse_matrix_file(l.text);
  return l;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const QMatrix a = generate({o.n, o.seed, o.simple, o.zero_atom});
  write_output(o.output, io::serialize_matrix_file(a), out);
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  const double tol = resolve_tol(o);
  const Frame fr = resolve_frame(o);
  json report = base_report(l.text, fr, tol);
  report["n"] = l.a.size();
  const double skew = skew_residual(l.a);
  InvariantReport rep;
  rep.add("skew_selfadjoint", skew, tol);
  if (skew <= tol) describe_spectrum(report, spectral_data(l.a, fr, o.cluster_tol, tol));
  finish(report, rep);
  write_output(o.output, io::dump(report) + "\n", out);
  return skew <= tol ? kOk : kNotSkewSelfadjoint;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  const double tol = resolve_tol(o);
  const Frame fr = resolve_frame(o);
  const SpectralData sd = spectral_data(l.a, fr, o.cluster_tol, tol);
  json report = base_report(l.text, fr, tol);
  report["n"] = sd.n;
  describe_spectrum(report, sd);
  report["j_action"] = j_action(sd);
  const InvariantReport rep = spectral_invariants(l.a, sd, tol, o.cluster_tol);
  finish(report, rep);
  write_output(o.output, io::dump(report) + "\n", out);
  return rep.pass() ? kOk : kInvariantFailed;
}

int cmd_model(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  const double tol = resolve_tol(o);
  const Frame fr = resolve_frame(o);
  const SpectralData sd = spectral_data(l.a, fr, o.cluster_tol, tol);
  const GeneratingVector gv = special_generating_vector(sd, tol);
  const DiscreteModel m = build_model(sd, gv, tol);
  const EquivalenceReport eq = verify_equivalence(l.a, sd, m, tol);

  InvariantReport rep = generating_invariants(sd, gv, tol);
  rep.append(model_invariants(eq, tol));

  json report = base_report(l.text, fr, tol);
  report["n"] = sd.n;
  describe_spectrum(report, sd);
  report["weights"] = m.measure.weights;
  report["g"] = io::to_json(gv.g);
  finish(report, rep);
  if (!o.model_output.empty()) write_output(o.model_output, io::dump(io::model_file(m)) + "\n", out);
  write_output(o.output, io::dump(report) + "\n", out);
  return rep.pass() ? kOk : kInvariantFailed;
}

// Full invariant suite for one matrix.
json verify_matrix(const QMatrix& a, const Frame& fr, double tol, double cluster_tol, bool& pass) {
  json report;
  InvariantReport rep;
  const double skew = skew_residual(a);
  rep.add("skew_selfadjoint", skew, tol);
  if (skew <= tol) {
    const SpectralData sd = spectral_data(a, fr, cluster_tol, tol);
    describe_spectrum(report, sd);
    report["j_action"] = j_action(sd);
    rep.append(spectral_invariants(a, sd, tol, cluster_tol));
    if (has_simple_spectrum(sd)) {
      try {
        const GeneratingVector gv = special_generating_vector(sd, tol);
        const DiscreteModel m = build_model(sd, gv, tol);
        rep.append(generating_invariants(sd, gv, tol));
        rep.append(model_invariants(verify_equivalence(a, sd, m, tol), tol));
        report["weights"] = m.measure.weights;
      } catch (const Error& e) {
        rep.add("generating_construction", 1.0, 0.0);
        report["construction_error"] = e.what();
      }
    }
  }
  finish(report, rep);
  pass = rep.pass();
  return report;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const double tol = resolve_tol(o);
  const Frame fr = resolve_frame(o);
  if (o.batch && o.n == 0) throw Error(Errc::ParseError, "--count requires --n");
  if (!o.batch) {
    const Loaded l = load(o, in);
    if (o.n > 0 && o.n != l.a.size()) {
      throw Error(Errc::ParseError, "--n " + std::to_string(o.n) + " does not match input of size " +
                                        std::to_string(l.a.size()));
    }
    json report = base_report(l.text, fr, tol);
    report["n"] = l.a.size();
    bool pass = false;
    report.update(verify_matrix(l.a, fr, tol, o.cluster_tol, pass));
    write_output(o.output, io::dump(report) + "\n", out);
    return pass ? kOk : kInvariantFailed;
  }

  json instances = json::array();
  bool all = true;
  for (std::size_t c = 0; c < o.count; ++c) {
    const std::uint64_t seed = o.seed + c;
    const QMatrix a = generate({o.n, seed, o.simple, o.zero_atom});
    bool pass = false;
    json inst = verify_matrix(a, fr, tol, o.cluster_tol, pass);
    inst["seed"] = seed;
    inst["input_hash"] = io::hash_hex(io::serialize_matrix_file(a));
    instances.push_back(std::move(inst));
    all = all && pass;
  }
  json report = {{"frame", frame_json(fr)}, {"tolerance", tol}, {"n", o.n},
                 {"instances", instances}, {"pass", all}};
  write_output(o.output, io::dump(report) + "\n", out);
  return all ? kOk : kInvariantFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral pair and multiplication-operator model of skew-selfadjoint quaternion matrices",
               "quatspec"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Matrix file (\"-\" for stdin)");
    sub->add_option("--output", o.output, "Output path (default stdout)");
    sub->add_option("--tol", o.tol, "Tolerance (default 1e-9, or QUATSPEC_TOL)");
    sub->add_option("--cluster-tol", o.cluster_tol, "Relative eigenvalue clustering tolerance");
    sub->add_option("--field", o.field, "Nonreal quaternion q0,q1,q2,q3 generating the subfield F");
  };

  auto* gen = app.add_subcommand("gen", "Generate a skew-selfadjoint matrix file");
  gen->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_flag("--simple", o.simple, "Distinct atoms (simple spectrum)");
  gen->add_flag("--zero-atom", o.zero_atom, "Force a nontrivial kernel");
  gen->add_option("--output", o.output, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Check skew-selfadjointness and simple spectrum");
  add_common(check);
  auto* decompose = app.add_subcommand("decompose", "Spectral measure E and operator J");
  add_common(decompose);
  auto* model = app.add_subcommand("model", "Generating vector and L2 model");
  add_common(model);
  model->add_option("--model-output", o.model_output, "Where to write the model JSON");
  auto* verify = app.add_subcommand("verify", "Run every invariant suite");
  add_common(verify);
  verify->add_option("--n", o.n, "Expected input size, or dimension of generated instances with --count");
  verify->add_option("--seed", o.seed, "First seed");
  auto* count = verify->add_option("--count", o.count, "Verify this many generated instances instead of --input");
  verify->add_flag("--simple", o.simple, "Generate simple-spectrum instances");
  verify->add_flag("--zero-atom", o.zero_atom, "Generate instances with a kernel");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*check) return cmd_check(o, in, out);
    if (*decompose) return cmd_decompose(o, in, out);
    if (*model) return cmd_model(o, in, out);
    if (*verify) {
      o.batch = count->count() > 0;
      return cmd_verify(o, in, out);
    }
  } catch (const Error& e) {
    err << "quatspec: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::NotSkewSelfadjoint: return kNotSkewSelfadjoint;
      case Errc::NotSimpleSpectrum: return kNotSimpleSpectrum;
      case Errc::ParseError: return kParseError;
      default: return kInvariantFailed;
    }
  }
  return kParseError;
}

}  // namespace quatspec::cli
