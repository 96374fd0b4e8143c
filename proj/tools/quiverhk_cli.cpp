// Command-line front end: deterministic, scriptable JSON reports over the
// library. Exit codes: 0 success / claims verified, 1 a verification failed,
// 2 input or usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quiverhk/catalog.hpp"
#include "quiverhk/kempf_flow.hpp"
#include "quiverhk/linalg.hpp"
#include "quiverhk/monad_p2.hpp"
#include "quiverhk/orbits.hpp"
#include "quiverhk/serialize.hpp"
#include "quiverhk/stability.hpp"
#include "quiverhk/tangent.hpp"

namespace {

using qhk::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string spec_path;
  std::string out;
  std::string action = "classify";
  std::string name;
  std::string point;
  double tol = 1e-8;
  double level = 0.0;
  int samples = 0;
  int k = 1;
  int n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  int max_iters = 10000;
  bool pretty = false;
};

void emit(const json& j, const Options& opt) {
  const std::string text = opt.pretty ? j.dump(2) : j.dump();
  if (!opt.out.empty()) {
    std::ofstream os(opt.out);
    if (!os) throw qhk::PreconditionError("cannot open output file: " + opt.out);
    os << text << "\n";
  } else {
    std::cout << text << "\n";
  }
}

json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw qhk::PreconditionError("cannot open input file: " + path);
  json j;
  is >> j;
  return j;
}

qhk::Bundle load_bundle(const std::string& path) {
  if (path.empty()) throw qhk::PreconditionError("--input is required");
  return qhk::bundle_from_json(load_json(path));
}

json closure_dims_json(const qhk::Quiver& q, const qhk::SubspaceCollection& c) {
  json out = json::object();
  for (int i = 0; i < q.num_vertices(); ++i)
    out[q.vertices[i]] = static_cast<int>(c.basis[i].cols());
  return out;
}

int cmd_check(const Options& opt) {
  const qhk::Bundle b = load_bundle(opt.input);
  const auto violations = qhk::validate_representation(b.shape->q, b.shape->d, b.x);
  json report;
  json viol = json::array();
  for (const auto& v : violations) viol.push_back({{"where", v.where}, {"message", v.message}});
  report["violations"] = viol;
  if (!violations.empty()) {
    emit(report, opt);
    return kExitUsage;
  }

  const qhk::MomentValues m = qhk::moment_maps(b.x);
  report["moments"] = qhk::moment_values_to_json(b.shape->q, m);
  report["muC_norm"] = qhk::muC_norm(m);
  const bool jordan = b.shape->q.num_vertices() == 1 && b.shape->q.num_arrows() == 1 &&
                      b.shape->q.is_loop(0);
  if (jordan) report["adhm_residual"] = qhk::adhm_residual(b.x).norm();
  report["stable"] = qhk::is_stable(b.x);
  report["costable"] = qhk::is_costable(b.x);
  report["regular"] = qhk::is_regular(b.x);

  bool ok = true;
  if (b.spec) {
    const auto inv_report = qhk::is_involution(*b.spec, b.shape, 8, opt.seed);
    report["involution"] = {{"word", b.spec->word_string()},
                            {"involutive", inv_report.involutive},
                            {"max_residual", inv_report.max_residual}};
    report["exact_fixed"] = qhk::is_exact_fixed_point(*b.spec, b.x);
    if (report["stable"].get<bool>()) {
      const auto witness = qhk::is_moduli_fixed(*b.spec, b.x);
      report["moduli_fixed"] = witness.has_value();
    }
    if (inv_report.involutive)
      report["brane_type"] = qhk::brane_type(*b.spec, b.shape, opt.seed);
    ok = ok && inv_report.involutive;
  }
  if (b.expected) {
    json mism = json::array();
    auto expect = [&](const char* what, bool want, bool got) {
      if (want != got) mism.push_back({{"what", what}, {"expected", want}, {"found", got}});
    };
    if (jordan)
      expect("adhm_zero", b.expected->adhm_zero,
             report["adhm_residual"].get<double>() <= 1e-10 * std::max(1.0, b.x.norm()));
    expect("regular", b.expected->regular, report["regular"].get<bool>());
    if (b.spec) {
      expect("fixed", b.expected->fixed, report["exact_fixed"].get<bool>());
      if (!report.contains("brane_type") ||
          b.expected->brane_type != report["brane_type"].get<std::string>())
        mism.push_back({{"what", "brane_type"},
                        {"expected", b.expected->brane_type},
                        {"found", report.value("brane_type", "n/a")}});
    }
    report["expected_mismatches"] = mism;
    ok = ok && mism.empty();
  }
  report["verified"] = ok;
  emit(report, opt);
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_involution(const Options& opt) {
  if (opt.spec_path.empty()) throw qhk::PreconditionError("--spec is required");
  const json doc = load_json(opt.spec_path);
  qhk::Quiver q = qhk::quiver_from_json(doc.at("quiver"));
  qhk::DimensionData d = qhk::dims_from_json(q, doc.at("dims"));
  const qhk::RepShapePtr shape = qhk::make_shape(std::move(q), std::move(d));
  const qhk::InvolutionSpec spec =
      qhk::spec_from_json(shape, doc.contains("spec") ? doc.at("spec") : doc);

  if (opt.action == "classify") {
    const qhk::Signature sig = qhk::signature(spec, shape, opt.seed);
    emit({{"word", spec.word_string()},
          {"signature", {sig.delta1, sig.delta2, sig.delta3}},
          {"brane_type", qhk::brane_type(sig)}},
         opt);
    return kExitOk;
  }
  if (opt.action == "verify") {
    const int trials = opt.samples > 0 ? opt.samples : 8;
    const auto rep = qhk::is_involution(spec, shape, trials, opt.seed);
    emit({{"word", spec.word_string()},
          {"involutive", rep.involutive},
          {"max_residual", rep.max_residual},
          {"parity", rep.parity},
          {"g_condition", rep.g_condition},
          {"h_condition", rep.h_condition},
          {"phase_pattern_ok", rep.phase_pattern_ok}},
         opt);
    return rep.involutive ? kExitOk : kExitVerifyFailed;
  }
  if (opt.action == "apply" || opt.action == "descent") {
    qhk::Bundle b = load_bundle(opt.input);
    if (!b.shape->same_as(*shape))
      throw qhk::PreconditionError("--input and --spec use different shapes");
    if (opt.action == "apply") {
      qhk::Bundle out;
      out.shape = b.shape;
      out.x = qhk::apply(spec, b.x);
      emit(qhk::bundle_to_json(out), opt);
      return kExitOk;
    }
    const qhk::DescentReport rep = qhk::descent_report(spec, b.x);
    emit({{"word", spec.word_string()},
          {"muC_law", rep.muC_law},
          {"muC_residual", rep.muC_residual},
          {"mu3_law", rep.mu3_law},
          {"mu3_residual", rep.mu3_residual},
          {"mu3_scalar_levels_preserved", rep.mu3_scalar_levels_preserved},
          {"descends_to", rep.descends_to}},
         opt);
    return kExitOk;
  }
  throw qhk::PreconditionError("unknown --action: " + opt.action);
}

int cmd_stability(const Options& opt) {
  const qhk::Bundle b = load_bundle(opt.input);
  const qhk::SubspaceCollection c = qhk::stable_closure(b.x);
  emit({{"stable", qhk::is_stable(b.x)},
        {"costable", qhk::is_costable(b.x)},
        {"regular", qhk::is_regular(b.x)},
        {"closure_dims", closure_dims_json(b.shape->q, c)}},
       opt);
  return kExitOk;
}

int cmd_tangent(const Options& opt) {
  const qhk::Bundle b = load_bundle(opt.input);
  if (!b.spec) throw qhk::PreconditionError("tangent needs a bundle with a spec");
  const qhk::LevelSpec level{opt.level};

  qhk::Representation x = b.x;
  bool flowed = false;
  double flow_residual = qhk::mu3_level_residual(qhk::moment_maps(x), level);
  if (flow_residual > 1e-6) {
    const qhk::FlowResult fr = qhk::flow_to_level(x, level, 1e-10, opt.max_iters);
    if (!fr.converged) {
      emit({{"error", "flow did not converge"}, {"residual", fr.residual}}, opt);
      return kExitVerifyFailed;
    }
    x = qhk::act(fr.g, x);
    flowed = true;
    flow_residual = fr.residual;
  }
  if (!qhk::is_exact_fixed_point(*b.spec, x)) {
    const auto moved = qhk::move_to_exact_fixed(*b.spec, x);
    if (!moved) {
      emit({{"error", "point is not a fixed point of the involution"}}, opt);
      return kExitVerifyFailed;
    }
    x = *moved;
  }
  const qhk::TangentFrame frame = qhk::quotient_tangent(x, level);
  const qhk::FixedSubspace fixed = qhk::fixed_subspace_dim(*b.spec, x, frame);
  emit({{"ambient_real_dim", frame.ambient_dim},
        {"quotient_real_dim", frame.quotient_dim},
        {"fixed_real_dim", fixed.real_dim},
        {"brane_type", fixed.type_tag},
        {"flowed", flowed},
        {"flow_residual", flow_residual}},
       opt);
  return kExitOk;
}

int cmd_flow(const Options& opt) {
  const qhk::Bundle b = load_bundle(opt.input);
  const qhk::FlowResult fr =
      qhk::flow_to_level(b.x, qhk::LevelSpec{opt.level}, opt.tol, opt.max_iters);
  emit({{"residual", fr.residual},
        {"iterations", fr.iterations},
        {"converged", fr.converged},
        {"max_muC_drift", fr.max_muC_drift},
        {"stable_side_sign", fr.stable_side_sign},
        {"g", qhk::gauge_to_json(b.shape->q, fr.g)}},
       opt);
  return fr.converged ? kExitOk : kExitVerifyFailed;
}

qhk::P2Point parse_point(const std::string& text) {
  qhk::cplx coords[3];
  std::stringstream ss(text);
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ':')) throw qhk::PreconditionError("--point needs 3 coordinates");
    std::stringstream ps(part);
    double re, im;
    char comma;
    if (!(ps >> re >> comma >> im) || comma != ',')
      throw qhk::PreconditionError("--point coordinates are re,im pairs");
    coords[i] = {re, im};
  }
  return {coords[0], coords[1], coords[2]};
}

int cmd_monad(const Options& opt) {
  const qhk::Bundle b = load_bundle(opt.input);
  json report;
  auto point_json = [](const qhk::P2Point& p) {
    return json::array({json::array({p.x0.real(), p.x0.imag()}),
                        json::array({p.x1.real(), p.x1.imag()}),
                        json::array({p.x2.real(), p.x2.imag()})});
  };
  auto at = [&](const qhk::P2Point& p) {
    const qhk::MonadEvaluation ev = qhk::monad_at(b.x, p);
    return json{{"point", point_json(p)},
                {"fiber_dim", qhk::fiber_dim(b.x, p)},
                {"alpha_rank", qhk::rank_of(ev.alpha)},
                {"beta_rank", qhk::rank_of(ev.beta)}};
  };
  if (!opt.point.empty()) {
    report = at(parse_point(opt.point));
  } else {
    const int count = opt.samples > 0 ? opt.samples : 20;
    const auto pts = qhk::sample_points(count, opt.seed);
    json results = json::array();
    for (const auto& p : pts) results.push_back(at(p));
    report["adhm_residual"] = qhk::adhm_residual(b.x).norm();
    report["results"] = std::move(results);
    report["beta_surjective"] = qhk::beta_surjective_on_sample(b.x, pts);
  }
  emit(report, opt);
  return kExitOk;
}

int cmd_catalog(const Options& opt) {
  qhk::CatalogEntry entry;
  if (opt.name == "c-example") {
    entry = qhk::build_c_example(opt.k);
  } else if (opt.name == "bd-example") {
    entry = qhk::build_bd_example(opt.k);
  } else if (opt.name == "symplectic") {
    entry = qhk::build_symplectic(opt.n > 0 ? opt.n : 1, opt.r > 0 ? opt.r : 2, opt.seed);
  } else if (opt.name == "orthogonal") {
    auto found = qhk::build_orthogonal(opt.n > 0 ? opt.n : 4, opt.r > 0 ? opt.r : 4, opt.seed);
    if (!found) {
      emit({{"found", false}}, opt);
      return kExitVerifyFailed;
    }
    entry = std::move(*found);
  } else {
    throw qhk::PreconditionError(
        "--name must be one of c-example, bd-example, symplectic, orthogonal");
  }
  emit(qhk::entry_to_json(entry), opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperkaehler quiver variety toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--pretty", opt.pretty, "human-formatted JSON");
    cmd->add_option("--seed", opt.seed, "random seed (default 0)");
    cmd->add_option("--out", opt.out, "write the report to a file");
  };

  CLI::App* check = app.add_subcommand("check", "validate a bundle and verify its claims");
  check->add_option("--input", opt.input)->required();
  add_common(check);

  CLI::App* invol = app.add_subcommand("involution", "classify or verify an involution spec");
  invol->add_option("--spec", opt.spec_path)->required();
  invol->add_option("--action", opt.action, "classify | verify | apply | descent");
  invol->add_option("--input", opt.input, "bundle for apply/descent");
  invol->add_option("--samples", opt.samples, "trials for verify");
  add_common(invol);

  CLI::App* stab = app.add_subcommand("stability", "stability / costability / regularity");
  stab->add_option("--input", opt.input)->required();
  add_common(stab);

  CLI::App* tang = app.add_subcommand("tangent", "quotient tangent and fixed-subspace dims");
  tang->add_option("--input", opt.input)->required();
  tang->add_option("--level", opt.level, "mu3 level c (default 0)");
  tang->add_option("--max-iters", opt.max_iters);
  add_common(tang);

  CLI::App* flow = app.add_subcommand("flow", "flow to a mu3 level along the GL(V)-orbit");
  flow->add_option("--input", opt.input)->required();
  flow->add_option("--level", opt.level, "mu3 level c (default 0)");
  flow->add_option("--tol", opt.tol);
  flow->add_option("--max-iters", opt.max_iters);
  add_common(flow);

  CLI::App* monad = app.add_subcommand("monad", "fiberwise monad data on the plane");
  monad->add_option("--input", opt.input)->required();
  monad->add_option("--point", opt.point, "re,im:re,im:re,im");
  monad->add_option("--samples", opt.samples);
  add_common(monad);

  CLI::App* cat = app.add_subcommand("catalog", "materialize a named example");
  cat->add_option("--name", opt.name)->required();
  cat->add_option("--k", opt.k, "inflation factor");
  cat->add_option("--n", opt.n);
  cat->add_option("--r", opt.r);
  add_common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (invol->parsed()) return cmd_involution(opt);
    if (stab->parsed()) return cmd_stability(opt);
    if (tang->parsed()) return cmd_tangent(opt);
    if (flow->parsed()) return cmd_flow(opt);
    if (monad->parsed()) return cmd_monad(opt);
    if (cat->parsed()) return cmd_catalog(opt);
  } catch (const qhk::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qhk::ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
