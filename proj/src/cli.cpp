#include "ncalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ncalc/io.hpp"
#include "ncalc/report.hpp"

namespace ncalc {

namespace {

struct JobOutput {
  Json machine = Json::object();
  std::vector<CheckResult> checks;
  std::vector<std::string> info;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void note(std::string line) { info.push_back(std::move(line)); }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::optional<Field> field_override(const JobSpec& job) {
  if (!job.field) return std::nullopt;
  return Field::parse(*job.field);
}

AlgebraPtr load_algebra(const JobSpec& job, const std::string& path) {
  AlgebraPtr a = algebra_from_json(load_json_file(path), field_override(job));
  const AlgebraReport rep = validate_algebra(*a);
  if (!rep.ok)
    throw input_error("'" + path + "' is not a valid algebra: " + rep.violations.front().describe(*a));
  return a;
}

const std::string& require_input(const JobSpec& job) {
  if (job.inputs.empty()) throw input_error("command '" + job.command + "' needs an input file");
  return job.inputs.front();
}

Side parse_side(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  throw input_error("--side must be 'right' or 'left'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void cmd_validate(const JobSpec& job, JobOutput& out) {
  const Json doc = load_json_file(require_input(job));
  const std::string kind =
      doc.contains("kind") ? doc["kind"].get<std::string>()
                           : (doc.contains("builtin") || doc.contains("mul") ? "algebra" : "");
  out.machine["input_kind"] = kind;
  if (kind == "algebra") {
    AlgebraPtr a = algebra_from_json(doc, field_override(job));
    const AlgebraReport rep = validate_algebra(*a);
    std::string detail = "associative with two-sided unit";
    if (!rep.ok) {
      std::ostringstream os;
      for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        if (i) os << "; ";
        os << rep.violations[i].describe(*a);
      }
      detail = os.str();
    }
    out.add({"algebra axioms", rep.ok, detail});
  } else if (kind == "fodc") {
    Fodc f = fodc_from_json(doc, field_override(job));
    const AlgebraReport arep = validate_algebra(*f.omega.algebra());
    if (!arep.ok) throw input_error("fodc: embedded algebra is invalid");
    const FodcReport rep = validate_fodc(f);
    out.add({"bimodule axioms", rep.bimodule.ok,
             rep.bimodule.ok ? "actions commute and are (anti)multiplicative"
                             : rep.bimodule.violations.front().describe(*f.omega.algebra())});
    std::string leib = "holds on all basis pairs";
    if (!rep.leibniz_failures.empty()) {
      const auto& lb = f.omega.algebra()->labels();
      leib = "fails at (" + lb[rep.leibniz_failures.front().first] + "," +
             lb[rep.leibniz_failures.front().second] + ")";
    }
    out.add({"Leibniz rule", rep.leibniz_failures.empty(), leib});
    out.add({"d(1) = 0", rep.unit_killed, ""});
    out.add({"image of d generates", rep.generated,
             "generated dim " + std::to_string(rep.generated_dim) + " of " +
                 std::to_string(f.omega.dim())});
  } else if (kind == "bimodule") {
    if (!doc.contains("algebra")) throw input_error("bimodule document: missing \"algebra\"");
    AlgebraPtr a = algebra_from_json(doc["algebra"], field_override(job));
    Bimodule m = bimodule_from_json(doc, a);
    const BimoduleReport rep = check_bimodule(m);
    out.add({"bimodule axioms", rep.ok,
             rep.ok ? "unitality, multiplicativity and commutation hold"
                    : rep.violations.front().describe(*a)});
  } else if (kind == "cartan") {
    CartanPair cp = cartan_from_json(doc, field_override(job));
    const CartanReport rep = validate_cartan_pair(cp);
    out.add({"action left-linearity", rep.action_linearity_failures.empty(), ""});
    out.add({"twisted Leibniz rule", rep.twisted_leibniz_failures.empty(), ""});
    out.add({"action kills 1", rep.unit_killed, ""});
    out.add({"action injective", rep.injective, ""});
  } else if (kind == "braiding") {
    BraidingDocument bd = braiding_from_json(doc, field_override(job));
    const BraidedModule bm =
        bd.braiding.direction == FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r
            ? left_structure_from_braiding(bd.algebra, bd.braiding)
            : right_structure_from_braiding(bd.algebra, bd.braiding);
    out.add({"braiding fixes 1 (x) v", bm.report.unit_ok, ""});
    out.add({"induced action multiplicative", bm.report.multiplicative_ok, ""});
  } else {
    throw input_error("cannot determine document kind (expected algebra/fodc/bimodule/cartan/braiding)");
  }
}

void cmd_universal(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  const std::size_t n = a->dim();
  const UniversalCalculus univ = universal_kernel_calculus(a);
  out.machine["dim_ker_mu"] = univ.fodc.omega.dim();
  out.note("dim ker mu = " + std::to_string(univ.fodc.omega.dim()));
  out.add({"dim ker mu = n^2 - n", univ.fodc.omega.dim() == n * n - n,
           std::to_string(univ.fodc.omega.dim())});
  const FodcReport rep = validate_fodc(univ.fodc);
  out.add({"Leibniz rule", rep.leibniz_failures.empty(), ""});
  out.add({"generation", rep.generated, ""});
  out.add({"d(1) = 0", rep.unit_killed, ""});
  const BarredPresentations bp = barred_presentations(a);
  const bool inverses =
      (bp.left_action_braiding.map * bp.right_action_braiding.map).matrix().is_identity() &&
      (bp.right_action_braiding.map * bp.left_action_braiding.map).matrix().is_identity();
  out.add({"canonical braidings mutually inverse", inverses, ""});
  out.add({"T . gamma = I",
           bp.left_free_to_square * bp.right_action_braiding.map == bp.right_free_to_square, ""});
  // outer differential: 1 (x) 1 is never in ker mu
  Vec one_one = zero_vec(n * n, a->field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) one_one[i * n + j] = a->unit()[i] * a->unit()[j];
  out.add({"1 (x) 1 not in ker mu", !univ.kernel_subspace.contains(one_one), ""});
}

void cmd_fodc(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  std::vector<Vec> gens;
  if (job.ideal_path)
    gens = generators_from_json(load_json_file(*job.ideal_path), *a);
  const UniversalCalculus univ = universal_kernel_calculus(a);
  const QuotientFodc q = quotient_fodc(univ, gens);
  out.machine["dim_omega"] = q.fodc.omega.dim();
  out.machine["dim_relations"] = q.relations.dim();
  out.note("dim relations = " + std::to_string(q.relations.dim()) +
           ", dim omega = " + std::to_string(q.fodc.omega.dim()));
  const FodcReport rep = validate_fodc(q.fodc);
  out.add({"quotient is a calculus", rep.ok(), ""});
  const BimoduleMap pi = universal_projection(univ, q.fodc);
  out.add({"universal projection matches", pi.map == q.projection.map, ""});
}

void cmd_dual(const JobSpec& job, JobOutput& out) {
  const Side side = parse_side(job.side);
  const Json doc = load_json_file(require_input(job));
  Bimodule m = [&]() {
    if (doc.contains("kind") && doc["kind"].get<std::string>() == "bimodule") {
      AlgebraPtr a = algebra_from_json(doc.at("algebra"), field_override(job));
      return bimodule_from_json(doc, a);
    }
    AlgebraPtr a = algebra_from_json(doc, field_override(job));
    const AlgebraReport rep = validate_algebra(*a);
    if (!rep.ok) throw input_error("input algebra is invalid");
    return universal_kernel_calculus(a).fodc.omega;  // default: dualize ker mu
  }();
  const DualModule d = side == Side::right ? right_dual(m) : left_dual(m);
  out.machine["dim_dual"] = d.dim();
  out.note("dim dual = " + std::to_string(d.dim()));
  out.add({"dual bimodule axioms", check_bimodule(d.module).ok, ""});
  out.add({"pairing adjunctions", check_pairing_adjunctions(d), ""});
  const DoubleDual dd = double_dual(m, side);
  out.machine["torsionless"] = dd.torsionless;
  out.machine["reflexive"] = dd.reflexive;
  out.note("torsionless: " + yes_no(dd.torsionless) + ", reflexive: " + yes_no(dd.reflexive));
}

void cmd_cartan(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  const Side side = parse_side(job.side);
  Fodc f = [&]() {
    if (job.fodc_choice == "universal") return universal_kernel_calculus(a).fodc;
    return fodc_from_json(load_json_file(job.fodc_choice), field_override(job));
  }();
  const CartanFromFodc cf = cartan_from_fodc(f, side);
  out.machine["dim_pair"] = cf.pair.x.dim();
  out.note("dim of the vector-field bimodule = " + std::to_string(cf.pair.x.dim()));
  const CartanReport rep = validate_cartan_pair(cf.pair);
  out.add({"action linearity", rep.action_linearity_failures.empty(), ""});
  out.add({"twisted Leibniz rule", rep.twisted_leibniz_failures.empty(), ""});
  out.add({"action kills 1", rep.unit_killed, ""});
  out.add({"action injective", rep.injective, ""});
  if (rep.derivations_ok)
    out.add({"actions are derivations", *rep.derivations_ok, "commutative symmetric case"});
}

void cmd_reconstruct(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  CartanPair cp = [&]() {
    if (job.cartan_path) return cartan_from_json(load_json_file(*job.cartan_path),
                                                 field_override(job));
    return universal_cartan(a).pair;  // default: the universal right pair
  }();
  const ReconstructedFodc rec = reconstruct_fodc(cp);
  out.machine["dim_candidate"] = rec.candidate.omega.dim();
  out.machine["generation"] = rec.report.generated;
  out.machine["dual_action_arrow_surjective"] = rec.dual_action_arrow_surjective;
  out.note("candidate dim = " + std::to_string(rec.candidate.omega.dim()) +
           ", generated dim = " + std::to_string(rec.generated.module.dim()));
  out.add({"Leibniz rule", rec.report.leibniz_failures.empty(), ""});
  out.note("generation: " + yes_no(rec.report.generated) +
           "; dualized action arrow surjective: " + yes_no(rec.dual_action_arrow_surjective));
  out.add({"generated part is a calculus", validate_fodc(rec.generated_fodc).ok(), ""});
}

void cmd_end_structures(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  const EndStructures es = end_structures(a);
  out.add({"four multiplications commute", es.four_multiplications_commute, ""});
  out.add({"r -> L_r bimodule monomorphism", es.left_embed_ok, ""});
  out.add({"r -> R_r bimodule monomorphism", es.right_embed_ok, ""});
  out.add({"images intersect in the center", es.intersection_is_center,
           "dim " + std::to_string(es.images_intersection.dim())});
  out.add({"End(R) is the dual of R (x) R", es.bifree_dual_iso_ok, ""});
  out.machine["dim_end0"] = es.end0.dim();
}

void cmd_kaehler(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  if (!is_commutative(*a)) throw input_error("kaehler: the algebra is not commutative");
  const KaehlerCalculus kc = kaehler_calculus(a);
  out.machine["dim_kaehler"] = kc.fodc.omega.dim();
  out.note("dim Kaehler calculus = " + std::to_string(kc.fodc.omega.dim()));
  out.add({"quotient is a calculus", validate_fodc(kc.fodc).ok(), ""});
  out.add({"left and right actions coincide", kc.actions_coincide, ""});
  const Subspace ders = derivations(*a);
  const CartanFromFodc cf = cartan_from_fodc(kc.fodc, Side::right);
  out.add({"vector fields match derivations", image(cf.pair.action) == ders,
           "dim " + std::to_string(ders.dim())});
}

void cmd_splitting(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  const UniversalSplitting us = universal_splitting(a);
  out.add({"decompositions sum to the identity",
           us.left_decomposition_identity && us.right_decomposition_identity, ""});
  out.add({"projections land exactly on End_0",
           us.image_project_left_is_end0 && us.image_project_right_is_end0, ""});
  out.add({"dualized sequences exact", us.left_exact && us.right_exact, ""});
  Json table = Json::array();
  for (const auto& e : us.table) {
    table.push_back(Json{{"map", e.map_name},
                         {"structures", e.structures},
                         {"left", e.left_ok},
                         {"right", e.right_ok}});
    out.note(e.map_name + " [" + e.structures + "]: left " + yes_no(e.left_ok) + ", right " +
             yes_no(e.right_ok));
  }
  out.machine["intertwining_table"] = std::move(table);
  const BimoduleMap mu = mu_bimodule_map(a);
  out.note("mu sections: left " + yes_no(find_splitting(mu, MapKind::left).has_value()) +
           ", right " + yes_no(find_splitting(mu, MapKind::right).has_value()) + ", bimodule " +
           yes_no(find_splitting(mu, MapKind::bi).has_value()));
}

void cmd_report(const JobSpec& job, JobOutput& out) {
  AlgebraPtr a = load_algebra(job, require_input(job));
  const ReportSuite suite = run_report_suite(a, job.seed);
  for (const auto& c : suite.checks) out.add(c);
}

}  // namespace

int run(const JobSpec& job, std::ostream& out_stream, std::ostream& err) {
  JobOutput out;
  int code = exit_ok;
  try {
    if (job.command == "validate") cmd_validate(job, out);
    else if (job.command == "universal") cmd_universal(job, out);
    else if (job.command == "fodc") cmd_fodc(job, out);
    else if (job.command == "dual") cmd_dual(job, out);
    else if (job.command == "cartan") cmd_cartan(job, out);
    else if (job.command == "reconstruct") cmd_reconstruct(job, out);
    else if (job.command == "end-structures") cmd_end_structures(job, out);
    else if (job.command == "kaehler") cmd_kaehler(job, out);
    else if (job.command == "splitting") cmd_splitting(job, out);
    else if (job.command == "report") cmd_report(job, out);
    else throw input_error("unknown command '" + job.command + "'");
    if (!out.all_pass()) code = exit_math_failure;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const math_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_math_failure;
  }

  Json machine = std::move(out.machine);
  machine["command"] = job.command;
  machine["seed"] = job.seed;
  Json checks = Json::array();
  for (const auto& c : out.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  machine["checks"] = std::move(checks);
  machine["notes"] = out.info;
  machine["exit_code"] = code;

  std::ostringstream human;
  for (const auto& line : out.info) human << line << "\n";
  for (const auto& c : out.checks) {
    human << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.details.empty()) human << " (" << c.details << ")";
    human << "\n";
  }
  human << (code == exit_ok ? "ok\n" : "FAILED\n");

  const std::string text = job.format == "json" ? machine.dump(2) + "\n" : human.str();
  if (job.out_path) {
    std::ofstream f(*job.out_path);
    if (!f) {
      err << "cannot write to '" << *job.out_path << "'\n";
      return exit_input_error;
    }
    f << text;
  } else {
    out_stream << text;
  }
  return code;
}

}  // namespace ncalc
