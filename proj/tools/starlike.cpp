#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "starlike/bracket.hpp"
#include "starlike/generate.hpp"
#include "starlike/homology.hpp"
#include "starlike/json_io.hpp"
#include "starlike/khovanov.hpp"
#include "starlike/local_rules.hpp"
#include "starlike/moves.hpp"

using namespace starlike;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  int cap = 12;
  std::uint64_t seed = 1;
  std::string diff = "d";
  int jobs = 1;
  std::string format = "json";
  int random_crossings = -1;
  bool kauffman = false;
  bool literal = false;
  std::string move;
  int steps = 15;
  int permutations = 10;
};

int default_cap() {
  if (const char* env = std::getenv("STARLIKE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "STARLIKE_CAP must be an integer");
    }
  }
  return 12;
}

std::string read_text(const std::string& source) {
  if (source == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return source;  // inline text
}

LinkDiagram load(const Options& o) {
  LinkDiagram d;
  if (!o.input.empty()) d = parse_diagram(read_text(o.input));
  else if (o.random_crossings >= 0) d = random_diagram(o.random_crossings, o.seed);
  else throw Error(ErrorCode::MalformedInput, "no diagram: pass --input or --random");
  check_cap(d.crossing_count(), o.cap);
  return d;
}

Differential parse_diff(const std::string& s) {
  if (s == "d") return Differential::d;
  if (s == "d'" || s == "dprime") return Differential::dprime;
  throw Error(ErrorCode::MalformedInput, "--diff must be d or d'");
}

ComputeOptions compute(const Options& o) { return {o.cap, o.jobs}; }

void emit(const Options& o, const Json& j, const std::function<void(std::ostream&)>& table = {}) {
  if (o.format == "table" && table) table(std::cout);
  else std::cout << j.dump() << "\n";
}

void print_table(std::ostream& os, const HomologyTable& t) {
  os << "   i    j    k  group\n";
  for (const auto& [deg, g] : t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%4d %4d %4d  ", deg.i, deg.j, deg.k);
    os << buf << to_string(g) << "\n";
  }
}

void print_table(std::ostream& os, const BigradedTable& t) {
  os << "   i    q  group\n";
  for (const auto& [deg, g] : t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%4d %4d  ", deg.i, deg.q);
    os << buf << to_string(g) << "\n";
  }
}

int report_check(const Options& o, Json j, bool ok) {
  j["ok"] = ok;
  emit(o, j, [&](std::ostream& os) {
    os << j["check"].get<std::string>() << ": " << (ok ? "ok" : "FAILED") << "\n";
    if (j.contains("failure")) os << "  " << j["failure"].get<std::string>() << "\n";
  });
  return ok ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  LinkDiagram d = load(o);
  Json j = {{"valid", true},
            {"crossings", d.crossing_count()},
            {"edges", d.edge_count()},
            {"free_loops", d.free_loops()},
            {"writhe", writhe(d)},
            {"components", static_cast<int>(link_components(d).size()) + d.free_loops()},
            {"faces", static_cast<int>(faces(d).size())},
            {"canonical_form", canonical_form(d)},
            {"hash", diagram_hash(d)}};
  emit(o, j, [&](std::ostream& os) {
    os << "valid: " << d.crossing_count() << " crossings, " << d.edge_count() << " edges, writhe " << writhe(d)
       << ", hash " << diagram_hash(d) << "\n";
  });
  return 0;
}

int cmd_bracket(const Options& o, bool normalized) {
  LinkDiagram d = load(o);
  GammaElement g = normalized ? v_st(d, o.cap, o.jobs) : bracket_st(d, o.cap, o.jobs);
  emit(o, to_json(g), [&](std::ostream& os) { os << g.to_string() << "\n"; });
  return 0;
}

int cmd_chi(const Options& o) {
  LinkDiagram d = load(o);
  BiLaurent chi = chi_poly(v_st(d, o.cap, o.jobs));
  if (o.kauffman) {
    Laurent k = collapse_to_kauffman(chi);
    emit(o, to_json(k), [&](std::ostream& os) { os << k.to_string() << "\n"; });
  } else {
    emit(o, to_json(chi), [&](std::ostream& os) { os << chi.to_string('X') << "\n"; });
  }
  return 0;
}

int cmd_homology(const Options& o) {
  LinkDiagram d = load(o);
  HomologyTable t = homology_table(d, parse_diff(o.diff), compute(o));
  emit(o, to_json(t), [&](std::ostream& os) { print_table(os, t); });
  return 0;
}

int cmd_cohomology(const Options& o) {
  LinkDiagram d = load(o);
  HomologyTable t = cohomology_table(d, compute(o));
  emit(o, to_json(t), [&](std::ostream& os) { print_table(os, t); });
  return 0;
}

int cmd_khovanov(const Options& o) {
  LinkDiagram d = load(o);
  BigradedTable t = kh_table(d, parse_diff(o.diff), compute(o));
  emit(o, to_json(t), [&](std::ostream& os) { print_table(os, t); });
  return 0;
}

int cmd_collapse(const Options& o) {
  LinkDiagram d = load(o);
  BigradedTable t = collapse_grading(homology_table(d, parse_diff(o.diff), compute(o)));
  emit(o, to_json(t), [&](std::ostream& os) { print_table(os, t); });
  return 0;
}

int cmd_duality(const Options& o) {
  LinkDiagram d = load(o);
  // The torsion of H(D) for d sits one degree lower in the mirror than the +1 shift stated
  // for d'; --literal checks the +1 shift for both.
  DualityReport rep = verify_duality(d, compute(o), o.literal ? 1 : -1);
  emit(o, to_json(rep), [&](std::ostream& os) {
    for (const auto& c : rep.checks)
      os << (c.passed ? "ok      " : "FAILED  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  });
  return rep.ok() ? 0 : kExitViolation;
}

int cmd_moves_apply(const Options& o) {
  LinkDiagram d = load(o);
  if (o.move.empty()) throw Error(ErrorCode::MalformedInput, "--move is required");
  Json mj;
  try {
    mj = Json::parse(read_text(o.move));
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::MalformedInput, std::string("--move: ") + ex.what());
  }
  LinkDiagram out = apply_move(d, move_from_json(mj));
  check_cap(out.crossing_count(), o.cap);
  Json j = {{"move", to_json(move_from_json(mj))}, {"diagram_hash", diagram_hash(out)}, {"diagram", to_json(out)}};
  emit(o, j, [&](std::ostream& os) { os << canonical_form(out) << "\nhash " << diagram_hash(out) << "\n"; });
  return 0;
}

int cmd_moves_random(const Options& o) {
  LinkDiagram d = load(o);
  auto traj = random_sequence(d, o.steps, o.seed, o.cap);
  emit(o, to_json(traj), [&](std::ostream& os) {
    for (const auto& st : traj) os << to_string(st.move.kind) << "  " << diagram_hash(st.diagram) << "\n";
  });
  return 0;
}

int cmd_check_invariance(const Options& o) {
  LinkDiagram d = load(o);
  auto traj = random_sequence(d, o.steps, o.seed, o.cap);
  const GammaElement v0 = v_st(d, o.cap, o.jobs);
  const HomologyTable h0 = homology_table(d, Differential::d, compute(o));
  const HomologyTable h0p = homology_table(d, Differential::dprime, compute(o));
  Json j = {{"check", "invariance"}, {"steps", o.steps}, {"seed", o.seed}};
  for (std::size_t s = 0; s < traj.size(); ++s) {
    const LinkDiagram& x = traj[s].diagram;
    std::string what;
    if (!(v_st(x, o.cap, o.jobs) == v0)) what = "V_st";
    else if (!(homology_table(x, Differential::d, compute(o)) == h0)) what = "H";
    else if (!(homology_table(x, Differential::dprime, compute(o)) == h0p)) what = "H'";
    if (!what.empty()) {
      j["failure"] = what + " changed at step " + std::to_string(s + 1) + " (" + to_string(traj[s].move.kind) + ")";
      j["trajectory"] = to_json(traj);
      return report_check(o, j, false);
    }
  }
  j["trajectory"] = to_json(traj);
  return report_check(o, j, true);
}

int cmd_check_euler(const Options& o) {
  LinkDiagram d = load(o);
  EnhancedComplex c(d, o.cap);
  const BiLaurent expected = bracket_euler_characteristic(d, o.cap, o.jobs);
  Json j = {{"check", "euler"}, {"expected", to_json(expected)}};
  bool ok = chain_euler_characteristic(c) == expected;
  if (!ok) j["failure"] = "chain-level Euler characteristic differs";
  for (Differential w : {Differential::d, Differential::dprime}) {
    BiLaurent got = euler_characteristic_ah(homology_table(c, w, o.jobs));
    if (!(got == expected) && ok) {
      ok = false;
      j["failure"] = std::string("Euler characteristic of H for ") + to_string(w) + " differs";
    }
  }
  return report_check(o, j, ok);
}

int cmd_check_ordering(const Options& o) {
  LinkDiagram d = load(o);
  const HomologyTable h = homology_table(d, Differential::d, compute(o));
  const HomologyTable hp = homology_table(d, Differential::dprime, compute(o));
  Json j = {{"check", "ordering"}, {"permutations", o.permutations}, {"seed", o.seed}};
  for (int p = 0; p < o.permutations; ++p) {
    LinkDiagram x = d.with_label_order(random_label_order(d.crossing_count(), o.seed + p));
    if (!(homology_table(x, Differential::d, compute(o)) == h) ||
        !(homology_table(x, Differential::dprime, compute(o)) == hp)) {
      j["failure"] = "tables change under permutation " + std::to_string(p);
      return report_check(o, j, false);
    }
  }
  return report_check(o, j, true);
}

int cmd_check_skein(const Options& o) {
  LinkDiagram d = load(o);
  const Laurent printed = Laurent::monomial(2) - Laurent::monomial(-2);
  bool recursion = true, printed_ok = true, corrected_ok = true;
  for (int v = 0; v < d.crossing_count(); ++v) {
    recursion = recursion && skein_recursion_defect(PartialDiagram(d), v, o.cap).is_zero();
    SkeinTriple t = skein_triple(d, v, o.cap);
    printed_ok = printed_ok && skein_identity_defect(t, printed).is_zero();
    corrected_ok = corrected_ok && skein_identity_defect(t, -printed).is_zero();
  }
  Json j = {{"check", "skein"},
            {"recursion", recursion},
            {"identity_factor_A2_minus_Am2", printed_ok},
            {"identity_factor_Am2_minus_A2", corrected_ok}};
  bool ok = recursion && (o.literal ? printed_ok : corrected_ok);
  if (!recursion) j["failure"] = "bracket recursion fails";
  else if (!ok) j["failure"] = "A^4 V(+) - A^-4 V(-) = (A^2 - A^-2) V(0) fails";
  return report_check(o, j, ok);
}

int cmd_check_fig8(const Options& o) {
  LinkDiagram d = load(o);
  LocalRuleReport rep = check_local_rules(EnhancedComplex(d, o.cap));
  Json hits = Json::object();
  for (const auto& r : local_rules()) hits[r.name] = rep.hits.count(r.name) ? rep.hits.at(r.name) : 0;
  Json j = {{"check", "fig8"}, {"transitions", rep.transitions}, {"rows", hits}};
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return report_check(o, j, rep.failure.empty());
}

int cmd_check_merge_law(const Options& o) {
  LinkDiagram d = load(o);
  std::string why = check_merge_law(d, o.cap);
  Json j = {{"check", "merge-law"}};
  if (!why.empty()) j["failure"] = why;
  return report_check(o, j, why.empty());
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Star-like Khovanov homology of oriented link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  int status = 0;
  try {
    o.cap = default_cap();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  app.add_option("--input,-i", o.input, "diagram file, '-' for stdin, or inline JSON / PD text");
  app.add_option("--cap", o.cap, "crossing cap (default 12, or STARLIKE_CAP)");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--diff", o.diff, "differential: d or d'");
  app.add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--random", o.random_crossings, "use a seeded random diagram with this many crossings");

  std::function<int()> run;
  auto sub = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> f) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&run, f] { run = f; });
    return s;
  };
  sub(&app, "validate", "parse and validate a diagram", [&] { return cmd_validate(o); });
  sub(&app, "bracket", "star-like bracket", [&] { return cmd_bracket(o, false); });
  sub(&app, "vst", "normalized star-like polynomial", [&] { return cmd_bracket(o, true); });
  sub(&app, "chi", "configurations replaced by X^(circles)", [&] { return cmd_chi(o); })
      ->add_flag("--kauffman", o.kauffman, "substitute X = -A^2 - A^-2");
  sub(&app, "homology", "star-like homology table", [&] { return cmd_homology(o); });
  sub(&app, "cohomology", "cohomology of d", [&] { return cmd_cohomology(o); });
  sub(&app, "khovanov", "Khovanov table on the same complex", [&] { return cmd_khovanov(o); });
  sub(&app, "collapse", "homology summed over j + k", [&] { return cmd_collapse(o); });
  sub(&app, "duality", "duality and mirror identities", [&] { return cmd_duality(o); })
      ->add_flag("--literal", o.literal, "check the mirror torsion with shift +1 for d as well");

  CLI::App* moves = app.add_subcommand("moves", "star-like moves");
  moves->require_subcommand(1);
  moves->fallthrough();
  sub(moves, "apply", "apply one move", [&] { return cmd_moves_apply(o); })
      ->add_option("--move", o.move, "move JSON, inline or a file")
      ->required();
  sub(moves, "random", "seeded random trajectory", [&] { return cmd_moves_random(o); })
      ->add_option("--steps", o.steps, "trajectory length");

  CLI::App* check = app.add_subcommand("check", "property checks");
  check->require_subcommand(1);
  check->fallthrough();
  sub(check, "invariance", "invariants along a random trajectory", [&] { return cmd_check_invariance(o); })
      ->add_option("--steps", o.steps, "trajectory length");
  sub(check, "euler", "Euler characteristics against the bracket", [&] { return cmd_check_euler(o); });
  sub(check, "ordering", "independence of the crossing order", [&] { return cmd_check_ordering(o); })
      ->add_option("--permutations", o.permutations, "number of random orders");
  sub(check, "skein", "bracket recursion and skein identity", [&] { return cmd_check_skein(o); })
      ->add_flag("--literal", o.literal, "require the (A^2 - A^-2) sign");
  sub(check, "fig8", "partial differentials against the local rule table", [&] { return cmd_check_fig8(o); });
  sub(check, "merge-law", "circle types under merges and splits", [&] { return cmd_check_merge_law(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  try {
    status = run ? run() : kExitInput;
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    Json j = {{"error", std::string(to_string(e.code()))}, {"message", msg}};
    std::cerr << j.dump() << "\n";
    return e.is_input_error() ? kExitInput : kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitViolation;
  }
  return status;
}
