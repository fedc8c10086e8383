#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "torelli/acceptance.hpp"
#include "torelli/serialize.hpp"

using namespace torelli;

namespace {

constexpr const char *kVersion = "1.0.0";

struct Options {
  int genus = 0;
  int truncation = 0; // 0: use the operation default
  std::string expansion = "auto";
  unsigned seed = 0;
  std::string format = "text";
  std::string endo_file;
  std::string kind = "alt";
  int level = 1;
  std::string word;
};

void add_common(CLI::App *cmd, Options &o, bool with_word = true) {
  cmd->add_option("-g,--genus", o.genus, "genus of the surface")->required();
  cmd->add_option("--truncation", o.truncation,
                  "tensor-series truncation override");
  cmd->add_option("--expansion", o.expansion,
                  "expansion choice: default-alt | classical | handlebody | "
                  "perturbed (default: matches the kind)")
      ->check(CLI::IsMember(
          {"auto", "default-alt", "classical", "handlebody", "perturbed"}));
  cmd->add_option("--seed", o.seed, "seed for the perturbed expansion");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--endos", o.endo_file,
                  "JSON file with additional named mapping classes");
  if (with_word)
    cmd->add_option("-w,--word", o.word, "mapping-class word over the library")
        ->required();
}

int effective_truncation(const Options &o, int needed) {
  int t = o.truncation;
  if (t == 0)
    if (const char *env = std::getenv("TORELLI_TRUNCATION")) t = std::atoi(env);
  if (t == 0) return needed;
  if (t < needed)
    throw AlgebraError("truncation " + std::to_string(t) +
                       " is below the required " + std::to_string(needed));
  return t;
}

// Builds the evaluation expansion for the requested kind; rejects
// combinations whose target algebras do not match.
Expansion make_expansion(const Options &o, const std::string &kind, int trunc) {
  std::string choice = o.expansion;
  if (choice == "auto")
    choice = kind == "alt" ? "default-alt"
             : kind == "classical" ? "classical"
                                   : "handlebody";
  if (kind == "alt" && choice == "default-alt")
    return Expansion::default_alt(o.genus, trunc);
  if (kind == "alt" && choice == "perturbed")
    return Expansion::perturbed(o.genus, trunc, o.seed);
  if (kind == "classical" && choice == "classical")
    return Expansion::classical(o.genus, trunc);
  if (kind == "levine" && choice == "handlebody")
    return Expansion::handlebody(o.genus, trunc);
  throw CLI::ValidationError("--expansion", "expansion '" + choice +
                                                "' does not target the '" +
                                                kind + "' algebra");
}

SurfaceEndo resolve_word(const Options &o) {
  auto lib = twist_library(o.genus);
  if (!o.endo_file.empty())
    for (auto &[name, h] : load_user_endos(o.endo_file, o.genus))
      lib.insert_or_assign(name, h);
  return resolve_mc_word(parse_mc_word(o.word), lib, o.genus);
}

nlohmann::json meta_json(const Options &o, int trunc, const std::string &kind) {
  std::string exp = o.expansion;
  if (exp == "auto")
    exp = kind == "alt" ? "default-alt"
          : kind == "classical" ? "classical"
          : kind == "levine"    ? "handlebody"
                                : kind;
  if (exp == "perturbed") exp += "(" + std::to_string(o.seed) + ")";
  return {{"tool_version", kVersion},
          {"genus", o.genus},
          {"truncation", trunc},
          {"expansion", exp},
          {"certificate", "rational"}};
}

void emit(const Options &o, const nlohmann::json &meta, const nlohmann::json &result,
          const std::string &text) {
  if (o.format == "structured")
    std::cout << nlohmann::json{{"meta", meta}, {"result", result}}.dump(2)
              << "\n";
  else
    std::cout << text << "\n";
}

int default_tau_truncation(const std::string &kind, int level) {
  return kind == "alt" ? level + 3 : level + 2;
}

int cmd_tau(const Options &o) {
  SurfaceEndo h = resolve_word(o);
  int trunc = effective_truncation(o, default_tau_truncation(o.kind, o.level));
  Expansion e = make_expansion(o, o.kind, trunc);
  nlohmann::json meta = meta_json(o, trunc, o.kind);
  try {
    if (o.kind == "alt") {
      DerivationElement d = tau_alt(h, o.level, e);
      emit(o, meta, to_json(d), tau_text(d));
    } else if (o.kind == "classical") {
      ClassicalDerivation d = tau_classical(h, o.level, e);
      emit(o, meta, to_json(d), tau_text(d));
    } else {
      LevineDerivation d = tau_levine(h, o.level, e);
      emit(o, meta, to_json(d), tau_text(d));
    }
  } catch (const MembershipError &err) {
    std::cerr << "violation: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_member(const Options &o) {
  SurfaceEndo h = resolve_word(o);
  int trunc = effective_truncation(
      o, o.kind == "alt" ? o.level + 2 : o.level + 1);
  Expansion e = make_expansion(o, o.kind, trunc);
  bool ok = o.kind == "alt"         ? membership_alt(h, o.level, e)
            : o.kind == "classical" ? membership_classical(h, o.level, e)
                                    : membership_levine(h, o.level, e);
  nlohmann::json meta = meta_json(o, trunc, o.kind);
  emit(o, meta, {{"member", ok}}, ok ? "true" : "false");
  if (ok) return 0;
  // harvest the violating generator and degree for the report
  try {
    if (o.kind == "alt") tau_alt(h, o.level, e);
    else if (o.kind == "classical") tau_classical(h, o.level, e);
    else tau_levine(h, o.level, e);
    std::cerr << "violation: below level " << o.level << "\n";
  } catch (const MembershipError &err) {
    std::cerr << "violation: " << err.what() << "\n";
  }
  return 2;
}

int cmd_tau0(const Options &o) {
  SurfaceEndo h = resolve_word(o);
  nlohmann::json meta = meta_json(o, 3, "tau0");
  try {
    GElement x = tau0_alt(h);
    emit(o, meta, to_json(x), x.str());
  } catch (const AlgebraError &err) {
    std::cerr << "violation: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_diagram(const Options &o) {
  SurfaceEndo h = resolve_word(o);
  int trunc = effective_truncation(o, o.level + 3);
  Expansion e = make_expansion(o, "alt", trunc);
  nlohmann::json meta = meta_json(o, trunc, "alt");
  try {
    DiagramElement d = eta_inverse(tau_alt(h, o.level, e));
    emit(o, meta, to_json(d), d.str());
  } catch (const MembershipError &err) {
    std::cerr << "violation: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Johnson-type homomorphisms of mapping classes of a bordered "
               "surface"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Options o;
  auto kind_opt = [&](CLI::App *cmd) {
    cmd->add_option("--kind", o.kind, "homomorphism flavor")
        ->check(CLI::IsMember({"alt", "classical", "levine"}));
  };
  auto level_opt = [&](CLI::App *cmd) {
    cmd->add_option("-m,--level", o.level, "filtration level")
        ->required()
        ->check(CLI::PositiveNumber);
  };

  CLI::App *tau = app.add_subcommand("tau", "evaluate a Johnson-type homomorphism");
  add_common(tau, o);
  kind_opt(tau);
  level_opt(tau);

  CLI::App *member = app.add_subcommand("member", "test filtration membership");
  add_common(member, o);
  kind_opt(member);
  level_opt(member);

  CLI::App *tau0 = app.add_subcommand("tau0",
                                      "0-th alternative homomorphism of a "
                                      "Lagrangian mapping class");
  add_common(tau0, o);

  CLI::App *diagram =
      app.add_subcommand("diagram", "tau_alt as a tree-diagram combination");
  add_common(diagram, o);
  level_opt(diagram);

  bool quick = false;
  CLI::App *selftest = app.add_subcommand("selftest", "run the verification suite");
  selftest->add_flag("--quick", quick, "smaller random batches");

  try {
    app.parse(argc, argv);
    if (selftest->parsed()) return run_acceptance(std::cout, quick) == 0 ? 0 : 1;
    if (tau->parsed()) return cmd_tau(o);
    if (member->parsed()) return cmd_member(o);
    if (tau0->parsed()) return cmd_tau0(o);
    return cmd_diagram(o);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
