#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gknd/checker.hpp"
#include "gknd/compiler.hpp"
#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"
#include "gknd/proof_io.hpp"
#include "gknd/render.hpp"
#include "gknd/translation.hpp"

using namespace gknd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Mode mode_or_throw(const std::string& s) {
  auto m = Mode::from_string(s);
  if (!m)
    throw CLI::ValidationError("mode",
                               "unknown mode '" + s +
                                   "' (expected nj, nk, nk-tnd, nk-raa, nk-peirce)");
  return *m;
}

// Loads a proof file, failing on a stale :expect header.
LoadedProof load_checked(const std::string& path, const Mode& m) {
  LoadedProof lp = read_proof(read_file(path));
  if (lp.expect) {
    Judgment got = check(lp.proof, m);
    if (!judgment_matches(got, *lp.expect, /*as_set=*/true))
      throw CheckError(ErrorKind::ConclusionMismatch, {},
                       path + " declares " + print_judgment(*lp.expect) +
                           " but proves " + print_judgment(got));
  }
  return lp;
}

int run_check(const std::string& path, const std::string& mode_str) {
  Mode m = mode_or_throw(mode_str);
  LoadedProof lp = load_checked(path, m);
  Judgment j = check(lp.proof, m);
  std::cout << print_judgment(j) << "\n";
  return kExitOk;
}

int run_translate(const std::string& formula) {
  std::cout << print_formula(nn_translate(parse_formula(formula))) << "\n";
  return kExitOk;
}

int run_stability(const std::string& formula, const std::string& out_path) {
  auto f = parse_formula(formula);
  auto p = stability_proof(f);
  Judgment j = check(p, Mode::nj());
  std::string text = write_proof(p, j);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << print_judgment(j) << "\n";
  return kExitOk;
}

int run_derive(const std::string& name, const std::vector<std::string>& formulas,
               const std::string& out_path) {
  ProofPtr p;
  Mode m = Mode::nk();
  if (name == "raa_to_tnd") {
    if (formulas.size() != 1)
      throw CLI::ValidationError("derive", "raa_to_tnd takes one formula");
    p = raa_implies_tnd(parse_formula(formulas[0]));
    m = Mode::only(ClassicalAxiom::RAA);
  } else if (name == "tnd_to_peirce") {
    if (formulas.size() != 2)
      throw CLI::ValidationError("derive", "tnd_to_peirce takes two formulas");
    p = tnd_implies_peirce(parse_formula(formulas[0]), parse_formula(formulas[1]));
    m = Mode::only(ClassicalAxiom::TND);
  } else if (name == "peirce_to_raa") {
    if (formulas.size() != 1)
      throw CLI::ValidationError("derive", "peirce_to_raa takes one formula");
    p = peirce_implies_raa(parse_formula(formulas[0]));
    m = Mode::only(ClassicalAxiom::PEIRCE);
  } else if (name == "raa_rule_to_axiom") {
    if (formulas.size() != 1)
      throw CLI::ValidationError("derive", "raa_rule_to_axiom takes one formula");
    p = raa_axiom_from_rule(parse_formula(formulas[0]));
    m = Mode::only(ClassicalAxiom::RAA_RULE);
  } else {
    throw CLI::ValidationError(
        "derive", "unknown derivation '" + name +
                      "' (raa_to_tnd, tnd_to_peirce, peirce_to_raa, raa_rule_to_axiom)");
  }
  Judgment j = check(p, m);
  std::string text = write_proof(p, j);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << print_judgment(j) << "\n";
  return kExitOk;
}

int run_compile(const std::string& path, const std::string& out_path, size_t cap) {
  LoadedProof lp = load_checked(path, Mode::nk());
  auto compiled = nk_to_nj(lp.proof, cap);
  Judgment j = check(compiled, Mode::nj());
  std::string text = write_proof(compiled, j);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << print_judgment(j) << "\n";
  return kExitOk;
}

int run_roundtrip(const std::string& path, const std::string& out_path, size_t cap) {
  LoadedProof lp = load_checked(path, Mode::nk());
  Judgment source = check(lp.proof, Mode::nk());
  auto nj = nk_to_nj(lp.proof, cap);
  auto back = nj_translation_to_nk(nj, source.context, source.conclusion, cap);
  Judgment j = check(back, Mode::nk());
  std::string text = write_proof(back, j);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  std::cerr << print_judgment(j) << "\n";
  return kExitOk;
}

int run_render(const std::string& path, const std::string& style,
               const std::string& mode_str) {
  Mode m = mode_or_throw(mode_str);
  LoadedProof lp = load_checked(path, m);
  if (style == "ascii")
    std::cout << render_ascii(lp.proof, m);
  else if (style == "latex")
    std::cout << render_latex(lp.proof, m);
  else
    throw CLI::ValidationError("render", "style must be ascii or latex");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural deduction kernel, double-negation translation, and NK<->NJ proof compiler"};
  app.require_subcommand(1);

  std::string path, formula, mode_str = "nj", style = "ascii", out_path, name;
  std::vector<std::string> formulas;
  size_t cap = kDefaultProofSizeCap;

  auto* c_check = app.add_subcommand("check", "Check a proof file and print its sequent");
  c_check->add_option("file", path, "proof file")->required();
  c_check->add_option("--mode", mode_str, "nj | nk | nk-tnd | nk-raa | nk-peirce");

  auto* c_tr = app.add_subcommand("translate", "Print the ~~ translation of a formula");
  c_tr->add_option("formula", formula)->required();

  auto* c_st = app.add_subcommand("stability", "Emit the NJ stability proof of a formula");
  c_st->add_option("formula", formula)->required();
  c_st->add_option("-o,--out", out_path, "output proof file (default: stdout)");

  auto* c_de = app.add_subcommand("derive", "Construct a classical-axiom interderivation");
  c_de->add_option("name", name, "raa_to_tnd | tnd_to_peirce | peirce_to_raa | raa_rule_to_axiom")
      ->required();
  c_de->add_option("formulas", formulas, "parameter formulas");
  c_de->add_option("-o,--out", out_path, "output proof file (default: stdout)");

  auto* c_co = app.add_subcommand("compile", "Compile an NK proof to an NJ proof of the translated sequent");
  c_co->add_option("file", path, "NK proof file")->required();
  c_co->add_option("-o,--out", out_path, "output proof file (default: stdout)");
  c_co->add_option("--max-proof-size", cap, "abort beyond this many nodes");

  auto* c_rt = app.add_subcommand("roundtrip", "Compile to NJ and embed back into an NK proof of the original sequent");
  c_rt->add_option("file", path, "NK proof file")->required();
  c_rt->add_option("-o,--out", out_path, "output proof file (default: stdout)");
  c_rt->add_option("--max-proof-size", cap, "abort beyond this many nodes");

  auto* c_re = app.add_subcommand("render", "Render a proof as a tree (ascii) or bussproofs markup (latex)");
  c_re->add_option("file", path, "proof file")->required();
  c_re->add_option("--style", style, "ascii | latex");
  c_re->add_option("--mode", mode_str, "checking mode")->default_val("nk");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_check)) return run_check(path, mode_str);
    if (app.got_subcommand(c_tr)) return run_translate(formula);
    if (app.got_subcommand(c_st)) return run_stability(formula, out_path);
    if (app.got_subcommand(c_de)) return run_derive(name, formulas, out_path);
    if (app.got_subcommand(c_co)) return run_compile(path, out_path, cap);
    if (app.got_subcommand(c_rt)) return run_roundtrip(path, out_path, cap);
    if (app.got_subcommand(c_re)) return run_render(path, style, mode_str);
  } catch (const CheckError& e) {
    std::cerr << e.render() << "\n";
    return kExitCheckFailure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
