#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ubc/dsl.hpp"
#include "ubc/enhance.hpp"
#include "ubc/synth.hpp"

namespace ubc {

namespace {

Result<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return Diagnostic{.code = "file-not-found",
                      .message = "cannot open " + path};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "cannot write " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

int fail(const Diagnostic& d, std::ostream& err) {
  err << d.to_string() << "\n";
  return 1;
}

int cmd_check(const std::string& path, const std::string& proof_out,
              std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto parsed = parse_script(text.value());
  if (!parsed) return fail(parsed.error(), err);
  auto result = replay(parsed.value().script);
  if (!result) {
    Diagnostic d = result.error();
    if (d.step >= 0 &&
        d.step < static_cast<int>(parsed.value().spans.size())) {
      d.line = parsed.value().spans[static_cast<std::size_t>(d.step)].line;
      d.column = parsed.value().spans[static_cast<std::size_t>(d.step)].column;
    }
    return fail(d, err);
  }
  out << to_string(result.value().judgment) << "\n";
  if (!proof_out.empty() &&
      !write_file(proof_out, render_json(result.value().tree), err))
    return 1;
  return 0;
}

int cmd_synth(const std::string& path, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto goal = parse_system(text.value());
  if (!goal) return fail(goal.error(), err);
  auto script = synthesize(Goal{goal.value()});
  if (!script) return fail(script.error(), err);
  std::string printed = print_script(script.value());
  if (out_path.empty())
    out << printed;
  else if (!write_file(out_path, printed, err))
    return 1;
  return 0;
}

int cmd_simplify(const std::string& path, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto sys = parse_system(text.value());
  if (!sys) return fail(sys.error(), err);
  std::string printed = print_system(simplify(sys.value()));
  if (out_path.empty())
    out << printed;
  else if (!write_file(out_path, printed, err))
    return 1;
  return 0;
}

int cmd_invariants(const std::string& path, std::ostream& out,
                   std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto sys = parse_system(text.value());
  if (!sys) return fail(sys.error(), err);
  if (!well_formed(sys.value())) {
    return fail(Diagnostic{.code = "malformed-system",
                           .message = "system violates a structural invariant"},
                err);
  }
  auto violations = closure_invariant(sys.value());
  if (violations.empty()) {
    out << "ok: well-formed, closure invariant holds\n";
    return 0;
  }
  for (const auto& d : violations) err << d.to_string() << "\n";
  return 1;
}

int cmd_render(const std::string& path, const std::string& dot_path,
               std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto sys = parse_system(text.value());
  if (!sys) return fail(sys.error(), err);
  std::string dot = export_dot(sys.value());
  if (dot_path.empty())
    out << dot;
  else if (!write_file(dot_path, dot, err))
    return 1;
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  auto text = read_file(path);
  if (!text) return fail(text.error(), err);
  auto tree = parse_json(text.value());
  if (!tree) return fail(tree.error(), err);
  auto verdict = verify(tree.value());
  if (!verdict) return fail(verdict.error(), err);
  out << "verified: " << to_string(tree.value().conclusion) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"usable-by-construction proof kernel"};
  app.require_subcommand(1);

  std::string check_path, proof_out;
  auto* check = app.add_subcommand("check", "replay a tactic script");
  check->add_option("script", check_path, "script file (.ubc)")->required();
  check->add_option("--emit-proof", proof_out, "write the proof tree as JSON");

  std::string synth_path, synth_out;
  auto* synth = app.add_subcommand("synth", "synthesize a script for a goal");
  synth->add_option("goal", synth_path, "goal system literal (.ubc)")
      ->required();
  synth->add_option("-o", synth_out, "output script file");

  std::string simp_path, simp_out;
  auto* simp =
      app.add_subcommand("simplify", "shrink assumption sets via enhancers");
  simp->add_option("system", simp_path, "system literal (.ubc)")->required();
  simp->add_option("-o", simp_out, "output system file");

  std::string inv_path;
  auto* inv = app.add_subcommand("invariants", "check a system's invariants");
  inv->add_option("system", inv_path, "system literal (.ubc)")->required();

  std::string render_path, dot_out;
  auto* render = app.add_subcommand("render", "emit a DOT graph");
  render->add_option("system", render_path, "system literal (.ubc)")
      ->required();
  render->add_option("--dot", dot_out, "output DOT file");

  std::string verify_path;
  auto* verify_cmd =
      app.add_subcommand("verify", "re-check a serialized proof tree");
  verify_cmd->add_option("proof", verify_path, "proof tree (.json)")
      ->required();

  std::vector<const char*> argv{"ubc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (check->parsed()) return cmd_check(check_path, proof_out, out, err);
  if (synth->parsed()) return cmd_synth(synth_path, synth_out, out, err);
  if (simp->parsed()) return cmd_simplify(simp_path, simp_out, out, err);
  if (inv->parsed()) return cmd_invariants(inv_path, out, err);
  if (render->parsed()) return cmd_render(render_path, dot_out, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify_path, out, err);
  return 2;
}

}  // namespace ubc
