#include "ubc/dsl.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ubc/enhance.hpp"
#include "ubc/synth.hpp"

namespace ubc {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Statement tokens: identifiers and the arrows "->", "<-", "-/-".
// '#' starts a comment.
Result<std::vector<Line>> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      char ch = raw[pos];
      if (ch == ' ' || ch == '\t') {
        ++pos;
        continue;
      }
      if (ch == '#') break;
      int column = static_cast<int>(pos) + 1;
      if (raw.compare(pos, 3, "-/-") == 0) {
        line.tokens.push_back({"-/-", column});
        pos += 3;
      } else if (raw.compare(pos, 2, "->") == 0) {
        line.tokens.push_back({"->", column});
        pos += 2;
      } else if (raw.compare(pos, 2, "<-") == 0) {
        line.tokens.push_back({"<-", column});
        pos += 2;
      } else {
        std::size_t end = pos;
        while (end < raw.size() && raw[end] != ' ' && raw[end] != '\t' &&
               raw[end] != '#')
          ++end;
        line.tokens.push_back({raw.substr(pos, end - pos), column});
        pos = end;
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Diagnostic syntax_error(const Line& line, int column, const std::string& what) {
  return Diagnostic{.code = "syntax-error",
                    .message = what,
                    .line = line.number,
                    .column = column};
}

Diagnostic semantic_error(const Line& line, int column,
                          const std::string& what) {
  return Diagnostic{.code = "semantic-error",
                    .message = what,
                    .line = line.number,
                    .column = column};
}

// expects: keyword already matched; shape = list of "id" / literal arrows
Result<bool> expect_shape(const Line& line,
                          const std::vector<std::string>& shape) {
  if (line.tokens.size() != shape.size() + 1) {
    int col = line.tokens.size() > shape.size() + 1
                  ? line.tokens[shape.size() + 1].column
                  : (line.tokens.back().column +
                     static_cast<int>(line.tokens.back().text.size()));
    return syntax_error(line, col,
                        "expected `" + line.tokens[0].text +
                            (shape.empty() ? "`" : " ...`") +
                            " with " + std::to_string(shape.size()) +
                            " argument token(s)");
  }
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const Token& tok = line.tokens[k + 1];
    if (shape[k] == "id") {
      if (!valid_identifier(tok.text))
        return syntax_error(line, tok.column,
                            "expected an identifier, got `" + tok.text + "`");
    } else if (tok.text != shape[k]) {
      return syntax_error(line, tok.column,
                          "expected `" + shape[k] + "`, got `" + tok.text +
                              "`");
    }
  }
  return true;
}

}  // namespace

Result<System> parse_system(const std::string& text) {
  auto lines_result = tokenize(text);
  if (!lines_result) return lines_result.error();
  const auto& lines = lines_result.value();

  System s;
  // first pass: declarations
  for (const auto& line : lines) {
    const std::string& kw = line.tokens[0].text;
    if (kw == "interactive" || kw == "component" || kw == "enhancer") {
      auto shape = expect_shape(line, {"id"});
      if (!shape) return shape.error();
      ComponentId id{line.tokens[1].text};
      if (kw == "enhancer") continue;  // second pass
      if (s.components.contains(id)) {
        return semantic_error(line, line.tokens[1].column,
                              "component " + id.name + " declared twice");
      }
      s.components.insert(id);
      if (kw == "interactive") {
        s.interactive.insert(id);
        s.allowed[id] = IdSet{id};
      }
    } else if (kw == "allow" || kw == "edge") {
      // second pass
    } else {
      return syntax_error(line, line.tokens[0].column,
                          "unknown system statement `" + kw + "`");
    }
  }
  // second pass: enhancers, grants, edges
  for (const auto& line : lines) {
    const std::string& kw = line.tokens[0].text;
    if (kw == "enhancer") {
      ComponentId id{line.tokens[1].text};
      if (!s.components.contains(id))
        return semantic_error(line, line.tokens[1].column,
                              "enhancer " + id.name +
                                  " is not a declared component");
      s.enhancers.insert(id);
    } else if (kw == "allow") {
      auto shape = expect_shape(line, {"id", "<-", "id"});
      if (!shape) return shape.error();
      ComponentId i{line.tokens[1].text}, c{line.tokens[3].text};
      if (!s.interactive.contains(i))
        return semantic_error(line, line.tokens[1].column,
                              "allow target " + i.name +
                                  " is not declared interactive");
      if (!s.components.contains(c))
        return semantic_error(line, line.tokens[3].column,
                              "component " + c.name + " is not declared");
      s.allowed[i].insert(c);
    } else if (kw == "edge") {
      auto shape = expect_shape(line, {"id", "->", "id"});
      if (!shape) return shape.error();
      ComponentId a{line.tokens[1].text}, b{line.tokens[3].text};
      for (const auto& e : {a, b}) {
        if (!s.components.contains(e))
          return semantic_error(line, line.tokens[1].column,
                                "component " + e.name + " is not declared");
      }
      s.connections.insert({a, b});
    }
  }
  return s;
}

Result<ParsedScript> parse_script(const std::string& text) {
  auto lines_result = tokenize(text);
  if (!lines_result) return lines_result.error();

  ParsedScript out;
  for (const auto& line : lines_result.value()) {
    const std::string& kw = line.tokens[0].text;
    TacticStep step;
    if (kw == "create" || kw == "create-interactive" || kw == "delete" ||
        kw == "designate") {
      auto shape = expect_shape(line, {"id"});
      if (!shape) return shape.error();
      step.kind = kw == "create"              ? StepKind::CreateGeneral
                  : kw == "create-interactive" ? StepKind::CreateInteractive
                  : kw == "delete"             ? StepKind::Delete
                                               : StepKind::Designate;
      step.args = {ComponentId{line.tokens[1].text}};
    } else if (kw == "connect" || kw == "disconnect") {
      auto shape = expect_shape(line, {"id", "->", "id"});
      if (!shape) return shape.error();
      step.kind = kw == "connect" ? StepKind::Connect : StepKind::Disconnect;
      step.args = {ComponentId{line.tokens[1].text},
                   ComponentId{line.tokens[3].text}};
    } else if (kw == "allow") {
      auto shape = expect_shape(line, {"id", "<-", "id"});
      if (!shape) return shape.error();
      step.kind = StepKind::Allow;
      step.args = {ComponentId{line.tokens[1].text},
                   ComponentId{line.tokens[3].text}};
    } else if (kw == "revoke") {
      auto shape = expect_shape(line, {"id", "-/-", "id"});
      if (!shape) return shape.error();
      step.kind = StepKind::Revoke;
      step.args = {ComponentId{line.tokens[1].text},
                   ComponentId{line.tokens[3].text}};
    } else if (kw == "simplify") {
      auto shape = expect_shape(line, {});
      if (!shape) return shape.error();
      step.kind = StepKind::Simplify;
    } else {
      return syntax_error(line, line.tokens[0].column,
                          "unknown script statement `" + kw + "`");
    }
    out.script.steps.push_back(std::move(step));
    out.spans.push_back({line.number, line.tokens[0].column});
  }
  return out;
}

std::string print_system(const System& s) {
  std::string out;
  for (const auto& i : s.interactive) out += "interactive " + i.name + "\n";
  for (const auto& c : s.components)
    if (!s.interactive.contains(c)) out += "component " + c.name + "\n";
  for (const auto& u : s.enhancers) out += "enhancer " + u.name + "\n";
  for (const auto& [i, set] : s.allowed)
    for (const auto& c : set)
      if (c != i) out += "allow " + i.name + " <- " + c.name + "\n";
  for (const auto& n : s.connections)
    out += "edge " + n.from.name + " -> " + n.to.name + "\n";
  return out;
}

std::string print_script(const Script& s) {
  std::string out;
  for (const auto& step : s.steps) {
    switch (step.kind) {
      case StepKind::CreateGeneral:
        out += "create " + step.args[0].name;
        break;
      case StepKind::CreateInteractive:
        out += "create-interactive " + step.args[0].name;
        break;
      case StepKind::Delete:
        out += "delete " + step.args[0].name;
        break;
      case StepKind::Designate:
        out += "designate " + step.args[0].name;
        break;
      case StepKind::Connect:
        out += "connect " + step.args[0].name + " -> " + step.args[1].name;
        break;
      case StepKind::Disconnect:
        out += "disconnect " + step.args[0].name + " -> " + step.args[1].name;
        break;
      case StepKind::Allow:
        out += "allow " + step.args[0].name + " <- " + step.args[1].name;
        break;
      case StepKind::Revoke:
        out += "revoke " + step.args[0].name + " -/- " + step.args[1].name;
        break;
      case StepKind::Simplify:
        out += "simplify";
        break;
      case StepKind::Merge:
      case StepKind::Split:
        out += "# merge/split steps have no script syntax";
        break;
    }
    out += "\n";
  }
  return out;
}

std::string export_dot(const System& s) {
  std::string out = "digraph system {\n";
  for (const auto& c : s.components) {
    out += "  \"" + c.name + "\" [";
    bool interactive = s.interactive.contains(c);
    bool enhancer = s.enhancers.contains(c);
    if (enhancer) {
      out += "shape=box";
      if (interactive) out += ", peripheries=2";
    } else if (interactive) {
      out += "shape=doublecircle";
    } else {
      out += "shape=ellipse";
    }
    if (interactive) {
      out += ", label=\"" + c.name + "\\nA = " + to_string(s.allowed.at(c)) +
             "\"";
    }
    out += "];\n";
  }
  for (const auto& n : s.connections)
    out += "  \"" + n.from.name + "\" -> \"" + n.to.name + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace ubc
