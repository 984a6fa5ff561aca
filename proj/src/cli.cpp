// Copyright 2026 The unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unsharp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "unsharp/expr.hpp"
#include "unsharp/formats.hpp"
#include "unsharp/frame_induction.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/render.hpp"

namespace unsharp {

namespace {

struct Options {
  std::uint64_t seed = SweepOptions{}.seed;
  unsigned jobs = 1;
  std::string format = "text";
  std::string algebra, frame, props, op, output, expr_file;
  std::vector<std::string> exprs;

  SweepOptions sweep() const {
    SweepOptions s;
    s.seed = seed;
    s.jobs = jobs;
    return s;
  }
};

OperatorTable load_ops(const EffectAlgebra &ea, const std::string &path) {
  const std::string text = read_file(path);
  if (looks_like_ops(text)) return parse_ops(text, ea);
  return OperatorTable::induced(ea, parse_frame(text));
}

std::string report_text(const Report &rep, const Options &o) {
  return o.format == "lines" ? render_report_lines(rep) : render_report(rep);
}

int cmd_verify(const Options &o, std::ostream &out) {
  auto checked = verify_axioms(parse_algebra_raw(read_file(o.algebra)));
  if (const auto *bad = std::get_if<AxiomViolation>(&checked)) {
    out << "not an effect algebra: " << bad->message << "\n";
    return kExitCheckFailed;
  }
  const auto &ea = std::get<EffectAlgebra>(checked);
  out << "valid effect algebra; " << (ea.is_lattice() ? "lattice" : "not a lattice") << "\n";
  return kExitOk;
}

int cmd_table(const Options &o, std::ostream &out, std::ostream &err) {
  const auto op = table_op_from_name(o.op);
  if (!op) {
    err << "error: unknown operation '" << o.op << "'\n";
    return kExitInputError;
  }
  out << render(operation_table(parse_algebra(read_file(o.algebra)), *op));
  return kExitOk;
}

int cmd_order(const Options &o, std::ostream &out) {
  out << render_covers(parse_algebra(read_file(o.algebra)));
  return kExitOk;
}

int cmd_tense(const Options &o, std::ostream &out, std::ostream &err) {
  const auto ea = parse_algebra(read_file(o.algebra));
  const auto frame = parse_frame(read_file(o.frame));
  const auto props = parse_props(read_file(o.props), ea, frame.size());
  std::vector<std::string> exprs = o.exprs;
  if (!o.expr_file.empty()) {
    std::istringstream in(read_file(o.expr_file));
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      exprs.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
    }
  }
  if (exprs.empty()) exprs = props.names;
  std::vector<std::pair<std::string, SetProposition>> rows;
  for (const auto &text : exprs) {
    try {
      rows.emplace_back(text, Expression::parse(text).evaluate(ea, frame, props));
    } catch (const UndefinedAt &e) {
      err << "error: in '" << text << "': undefined at time " << frame.name(e.time()) << "\n";
      return kExitInputError;
    } catch (const ParseError &e) {
      // what() already leads with "line 1, column N: "; keep only the column.
      const std::string msg = e.what();
      const auto cut = msg.find(": ");
      err << "error: in '" << text << "', column " << e.column() << ": "
          << (cut == std::string::npos ? msg : msg.substr(cut + 2)) << "\n";
      return kExitInputError;
    }
  }
  out << render(proposition_table(ea, frame, rows));
  return kExitOk;
}

int cmd_induce(const Options &o, std::ostream &out, std::ostream &err) {
  const auto ea = parse_algebra(read_file(o.algebra));
  const auto ops = load_ops(ea, o.frame);
  const auto rel = induce_relation(ea, ops, o.sweep());
  if (rel.sampled) err << "note: " << rel.propositions << " sampled propositions; the relation may be too large\n";
  out << render_pairs(ops.times(), rel.pairs);
  return kExitOk;
}

int cmd_extend(const Options &o, std::ostream &out) {
  const auto ea = parse_algebra(read_file(o.algebra));
  const auto ops = load_ops(ea, o.frame);
  const auto ext = extend_frame(ea, ops, o.sweep());
  const auto rep = check_extension(ea, ops, o.sweep());
  const std::string frame_text = write_frame(ext.frame());
  if (o.output.empty()) {
    out << frame_text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << frame_text)) throw Error("cannot write '" + o.output + "'");
  }
  std::istringstream lines(report_text(rep, o));
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << "\n";
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_laws(const Options &o, std::ostream &out) {
  const auto ea = parse_algebra(read_file(o.algebra));
  std::optional<TimeFrame> frame;
  std::optional<NamedPropositions> props;
  if (!o.frame.empty()) frame = parse_frame(read_file(o.frame));
  if (!o.props.empty()) props = parse_props(read_file(o.props), ea, frame->size());
  const auto rep = run_laws(ea, frame ? &*frame : nullptr, props ? &props->props : nullptr, o.sweep());
  out << report_text(rep, o);
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite effect algebras, unsharp implications and tense operators.", "unsharp"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--report-format", o.format, "Report format")->check(CLI::IsMember({"text", "lines"}));

  auto *verify = app.add_subcommand("verify", "Check the effect algebra axioms");
  verify->add_option("algebra", o.algebra)->required();
  auto *table = app.add_subcommand("table", "Print an operation table");
  table->add_option("algebra", o.algebra)->required();
  table->add_option("--op", o.op, "plus, odot, imp-arrow, imp-squig, imp-double or otimes")->required();
  auto *order = app.add_subcommand("order", "Print the cover relation of the induced order");
  order->add_option("algebra", o.algebra)->required();
  auto *tense = app.add_subcommand("tense", "Evaluate expressions over a frame");
  tense->add_option("algebra", o.algebra)->required();
  tense->add_option("frame", o.frame)->required();
  tense->add_option("props", o.props)->required();
  tense->add_option("--expr", o.exprs, "Expression (repeatable)");
  tense->add_option("--expr-file", o.expr_file, "File with one expression per line");
  auto *induce = app.add_subcommand("induce", "Print the relation induced by tense operators");
  induce->add_option("algebra", o.algebra)->required();
  induce->add_option("source", o.frame, "Frame or operator table")->required();
  auto *extend = app.add_subcommand("extend", "Print the extended frame and check the restriction property");
  extend->add_option("algebra", o.algebra)->required();
  extend->add_option("source", o.frame, "Frame or operator table")->required();
  extend->add_option("--output", o.output, "Write the frame here instead of stdout");
  auto *laws = app.add_subcommand("laws", "Run the law suites");
  laws->add_option("algebra", o.algebra)->required();
  laws->add_option("frame", o.frame);
  laws->add_option("props", o.props);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
    if (order->parsed()) return cmd_order(o, out);
    if (tense->parsed()) return cmd_tense(o, out, err);
    if (induce->parsed()) return cmd_induce(o, out, err);
    if (extend->parsed()) return cmd_extend(o, out);
    if (laws->parsed()) {
      if (!o.props.empty() && o.frame.empty()) throw Error("propositions need a frame");
      return cmd_laws(o, out);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace unsharp
