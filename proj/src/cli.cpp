#include "heisred/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "heisred/diophantine.hpp"
#include "heisred/errors.hpp"
#include "heisred/reduction.hpp"
#include "heisred/roundtrip.hpp"
#include "heisred/search.hpp"
#include "heisred/serialization.hpp"
#include "heisred/skolem.hpp"
#include "heisred/witness.hpp"

namespace heisred {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string const &input(RunConfig const &config, std::size_t k, char const *what) {
  if (config.inputs.size() <= k) {
    throw UsageError(config.subcommand + ": missing " + what);
  }
  return config.inputs[k];
}

// An argument naming an existing file is read; anything else is the equation.
std::string equation_text(std::string const &arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::string text = read_file(arg);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
      text.pop_back();
    }
    return text;
  }
  return arg;
}

void emit(RunConfig const &config, std::string const &content, std::ostream &out) {
  if (config.output) {
    write_file_atomic(*config.output, content);
  } else {
    out << content;
  }
}

Assignment parse_assign(std::string const &text) {
  Assignment out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--assign expects name=value pairs, got '" + item + "'");
    }
    std::string name = item.substr(0, eq);
    try {
      out[name] = parse_integer(item.substr(eq + 1));
    } catch (std::invalid_argument const &) {
      throw UsageError("--assign: '" + item.substr(eq + 1) + "' is not an integer");
    }
  }
  return out;
}

int cmd_parse(RunConfig const &config, std::ostream &out) {
  out << render(parse_equation(equation_text(input(config, 0, "equation")))) << '\n';
  return kExitOk;
}

int cmd_skolemize(RunConfig const &config, std::ostream &out) {
  auto compiled = compile_skolem(parse_equation(equation_text(input(config, 0, "equation"))));
  emit(config, config.format == "json" ? serialize_skolem(compiled.system) : render(compiled.system), out);
  return kExitOk;
}

ReductionInstance compile_equation(std::string const &arg) {
  return compile(compile_skolem(parse_equation(equation_text(arg))).system);
}

int cmd_compile(RunConfig const &config, std::ostream &out) {
  auto inst = compile_equation(input(config, 0, "equation"));
  if (config.output) {
    write_file_atomic(*config.output, serialize_instance(inst));
    if (config.format == "table") {
      out << table_view(inst);
    } else {
      out << "wrote " << *config.output << ": n = " << inst.n() << ", "
          << inst.problem.generators.size() << " generators\n";
    }
  } else {
    out << (config.format == "table" ? table_view(inst) : serialize_instance(inst));
  }
  return kExitOk;
}

int cmd_witness(RunConfig const &config, std::ostream &out, std::ostream &err) {
  if (!config.assign) {
    throw UsageError("witness: --assign is required");
  }
  auto eq = parse_equation(equation_text(input(config, 0, "equation")));
  Assignment s = parse_assign(*config.assign);
  for (auto const &v : eq.variables()) {
    if (!s.count(v)) {
      throw UsageError("witness: --assign has no value for " + v);
    }
  }
  if (!satisfies(eq, s)) {
    err << "assignment " << render(s) << " does not solve " << render(eq) << '\n';
    return kExitNegative;
  }
  auto compiled = compile_skolem(eq);
  auto inst = compile(compiled.system);
  Word w = build_witness(inst, lift_solution(eq, s, compiled.system));
  emit(config, serialize_witness({instance_hash(inst), w}), out);
  return kExitOk;
}

int cmd_verify(RunConfig const &config, std::ostream &out, std::ostream &err) {
  auto inst = deserialize_instance(read_file(input(config, 0, "instance file")));
  auto file = deserialize_witness(read_file(input(config, 1, "witness file")));
  std::string hash = instance_hash(inst);
  if (hash != file.instance_hash) {
    err << "instance hash mismatch: witness was built for " << file.instance_hash << ", instance is "
        << hash << '\n';
    return kExitNegative;
  }
  for (std::size_t k = 0; k < file.word.size(); ++k) {
    if (file.word[k].generator >= inst.problem.generators.size()) {
      throw SchemaError("/word/" + std::to_string(k) + "/0", "generator index out of range");
    }
  }
  auto report = verify_witness(inst, file.word);
  out << render(report);
  return report.empty() ? kExitOk : kExitNegative;
}

int cmd_search(RunConfig const &config, std::ostream &out) {
  if (!config.search_len) {
    throw UsageError("search: --search-len is required");
  }
  auto inst = deserialize_instance(read_file(input(config, 0, "instance file")));
  SearchLimits limits{*config.search_len, std::nullopt, config.state_cap.value_or(default_state_cap())};
  if (config.coord_bound) {
    limits.coord_bound = parse_integer(*config.coord_bound);
  }
  auto result = bounded_membership_search(inst.problem, limits);
  out << to_string(result.status) << ": " << result.states << " states, " << result.pruned
      << " pruned, coordinate bound " << to_string(result.coord_bound) << '\n';
  if (!result.note.empty()) {
    out << result.note << '\n';
  }
  if (result.status == SearchStatus::Found) {
    out << "word: " << render(result.word, inst.problem) << '\n';
    if (config.output) {
      write_file_atomic(*config.output, serialize_witness({instance_hash(inst), result.word}));
    }
    return kExitOk;
  }
  return result.status == SearchStatus::Absent ? kExitNegative : kExitInconclusive;
}

nlohmann::json report_json(RoundtripReport const &report) {
  nlohmann::json doc;
  doc["equation"] = report.equation;
  doc["box"] = report.box;
  doc["n"] = report.n;
  doc["e"] = report.e;
  doc["d"] = report.d;
  doc["q"] = report.q;
  doc["generators"] = report.generator_count;
  doc["solvable"] = report.solvable();
  if (report.solution) {
    nlohmann::json s;
    for (auto const &[name, value] : *report.solution) {
      s[name] = to_string(value);
    }
    doc["solution"] = s;
  }
  if (report.witness_length) {
    doc["witness_length"] = to_string(*report.witness_length);
    doc["verified"] = report.verified;
  }
  if (report.search) {
    doc["search"] = {{"status", to_string(report.search->status)},
                     {"states", report.search->states},
                     {"coord_bound", to_string(report.search->coord_bound)}};
  }
  nlohmann::json timings;
  for (auto const &[stage, ms] : report.timings) {
    timings[stage] = ms;
  }
  doc["timings_ms"] = timings;
  if (report.failure) {
    doc["failure"] = {{"stage", report.failure->stage}, {"message", report.failure->message}};
  }
  return doc;
}

int cmd_roundtrip(RunConfig const &config, std::ostream &out) {
  if (!config.box) {
    throw UsageError("roundtrip: --box is required");
  }
  RoundtripOptions options;
  options.box = *config.box;
  options.search_len = config.search_len;
  if (config.coord_bound) {
    options.coord_bound = parse_integer(*config.coord_bound);
  }
  options.state_cap = config.state_cap.value_or(std::min(default_state_cap(), options.state_cap));
  auto report = reduction_roundtrip(equation_text(input(config, 0, "equation")), options);
  emit(config, config.format == "json" ? report_json(report).dump(2) + "\n" : render(report), out);
  if (report.failure) {
    return report.failure->stage == "parse" ? kExitDataError : kExitNegative;
  }
  if (report.search && report.search->status == SearchStatus::Inconclusive) {
    return kExitInconclusive;
  }
  return kExitOk;
}

void validate(RunConfig const &config) {
  if (!config.format.empty() && config.format != "table" && config.format != "json") {
    throw UsageError("--format must be table or json");
  }
  if (config.box && *config.box <= 0) {
    throw UsageError("--box must be positive");
  }
  if (config.search_len && *config.search_len == 0) {
    throw UsageError("--search-len must be positive");
  }
  if (config.state_cap && *config.state_cap == 0) {
    throw UsageError("--state-cap must be positive");
  }
  if (config.coord_bound) {
    try {
      if (parse_integer(*config.coord_bound) <= 0) {
        throw UsageError("--coord-bound must be positive");
      }
    } catch (std::invalid_argument const &) {
      throw UsageError("--coord-bound must be an integer");
    }
  }
}

}  // namespace

int run(RunConfig const &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    if (config.subcommand == "parse") return cmd_parse(config, out);
    if (config.subcommand == "skolemize") return cmd_skolemize(config, out);
    if (config.subcommand == "compile") return cmd_compile(config, out);
    if (config.subcommand == "witness") return cmd_witness(config, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, out, err);
    if (config.subcommand == "search") return cmd_search(config, out);
    if (config.subcommand == "roundtrip") return cmd_roundtrip(config, out);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (UsageError const &ex) {
    err << "usage: " << ex.what() << '\n';
    return kExitUsage;
  } catch (ParseError const &ex) {
    err << "parse error: " << ex.what() << '\n';
    return kExitDataError;
  } catch (SchemaError const &ex) {
    err << "schema error: " << ex.what() << '\n';
    return kExitDataError;
  } catch (IoError const &ex) {
    err << "io error: " << ex.what() << '\n';
    return kExitNoInput;
  } catch (LimitExceeded const &ex) {
    err << "limit exceeded: " << ex.what() << '\n';
    return kExitInconclusive;
  } catch (std::invalid_argument const &ex) {
    err << "error: " << ex.what() << '\n';
    return kExitDataError;
  } catch (std::exception const &ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitSoftware;
  }
}

int main_entry(int argc, char const *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Diophantine equations to submonoid membership in powers of the Heisenberg group"};
  app.require_subcommand(1);
  RunConfig config;

  auto add = [&](char const *name, char const *help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("inputs", config.inputs, "equation text, equation file, or instance/witness files")
        ->required();
    return sub;
  };
  auto *parse = add("parse", "echo the canonical form of an equation");
  auto *skolemize = add("skolemize", "print the normalized Skolem system");
  auto *compile_cmd = add("compile", "emit the membership instance");
  auto *witness = add("witness", "build a witness from a solution");
  auto *verify = add("verify", "check a witness against an instance");
  auto *search = add("search", "bounded breadth-first membership search");
  auto *roundtrip = add("roundtrip", "solve, reduce, and check the witness end to end");
  (void)parse;
  (void)verify;

  for (auto *sub : {skolemize, compile_cmd, roundtrip}) {
    sub->add_option("--format", config.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  }
  for (auto *sub : {skolemize, compile_cmd, witness, search, roundtrip}) {
    sub->add_option("-o,--output", config.output, "output file (written atomically)");
  }
  witness->add_option("--assign", config.assign, "solution, e.g. x=2,y=3")->required();
  for (auto *sub : {search, roundtrip}) {
    sub->add_option("--search-len", config.search_len, "maximum word length");
    sub->add_option("--coord-bound", config.coord_bound, "coordinate pruning bound");
    sub->add_option("--state-cap", config.state_cap, "maximum number of states");
  }
  search->get_option("--search-len")->required();
  roundtrip->add_option("--box", config.box, "brute-force bound on |values|")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const &ex) {
    err << "usage: " << ex.what() << '\n';
    return kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace heisred
