#include "heisred/roundtrip.hpp"

#include <chrono>
#include <sstream>

#include "heisred/reduction.hpp"
#include "heisred/skolem.hpp"
#include "heisred/witness.hpp"

namespace heisred {

namespace {

class StageClock {
 public:
  explicit StageClock(RoundtripReport &report) : report_(report) {}

  template <typename F>
  bool run(std::string const &stage, F &&body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      body();
    } catch (std::exception const &ex) {
      report_.failure = StageFailure{stage, ex.what()};
      ok = false;
    }
    std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
    report_.timings.emplace_back(stage, spent.count());
    if (ok && report_.failure && report_.failure->stage == stage) {
      ok = false;
    }
    return ok;
  }

 private:
  RoundtripReport &report_;
};

}  // namespace

RoundtripReport reduction_roundtrip(std::string const &text, RoundtripOptions const &options) {
  RoundtripReport report;
  report.box = options.box;
  StageClock clock(report);

  std::optional<DiophEquation> eq;
  if (!clock.run("parse", [&] {
        eq = parse_equation(text);
        report.equation = render(*eq);
      })) {
    return report;
  }

  std::optional<CompiledSkolem> compiled;
  if (!clock.run("skolemize", [&] { compiled = compile_skolem(*eq); })) {
    return report;
  }

  std::optional<ReductionInstance> inst;
  if (!clock.run("compile", [&] {
        inst = compile(compiled->system);
        report.n = inst->n();
        report.e = inst->e;
        report.d = inst->d;
        report.q = inst->q;
        report.generator_count = inst->problem.generators.size();
        auto broken = instance_violations(*inst);
        if (!broken.empty()) {
          report.failure = StageFailure{"compile", broken.front()};
        }
      })) {
    return report;
  }

  if (!clock.run("solve", [&] {
        if (auto s = brute_solve(*eq, options.box, false)) {
          report.solution = *s;
        }
      })) {
    return report;
  }

  if (report.solution) {
    SkolemAssignment lifted;
    if (!clock.run("lift", [&] { lifted = lift_solution(*eq, *report.solution, compiled->system); })) {
      return report;
    }
    Word w;
    if (!clock.run("witness", [&] {
          w = build_witness(*inst, lifted);
          report.witness_length = word_length(w);
        })) {
      return report;
    }
    clock.run("verify", [&] {
      auto discrepancies = verify_witness(*inst, w);
      report.verified = discrepancies.empty();
      if (!report.verified) {
        report.failure = StageFailure{"verify", render(discrepancies)};
      }
    });
    return report;
  }

  if (options.search_len) {
    clock.run("search", [&] {
      SearchLimits limits{*options.search_len, options.coord_bound, options.state_cap};
      report.search = bounded_membership_search(inst->problem, limits);
      if (report.search->status == SearchStatus::Found) {
        report.failure = StageFailure{
            "search", "found a witness although the box holds no solution: " +
                          render(report.search->word, inst->problem)};
      }
    });
  }
  return report;
}

std::string render(RoundtripReport const &report) {
  std::ostringstream out;
  out << "equation: " << report.equation << '\n';
  out << "instance: H^" << report.n << ", e = " << report.e << ", d = " << report.d
      << ", q = " << report.q << ", " << report.generator_count << " generators\n";
  if (report.solution) {
    out << "solution (box " << report.box << "): " << render(*report.solution) << '\n';
  } else {
    out << "solution (box " << report.box << "): none\n";
  }
  if (report.witness_length) {
    out << "witness length: " << to_string(*report.witness_length) << '\n';
    out << "witness " << (report.verified ? "verified" : "rejected") << '\n';
  }
  if (report.search) {
    auto const &s = *report.search;
    out << "search: " << to_string(s.status) << " (" << s.states << " states, depth " << s.depth
        << ", coordinate bound " << to_string(s.coord_bound) << ")";
    if (!s.note.empty()) {
      out << "; " << s.note;
    }
    out << '\n';
  }
  out << "timings (ms):";
  for (auto const &[stage, ms] : report.timings) {
    std::ostringstream cell;
    cell.precision(3);
    cell << std::fixed << ms;
    out << ' ' << stage << '=' << cell.str();
  }
  out << '\n';
  if (report.failure) {
    out << "FAILED at " << report.failure->stage << ": " << report.failure->message << '\n';
  } else {
    out << "ok\n";
  }
  return out.str();
}

}  // namespace heisred
