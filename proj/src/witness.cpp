#include "heisred/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heisred {

Integer word_length(Word const &w) {
  Integer total = 0;
  for (auto const &entry : w) {
    total += entry.multiplicity;
  }
  return total;
}

Word compress(std::vector<std::size_t> const &sequence) {
  Word out;
  for (std::size_t g : sequence) {
    if (!out.empty() && out.back().generator == g) {
      out.back().multiplicity += 1;
    } else {
      out.push_back({g, 1});
    }
  }
  return out;
}

std::string render(Word const &w, MembershipProblem const &problem) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream out;
  bool first = true;
  for (auto const &entry : w) {
    out << (first ? "" : " ");
    first = false;
    out << (entry.generator < problem.generators.size() ? problem.generators[entry.generator].name
                                                        : "?" + std::to_string(entry.generator));
    if (entry.multiplicity != 1) {
      out << '^' << to_string(entry.multiplicity);
    }
  }
  return out.str();
}

namespace {

Integer const &skolem_value(SkolemAssignment const &s, std::size_t v) {
  auto it = s.find(v);
  if (it == s.end()) {
    throw std::out_of_range("assignment has no value for z" + std::to_string(v));
  }
  if (it->second < 0) {
    throw std::invalid_argument("z" + std::to_string(v) + " is negative");
  }
  return it->second;
}

}  // namespace

Word build_witness(ReductionInstance const &inst, SkolemAssignment const &s) {
  Word out;
  auto const &gens = inst.problem.generators;
  for (auto const &block : inst.layout) {
    for (std::size_t g = block.first_generator; g < block.first_generator + block.generator_count; ++g) {
      auto const &origin = gens.at(g).origin;
      Integer multiplicity = origin.role == ExponentRole::Once ? Integer(1) : skolem_value(s, origin.variable);
      out.push_back({g, multiplicity});
    }
  }
  return out;
}

Word template_word(Gadget const &gadget, std::array<Integer, 3> const &exponents) {
  Word out;
  for (std::size_t g = 0; g < gadget.generators.size(); ++g) {
    switch (gadget.generators[g].role) {
      case ExponentRole::First: out.push_back({g, exponents[0]}); break;
      case ExponentRole::Second: out.push_back({g, exponents[1]}); break;
      case ExponentRole::Third: out.push_back({g, exponents[2]}); break;
      case ExponentRole::Once: out.push_back({g, 1}); break;
    }
  }
  return out;
}

PowerElem evaluate_word(MembershipProblem const &problem, Word const &w) {
  PowerElem out(problem.ambient);
  for (auto const &entry : w) {
    if (entry.generator >= problem.generators.size()) {
      throw std::out_of_range("word uses generator " + std::to_string(entry.generator) + " of " +
                              std::to_string(problem.generators.size()));
    }
    if (entry.multiplicity < 0) {
      throw std::invalid_argument("negative multiplicity in a monoid word");
    }
    if (entry.multiplicity == 0) {
      continue;
    }
    out = out * power(problem.generators[entry.generator].element, entry.multiplicity);
  }
  return out;
}

std::vector<std::size_t> DiscrepancyReport::components() const {
  std::vector<std::size_t> out;
  for (auto const &entry : entries) {
    out.push_back(entry.component);
  }
  return out;
}

namespace {

template <typename RoleFn>
DiscrepancyReport diff(PowerElem const &got, PowerElem const &want, RoleFn role) {
  DiscrepancyReport report;
  auto const &g = got.components();
  auto const &w = want.components();
  std::vector<std::size_t> touched;
  for (auto const &[index, x] : g) {
    touched.push_back(index);
  }
  for (auto const &[index, x] : w) {
    touched.push_back(index);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (std::size_t index : touched) {
    HeisElem x = got.at(index);
    HeisElem y = want.at(index);
    if (x != y) {
      report.entries.push_back({index, x, y, role(index)});
    }
  }
  return report;
}

}  // namespace

DiscrepancyReport verify_witness(ReductionInstance const &inst, Word const &w) {
  return diff(evaluate_word(inst.problem, w), inst.problem.target,
              [&](std::size_t index) { return component_role(inst, index); });
}

DiscrepancyReport verify_witness(MembershipProblem const &problem, Word const &w) {
  return diff(evaluate_word(problem, w), problem.target,
              [](std::size_t index) { return "component " + std::to_string(index); });
}

std::string render(DiscrepancyReport const &report) {
  if (report.empty()) {
    return "verified: word evaluates to the target\n";
  }
  std::ostringstream out;
  out << report.entries.size() << " component(s) differ\n";
  for (auto const &entry : report.entries) {
    out << "  comp " << entry.component << " [" << entry.role << "]: got " << render(entry.got)
        << ", want " << render(entry.want) << '\n';
  }
  return out.str();
}

}  // namespace heisred
