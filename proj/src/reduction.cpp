#include "heisred/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heisred {

namespace {

constexpr std::size_t kMulWidth = 8;
constexpr std::size_t kAddWidth = 4;
constexpr std::size_t kMulGenerators = 14;
constexpr std::size_t kAddGenerators = 7;

std::size_t slot_number(std::string const &slot) { return std::stoul(slot.substr(1)); }

std::size_t role_operand(ExponentRole role) {
  switch (role) {
    case ExponentRole::First: return 0;
    case ExponentRole::Second: return 1;
    case ExponentRole::Third: return 2;
    case ExponentRole::Once: break;
  }
  return 3;
}

std::vector<Generator> block_generators(Gadget const &gadget, std::size_t block_index,
                                        std::size_t ambient, std::size_t offset,
                                        std::array<std::size_t, 3> const &operands,
                                        std::size_t g_base, std::size_t f_base) {
  std::vector<Generator> out;
  for (auto const &g : gadget.generators) {
    std::size_t number = slot_number(g.slot);
    bool is_f = g.slot[0] == 'f';
    std::string name = (is_f ? "f" : "g") + std::to_string((is_f ? f_base : g_base) + number);
    std::size_t operand = role_operand(g.role);
    std::size_t variable = operand < 3 ? operands[operand] : 0;
    out.push_back({name, place(g.factors, ambient, offset),
                   {gadget.kind, block_index, g.slot, g.role, variable}});
  }
  return out;
}

}  // namespace

std::size_t ambient_power(NormalizedSkolem const &ns) {
  if (ns.degenerate) {
    return 1;
  }
  return kMulWidth * ns.e() + kAddWidth * ns.d() + ns.q() + 1;
}

std::vector<Generator> mul_block_generators(std::size_t i, NormalizedSkolem const &ns) {
  if (i == 0 || i > ns.e()) {
    throw std::out_of_range("multiplication block " + std::to_string(i) + " outside [1, " +
                            std::to_string(ns.e()) + "]");
  }
  return block_generators(multiplication_gadget(), i, ambient_power(ns), kMulWidth * (i - 1),
                          ns.mul[i - 1], 10 * (i - 1), 4 * (i - 1));
}

std::vector<Generator> add_block_generators(std::size_t j, NormalizedSkolem const &ns) {
  if (j == 0 || j > ns.d()) {
    throw std::out_of_range("addition block " + std::to_string(j) + " outside [1, " +
                            std::to_string(ns.d()) + "]");
  }
  std::size_t e = ns.e();
  return block_generators(addition_gadget(), j, ambient_power(ns),
                          kMulWidth * e + kAddWidth * (j - 1), ns.add[j - 1],
                          10 * e + 6 * (j - 1), 4 * e + (j - 1));
}

std::size_t carrier_of(std::size_t variable, NormalizedSkolem const &ns) {
  if (ns.degenerate) {
    if (variable != 1) {
      throw std::out_of_range("degenerate system has only z1");
    }
    return 0;
  }
  std::size_t e = ns.e();
  if (variable == 0 || variable > ns.variable_count()) {
    throw std::out_of_range("z" + std::to_string(variable) + " is carried by no generator");
  }
  std::size_t block = (variable - 1) / 3;
  std::size_t position = (variable - 1) % 3;
  if (block < e) {
    // g1, g2, g9 in template order g1 g2 f1 g3 g4 f2 g5 g6 f3 g7 g8 g9 f4 g10
    static constexpr std::array<std::size_t, 3> kMulCarrier{0, 1, 11};
    return kMulGenerators * block + kMulCarrier[position];
  }
  return kMulGenerators * e + kAddGenerators * (block - e) + position;
}

std::vector<Generator> apply_markers(std::vector<Generator> gens, NormalizedSkolem const &ns) {
  std::size_t n = ambient_power(ns);
  std::size_t base = n - ns.q() - 1;
  auto mark = [&](std::size_t variable, std::size_t component, long exponent) {
    std::size_t carrier = carrier_of(variable, ns);
    if (carrier >= gens.size()) {
      throw std::out_of_range("carrier of z" + std::to_string(variable) + " not among the generators");
    }
    gens[carrier].element.multiply_component(component, HeisElem(0L, 0L, exponent));
  };
  for (std::size_t k = 1; k <= ns.q(); ++k) {
    auto const &eq = ns.equalities[k - 1];
    mark(eq.left, base + k, 1);
    mark(eq.right, base + k, -1);
  }
  if (!ns.degenerate) {
    mark(ns.const_var, n, 1);
  }
  return gens;
}

PowerElem target_element(NormalizedSkolem const &ns) {
  std::size_t n = ambient_power(ns);
  PowerElem target(n);
  auto const &b = HeisElem::b();
  for (std::size_t i = 0; i < ns.e(); ++i) {
    for (std::size_t local : {1, 2, 3, 4, 5, 6, 8}) {
      target.set(kMulWidth * i + local, b);
    }
  }
  for (std::size_t j = 0; j < ns.d(); ++j) {
    for (std::size_t local : {1, 2, 3}) {
      target.set(kMulWidth * ns.e() + kAddWidth * j + local, b);
    }
  }
  target.set(n, HeisElem(Integer(0), Integer(0), ns.const_value));
  return target;
}

ReductionInstance compile(NormalizedSkolem const &ns) {
  ReductionInstance inst;
  inst.e = ns.e();
  inst.d = ns.d();
  inst.q = ns.q();
  inst.upsilon = ns.upsilon;
  inst.degenerate = ns.degenerate;
  std::size_t n = ambient_power(ns);
  inst.problem.ambient = n;
  inst.problem.target = target_element(ns);

  if (ns.degenerate) {
    inst.problem.generators.push_back(
        {"g1", PowerElem::single(1, 1, HeisElem::c()), {BlockKind::Degenerate, 1, "g1", ExponentRole::First, 1}});
    inst.layout.push_back({BlockKind::Degenerate, 1, 1, 1, 0, 1, {1, 0, 0}});
    inst.constant_marker = {1, 1, 0, ns.const_value};
    return inst;
  }

  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= ns.e(); ++i) {
    inst.layout.push_back({BlockKind::Mul, i, kMulWidth * (i - 1) + 1, kMulWidth, gens.size(),
                           kMulGenerators, ns.mul[i - 1]});
    auto block = mul_block_generators(i, ns);
    gens.insert(gens.end(), block.begin(), block.end());
  }
  for (std::size_t j = 1; j <= ns.d(); ++j) {
    inst.layout.push_back({BlockKind::Add, j, kMulWidth * ns.e() + kAddWidth * (j - 1) + 1,
                           kAddWidth, gens.size(), kAddGenerators, ns.add[j - 1]});
    auto block = add_block_generators(j, ns);
    gens.insert(gens.end(), block.begin(), block.end());
  }
  inst.problem.generators = apply_markers(std::move(gens), ns);

  std::size_t base = n - ns.q() - 1;
  for (std::size_t k = 1; k <= ns.q(); ++k) {
    auto const &eq = ns.equalities[k - 1];
    inst.equality_markers.push_back(
        {k, base + k, eq.left, eq.right, carrier_of(eq.left, ns), carrier_of(eq.right, ns)});
  }
  inst.constant_marker = {n, ns.const_var, carrier_of(ns.const_var, ns), ns.const_value};
  return inst;
}

std::vector<std::string> instance_violations(ReductionInstance const &inst) {
  std::vector<std::string> out;
  std::size_t n = inst.n();
  if (inst.degenerate) {
    if (n != 1 || inst.problem.generators.size() != 1) {
      out.push_back("degenerate instance must be H^1 with one generator");
    }
    return out;
  }
  std::size_t blocks_end = kMulWidth * inst.e + kAddWidth * inst.d;
  if (n != blocks_end + inst.q + 1) {
    out.push_back("n = " + std::to_string(n) + " differs from 8e + 4d + q + 1");
  }
  if (inst.problem.generators.size() != kMulGenerators * inst.e + kAddGenerators * inst.d) {
    out.push_back("generator count differs from 14e + 7d");
  }
  if (inst.equality_markers.size() != inst.q) {
    out.push_back("marker count differs from q");
  }
  for (auto const &block : inst.layout) {
    std::size_t lo = block.first_component;
    std::size_t hi = lo + block.width - 1;
    for (std::size_t g = block.first_generator; g < block.first_generator + block.generator_count; ++g) {
      if (g >= inst.problem.generators.size()) {
        out.push_back("layout refers to missing generator " + std::to_string(g));
        continue;
      }
      auto const &gen = inst.problem.generators[g];
      for (auto const &[index, x] : gen.element.components()) {
        bool in_block = lo <= index && index <= hi;
        bool in_markers = index > blocks_end;
        if (!in_block && !in_markers) {
          out.push_back(gen.name + " touches component " + std::to_string(index) + " outside its block");
        }
        if (in_markers && !x.is_central()) {
          out.push_back(gen.name + " has a non-central marker factor");
        }
      }
    }
  }
  PowerElem want(n);
  for (auto const &block : inst.layout) {
    std::vector<std::size_t> locals =
        block.kind == BlockKind::Mul ? std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 8}
                                     : std::vector<std::size_t>{1, 2, 3};
    for (std::size_t local : locals) {
      want.set(block.first_component + local - 1, HeisElem::b());
    }
  }
  want.set(n, HeisElem(Integer(0), Integer(0), inst.constant_marker.value));
  if (want != inst.problem.target) {
    out.push_back("target differs from b(1) b(2) c_n^|υ|");
  }
  return out;
}

std::string component_role(ReductionInstance const &inst, std::size_t component) {
  if (component == inst.constant_marker.component) {
    return "constant ζ" + std::to_string(inst.constant_marker.variable) + " = " +
           to_string(inst.constant_marker.value);
  }
  for (auto const &m : inst.equality_markers) {
    if (m.component == component) {
      return "marker " + std::to_string(m.k) + " (P_" + std::to_string(inst.e + inst.d + m.k) +
             ": ζ" + std::to_string(m.left) + " = ζ" + std::to_string(m.right) + ")";
    }
  }
  for (auto const &block : inst.layout) {
    if (block.first_component <= component && component < block.first_component + block.width) {
      return to_string(block.kind) + " block " + std::to_string(block.index) + ", copy H(" +
             std::to_string(component - block.first_component + 1) + ")";
    }
  }
  return "component " + std::to_string(component);
}

namespace {

// Width in code points so the Greek exponent symbols line up.
std::size_t shown_width(std::string const &text) {
  std::size_t shown = 0;
  for (unsigned char ch : text) {
    shown += (ch & 0xC0) != 0x80;
  }
  return shown;
}

std::string pad(std::string const &text, std::size_t width) {
  std::size_t shown = shown_width(text);
  return text + std::string(width > shown ? width - shown : 0, ' ');
}

}  // namespace

std::string table_view(ReductionInstance const &inst, std::size_t block_position) {
  if (block_position >= inst.layout.size()) {
    throw std::out_of_range("no block at position " + std::to_string(block_position));
  }
  auto const &block = inst.layout[block_position];
  auto const &gens = inst.problem.generators;

  std::set<std::size_t> rows;
  for (std::size_t k = 0; k < block.width; ++k) {
    rows.insert(block.first_component + k);
  }
  for (std::size_t g = block.first_generator; g < block.first_generator + block.generator_count; ++g) {
    for (auto const &[index, x] : gens[g].element.components()) {
      rows.insert(index);
    }
  }

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"", "target"};
  for (std::size_t g = block.first_generator; g < block.first_generator + block.generator_count; ++g) {
    std::string symbol = exponent_symbol(gens[g].origin.role);
    header.push_back(gens[g].name + (symbol.empty() ? "" : "^" + symbol));
  }
  table.push_back(header);
  for (std::size_t row : rows) {
    std::vector<std::string> line{"H(" + std::to_string(row) + ")"};
    HeisElem want = inst.problem.target.at(row);
    line.push_back(want.is_identity() && row > block.first_component + block.width - 1 ? "" : render(want));
    for (std::size_t g = block.first_generator; g < block.first_generator + block.generator_count; ++g) {
      HeisElem x = gens[g].element.at(row);
      line.push_back(x.is_identity() ? "" : render(x));
    }
    table.push_back(line);
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (auto const &line : table) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      widths[k] = std::max(widths[k], shown_width(line[k]));
    }
  }
  std::ostringstream out;
  out << to_string(block.kind) << " block " << block.index << ": components "
      << block.first_component << ".." << block.first_component + block.width - 1;
  if (block.kind != BlockKind::Degenerate) {
    out << "; ζ = ζ" << block.operands[0] << ", ζ′ = ζ" << block.operands[1] << ", ζ″ = ζ"
        << block.operands[2];
  }
  out << '\n';
  for (auto const &line : table) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      out << (k == 0 ? "" : " | ") << pad(line[k], widths[k]);
    }
    out << '\n';
  }
  return out.str();
}

std::string table_view(ReductionInstance const &inst) {
  std::ostringstream out;
  out << "H^" << inst.n() << ": e = " << inst.e << ", d = " << inst.d << ", q = " << inst.q
      << ", " << inst.problem.generators.size() << " generators\n";
  for (std::size_t k = 0; k < inst.layout.size(); ++k) {
    out << '\n' << table_view(inst, k);
  }
  return out.str();
}

}  // namespace heisred
