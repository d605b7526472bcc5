#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "heisred/reduction.hpp"
#include "heisred/witness.hpp"
#include "oracles.hpp"

using namespace heisred;

namespace {

NormalizedSkolem direct(char const *text) { return normalize(skolemize(parse_equation(text))); }

SkolemAssignment values(std::initializer_list<long> list) {
  SkolemAssignment s;
  std::size_t k = 0;
  for (long v : list) s[++k] = v;
  return s;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("template words") {
  auto inst = compile(direct("x + y = 3"));
  REQUIRE(inst.d == 1);
  Word w = build_witness(inst, values({1, 1, 2}));
  CHECK(w.size() == 7);
  CHECK(word_length(w) == 9);

  auto mul = compile(direct("x*y = 0"));
  REQUIRE(mul.e == 1);
  Word zero = build_witness(mul, values({0, 0, 0}));
  REQUIRE(zero.size() == 14);
  for (auto const &entry : zero) {
    bool is_f = mul.problem.generators[entry.generator].name[0] == 'f';
    CHECK(entry.multiplicity == (is_f ? 1 : 0));
  }
  CHECK(word_length(zero) == 4);
  CHECK(verify_witness(mul, zero).empty());

  CHECK_THROWS_AS(build_witness(inst, values({1, 1})), std::out_of_range);
}

TEST_CASE("conjugation witness") {
  auto const &g = conjugation_gadget();
  auto problem = gadget_problem(g);
  Word w = template_word(g, {3, 0, 0});
  CHECK(w == Word{{0, 3}, {1, 1}, {2, 3}});
  CHECK(render(w, problem) == "g1^3 b g2^3");
  CHECK(evaluate_word(problem, w) == PowerElem::single(1, 1, HeisElem::b()));
  CHECK(verify_witness(problem, w).empty());
}

TEST_CASE("evaluation") {
  auto problem = gadget_problem(addition_gadget());
  CHECK(evaluate_word(problem, {}).is_identity());
  CHECK(render(Word{}, problem) == "1");
  auto report = verify_witness(problem, template_word(addition_gadget(), {1, 1, 1}));
  CHECK(report.components() == std::vector<std::size_t>{4});
  CHECK(report.entries[0].got == HeisElem::c());
  CHECK(report.entries[0].want.is_identity());
  CHECK_THROWS_AS(evaluate_word(problem, {{7, 1}}), std::out_of_range);
  CHECK_THROWS_AS(evaluate_word(problem, {{0, -1}}), std::invalid_argument);
  CHECK(compress({0, 0, 1, 2, 2, 2, 0}) == Word{{0, 2}, {1, 1}, {2, 3}, {0, 1}});
}

TEST_CASE("witnesses from solutions verify") {
  for (auto const &entry : corpus::solvable()) {
    CAPTURE(entry.equation);
    auto eq = parse_equation(entry.equation);
    auto compiled = compile_skolem(eq);
    auto inst = compile(compiled.system);
    int solutions = 0;
    enumerate_solutions(eq, 3, false, [&](Assignment const &s) {
      auto report = verify_witness(inst, build_witness(inst, lift_solution(eq, s, compiled.system)));
      CHECK(report.empty());
      ++solutions;
      return true;
    });
    CHECK(solutions > 0);
  }
}

TEST_CASE("a violated equality shows up only in its marker component") {
  int perturbed = 0;
  for (auto const &entry : corpus::load()) {
    CAPTURE(entry.equation);
    auto ns = compile_skolem(parse_equation(entry.equation)).system;
    auto inst = compile(ns);
    for (std::size_t k = 0; k < ns.q(); ++k) {
      CAPTURE(k);
      auto s = oracle::solve_skolem(ns, {.bound = 6, .drop_equality = k});
      if (!s) continue;
      REQUIRE((*s).at(ns.equalities[k].left) != (*s).at(ns.equalities[k].right));
      auto report = verify_witness(inst, build_witness(inst, *s));
      CHECK(report.components() == std::vector<std::size_t>{8 * inst.e + 4 * inst.d + k + 1});
      CHECK(report.entries[0].role.find("marker " + std::to_string(k + 1)) == 0);
      ++perturbed;
    }
  }
  CHECK(perturbed > 20);
}

TEST_CASE("a wrong constant shows up only in the last component") {
  int perturbed = 0;
  for (auto const &entry : corpus::load()) {
    CAPTURE(entry.equation);
    auto ns = compile_skolem(parse_equation(entry.equation)).system;
    auto inst = compile(ns);
    auto s = oracle::solve_skolem(ns, {.bound = 6, .drop_constant = true});
    REQUIRE(s);
    auto report = verify_witness(inst, build_witness(inst, *s));
    CHECK(report.components() == std::vector<std::size_t>{inst.n()});
    ++perturbed;
  }
  CHECK(perturbed == 8);
}

TEST_CASE("single-block instances: witness verifies iff the assignment checks") {
  // solution counts of the block relation with the constant fixed, over [0, 4]^3
  std::vector<std::pair<char const *, int>> cases{{"x*y = 6", 0}, {"x + y = 3", 4}, {"x*y = 0", 9}, {"x + y = 0", 1}};
  for (auto const &[text, expected] : cases) {
    CAPTURE(text);
    auto ns = direct(text);
    auto inst = compile(ns);
    REQUIRE(inst.layout.size() == 1);
    int agreeing = 0;
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c) {
          auto s = values({a, b, c});
          bool verified = verify_witness(inst, build_witness(inst, s)).empty();
          CHECK(verified == check_assignment(ns, s));
          agreeing += verified;
        }
    CHECK(agreeing == expected);
  }
}

TEST_CASE("whole blocks of a witness commute") {
  for (auto const &entry : corpus::solvable()) {
    CAPTURE(entry.equation);
    auto eq = parse_equation(entry.equation);
    auto compiled = compile_skolem(eq);
    auto inst = compile(compiled.system);
    auto s = brute_solve(eq, 3, false);
    REQUIRE(s);
    Word w = build_witness(inst, lift_solution(eq, *s, compiled.system));
    std::vector<Word> segments;
    for (auto const &block : inst.layout) {
      segments.emplace_back(w.begin() + static_cast<long>(block.first_generator),
                            w.begin() + static_cast<long>(block.first_generator + block.generator_count));
    }
    PowerElem reference = evaluate_word(inst.problem, w);
    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      Word shuffled;
      for (std::size_t k : order) shuffled.insert(shuffled.end(), segments[k].begin(), segments[k].end());
      CHECK(evaluate_word(inst.problem, shuffled) == reference);
    }
  }
}

TEST_CASE("discrepancy rendering") {
  auto inst = compile(direct("x^2 = 4"));
  auto report = verify_witness(inst, build_witness(inst, values({1, 4, 4})));
  CHECK(sorted(report.components()) == std::vector<std::size_t>{9});
  auto both = verify_witness(inst, build_witness(inst, values({1, 2, 2})));
  CHECK(sorted(both.components()) == std::vector<std::size_t>{9, 10});
  std::string text = render(report);
  CHECK(text.find("marker 1") != std::string::npos);
  CHECK(render(verify_witness(inst, build_witness(inst, values({2, 2, 4})))) ==
        "verified: word evaluates to the target\n");
}
