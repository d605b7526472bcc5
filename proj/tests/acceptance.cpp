// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "heisred/reduction.hpp"
#include "heisred/search.hpp"
#include "heisred/serialization.hpp"
#include "heisred/witness.hpp"
#include "oracles.hpp"

using namespace heisred;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, std::string const &what) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

int failures = 0;

void criterion(int number, char const *title, double limit_seconds, std::function<void(Verdict &)> body) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (std::exception const &ex) {
    v.ok = false;
    v.detail.str("");
    v.detail << "exception: " << ex.what();
  }
  std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
  bool in_time = spent.count() < limit_seconds;
  bool pass = v.ok && in_time;
  failures += !pass;
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.3f s of %.1f s", spent.count(), limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << "  " << number << ". " << title << " [" << timing << "]";
  std::string detail = v.detail.str();
  if (!detail.empty()) std::cout << ": " << detail;
  if (!in_time) std::cout << " (over time limit)";
  std::cout << std::endl;
}

}  // namespace

int main() {
  criterion(1, "group law agrees with 3x3 matrices", 1.0, [](Verdict &v) {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<long> coord(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> exponent(-20, 20);
    int pairs = 0;
    for (int k = 0; k < 10'000; ++k) {
      HeisElem x(coord(rng), coord(rng), coord(rng));
      HeisElem y(coord(rng), coord(rng), coord(rng));
      auto mx = oracle::embed(x);
      v.require(oracle::coords(x * y) == oracle::coords(oracle::mat_mul(mx, oracle::embed(y))), "product");
      v.require(oracle::coords(inverse(x)) == oracle::coords(oracle::unitriangular_inverse(mx)), "inverse");
      long e = exponent(rng);
      oracle::Mat acc = oracle::mat_identity();
      oracle::Mat step = e >= 0 ? mx : oracle::unitriangular_inverse(mx);
      for (long i = 0; i < std::abs(e); ++i) acc = oracle::mat_mul(acc, step);
      v.require(oracle::coords(power(x, e)) == oracle::coords(acc), "power");
      ++pairs;
    }
    v.detail << pairs << " pairs";
  });

  criterion(2, "(ac)^z b a^-z = b for z in [0, 200]", 0.1, [](Verdict &v) {
    HeisElem ac(1L, 0L, 1L);
    for (long z = 0; z <= 200; ++z) {
      HeisElem a_neg = power(HeisElem::a(), -z);
      v.require(power(ac, z) * HeisElem::b() * a_neg == HeisElem::b(), "z = " + std::to_string(z));
      v.require(power(HeisElem::a(), z) * power(HeisElem::c(), z) * a_neg * HeisElem::b() *
                        commutator(HeisElem::b(), a_neg) ==
                    HeisElem::b(),
                "commutator form, z = " + std::to_string(z));
    }
    v.detail << "201 exponents";
  });

  criterion(3, "addition gadget equals b1 b2 b3 iff z + z' = z''", 0.1, [](Verdict &v) {
    auto const &g = addition_gadget();
    PowerElem target = gadget_target(g);
    int matches = 0, triples = 0;
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b)
        for (long c = 0; c <= 5; ++c) {
          bool equal = template_product(g, {a, b, c}) == target;
          v.require(equal == (a + b == c), "triple mismatch");
          matches += equal;
          ++triples;
        }
    v.require(triples == 216 && matches == 21, "expected 21 of 216");
    v.detail << matches << " of " << triples << " triples match";
  });

  criterion(4, "multiplication gadget equals b1..b6 b8 iff z z' = z''", 0.1, [](Verdict &v) {
    auto const &g = multiplication_gadget();
    PowerElem target = gadget_target(g);
    int matches = 0, relation = 0, triples = 0;
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c) {
          bool equal = template_product(g, {a, b, c}) == target;
          v.require(equal == (a * b == c), "triple mismatch");
          matches += equal;
          relation += a * b == c;
          ++triples;
        }
    v.require(triples == 125 && matches == relation, "match count differs from the relation count");
    v.detail << matches << " of " << triples << " triples match; " << relation
             << " triples satisfy z z' = z'' by direct count";
  });

  criterion(5, "chain gadget equals b1..b6 for all z, z' <= 5", 0.1, [](Verdict &v) {
    auto const &g = chain_gadget();
    PowerElem target = gadget_target(g);
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b) v.require(template_product(g, {a, b, 0}) == target, "pair mismatch");
    v.detail << "36 pairs";
  });

  criterion(6, "Skolem system solvable (values <= 25) iff equation solvable (|values| <= 5)", 30.0,
            [](Verdict &v) {
              int solvable = 0, total = 0;
              for (auto const &entry : corpus::load()) {
                auto eq = parse_equation(entry.equation);
                auto compiled = compile_skolem(eq);
                auto found = oracle::solve_skolem(compiled.system, {25});
                bool integer_side = brute_solve(eq, 5, false).has_value();
                v.require(found.has_value() == integer_side, entry.equation);
                v.require(integer_side == entry.solvable, entry.equation + " corpus label");
                if (found) {
                  v.require(check_assignment(compiled.system, *found), entry.equation + " check");
                  v.require(satisfies(eq, oracle::project(compiled.system, *found)),
                            entry.equation + " projection");
                  ++solvable;
                }
                ++total;
              }
              v.detail << total << " equations, " << solvable << " solvable";
            });

  criterion(7, "every box solution lifts to a verified witness", 10.0, [](Verdict &v) {
    std::size_t witnesses = 0;
    for (auto const &entry : corpus::solvable()) {
      auto eq = parse_equation(entry.equation);
      auto compiled = compile_skolem(eq);
      auto inst = compile(compiled.system);
      v.require(inst.n() == 8 * inst.e + 4 * inst.d + inst.q + 1, entry.equation + " n");
      v.require(inst.problem.generators.size() == 14 * inst.e + 7 * inst.d, entry.equation + " generators");
      enumerate_solutions(eq, 5, false, [&](Assignment const &s) {
        Word w = build_witness(inst, lift_solution(eq, s, compiled.system));
        v.require(verify_witness(inst, w).empty(), entry.equation + " at " + render(s));
        ++witnesses;
        return true;
      });
    }
    v.detail << witnesses << " witnesses verified";
  });

  criterion(8, "marker locality of equality and constant violations", 1.0, [](Verdict &v) {
    std::size_t equalities = 0, constants = 0;
    for (auto const &entry : corpus::load()) {
      auto ns = compile_skolem(parse_equation(entry.equation)).system;
      auto inst = compile(ns);
      for (std::size_t k = 0; k < ns.q(); ++k) {
        auto s = oracle::solve_skolem(ns, {.bound = 6, .drop_equality = k});
        if (!s) continue;
        auto report = verify_witness(inst, build_witness(inst, *s));
        v.require(report.components() == std::vector<std::size_t>{8 * inst.e + 4 * inst.d + k + 1},
                  entry.equation + " equality " + std::to_string(k + 1));
        ++equalities;
      }
      auto s = oracle::solve_skolem(ns, {.bound = 6, .drop_constant = true});
      v.require(s.has_value(), entry.equation + " has no constant perturbation");
      if (s) {
        v.require(verify_witness(inst, build_witness(inst, *s)).components() == std::vector<std::size_t>{inst.n()},
                  entry.equation + " constant");
        ++constants;
      }
    }
    v.require(equalities > 0, "no equality perturbation found");
    v.detail << equalities << " equality and " << constants << " constant perturbations";
  });

  criterion(9, "bounded search agrees with the templates on micro-instances", 60.0, [](Verdict &v) {
    std::size_t cap = 10'000'000;
    auto conj = gadget_problem(conjugation_gadget());
    auto b = bounded_membership_search(conj, {9, std::nullopt, cap});
    v.require(b.status == SearchStatus::Found, "b not found");
    v.require(verify_witness(conj, b.word).empty(), "found word does not evaluate to b");
    v.require(word_length(b.word) == 1, "shortest witness for b is not the bare generator");

    auto add = gadget_problem(addition_gadget());
    auto found = bounded_membership_search(add, {9, std::nullopt, cap});
    v.require(found.status == SearchStatus::Found && verify_witness(add, found.word).empty(),
              "b1 b2 b3 not found");
    auto all = enumerate_witnesses(add, {9, std::nullopt, cap});
    v.require(!all.inconclusive && !all.truncated, "witness enumeration stopped early");
    bool template_seen = false;
    for (auto const &w : all.words) {
      v.require(verify_witness(add, w).empty(), "an enumerated word misses the target");
      auto shape = match_template(addition_gadget(), w);
      template_seen = template_seen || (shape && (*shape)[0] == 1 && (*shape)[1] == 1 && (*shape)[2] == 2);
    }
    v.require(template_seen, "(1, 1, 2) template word not among the witnesses");

    auto a1 = conj;
    a1.target = PowerElem::single(1, 1, HeisElem::a());
    auto absent = bounded_membership_search(a1, {8, std::nullopt, cap});
    v.require(absent.status == SearchStatus::Absent, "a1 not reported absent");
    v.detail << "b in " << b.states << " states; " << all.words.size() << " witnesses of b1 b2 b3; a1 absent after "
             << absent.states << " states";
  });

  criterion(10, "compile, serialize, deserialize, serialize is byte-identical", 1.0, [](Verdict &v) {
    std::size_t bytes = 0;
    for (auto const &entry : corpus::load()) {
      auto inst = compile(compile_skolem(parse_equation(entry.equation)).system);
      std::string first = serialize_instance(inst);
      std::string second = serialize_instance(deserialize_instance(first));
      v.require(first == second, entry.equation);
      v.require(instance_hash(deserialize_instance(second)) == instance_hash(inst), entry.equation + " hash");
      bytes += first.size();
    }
    v.detail << bytes << " bytes across the corpus";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
