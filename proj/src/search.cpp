#include "heisred/search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace heisred {

std::size_t default_state_cap() {
  if (char const *text = std::getenv("HEISRED_STATE_CAP")) {
    char *end = nullptr;
    unsigned long long value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultStateCap;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Integer max_abs(HeisElem const &x) {
  return max(max(abs(x.alpha()), abs(x.beta())), abs(x.gamma()));
}

Integer max_abs(PowerElem const &u) {
  Integer out = 0;
  for (auto const &[index, x] : u.components()) {
    out = max(out, max_abs(x));
  }
  return out;
}

// Bound above which beta * alpha' can overflow before the box check.
constexpr std::int64_t kBoundCeiling = std::int64_t{1} << 60;

// States flattened to (alpha, beta, gamma) over the components any
// generator or the target touches.
class StateSpace {
 public:
  StateSpace(MembershipProblem const &problem, Integer const &bound) {
    std::set<std::size_t> used;
    for (auto const &g : problem.generators) {
      for (auto const &[index, x] : g.element.components()) {
        used.insert(index);
      }
    }
    for (auto const &[index, x] : problem.target.components()) {
      used.insert(index);
    }
    components_.assign(used.begin(), used.end());
    width_ = 3 * components_.size();
    bound_ = bound > kBoundCeiling ? kBoundCeiling : to_int64(bound);

    for (auto const &g : problem.generators) {
      auto flat = flatten(g.element);
      usable_.push_back(flat.has_value());
      generators_.push_back(flat.value_or(std::vector<std::int64_t>(width_, 0)));
    }
    auto flat_target = flatten(problem.target);
    target_reachable_ = flat_target.has_value();
    target_ = flat_target.value_or(std::vector<std::int64_t>(width_, 0));
  }

  std::size_t width() const { return width_; }
  std::size_t generator_count() const { return generators_.size(); }
  bool usable(std::size_t g) const { return usable_[g]; }
  bool target_reachable() const { return target_reachable_; }
  std::vector<std::int64_t> const &target() const { return target_; }

  // out = state * generator g; false when a coordinate leaves the box.
  bool step(std::int64_t const *state, std::size_t g, std::int64_t *out) const {
    auto const &gen = generators_[g];
    for (std::size_t k = 0; k < width_; k += 3) {
      std::int64_t a = 0, b = 0, c = 0, cross = 0;
      if (__builtin_add_overflow(state[k], gen[k], &a) ||
          __builtin_add_overflow(state[k + 1], gen[k + 1], &b) ||
          __builtin_mul_overflow(state[k + 1], gen[k], &cross) ||
          __builtin_add_overflow(state[k + 2], gen[k + 2], &c) || __builtin_add_overflow(c, cross, &c)) {
        return false;
      }
      if (a > bound_ || a < -bound_ || b > bound_ || b < -bound_ || c > bound_ || c < -bound_) {
        return false;
      }
      out[k] = a;
      out[k + 1] = b;
      out[k + 2] = c;
    }
    return true;
  }

 private:
  std::optional<std::vector<std::int64_t>> flatten(PowerElem const &u) const {
    std::vector<std::int64_t> out(width_, 0);
    for (std::size_t k = 0; k < components_.size(); ++k) {
      HeisElem x = u.at(components_[k]);
      for (auto const *coord : {&x.alpha(), &x.beta(), &x.gamma()}) {
        if (!fits_int64(*coord) || abs(*coord) > bound_) {
          return std::nullopt;
        }
      }
      out[3 * k] = to_int64(x.alpha());
      out[3 * k + 1] = to_int64(x.beta());
      out[3 * k + 2] = to_int64(x.gamma());
    }
    return out;
  }

  std::vector<std::size_t> components_;
  std::size_t width_ = 0;
  std::int64_t bound_ = 0;
  std::vector<std::vector<std::int64_t>> generators_;
  std::vector<bool> usable_;
  std::vector<std::int64_t> target_;
  bool target_reachable_ = false;
};

// Interned states in one flat arena; ids are insertion order.
class StateTable {
 public:
  explicit StateTable(std::size_t width)
      : width_(width), index_(16, Hash{this}, Equal{this}) {}

  std::size_t size() const { return count_; }
  std::int64_t const *at(std::size_t id) const { return arena_.data() + id * width_; }

  // Scratch slot past the last state; valid until the next intern.
  std::int64_t *scratch() {
    arena_.resize((count_ + 1) * width_);
    return arena_.data() + count_ * width_;
  }

  // Interns the scratch state; returns its id and whether it is new.
  std::pair<std::size_t, bool> intern_scratch() {
    auto it = index_.find(count_);
    if (it != index_.end()) {
      return {*it, false};
    }
    index_.insert(count_);
    return {count_++, true};
  }

 private:
  struct Hash {
    StateTable const *table;
    std::size_t operator()(std::size_t id) const {
      std::uint64_t h = 0x9E3779B97F4A7C15ull;
      std::int64_t const *p = table->arena_.data() + id * table->width_;
      for (std::size_t k = 0; k < table->width_; ++k) {
        std::uint64_t x = static_cast<std::uint64_t>(p[k]) + h;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        h = x ^ (x >> 31);
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct Equal {
    StateTable const *table;
    bool operator()(std::size_t x, std::size_t y) const {
      auto const *p = table->arena_.data();
      std::size_t w = table->width_;
      return std::equal(p + x * w, p + (x + 1) * w, p + y * w);
    }
  };

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::int64_t> arena_;
  std::unordered_set<std::size_t, Hash, Equal> index_;
};

bool equals(std::int64_t const *state, std::vector<std::int64_t> const &target) {
  return std::equal(target.begin(), target.end(), state);
}

Integer resolve_bound(MembershipProblem const &problem, SearchLimits const &limits) {
  if (limits.coord_bound) {
    if (*limits.coord_bound < 0) {
      throw std::invalid_argument("coordinate bound must be nonnegative");
    }
    return *limits.coord_bound;
  }
  return default_coord_bound(problem, limits.max_len);
}

}  // namespace

Integer default_coord_bound(MembershipProblem const &problem, std::size_t max_len) {
  Integer gen_max = 0;
  for (auto const &g : problem.generators) {
    gen_max = max(gen_max, max_abs(g.element));
  }
  return max_abs(problem.target) + Integer(static_cast<unsigned long>(max_len)) * gen_max;
}

SearchResult bounded_membership_search(MembershipProblem const &problem, SearchLimits const &limits) {
  SearchResult result;
  result.coord_bound = resolve_bound(problem, limits);
  StateSpace space(problem, result.coord_bound);
  if (!space.target_reachable()) {
    result.note = "target lies outside coordinate bound " + to_string(result.coord_bound);
    return result;
  }

  StateTable table(space.width());
  std::fill_n(table.scratch(), space.width(), 0);
  table.intern_scratch();
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};

  auto trace = [&](std::size_t id) {
    std::vector<std::size_t> sequence;
    while (id != 0) {
      sequence.push_back(via[id]);
      id = parent[id];
    }
    std::reverse(sequence.begin(), sequence.end());
    return compress(sequence);
  };

  if (equals(table.at(0), space.target())) {
    result.status = SearchStatus::Found;
    result.states = 1;
    return result;
  }

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (std::size_t depth = 1; depth <= limits.max_len; ++depth) {
    for (std::size_t id = level_begin; id < level_end; ++id) {
      for (std::size_t g = 0; g < space.generator_count(); ++g) {
        if (!space.usable(g)) {
          ++result.pruned;
          continue;
        }
        std::int64_t *child = table.scratch();
        if (!space.step(table.at(id), g, child)) {
          ++result.pruned;
          continue;
        }
        auto [child_id, fresh] = table.intern_scratch();
        if (!fresh) {
          continue;
        }
        parent.push_back(id);
        via.push_back(g);
        if (equals(table.at(child_id), space.target())) {
          result.status = SearchStatus::Found;
          result.word = trace(child_id);
          result.states = table.size();
          result.depth = depth - 1;
          return result;
        }
        if (table.size() >= limits.state_cap) {
          result.status = SearchStatus::Inconclusive;
          result.states = table.size();
          result.depth = depth - 1;
          result.note = "state cap " + std::to_string(limits.state_cap) + " reached at length " +
                        std::to_string(depth);
          return result;
        }
      }
    }
    level_begin = level_end;
    level_end = table.size();
    result.depth = depth;
    if (level_begin == level_end) {
      break;
    }
  }
  result.status = SearchStatus::Absent;
  result.states = table.size();
  if (result.pruned > 0) {
    result.note = "absent within length " + std::to_string(limits.max_len) + " and coordinate bound " +
                  to_string(result.coord_bound);
  } else {
    result.note = "absent within length " + std::to_string(limits.max_len);
  }
  return result;
}

WitnessEnumeration enumerate_witnesses(MembershipProblem const &problem, SearchLimits const &limits,
                                       std::size_t word_limit) {
  WitnessEnumeration out;
  StateSpace space(problem, resolve_bound(problem, limits));
  if (!space.target_reachable()) {
    return out;
  }
  StateTable table(space.width());
  std::fill_n(table.scratch(), space.width(), 0);
  table.intern_scratch();

  std::size_t stride = limits.max_len + 1;
  std::unordered_map<std::size_t, bool> alive;  // id * stride + remaining
  std::vector<std::size_t> path;
  bool stop = false;

  std::function<bool(std::size_t, std::size_t)> explore = [&](std::size_t id, std::size_t remaining) {
    bool found = false;
    if (equals(table.at(id), space.target())) {
      found = true;
      if (out.words.size() >= word_limit) {
        out.truncated = true;
        stop = true;
        return true;
      }
      out.words.push_back(compress(path));
    }
    if (remaining == 0) {
      return found;
    }
    for (std::size_t g = 0; g < space.generator_count() && !stop; ++g) {
      if (!space.usable(g)) {
        continue;
      }
      std::int64_t *child = table.scratch();
      if (!space.step(table.at(id), g, child)) {
        continue;
      }
      auto [child_id, fresh] = table.intern_scratch();
      if (fresh && table.size() >= limits.state_cap) {
        out.inconclusive = true;
        stop = true;
        break;
      }
      std::size_t key = child_id * stride + (remaining - 1);
      auto memo = alive.find(key);
      if (memo != alive.end() && !memo->second) {
        continue;
      }
      path.push_back(g);
      bool reached = explore(child_id, remaining - 1);
      path.pop_back();
      if (!stop) {
        alive[key] = reached;
      }
      found = found || reached;
    }
    return found;
  };
  explore(0, limits.max_len);
  return out;
}

std::optional<std::array<Integer, 3>> match_template(Gadget const &gadget, Word const &w) {
  std::size_t count = gadget.generators.size();
  std::vector<Integer> multiplicity(count, 0);
  std::size_t next = 0;
  for (auto const &entry : w) {
    if (entry.multiplicity == 0) {
      continue;
    }
    if (entry.generator < next || entry.generator >= count) {
      return std::nullopt;
    }
    multiplicity[entry.generator] = entry.multiplicity;
    next = entry.generator + 1;
  }
  std::array<std::optional<Integer>, 3> seen;
  for (std::size_t g = 0; g < count; ++g) {
    ExponentRole role = gadget.generators[g].role;
    if (role == ExponentRole::Once) {
      if (multiplicity[g] != 1) {
        return std::nullopt;
      }
      continue;
    }
    auto &slot = seen[static_cast<std::size_t>(role)];
    if (slot && *slot != multiplicity[g]) {
      return std::nullopt;
    }
    slot = multiplicity[g];
  }
  return std::array<Integer, 3>{seen[0].value_or(0), seen[1].value_or(0), seen[2].value_or(0)};
}

}  // namespace heisred
