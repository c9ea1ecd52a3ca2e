// Copyright 2026 The admg-local Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "admg/ci_engine.h"

#include <bit>
#include <optional>
#include <string>
#include <utility>

namespace admg {
namespace {

using Mask = std::uint32_t;

constexpr std::size_t kHardCap = 15;

// Places bit i of `mask` at bit 2i.
std::uint32_t Spread(Mask mask) {
  std::uint32_t out = 0;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out |= std::uint32_t{1} << (2 * i);
  }
  return out;
}

struct Triple {
  Mask x;
  Mask z;
  Mask y;
};

Triple ToTriple(const CiStatement& s) {
  return {static_cast<Mask>(s.x().ToMask()), static_cast<Mask>(s.z().ToMask()),
          static_cast<Mask>(s.y().ToMask())};
}

class Engine {
 public:
  Engine(std::size_t n, AxiomSet axioms, std::optional<std::uint32_t> target)
      : full_((Mask{1} << n) - 1),
        axioms_(axioms),
        target_(target),
        bits_(((std::size_t{1} << (2 * n)) + 63) / 64, 0) {
    spread_.resize(std::size_t{1} << n);
    for (Mask m = 0; m <= full_; ++m) spread_[m] = Spread(m);
  }

  std::uint32_t Key(Mask x, Mask z, Mask y) const {
    const std::uint32_t common = 2 * spread_[z];
    const std::uint32_t word = spread_[x] + common + 3 * spread_[y];
    const std::uint32_t swapped = spread_[y] + common + 3 * spread_[x];
    return word < swapped ? word : swapped;
  }

  bool Has(Mask x, Mask z, Mask y) const {
    const std::uint32_t k = Key(x, z, y);
    return (bits_[k >> 6] >> (k & 63)) & 1u;
  }

  void Insert(Mask x, Mask z, Mask y) {
    const std::uint32_t k = Key(x, z, y);
    std::uint64_t& word = bits_[k >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (word & bit) return;
    word |= bit;
    ++count_;
    if (queueing_) pending_.push_back({x, z, y});
    if (target_ && *target_ == k) found_ = true;
  }

  bool found() const { return found_; }

  void Seed(std::span<const CiStatement> seed) {
    for (const auto& s : seed) {
      const Triple t = ToTriple(s);
      Insert(t.x, t.z, t.y);
    }
  }

  // I(A, Z, B u W) => I(A, Z, B) and I(A, Z, W).
  void Decomposition(Mask a, Mask z, Mask b) {
    for (Mask sub = (b - 1) & b; sub != 0; sub = (sub - 1) & b) {
      Insert(a, z, sub);
    }
  }

  // I(A, Z, B u W) => I(A, Z u W, B).
  void WeakUnion(Mask a, Mask z, Mask b) {
    for (Mask w = (b - 1) & b; w != 0; w = (w - 1) & b) {
      Insert(a, z | w, b & ~w);
    }
  }

  // I(A, Z, B) & I(A, Z u B, W) => I(A, Z, B u W), with the current
  // statement in either premise.
  void Contraction(Mask a, Mask z, Mask b) {
    const Mask rest = full_ & ~(a | z | b);
    for (Mask w = rest; w != 0; w = (w - 1) & rest) {
      if (Has(a, z | b, w)) Insert(a, z, b | w);
    }
    for (Mask moved = z; moved != 0; moved = (moved - 1) & z) {
      const Mask smaller = z & ~moved;
      if (Has(a, smaller, moved)) Insert(a, smaller, moved | b);
    }
  }

  // I(A, Z, B) & I(A, Z, W) => I(A, Z, B u W).
  void Composition(Mask a, Mask z, Mask b) {
    const Mask rest = full_ & ~(a | z | b);
    for (Mask w = rest; w != 0; w = (w - 1) & rest) {
      if (Has(a, z, w)) Insert(a, z, b | w);
    }
  }

  void AllRules(const Triple& t) {
    for (const auto& [a, b] : {std::pair{t.x, t.y}, std::pair{t.y, t.x}}) {
      Decomposition(a, t.z, b);
      WeakUnion(a, t.z, b);
      Contraction(a, t.z, b);
      if (axioms_.composition) Composition(a, t.z, b);
    }
  }

  void RunWorklist() {
    // Seeds were queued on insertion.
    while (!pending_.empty() && !found_) {
      const Triple t = pending_.back();
      pending_.pop_back();
      AllRules(t);
    }
  }

  void RunRoundRobin() {
    using Rule = void (Engine::*)(Mask, Mask, Mask);
    std::vector<Rule> rules = {&Engine::Decomposition, &Engine::WeakUnion,
                               &Engine::Contraction};
    if (axioms_.composition) rules.push_back(&Engine::Composition);
    queueing_ = false;
    pending_.clear();
    std::size_t before = 0;
    do {
      before = count_;
      for (Rule rule : rules) {
        for (const Triple& t : Snapshot()) {
          (this->*rule)(t.x, t.z, t.y);
          (this->*rule)(t.y, t.z, t.x);
        }
      }
    } while (count_ != before && !found_);
  }

  std::vector<Triple> Snapshot() const {
    std::vector<Triple> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      for (std::uint64_t word = bits_[w]; word != 0; word &= word - 1) {
        const std::uint32_t slot =
            static_cast<std::uint32_t>(w * 64 + std::countr_zero(word));
        out.push_back(FromSlot(slot));
      }
    }
    return out;
  }

  Triple FromSlot(std::uint32_t slot) const {
    Triple t{0, 0, 0};
    for (int v = 0; slot != 0; ++v, slot >>= 2) {
      switch (slot & 3u) {
        case 1: t.x |= Mask{1} << v; break;
        case 2: t.z |= Mask{1} << v; break;
        case 3: t.y |= Mask{1} << v; break;
        default: break;
      }
    }
    return t;
  }

  std::vector<std::uint64_t> TakeBits() && { return std::move(bits_); }
  std::size_t count() const { return count_; }

 private:
  Mask full_;
  AxiomSet axioms_;
  std::optional<std::uint32_t> target_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> spread_;
  std::vector<Triple> pending_;
  std::size_t count_ = 0;
  bool queueing_ = true;
  bool found_ = false;
};

void CheckStatement(const StatementUniverse& u, const CiStatement& s) {
  if (s.x().universe_size() != u.ground_size()) {
    throw InputError("statement ground set has " +
                     std::to_string(s.x().universe_size()) +
                     " vertices; universe has " +
                     std::to_string(u.ground_size()));
  }
}

}  // namespace

StatementUniverse::StatementUniverse(std::size_t ground_size, std::size_t cap)
    : ground_size_(ground_size) {
  if (cap > kHardCap) {
    throw CapacityError("universe cap may not exceed " +
                        std::to_string(kHardCap));
  }
  if (ground_size > cap) {
    throw CapacityError("statement universe over " +
                        std::to_string(ground_size) +
                        " vertices exceeds the cap of " + std::to_string(cap));
  }
}

std::uint32_t StatementUniverse::Slot(const CiStatement& s) const {
  CheckStatement(*this, s);
  const Triple t = ToTriple(s);
  const std::uint32_t common = 2 * Spread(t.z);
  const std::uint32_t word = Spread(t.x) + common + 3 * Spread(t.y);
  const std::uint32_t swapped = Spread(t.y) + common + 3 * Spread(t.x);
  return word < swapped ? word : swapped;
}

CiStatement StatementUniverse::Decode(std::uint32_t slot) const {
  VertexSet x(ground_size_), z(ground_size_), y(ground_size_);
  for (std::size_t v = 0; slot != 0; ++v, slot >>= 2) {
    switch (slot & 3u) {
      case 1: x.insert(v); break;
      case 2: z.insert(v); break;
      case 3: y.insert(v); break;
      default: break;
    }
  }
  return CiStatement(std::move(x), std::move(z), std::move(y));
}

bool StatementClosure::Contains(const CiStatement& s) const {
  const std::uint32_t slot = universe_.Slot(s);
  return (bits_[slot >> 6] >> (slot & 63)) & 1u;
}

std::vector<CiStatement> StatementClosure::Statements() const {
  std::vector<CiStatement> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    for (std::uint64_t word = bits_[w]; word != 0; word &= word - 1) {
      out.push_back(universe_.Decode(
          static_cast<std::uint32_t>(w * 64 + std::countr_zero(word))));
    }
  }
  return out;
}

StatementClosure Closure(const StatementUniverse& universe,
                         std::span<const CiStatement> seed, AxiomSet axioms,
                         ClosureSchedule schedule) {
  for (const auto& s : seed) CheckStatement(universe, s);
  Engine engine(universe.ground_size(), axioms, std::nullopt);
  engine.Seed(seed);
  if (schedule == ClosureSchedule::kWorklist) {
    engine.RunWorklist();
  } else {
    engine.RunRoundRobin();
  }
  const std::size_t count = engine.count();
  return StatementClosure(universe, std::move(engine).TakeBits(), count);
}

bool Implies(const StatementUniverse& universe,
             std::span<const CiStatement> seed, const CiStatement& target,
             AxiomSet axioms) {
  for (const auto& s : seed) CheckStatement(universe, s);
  Engine engine(universe.ground_size(), axioms, universe.Slot(target));
  engine.Seed(seed);
  if (engine.found()) return true;
  engine.RunWorklist();
  return engine.found();
}

}  // namespace admg
