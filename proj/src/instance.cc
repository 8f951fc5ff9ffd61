// Copyright 2026 The Authors.
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

#include "csfm/instance.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "csfm/brute_force.h"
#include "csfm/constraints.h"
#include "csfm/matroid.h"
#include "json.hpp"

namespace csfm {
namespace {

using Json = nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw InstanceError(path + ": " + message);
}

void AllowOnly(const Json& object, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!object.is_object()) Fail(path, "expected an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || item.key() == name;
    if (!known) Fail(path + "." + item.key(), "unknown field");
  }
}

const Json& Field(const Json& object, const std::string& path,
                  const char* name) {
  auto it = object.find(name);
  if (it == object.end()) Fail(path + "." + name, "missing field");
  return *it;
}

int Integer(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) Fail(path, "expected an integer");
  return value.get<int>();
}

Rational RationalValue(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) Fail(path, "expected a \"p/q\" string");
  try {
    return ParseRational(value.get<std::string>());
  } catch (const std::exception& e) {
    Fail(path, e.what());
  }
}

int ElementId(const GroundSet& ground, const Json& value,
              const std::string& path) {
  if (!value.is_string()) Fail(path, "expected an element id");
  const auto index = ground.IndexOf(value.get<std::string>());
  if (!index) Fail(path, "unknown element \"" + value.get<std::string>() + "\"");
  return *index;
}

Mask ElementSet(const GroundSet& ground, const Json& value,
                const std::string& path) {
  if (!value.is_array()) Fail(path, "expected a list of element ids");
  Mask set = 0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    set |= Singleton(ElementId(ground, value[i], path + "[" +
                                                     std::to_string(i) + "]"));
  }
  return set;
}

// Per-element data given as an object keyed by id; every id must appear.
template <typename Fn>
void ForEachElement(const GroundSet& ground, const Json& value,
                    const std::string& path, Fn fn) {
  if (!value.is_object()) Fail(path, "expected an object keyed by element id");
  for (const auto& item : value.items()) {
    ElementId(ground, Json(item.key()), path + "." + item.key());
  }
  for (int e = 0; e < ground.size(); ++e) {
    auto it = value.find(ground.id(e));
    if (it == value.end()) Fail(path + "." + ground.id(e), "missing element");
    fn(e, *it, path + "." + ground.id(e));
  }
}

std::pair<int, int> Endpoints(const Json& value, int vertices,
                              const std::string& path) {
  if (!value.is_array() || value.size() != 2) Fail(path, "expected [u, v]");
  const int u = Integer(value[0], path + "[0]");
  const int v = Integer(value[1], path + "[1]");
  if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
    Fail(path, "vertex out of range");
  }
  return {u, v};
}

FunctionSpec ParseFunction(const GroundSet& ground, const Json& value,
                           const std::string& path) {
  const int n = ground.size();
  if (!value.is_object()) Fail(path, "expected an object");
  const Json& kind_json = Field(value, path, "kind");
  if (!kind_json.is_string()) Fail(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "coverage") {
      AllowOnly(value, path, {"kind", "covers", "item_weights"});
      std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
      ForEachElement(ground, Field(value, path, "covers"), path + ".covers",
                     [&](int e, const Json& items, const std::string& p) {
                       if (!items.is_array()) Fail(p, "expected a list");
                       for (std::size_t i = 0; i < items.size(); ++i) {
                         covers[e].push_back(Integer(
                             items[i], p + "[" + std::to_string(i) + "]"));
                       }
                     });
      std::vector<Rational> weights;
      if (value.contains("item_weights")) {
        const Json& w = value["item_weights"];
        if (!w.is_array()) Fail(path + ".item_weights", "expected a list");
        for (std::size_t i = 0; i < w.size(); ++i) {
          weights.push_back(RationalValue(
              w[i], path + ".item_weights[" + std::to_string(i) + "]"));
        }
      }
      return FunctionSpec::Coverage(n, std::move(covers), std::move(weights));
    }
    if (kind == "directed_cut") {
      AllowOnly(value, path, {"kind", "arcs"});
      const Json& arcs_json = Field(value, path, "arcs");
      if (!arcs_json.is_array()) Fail(path + ".arcs", "expected a list");
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < arcs_json.size(); ++i) {
        const std::string p = path + ".arcs[" + std::to_string(i) + "]";
        AllowOnly(arcs_json[i], p, {"tail", "head", "weight"});
        Arc arc;
        arc.tail = ElementId(ground, Field(arcs_json[i], p, "tail"), p + ".tail");
        arc.head = ElementId(ground, Field(arcs_json[i], p, "head"), p + ".head");
        arc.weight = arcs_json[i].contains("weight")
                         ? RationalValue(arcs_json[i]["weight"], p + ".weight")
                         : Rational(1);
        arcs.push_back(std::move(arc));
      }
      return FunctionSpec::DirectedCut(n, std::move(arcs));
    }
    if (kind == "modular") {
      AllowOnly(value, path, {"kind", "weights", "offset"});
      std::vector<Rational> weights(static_cast<std::size_t>(n));
      ForEachElement(ground, Field(value, path, "weights"), path + ".weights",
                     [&](int e, const Json& w, const std::string& p) {
                       weights[e] = RationalValue(w, p);
                     });
      const Rational offset = value.contains("offset")
                                  ? RationalValue(value["offset"], path + ".offset")
                                  : Rational(0);
      return FunctionSpec::Modular(std::move(weights), offset);
    }
    if (kind == "table") {
      AllowOnly(value, path, {"kind", "values"});
      const Json& values_json = Field(value, path, "values");
      if (n > 20) Fail(path, "tables need n <= 20");
      if (!values_json.is_array() ||
          values_json.size() != (std::size_t{1} << n)) {
        Fail(path + ".values", "expected 2^n values");
      }
      std::vector<Rational> values;
      for (std::size_t i = 0; i < values_json.size(); ++i) {
        values.push_back(RationalValue(
            values_json[i], path + ".values[" + std::to_string(i) + "]"));
      }
      return FunctionSpec::Table(n, std::move(values));
    }
    if (kind == "block_coverage") {
      AllowOnly(value, path, {"kind", "sqrt_n"});
      const int m = Integer(Field(value, path, "sqrt_n"), path + ".sqrt_n");
      if (m < 1 || m * m != n) Fail(path + ".sqrt_n", "n must equal sqrt_n^2");
      std::vector<std::vector<int>> covers;
      for (int e = 0; e < n; ++e) covers.push_back({e / m});
      return FunctionSpec::Coverage(n, std::move(covers));
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  Fail(path + ".kind", "unknown function kind \"" + kind + "\"");
}

Matroid ParseMatroid(const GroundSet& ground, const Json& value,
                     const std::string& path) {
  const int n = ground.size();
  if (!value.is_object()) Fail(path, "expected an object");
  const Json& kind_json = Field(value, path, "kind");
  if (!kind_json.is_string()) Fail(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "uniform") {
      AllowOnly(value, path, {"kind", "rank"});
      return Matroid::Uniform(n, Integer(Field(value, path, "rank"), path + ".rank"));
    }
    if (kind == "partition") {
      AllowOnly(value, path, {"kind", "blocks", "capacities"});
      const Json& blocks_json = Field(value, path, "blocks");
      const Json& caps_json = Field(value, path, "capacities");
      if (!blocks_json.is_array()) Fail(path + ".blocks", "expected a list");
      if (!caps_json.is_array() || caps_json.size() != blocks_json.size()) {
        Fail(path + ".capacities", "expected one capacity per block");
      }
      std::vector<Mask> blocks;
      std::vector<int> caps;
      for (std::size_t i = 0; i < blocks_json.size(); ++i) {
        const std::string suffix = "[" + std::to_string(i) + "]";
        blocks.push_back(
            ElementSet(ground, blocks_json[i], path + ".blocks" + suffix));
        caps.push_back(Integer(caps_json[i], path + ".capacities" + suffix));
      }
      return Matroid::Partition(n, std::move(blocks), std::move(caps));
    }
    if (kind == "graphic") {
      AllowOnly(value, path, {"kind", "vertices", "edges"});
      const int vertices =
          Integer(Field(value, path, "vertices"), path + ".vertices");
      std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(n));
      ForEachElement(ground, Field(value, path, "edges"), path + ".edges",
                     [&](int e, const Json& uv, const std::string& p) {
                       edges[e] = Endpoints(uv, vertices, p);
                     });
      return Matroid::Graphic(vertices, std::move(edges));
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  Fail(path + ".kind", "unknown matroid kind \"" + kind + "\"");
}

struct ParsedConstraint {
  std::string backend;
  std::optional<FeasibilityFamily> family;
  std::optional<HardnessInstance> hardness;
  NeighborhoodSpec neighborhood;
};

ParsedConstraint ParseConstraint(const GroundSet& ground, const Json& value,
                                 const std::string& path) {
  const int n = ground.size();
  if (!value.is_object()) Fail(path, "expected an object");
  const Json& backend_json = Field(value, path, "backend");
  if (!backend_json.is_string()) Fail(path + ".backend", "expected a string");
  ParsedConstraint out;
  out.backend = backend_json.get<std::string>();
  const std::string& backend = out.backend;
  try {
    if (backend == "unconstrained") {
      AllowOnly(value, path, {"backend"});
      out.family = PowerSetFamily(n);
      return out;
    }
    if (backend == "matroid") {
      AllowOnly(value, path, {"backend", "matroid"});
      out.family = MatroidFamily(
          ParseMatroid(ground, Field(value, path, "matroid"), path + ".matroid"));
      return out;
    }
    if (backend == "k_intersection") {
      AllowOnly(value, path, {"backend", "matroids"});
      const Json& list = Field(value, path, "matroids");
      if (!list.is_array() || list.empty()) {
        Fail(path + ".matroids", "expected a nonempty list");
      }
      std::vector<Matroid> matroids;
      for (std::size_t i = 0; i < list.size(); ++i) {
        matroids.push_back(ParseMatroid(
            ground, list[i], path + ".matroids[" + std::to_string(i) + "]"));
      }
      const int k = static_cast<int>(matroids.size());
      out.family = FeasibilityFamily::MatroidIntersection(n, std::move(matroids));
      out.neighborhood = {NeighborhoodSpec::Kind::kSwap, std::max(k, 1), 1};
      if (k == 1) out.neighborhood = {};
      return out;
    }
    if (backend == "explicit") {
      AllowOnly(value, path, {"backend", "sets", "k"});
      const Json& list = Field(value, path, "sets");
      if (!list.is_array() || list.empty()) {
        Fail(path + ".sets", "expected a nonempty list of sets");
      }
      std::vector<Mask> sets;
      for (std::size_t i = 0; i < list.size(); ++i) {
        sets.push_back(ElementSet(ground, list[i],
                                  path + ".sets[" + std::to_string(i) + "]"));
      }
      if (value.contains("k")) {
        const int k = Integer(value["k"], path + ".k");
        out.family = ExplicitKExchangeFamily(n, std::move(sets), k);
        out.neighborhood = {NeighborhoodSpec::Kind::kSwap, k, 1};
      } else {
        out.family = FeasibilityFamily::Explicit(n, std::move(sets));
      }
      return out;
    }
    if (backend == "b_matching") {
      AllowOnly(value, path, {"backend", "vertices", "edges", "capacities"});
      const int vertices =
          Integer(Field(value, path, "vertices"), path + ".vertices");
      std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(n));
      ForEachElement(ground, Field(value, path, "edges"), path + ".edges",
                     [&](int e, const Json& uv, const std::string& p) {
                       edges[e] = Endpoints(uv, vertices, p);
                     });
      const Json& caps_json = Field(value, path, "capacities");
      if (!caps_json.is_array()) Fail(path + ".capacities", "expected a list");
      std::vector<int> caps;
      for (std::size_t i = 0; i < caps_json.size(); ++i) {
        caps.push_back(Integer(caps_json[i],
                               path + ".capacities[" + std::to_string(i) + "]"));
      }
      out.family = BMatchingFamily(vertices, std::move(edges), std::move(caps));
      out.neighborhood = {NeighborhoodSpec::Kind::kSwap, 2, 1};
      return out;
    }
    if (backend == "hardness") {
      AllowOnly(value, path, {"backend", "sqrt_n", "beta", "c", "d", "seed",
                              "secret"});
      HardnessParams params;
      params.sqrt_n = Integer(Field(value, path, "sqrt_n"), path + ".sqrt_n");
      if (params.sqrt_n * params.sqrt_n != n) {
        Fail(path + ".sqrt_n", "n must equal sqrt_n^2");
      }
      if (value.contains("beta")) params.beta = Integer(value["beta"], path + ".beta");
      if (value.contains("c")) params.c = Integer(value["c"], path + ".c");
      if (value.contains("d")) params.d = Integer(value["d"], path + ".d");
      if (value.contains("seed")) {
        if (!value["seed"].is_number_unsigned()) {
          Fail(path + ".seed", "expected a non-negative integer");
        }
        params.seed = value["seed"].get<std::uint64_t>();
      }
      HardnessInstance instance = HardnessInstance::Generate(params);
      if (value.contains("secret")) {
        const Json& secret_json = value["secret"];
        if (!secret_json.is_array()) Fail(path + ".secret", "expected a list");
        std::vector<int> secret;
        for (std::size_t i = 0; i < secret_json.size(); ++i) {
          secret.push_back(ElementId(
              ground, secret_json[i], path + ".secret[" + std::to_string(i) + "]"));
        }
        HardnessInstance fixed =
            HardnessInstance::WithSecret(params.sqrt_n, instance.beta(), secret);
        instance = fixed;
      }
      out.family = instance.Family();
      out.hardness = instance;
      out.neighborhood = {NeighborhoodSpec::Kind::kSwap, 2, 1};
      return out;
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  } catch (const std::domain_error& e) {
    Fail(path, e.what());
  }
  Fail(path + ".backend", "unknown backend \"" + backend + "\"");
}

NeighborhoodSpec ParseNeighborhoodJson(const Json& value,
                                       const std::string& path) {
  if (!value.is_object()) Fail(path, "expected an object");
  const Json& kind_json = Field(value, path, "kind");
  if (!kind_json.is_string()) Fail(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "polyhedral") {
    AllowOnly(value, path, {"kind"});
    return {};
  }
  if (kind == "swap") {
    AllowOnly(value, path, {"kind", "k", "p"});
    NeighborhoodSpec spec{NeighborhoodSpec::Kind::kSwap, 1, 1};
    spec.k = Integer(Field(value, path, "k"), path + ".k");
    spec.p = Integer(Field(value, path, "p"), path + ".p");
    if (spec.k < 1 || spec.p < 1) Fail(path, "k and p must be positive");
    return spec;
  }
  Fail(path + ".kind", "unknown neighborhood kind \"" + kind + "\"");
}

std::string Position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InstanceError(Position(text, e.byte) + ": malformed JSON");
  }
  AllowOnly(root, "instance",
            {"ground_set", "function", "constraint", "neighborhood", "flags"});

  const Json& ids_json = Field(root, "instance", "ground_set");
  if (!ids_json.is_array()) Fail("ground_set", "expected a list of ids");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < ids_json.size(); ++i) {
    if (!ids_json[i].is_string()) {
      Fail("ground_set[" + std::to_string(i) + "]", "expected a string");
    }
    ids.push_back(ids_json[i].get<std::string>());
  }
  std::optional<GroundSet> ground;
  try {
    ground.emplace(std::move(ids));
  } catch (const std::invalid_argument& e) {
    Fail("ground_set", e.what());
  }

  FunctionSpec function =
      ParseFunction(*ground, Field(root, "instance", "function"), "function");
  ParsedConstraint constraint = ParseConstraint(
      *ground, Field(root, "instance", "constraint"), "constraint");

  NeighborhoodSpec neighborhood = constraint.neighborhood;
  if (root.contains("neighborhood")) {
    neighborhood = ParseNeighborhoodJson(root["neighborhood"], "neighborhood");
  }

  bool monotone = function.monotone_by_construction();
  bool monotone_given = false;
  if (root.contains("flags")) {
    const Json& flags = root["flags"];
    AllowOnly(flags, "flags", {"monotone", "down_closed"});
    if (flags.contains("monotone")) {
      if (!flags["monotone"].is_boolean()) Fail("flags.monotone", "expected a boolean");
      monotone = flags["monotone"].get<bool>();
      monotone_given = true;
    }
    if (flags.contains("down_closed")) {
      if (!flags["down_closed"].is_boolean()) {
        Fail("flags.down_closed", "expected a boolean");
      }
      const bool claimed = flags["down_closed"].get<bool>();
      if (claimed && !constraint.family->is_down_closed()) {
        Fail("flags.down_closed", "the family is not down-closed");
      }
    }
  }
  if (monotone_given && monotone && !function.monotone_by_construction()) {
    if (ground->size() > 16) {
      Fail("flags.monotone", "cannot confirm monotonicity for n > 16");
    }
    if (!CheckMonotone(SubmodularOracle(function, true))) {
      Fail("flags.monotone", "the function is not monotone");
    }
  }

  return Instance{std::move(*ground),
                  std::move(function),
                  std::move(*constraint.family),
                  neighborhood,
                  monotone,
                  std::move(constraint.hardness),
                  constraint.backend};
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

SubmodularOracle Instance::MakeOracle() const {
  return SubmodularOracle(function, monotone);
}

NeighborhoodFunction Instance::MakeNeighborhood() const {
  return MakeNeighborhood(neighborhood);
}

NeighborhoodFunction Instance::MakeNeighborhood(
    const NeighborhoodSpec& spec) const {
  if (spec.kind == NeighborhoodSpec::Kind::kSwap) {
    return NeighborhoodFunction::Swap(family, spec.k, spec.p);
  }
  return NeighborhoodFunction::Polyhedral(family);
}

std::string HardnessInstanceJson(const HardnessInstance& instance) {
  const GroundSet ground = GroundSet::Numbered(instance.n());
  Json secret = Json::array();
  for (int t : instance.secret()) secret.push_back(ground.id(t));
  Json root = {
      {"ground_set", ground.ids()},
      {"function", {{"kind", "block_coverage"}, {"sqrt_n", instance.sqrt_n()}}},
      {"constraint",
       {{"backend", "hardness"},
        {"sqrt_n", instance.sqrt_n()},
        {"beta", instance.beta()},
        {"secret", secret}}},
      {"neighborhood", {{"kind", "swap"}, {"k", 2}, {"p", 1}}},
      {"flags", {{"monotone", true}, {"down_closed", true}}},
  };
  return root.dump(2) + "\n";
}

NeighborhoodSpec ParseNeighborhoodSpec(const std::string& text) {
  if (text == "polyhedral") return {};
  int k = 0;
  int p = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "swap:%d:%d%c", &k, &p, &tail) == 2 && k >= 1 &&
      p >= 1) {
    return {NeighborhoodSpec::Kind::kSwap, k, p};
  }
  throw std::invalid_argument("bad neighborhood \"" + text +
                              "\" (expected polyhedral or swap:k:p)");
}

}  // namespace csfm
