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

#include "sfm/instance_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "sfm/errors.h"

namespace sfm {
namespace {

constexpr int kMaxTableSize = 30;

const Json& Field(const Json& object, const std::string& name) {
  if (!object.is_object()) throw InputError("expected a JSON object");
  auto it = object.find(name);
  if (it == object.end()) {
    throw InputError("field '" + name + "': missing");
  }
  return *it;
}

const Json& ArrayField(const Json& object, const std::string& name) {
  const Json& value = Field(object, name);
  if (!value.is_array()) {
    throw InputError("field '" + name + "': expected an array");
  }
  return value;
}

std::vector<Rational> RationalArray(const Json& array,
                                    const std::string& field) {
  if (!array.is_array()) {
    throw InputError("field '" + field + "': expected an array");
  }
  std::vector<Rational> out;
  out.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(
        RationalFromJson(array[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int IntFromJson(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw InputError("field '" + field + "': expected an integer");
  }
  return value.get<int>();
}

std::vector<int> IntArray(const Json& array, const std::string& field) {
  if (!array.is_array()) {
    throw InputError("field '" + field + "': expected an array");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(IntFromJson(array[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> IntMatrix(const Json& array,
                                        const std::string& field) {
  if (!array.is_array()) {
    throw InputError("field '" + field + "': expected an array");
  }
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(IntArray(array[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

GroundSet LabelsFromJson(const Json& document) {
  const Json& labels = ArrayField(document, "labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) {
      throw InputError("field 'labels[" + std::to_string(i) +
                       "]': expected a string");
    }
    names.push_back(labels[i].get<std::string>());
  }
  try {
    return GroundSet(std::move(names));
  } catch (const InvalidArgumentError& e) {
    throw InputError(std::string("field 'labels': ") + e.what());
  }
}

std::vector<Rational> OptionalModular(const Json& document, int n) {
  auto it = document.find("modular");
  if (it == document.end()) return {};
  std::vector<Rational> modular = RationalArray(*it, "modular");
  if (static_cast<int>(modular.size()) != n) {
    throw InputError("field 'modular': expected " + std::to_string(n) +
                     " entries");
  }
  return modular;
}

void ExpectLength(const std::vector<Rational>& values, std::size_t n,
                  const std::string& field) {
  if (values.size() != n) {
    throw InputError("field '" + field + "': expected " + std::to_string(n) +
                     " entries, found " + std::to_string(values.size()));
  }
}

Instance ParseJsonInstance(std::string_view text) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(e.what());
  }
  const Json& type = Field(document, "type");
  if (!type.is_string()) throw InputError("field 'type': expected a string");
  const std::string kind = type.get<std::string>();
  GroundSet ground = LabelsFromJson(document);
  const int n = ground.size();

  if (kind == "table") {
    if (n > kMaxTableSize) {
      throw InputError("field 'labels': tables support at most 30 elements");
    }
    std::vector<Rational> values =
        RationalArray(ArrayField(document, "values"), "values");
    ExpectLength(values, std::size_t{1} << n, "values");
    return {std::move(ground), ExplicitTable{std::move(values)}};
  }
  if (kind == "coverage") {
    CoverageSpec spec;
    spec.item_weights =
        RationalArray(ArrayField(document, "item_weights"), "item_weights");
    spec.covers = IntMatrix(ArrayField(document, "covers"), "covers");
    spec.costs = RationalArray(ArrayField(document, "costs"), "costs");
    if (static_cast<int>(spec.covers.size()) != n) {
      throw InputError("field 'covers': expected " + std::to_string(n) +
                       " entries");
    }
    ExpectLength(spec.costs, n, "costs");
    return {std::move(ground), std::move(spec)};
  }
  if (kind == "concave") {
    ConcaveCardinalitySpec spec;
    spec.g = RationalArray(ArrayField(document, "g"), "g");
    ExpectLength(spec.g, n + 1, "g");
    spec.modular = OptionalModular(document, n);
    return {std::move(ground), std::move(spec)};
  }
  if (kind == "matroid") {
    PartitionMatroidSpec spec;
    spec.n = n;
    spec.blocks = IntMatrix(ArrayField(document, "blocks"), "blocks");
    spec.caps = IntArray(ArrayField(document, "caps"), "caps");
    if (spec.caps.size() != spec.blocks.size()) {
      throw InputError("field 'caps': expected one cap per block");
    }
    spec.modular = OptionalModular(document, n);
    return {std::move(ground), std::move(spec)};
  }
  throw InputError("field 'type': unknown instance type '" + kind + "'");
}

template <typename T>
bool ParseInt(std::string_view token, T& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

Instance ParseCutInstance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  auto fail = [&](const std::string& message) -> InputError {
    return InputError("line " + std::to_string(line_number) + ": " + message);
  };
  auto next = [&](std::vector<std::string>& tokens) {
    while (std::getline(in, line)) {
      ++line_number;
      tokens = Tokens(line);
      if (!tokens.empty() && tokens[0][0] != '#') return true;
    }
    return false;
  };
  auto vertex = [&](const std::string& token, int n) {
    int v = 0;
    if (!ParseInt(token, v) || v < 0 || v >= n) {
      throw fail("vertex '" + token + "' is not in 0.." + std::to_string(n - 1));
    }
    return v;
  };
  auto rational = [&](const std::string& token) {
    try {
      return ParseRational(token);
    } catch (const InputError& e) {
      throw fail(e.what());
    }
  };

  std::vector<std::string> tokens;
  if (!next(tokens)) throw InputError("line 1: empty input");
  if (tokens.size() != 4 || tokens[0] != "cut") {
    throw fail("expected 'cut <n> <m> <directed|undirected>'");
  }
  CutFunctionSpec spec;
  int m = 0;
  if (!ParseInt(tokens[1], spec.n) || spec.n < 1) {
    throw fail("vertex count must be a positive integer");
  }
  if (!ParseInt(tokens[2], m) || m < 0) {
    throw fail("edge count must be a nonnegative integer");
  }
  if (tokens[3] == "directed") {
    spec.directed = true;
  } else if (tokens[3] != "undirected") {
    throw fail("expected 'directed' or 'undirected', found '" + tokens[3] +
               "'");
  }
  while (next(tokens)) {
    if (tokens[0] == "node") {
      if (tokens.size() != 3) throw fail("expected 'node <v> <weight>'");
      if (spec.modular.empty()) spec.modular.assign(spec.n, Rational(0));
      spec.modular[vertex(tokens[1], spec.n)] += rational(tokens[2]);
      continue;
    }
    if (tokens.size() != 3) throw fail("expected '<u> <v> <capacity>'");
    Edge edge{vertex(tokens[0], spec.n), vertex(tokens[1], spec.n),
              rational(tokens[2])};
    if (sgn(edge.capacity) < 0) throw fail("capacity must be nonnegative");
    if (static_cast<int>(spec.edges.size()) == m) {
      throw fail("more edges than the header declares");
    }
    spec.edges.push_back(std::move(edge));
  }
  if (static_cast<int>(spec.edges.size()) != m) {
    throw fail("header declares " + std::to_string(m) + " edges, found " +
               std::to_string(spec.edges.size()));
  }
  return {GroundSet::Indexed(spec.n), std::move(spec)};
}

Json RationalArrayToJson(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(RationalToJson(v));
  return out;
}

Json LabelsToJson(const GroundSet& ground) {
  Json out = Json::array();
  for (const auto& l : ground.labels()) out.push_back(l);
  return out;
}

int LabelIndex(const Json& value, const GroundSet& ground,
               const std::string& field) {
  if (!value.is_string()) throw InputError("field '" + field + "': expected a label");
  auto index = ground.IndexOf(value.get<std::string>());
  if (!index) {
    throw InputError("field '" + field + "': unknown label '" +
                     value.get<std::string>() + "'");
  }
  return *index;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw InputError("line 1: empty input");
  if (text[start] == '{') return ParseJsonInstance(text);
  return ParseCutInstance(text);
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string InstanceToText(const Instance& instance) {
  return std::visit(
      [&](const auto& spec) -> std::string {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, CutFunctionSpec>) {
          std::ostringstream out;
          out << "cut " << spec.n << ' ' << spec.edges.size() << ' '
              << (spec.directed ? "directed" : "undirected") << '\n';
          for (const auto& e : spec.edges) {
            out << e.from << ' ' << e.to << ' ' << FormatRational(e.capacity)
                << '\n';
          }
          for (std::size_t v = 0; v < spec.modular.size(); ++v) {
            if (sgn(spec.modular[v]) != 0) {
              out << "node " << v << ' ' << FormatRational(spec.modular[v])
                  << '\n';
            }
          }
          return out.str();
        } else {
          Json doc;
          if constexpr (std::is_same_v<T, ExplicitTable>) {
            doc["type"] = "table";
            doc["labels"] = LabelsToJson(instance.ground);
            doc["values"] = RationalArrayToJson(spec.values);
          } else if constexpr (std::is_same_v<T, CoverageSpec>) {
            doc["type"] = "coverage";
            doc["labels"] = LabelsToJson(instance.ground);
            doc["item_weights"] = RationalArrayToJson(spec.item_weights);
            doc["covers"] = spec.covers;
            doc["costs"] = RationalArrayToJson(spec.costs);
          } else if constexpr (std::is_same_v<T, ConcaveCardinalitySpec>) {
            doc["type"] = "concave";
            doc["labels"] = LabelsToJson(instance.ground);
            doc["g"] = RationalArrayToJson(spec.g);
            if (!spec.modular.empty()) {
              doc["modular"] = RationalArrayToJson(spec.modular);
            }
          } else {
            doc["type"] = "matroid";
            doc["labels"] = LabelsToJson(instance.ground);
            doc["blocks"] = spec.blocks;
            doc["caps"] = spec.caps;
            if (!spec.modular.empty()) {
              doc["modular"] = RationalArrayToJson(spec.modular);
            }
          }
          return doc.dump(2) + "\n";
        }
      },
      instance.family);
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

Rational RationalFromJson(const Json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + field + "': " + e.what());
    }
  }
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(std::to_string(value.get<uint64_t>()));
    }
    return Rational(std::to_string(value.get<int64_t>()));
  }
  throw InputError("field '" + field +
                   "': expected a rational string or an integer");
}

Json SubsetToJson(const Subset& x, const GroundSet& ground) {
  Json out = Json::array();
  for (int v : x.Indices()) out.push_back(ground.label(v));
  return out;
}

Json CertificateToJson(const Certificate& c, const GroundSet& ground) {
  Json out;
  out["X"] = SubsetToJson(c.minimizer, ground);
  out["lambda"] = RationalArrayToJson(c.lambda);
  Json bases = Json::array();
  for (const auto& b : c.bases) {
    Json ordering = Json::array();
    for (int v : b.ordering) ordering.push_back(ground.label(v));
    Json entry;
    entry["ordering"] = std::move(ordering);
    entry["y"] = RationalArrayToJson(b.y);
    bases.push_back(std::move(entry));
  }
  out["bases"] = std::move(bases);
  Json phi = Json::array();
  for (const auto& row : c.phi) phi.push_back(RationalArrayToJson(row));
  out["phi"] = std::move(phi);
  out["gap"] = RationalToJson(c.gap);
  return out;
}

Certificate CertificateFromJson(const Json& json, const GroundSet& ground) {
  const int n = ground.size();
  Certificate c;
  c.minimizer = Subset(n);
  const Json& x = ArrayField(json, "X");
  for (std::size_t i = 0; i < x.size(); ++i) {
    c.minimizer.Insert(LabelIndex(x[i], ground, "X[" + std::to_string(i) + "]"));
  }
  c.lambda = RationalArray(ArrayField(json, "lambda"), "lambda");
  const Json& bases = ArrayField(json, "bases");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const std::string prefix = "bases[" + std::to_string(i) + "].";
    CertificateBase base;
    const Json& ordering = ArrayField(bases[i], "ordering");
    for (std::size_t k = 0; k < ordering.size(); ++k) {
      base.ordering.push_back(LabelIndex(
          ordering[k], ground, prefix + "ordering[" + std::to_string(k) + "]"));
    }
    base.y = RationalArray(ArrayField(bases[i], "y"), prefix + "y");
    c.bases.push_back(std::move(base));
  }
  const Json& phi = ArrayField(json, "phi");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    c.phi.push_back(RationalArray(phi[i], "phi[" + std::to_string(i) + "]"));
  }
  c.gap = RationalFromJson(Field(json, "gap"), "gap");
  return c;
}

Json ResultToJson(const SfmResult& result, const GroundSet& ground,
                  bool has_gap) {
  Json out;
  out["minimizer"] = SubsetToJson(result.minimizer, ground);
  out["value"] = RationalToJson(result.value);
  out["gap"] = has_gap ? RationalToJson(result.gap) : Json(nullptr);
  Json stats;
  stats["oracle_calls"] = result.stats.oracle_calls;
  stats["phases"] = result.stats.phases;
  stats["augmentations"] = result.stats.augmentations;
  stats["pushes"] = result.stats.pushes;
  out["stats"] = std::move(stats);
  out["certificate"] = result.certificate
                           ? CertificateToJson(*result.certificate, ground)
                           : Json(nullptr);
  return out;
}

namespace {

const char* ExitName(PhaseExit exit) {
  switch (exit) {
    case PhaseExit::kNoSources:
      return "no_sources";
    case PhaseExit::kNoSinks:
      return "no_sinks";
    case PhaseExit::kNoActivePair:
      return "no_active_pair";
  }
  return "unknown";
}

}  // namespace

std::string TraceToJsonLines(const std::vector<TraceEvent>& trace,
                             const GroundSet& ground) {
  std::string out;
  for (const auto& e : trace) {
    Json line;
    switch (e.kind) {
      case TraceKind::kPhaseBegin:
      case TraceKind::kPhaseEnd:
        line["event"] = "phase";
        line["stage"] = e.kind == TraceKind::kPhaseBegin ? "begin" : "end";
        break;
      case TraceKind::kPush:
        line["event"] = "push";
        break;
      case TraceKind::kAugment:
        line["event"] = "augment";
        break;
    }
    line["phase"] = e.phase;
    line["delta"] = RationalToJson(e.delta);
    if (e.kind == TraceKind::kPush) {
      line["entry"] = e.index;
      line["u"] = ground.label(e.u);
      line["v"] = ground.label(e.v);
      line["capacity"] = RationalToJson(e.capacity);
      line["alpha"] = RationalToJson(e.alpha);
      line["saturating"] = e.saturating;
    }
    if (e.kind == TraceKind::kAugment) {
      Json path = Json::array();
      for (int v : e.path) path.push_back(ground.label(v));
      line["path"] = std::move(path);
    }
    if (e.kind == TraceKind::kPush || e.kind == TraceKind::kAugment) {
      line["z_minus_before"] = RationalToJson(e.z_minus_before);
      line["z_minus_after"] = RationalToJson(e.z_minus_after);
    }
    if (e.kind == TraceKind::kPhaseEnd) {
      line["exit"] = ExitName(e.exit);
      line["augmentations"] = e.augmentations;
      line["W"] = SubsetToJson(e.reachable, ground);
      line["x_W"] = RationalToJson(e.x_of_reachable);
    }
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace sfm
