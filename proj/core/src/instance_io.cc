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

#include "bfm/instance_io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "bfm/errors.h"
#include "json.hpp"

namespace bfm {
namespace {

using Json = nlohmann::ordered_json;

// DOM builder that keeps the source text of non-integer numbers (and of
// integers too large for 64 bits) as strings, so they can be read exactly.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  explicit ExactSax(Json& root) : Base(root, true) {}

  bool number_float(Json::number_float_t /*val*/, const Json::string_t& text) {
    Json::string_t copy = text;
    return Base::string(copy);
  }
};

Json ParseJson(std::string_view text) {
  Json root;
  ExactSax sax(root);
  try {
    Json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find("parse error");
    throw InputError(pos == std::string::npos ? what : what.substr(pos));
  }
  return root;
}

void RejectUnknown(const Json& obj, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) throw InputError(path + ": unknown field '" + key + "'");
  }
}

const Json& Field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(path + ": missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string Join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Num ReadNum(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return ParseNum(j.get<std::string>());
    if (j.is_number_integer()) return ParseNum(j.dump());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  throw InputError(path + ": expected a number or a rational string");
}

int ReadInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1'000'000) throw InputError(path + ": out of range");
  return static_cast<int>(v);
}

const Json& ReadArray(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  return j;
}

struct RawAgent {
  Num cost;
  std::optional<Num> value;
  std::optional<int> type;
};

AnyInstance InstanceFromJson(const Json& doc, const std::string& path) {
  if (!doc.is_object()) {
    throw InputError((path.empty() ? "document" : path) + ": expected an object");
  }
  RejectUnknown(doc, path.empty() ? "document" : path,
                {"budget", "agents", "valuation"});
  const Num budget = ReadNum(Field(doc, path, "budget"), Join(path, "budget"));
  const std::string agents_path = Join(path, "agents");
  const Json& agents = ReadArray(Field(doc, path, "agents"), agents_path);
  if (!doc.contains("valuation")) {
    throw InputError(Join(path, "valuation") + ": missing valuation");
  }

  std::map<int, RawAgent> raw;
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const std::string p = Index(agents_path, k);
    const Json& a = agents[k];
    if (!a.is_object()) throw InputError(p + ": expected an object");
    RejectUnknown(a, p, {"id", "cost", "value", "type"});
    const int id = ReadInt(Field(a, p, "id"), p + ".id");
    RawAgent r;
    r.cost = ReadNum(Field(a, p, "cost"), p + ".cost");
    if (r.cost < 0) throw InputError(p + ".cost: negative cost");
    if (a.contains("value")) r.value = ReadNum(a["value"], p + ".value");
    if (r.value && *r.value < 0) throw InputError(p + ".value: negative value");
    if (a.contains("type")) r.type = ReadInt(a["type"], p + ".type");
    if (!raw.emplace(id, std::move(r)).second) {
      throw InputError(p + ".id: duplicate agent id " + std::to_string(id));
    }
  }
  const int n = static_cast<int>(raw.size());
  if (n > 0 && raw.rbegin()->first != n - 1) {
    throw InputError(agents_path + ": agent ids must be 0..n-1");
  }
  bool typed = false;
  for (const auto& [id, r] : raw) typed = typed || r.type.has_value();

  const std::string vpath = Join(path, "valuation");
  const Json& val = doc["valuation"];
  if (!val.is_object()) throw InputError(vpath + ": expected an object");
  const Json& kind_json = Field(val, vpath, "kind");
  if (!kind_json.is_string()) throw InputError(vpath + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind != "additive" && kind != "explicit" && kind != "coverage") {
    throw InputError(vpath + ".kind: unknown valuation kind '" + kind + "'");
  }

  try {
    if (kind == "additive") {
      RejectUnknown(val, vpath, {"kind"});
      std::vector<Num> values;
      for (const auto& [id, r] : raw) {
        const std::string p = agents_path + "[id " + std::to_string(id) + "]";
        if (!r.value) throw InputError(p + ": additive agents need a value");
        if (typed && !r.type) {
          throw InputError(p + ": every agent needs a type once any has one");
        }
        values.push_back(*r.value);
      }
      if (typed) {
        std::vector<HeteroItem> items;
        for (const auto& [id, r] : raw) items.push_back({id, r.cost, *r.value, *r.type});
        return HeteroInstance(budget, std::move(items));
      }
      std::vector<Agent> list;
      for (const auto& [id, r] : raw) list.push_back({id, r.cost});
      return Instance(budget, std::move(list), Valuation::Additive(std::move(values)));
    }

    if (typed) throw InputError(vpath + ": typed agents need an additive valuation");
    for (const auto& [id, r] : raw) {
      if (r.value) {
        throw InputError(agents_path + "[id " + std::to_string(id) +
                         "].value: only additive valuations take agent values");
      }
    }
    std::vector<Agent> list;
    for (const auto& [id, r] : raw) list.push_back({id, r.cost});

    if (kind == "explicit") {
      RejectUnknown(val, vpath, {"kind", "table"});
      if (n > Valuation::kMaxExplicitAgents) {
        throw LimitError(vpath + ": explicit valuations allow at most " +
                         std::to_string(Valuation::kMaxExplicitAgents) + " agents");
      }
      const std::string tpath = vpath + ".table";
      const Json& table = ReadArray(Field(val, vpath, "table"), tpath);
      std::vector<std::optional<Num>> entries(std::size_t{1} << n);
      entries[0] = Num(0);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const std::string p = Index(tpath, k);
        const Json& e = table[k];
        if (!e.is_object()) throw InputError(p + ": expected an object");
        RejectUnknown(e, p, {"set", "value"});
        std::uint64_t mask = 0;
        const Json& set = ReadArray(Field(e, p, "set"), p + ".set");
        for (std::size_t s = 0; s < set.size(); ++s) {
          const int id = ReadInt(set[s], Index(p + ".set", s));
          if (id >= n) throw InputError(Index(p + ".set", s) + ": no such agent");
          mask |= std::uint64_t{1} << id;
        }
        const Num v = ReadNum(Field(e, p, "value"), p + ".value");
        if (v < 0) throw InputError(p + ".value: negative value");
        if (mask == 0 && v != 0) throw InputError(p + ": v(empty set) must be 0");
        if (mask != 0 && entries[mask]) {
          throw InputError(p + ": duplicate set " + ToString(SetFromMask(mask)));
        }
        entries[mask] = v;
      }
      std::vector<Num> full;
      for (std::size_t mask = 0; mask < entries.size(); ++mask) {
        if (!entries[mask]) {
          throw MalformedValuationError(tpath + ": missing set " +
                                        ToString(SetFromMask(mask)));
        }
        full.push_back(*entries[mask]);
      }
      return Instance(budget, std::move(list), Valuation::Explicit(n, std::move(full)));
    }

    if (kind == "coverage") {
      RejectUnknown(val, vpath, {"kind", "weights", "covers"});
      const std::string wpath = vpath + ".weights";
      const Json& wj = ReadArray(Field(val, vpath, "weights"), wpath);
      std::vector<Num> weights;
      for (std::size_t k = 0; k < wj.size(); ++k) {
        weights.push_back(ReadNum(wj[k], Index(wpath, k)));
      }
      const std::string cpath = vpath + ".covers";
      const Json& cj = ReadArray(Field(val, vpath, "covers"), cpath);
      if (static_cast<int>(cj.size()) != n) {
        throw InputError(cpath + ": need one cover list per agent");
      }
      std::vector<std::vector<int>> covers;
      for (std::size_t k = 0; k < cj.size(); ++k) {
        const Json& list_j = ReadArray(cj[k], Index(cpath, k));
        std::vector<int> cover;
        for (std::size_t e = 0; e < list_j.size(); ++e) {
          cover.push_back(ReadInt(list_j[e], Index(Index(cpath, k), e)));
        }
        covers.push_back(std::move(cover));
      }
      return Instance(budget, std::move(list),
                      Valuation::Coverage(std::move(covers), std::move(weights)));
    }
  } catch (const LimitError& e) {
    throw InputError(e.what());
  }
  throw InputError(vpath + ".kind: unknown valuation kind '" + kind + "'");
}

Json NumJson(const Num& x) { return ToString(x); }

Json InstanceToJson(const AnyInstance& instance) {
  Json doc;
  if (const auto* typed = std::get_if<HeteroInstance>(&instance)) {
    doc["budget"] = NumJson(typed->budget());
    Json agents = Json::array();
    for (const HeteroItem& it : typed->items()) {
      agents.push_back({{"id", it.id},
                        {"cost", NumJson(it.cost)},
                        {"value", NumJson(it.value)},
                        {"type", it.type}});
    }
    doc["agents"] = std::move(agents);
    doc["valuation"] = {{"kind", "additive"}};
    return doc;
  }
  const Instance& plain = std::get<Instance>(instance);
  const Valuation& v = plain.valuation();
  doc["budget"] = NumJson(plain.budget());
  Json agents = Json::array();
  for (const Agent& a : plain.agents()) {
    Json entry = {{"id", a.id}, {"cost", NumJson(a.cost)}};
    if (v.kind() == Valuation::Kind::kAdditive) {
      entry["value"] = NumJson(v.additive_values()[a.id]);
    }
    agents.push_back(std::move(entry));
  }
  doc["agents"] = std::move(agents);
  switch (v.kind()) {
    case Valuation::Kind::kAdditive:
      doc["valuation"] = {{"kind", "additive"}};
      break;
    case Valuation::Kind::kExplicit: {
      Json table = Json::array();
      const auto& t = v.explicit_table();
      for (std::size_t mask = 1; mask < t.size(); ++mask) {
        table.push_back({{"set", SetFromMask(mask)}, {"value", NumJson(t[mask])}});
      }
      doc["valuation"] = {{"kind", "explicit"}, {"table", std::move(table)}};
      break;
    }
    case Valuation::Kind::kCoverage: {
      Json weights = Json::array();
      for (const Num& w : v.element_weights()) weights.push_back(NumJson(w));
      doc["valuation"] = {{"kind", "coverage"},
                          {"weights", std::move(weights)},
                          {"covers", v.covers()}};
      break;
    }
  }
  return doc;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr const char* kCsvHeader = "instance,mechanism,value,opt,ratio,pass,witness\n";

}  // namespace

AnyInstance ParseInstance(std::string_view text) {
  return InstanceFromJson(ParseJson(text), "");
}

AnyInstance LoadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string SerializeInstance(const AnyInstance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

WeightedInstanceFamily ParseFamilyDocument(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw InputError("document: expected an object");
  RejectUnknown(doc, "document", {"family", "members"});
  WeightedInstanceFamily family;
  const Json& name = Field(doc, "document", "family");
  if (!name.is_string()) throw InputError("family: expected a string");
  family.description = name.get<std::string>();
  const Json& members = ReadArray(Field(doc, "document", "members"), "members");
  Num total = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::string p = Index("members", k);
    const Json& m = members[k];
    if (!m.is_object()) throw InputError(p + ": expected an object");
    RejectUnknown(m, p, {"probability", "instance"});
    const Num prob = ReadNum(Field(m, p, "probability"), p + ".probability");
    if (prob <= 0) throw InputError(p + ".probability: must be positive");
    AnyInstance inst = InstanceFromJson(Field(m, p, "instance"), p + ".instance");
    if (!std::holds_alternative<Instance>(inst)) {
      throw InputError(p + ".instance: families hold untyped instances");
    }
    total += prob;
    family.members.push_back({prob, std::get<Instance>(std::move(inst))});
  }
  if (total != 1) throw InputError("members: probabilities sum to " + ToString(total));
  return family;
}

std::string SerializeFamily(const WeightedInstanceFamily& family) {
  Json doc;
  doc["family"] = family.description;
  Json members = Json::array();
  for (const WeightedInstance& m : family.members) {
    members.push_back({{"probability", NumJson(m.probability)},
                       {"instance", InstanceToJson(m.instance)}});
  }
  doc["members"] = std::move(members);
  return doc.dump(2) + "\n";
}

std::string OutcomeToJson(std::string_view mechanism,
                          const RandomizedOutcome& outcome) {
  Json doc;
  doc["mechanism"] = std::string(mechanism);
  Json branches = Json::array();
  for (const Branch& b : outcome.branches()) {
    Json payments = Json::object();
    for (const auto& [id, p] : b.outcome.payments) {
      payments[std::to_string(id)] = NumJson(p);
    }
    branches.push_back({{"probability", NumJson(b.probability)},
                        {"winners", b.outcome.winners},
                        {"payments", std::move(payments)},
                        {"total_payment", NumJson(b.outcome.total_payment)},
                        {"value", NumJson(b.outcome.value)}});
  }
  doc["branches"] = std::move(branches);
  doc["expected_value"] = NumJson(outcome.ExpectedValue());
  doc["expected_payment"] = NumJson(outcome.ExpectedPayment());
  return doc.dump(2) + "\n";
}

std::string RatioTableCsv(std::span<const RatioRow> rows) {
  std::string out = kCsvHeader;
  for (const RatioRow& r : rows) {
    out += CsvField(r.instance_id) + "," + CsvField(r.mechanism) + "," +
           ToString(r.value) + "," + ToString(r.opt) + "," +
           (r.infinite ? std::string("inf") : ToDecimal(r.ratio, 30)) + "," +
           (r.pass ? "pass" : "fail") + "," + CsvField(r.witness) + "\n";
  }
  return out;
}

std::string PropertyReportCsv(std::span<const PropertyReport> reports) {
  std::string out = kCsvHeader;
  for (const PropertyReport& r : reports) {
    out += CsvField(r.instance_id) + "," + CsvField(r.property) + ",,,," +
           (r.pass ? "pass" : "fail") + "," + CsvField(r.witness) + "\n";
  }
  return out;
}

}  // namespace bfm
