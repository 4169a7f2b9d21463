#include "uaw/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace uaw {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& context, const std::string& field,
                      const std::string& msg) {
  throw DataError(context + ": " + field + ": " + msg);
}

json parse_json(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(context + ": " + e.what());
  }
}

std::vector<int> int_list(const json& j, const std::string& context, const std::string& field) {
  if (!j.is_array()) bad(context, field, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      bad(context, field + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

std::vector<int> int_matrix_flat(const json& j, int n, const std::string& context,
                                 const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    bad(context, field, "expected " + std::to_string(n) + " rows");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    auto row = int_list(j[r], context, field + "[" + std::to_string(r) + "]");
    if (static_cast<int>(row.size()) != n)
      bad(context, field + "[" + std::to_string(r) + "]",
          "expected " + std::to_string(n) + " entries");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

FiniteAlgebra algebra_from_json_text(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  if (!j.is_object()) bad(context, "$", "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "name" && k != "signature" && k != "size" && k != "ops" && k != "elements")
      bad(context, k, "unknown field");
  }
  if (!j.contains("signature") || !j["signature"].is_string())
    bad(context, "signature", "missing or not a string");
  auto sig = sig_by_name(j["signature"].get<std::string>());
  if (!sig)
    bad(context, "signature", "expected one of bdl, dl, st, dma, dml, ka, kl");
  if (!j.contains("size") || !j["size"].is_number_integer())
    bad(context, "size", "missing or not an integer");
  FiniteAlgebra a;
  a.sig = *sig;
  a.size = j["size"].get<int>();
  if (a.size <= 0) bad(context, "size", "must be positive");
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad(context, "name", "expected a string");
    a.name = j["name"].get<std::string>();
  }
  if (!j.contains("ops") || !j["ops"].is_object()) bad(context, "ops", "missing or not an object");
  const json& ops = j["ops"];
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    auto op = op_by_name(it.key());
    if (!op) bad(context, "ops." + it.key(), "unknown operation");
    if (!sig_has(a.sig, *op))
      bad(context, "ops." + it.key(),
          std::string("not an operation of signature ") + sig_name(a.sig));
  }
  for (Op op : sig_ops(a.sig)) {
    std::string field = std::string("ops.") + op_name(op);
    if (!ops.contains(op_name(op))) bad(context, field, "missing");
    const json& t = ops[op_name(op)];
    switch (op) {
      case Op::meet: a.meet = int_matrix_flat(t, a.size, context, field); break;
      case Op::join: a.join = int_matrix_flat(t, a.size, context, field); break;
      case Op::neg: a.neg = int_list(t, context, field); break;
      case Op::star: a.star = int_list(t, context, field); break;
      case Op::bot:
        if (!t.is_number_integer()) bad(context, field, "expected an integer");
        a.bot = t.get<int>();
        break;
      case Op::top:
        if (!t.is_number_integer()) bad(context, field, "expected an integer");
        a.top = t.get<int>();
        break;
    }
  }
  if (j.contains("elements")) {
    if (!j["elements"].is_array()) bad(context, "elements", "expected an array of strings");
    for (const auto& e : j["elements"]) {
      if (!e.is_string()) bad(context, "elements", "expected an array of strings");
      a.labels.push_back(e.get<std::string>());
    }
  }
  a.check_well_formed(context);
  return a;
}

std::string algebra_to_json_text(const FiniteAlgebra& a) {
  json j;
  if (!a.name.empty()) j["name"] = a.name;
  j["signature"] = sig_name(a.sig);
  j["size"] = a.size;
  json ops = json::object();
  auto matrix = [&](const std::vector<int>& t) {
    json rows = json::array();
    for (int r = 0; r < a.size; ++r) {
      json row = json::array();
      for (int c = 0; c < a.size; ++c) row.push_back(t[r * a.size + c]);
      rows.push_back(row);
    }
    return rows;
  };
  ops["meet"] = matrix(a.meet);
  ops["join"] = matrix(a.join);
  if (!a.neg.empty()) ops["neg"] = a.neg;
  if (!a.star.empty()) ops["star"] = a.star;
  if (a.bot >= 0) {
    ops["bot"] = a.bot;
    ops["top"] = a.top;
  }
  j["ops"] = ops;
  if (!a.labels.empty()) j["elements"] = a.labels;
  return j.dump(2) + "\n";
}

StructuredSpace space_from_json_text(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  if (!j.is_object()) bad(context, "$", "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "kind" && k != "size" && k != "order" && k != "unary" && k != "rels" &&
        k != "subsets" && k != "labels")
      bad(context, k, "unknown field");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) bad(context, "kind", "missing");
  auto kind = space_kind_by_name(j["kind"].get<std::string>());
  if (!kind) bad(context, "kind", "expected priestley, stone, demorgan or kleene");
  if (!j.contains("size") || !j["size"].is_number_integer()) bad(context, "size", "missing");
  StructuredSpace s;
  s.kind = *kind;
  s.size = j["size"].get<int>();
  if (s.size < 0) bad(context, "size", "must be non-negative");
  s.order.assign(static_cast<size_t>(s.size) * s.size, 0);
  for (int i = 0; i < s.size; ++i) s.order[i * s.size + i] = 1;
  if (j.contains("order")) {
    if (!j["order"].is_array()) bad(context, "order", "expected an array of pairs");
    for (size_t i = 0; i < j["order"].size(); ++i) {
      auto pr = int_list(j["order"][i], context, "order[" + std::to_string(i) + "]");
      if (pr.size() != 2) bad(context, "order[" + std::to_string(i) + "]", "expected a pair");
      if (pr[0] < 0 || pr[0] >= s.size || pr[1] < 0 || pr[1] >= s.size)
        bad(context, "order[" + std::to_string(i) + "]", "index out of range");
      s.order[pr[0] * s.size + pr[1]] = 1;
    }
  }
  // transitive closure so files may list covers only
  for (int k = 0; k < s.size; ++k)
    for (int a = 0; a < s.size; ++a)
      for (int b = 0; b < s.size; ++b)
        if (s.order[a * s.size + k] && s.order[k * s.size + b]) s.order[a * s.size + b] = 1;
  if (j.contains("unary")) {
    if (!j["unary"].is_object()) bad(context, "unary", "expected an object");
    for (auto it = j["unary"].begin(); it != j["unary"].end(); ++it) {
      auto t = int_list(it.value(), context, "unary." + it.key());
      if (static_cast<int>(t.size()) != s.size)
        bad(context, "unary." + it.key(), "expected one entry per point");
      for (int v : t)
        if (v < 0 || v >= s.size) bad(context, "unary." + it.key(), "index out of range");
      s.unary[it.key()] = std::move(t);
    }
  }
  if (j.contains("rels")) {
    if (!j["rels"].is_object()) bad(context, "rels", "expected an object");
    for (auto it = j["rels"].begin(); it != j["rels"].end(); ++it) {
      std::vector<char> t(static_cast<size_t>(s.size) * s.size, 0);
      if (!it.value().is_array()) bad(context, "rels." + it.key(), "expected an array of pairs");
      for (size_t i = 0; i < it.value().size(); ++i) {
        auto pr = int_list(it.value()[i], context,
                           "rels." + it.key() + "[" + std::to_string(i) + "]");
        if (pr.size() != 2 || pr[0] < 0 || pr[0] >= s.size || pr[1] < 0 || pr[1] >= s.size)
          bad(context, "rels." + it.key() + "[" + std::to_string(i) + "]", "bad pair");
        t[pr[0] * s.size + pr[1]] = 1;
      }
      s.rels[it.key()] = std::move(t);
    }
  }
  if (j.contains("subsets")) {
    if (!j["subsets"].is_object()) bad(context, "subsets", "expected an object");
    for (auto it = j["subsets"].begin(); it != j["subsets"].end(); ++it) {
      auto members = int_list(it.value(), context, "subsets." + it.key());
      std::vector<char> t(s.size, 0);
      for (int v : members) {
        if (v < 0 || v >= s.size) bad(context, "subsets." + it.key(), "index out of range");
        t[v] = 1;
      }
      s.subsets[it.key()] = std::move(t);
    }
  }
  if (j.contains("labels")) {
    for (const auto& e : j["labels"]) s.labels.push_back(e.get<std::string>());
    if (static_cast<int>(s.labels.size()) != s.size)
      bad(context, "labels", "expected one label per point");
  }
  AxiomResult ax = check_space_axioms(s);
  if (!ax.ok) bad(context, "axioms", ax.failed_axiom + " (" + ax.detail + ")");
  return s;
}

std::string space_to_json_text(const StructuredSpace& s) {
  json j;
  j["kind"] = space_kind_name(s.kind);
  j["size"] = s.size;
  json order = json::array();
  for (int a = 0; a < s.size; ++a)
    for (int b = 0; b < s.size; ++b)
      if (a != b && s.leq(a, b)) order.push_back(json::array({a, b}));
  j["order"] = order;
  if (!s.unary.empty()) {
    json u = json::object();
    for (const auto& [name, t] : s.unary) u[name] = t;
    j["unary"] = u;
  }
  if (!s.rels.empty()) {
    json r = json::object();
    for (const auto& [name, t] : s.rels) {
      json pairs = json::array();
      for (int a = 0; a < s.size; ++a)
        for (int b = 0; b < s.size; ++b)
          if (t[a * s.size + b]) pairs.push_back(json::array({a, b}));
      r[name] = pairs;
    }
    j["rels"] = r;
  }
  if (!s.subsets.empty()) {
    json sub = json::object();
    for (const auto& [name, t] : s.subsets) {
      json members = json::array();
      for (int a = 0; a < s.size; ++a)
        if (t[a]) members.push_back(a);
      sub[name] = members;
    }
    j["subsets"] = sub;
  }
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << content;
  if (!out) throw DataError(path + ": write failed");
}

FiniteAlgebra load_algebra(const std::string& path) {
  return algebra_from_json_text(read_file(path), path);
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) {
  write_file(path, algebra_to_json_text(a));
}

StructuredSpace load_space(const std::string& path) {
  return space_from_json_text(read_file(path), path);
}

void save_space(const StructuredSpace& s, const std::string& path) {
  write_file(path, space_to_json_text(s));
}

std::string report_to_json_text(const LemmaSuiteReport& r) {
  json j;
  j["profile"] = sig_name(r.sig);
  j["bounds"] = {{"max_power", r.max_power}, {"max_size", r.max_size}, {"n_cap", r.n_cap}};
  j["members_checked"] = r.members_checked;
  j["disagreements"] = r.disagreements;
  j["bound_limited"] = r.bound_limited;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"algebra", v.algebra_name},
                        {"size", v.algebra_size},
                        {"is_clause", v.is_clause},
                        {"is_dual", v.is_dual},
                        {"is_witness_found", v.is_witness_found},
                        {"is_witness_bound_limited", v.is_witness_bound_limited},
                        {"isp_clause", v.isp_clause},
                        {"isp_dual", v.isp_dual},
                        {"isp_witness_found", v.isp_witness_found},
                        {"isp_witness_bound_limited", v.isp_witness_bound_limited}});
  }
  j["verdicts"] = verdicts;
  return j.dump(2) + "\n";
}

std::string report_to_json_text(const CompletenessReport& r) {
  json j;
  j["profile"] = sig_name(r.sig);
  j["bounds"] = {{"max_power", r.max_power}, {"max_size", r.max_size}};
  j["members_checked"] = r.members_checked;
  j["structurally_complete"] = r.structurally_complete;
  j["universally_complete"] = r.universally_complete;
  j["non_negative_universally_complete"] = r.non_negative_universally_complete;
  if (!r.structurally_complete) j["structurally_failure"] = r.structurally_failure;
  if (!r.universally_complete) j["universally_failure"] = r.universally_failure;
  if (!r.non_negative_universally_complete)
    j["nn_universally_failure"] = r.nn_universally_failure;
  return j.dump(2) + "\n";
}

}  // namespace uaw
