#include "degcomp/io.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

namespace degcomp {

namespace {

using nlohmann::json;

constexpr int kVersion = 1;

int line_at(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

std::string pair_text(DegreePair p) {
  return "[" + std::to_string(p.in) + ", " + std::to_string(p.out) + "]";
}

std::string pairs_text(std::span<const DegreePair> pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += pair_text(pairs[i]);
  }
  return out + "]";
}

std::string arcs_text(std::span<const Arc> arcs) {
  std::string out = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(arcs[i].tail) + ", " + std::to_string(arcs[i].head) + "]";
  }
  return out + "]";
}

std::string ints_text(std::span<const int> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

// Accumulates "key": value lines of one JSON object.
class ObjectWriter {
 public:
  explicit ObjectWriter(int indent) : indent_(indent) {}

  ObjectWriter& raw(std::string_view key, const std::string& value) {
    fields_.emplace_back(std::string(key), value);
    return *this;
  }
  ObjectWriter& text(std::string_view key, std::string_view value) { return raw(key, json_string(value)); }
  ObjectWriter& number(std::string_view key, long long value) { return raw(key, std::to_string(value)); }
  ObjectWriter& boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }

  std::string str() const {
    const std::string pad(indent_ + 2, ' ');
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += pad + json_string(fields_[i].first) + ": " + fields_[i].second;
      out += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    return out + std::string(indent_, ' ') + "}";
  }

 private:
  int indent_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string instance_object(const ProblemInstance& inst, int indent) {
  ObjectWriter w(indent);
  w.text("format", "degcomp-instance")
      .number("version", kVersion)
      .text("problem", to_string(inst.problem))
      .number("vertices", inst.graph.num_vertices())
      .raw("arcs", arcs_text(inst.graph.arcs()));
  switch (inst.problem) {
    case Problem::ddconc: {
      std::string lists = "[";
      for (Vertex v = 0; v < inst.tau.size(); ++v) {
        if (v) lists += ", ";
        lists += pairs_text(inst.tau.allowed(v));
      }
      lists += "]";
      w.number("budget", inst.budget).number("bound", inst.tau.bound()).raw("lists", lists);
      break;
    }
    case Problem::ddseqc:
      w.raw("target", pairs_text(inst.target.sorted()));
      break;
    case Problem::dda:
      w.number("anonymity", inst.anonymity).number("budget", inst.budget);
      break;
  }
  return w.str();
}

// Typed access to a parsed object with line-aware diagnostics.
class Reader {
 public:
  Reader(std::string_view text, const json& root, std::string format)
      : text_(text), root_(root) {
    if (!root_.is_object()) throw SemanticError(1, "<root>", "expected a JSON object");
    const std::string found = string("format");
    if (found != format) fail("format", "expected \"" + format + "\", found \"" + found + "\"");
    if (integer("version") != kVersion) fail("version", "unsupported version");
  }

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    const std::string key = field.substr(0, field.find('['));
    const std::size_t at = text_.find("\"" + key + "\"");
    throw SemanticError(at == std::string_view::npos ? 1 : line_at(text_, at), field, message);
  }

  bool has(const std::string& key) const { return root_.contains(key); }

  const json& get(const std::string& key) const {
    if (!root_.contains(key)) fail(key, "missing");
    return root_.at(key);
  }

  std::string string(const std::string& key) const {
    const json& v = get(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  long long integer(const std::string& key) const { return integer_value(get(key), key); }

  int count(const std::string& key) const {
    const long long v = integer(key);
    if (v < 0 || v > 1'000'000'000) fail(key, "expected a non-negative integer");
    return static_cast<int>(v);
  }

  long long integer_value(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<long long>();
  }

  DegreePair pair(const json& v, const std::string& field) const {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [indegree, outdegree]");
    const long long a = integer_value(v[0], field);
    const long long b = integer_value(v[1], field);
    if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000) fail(field, "negative or oversized degree");
    return {static_cast<int>(a), static_cast<int>(b)};
  }

  std::vector<DegreePair> pairs(const json& v, const std::string& field) const {
    if (!v.is_array()) fail(field, "expected an array of pairs");
    std::vector<DegreePair> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(pair(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::vector<DegreePair> pairs(const std::string& key) const { return pairs(get(key), key); }

  void only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, value] : root_.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(key, "unknown key");
    }
  }

 private:
  std::string_view text_;
  const json& root_;
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
}

Digraph read_digraph(const Reader& r) {
  const int n = r.count("vertices");
  const json& arcs = r.get("arcs");
  if (!arcs.is_array()) r.fail("arcs", "expected an array of arcs");
  std::vector<Arc> list;
  std::set<Arc> seen;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string field = "arcs[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_array() || a.size() != 2) r.fail(field, "expected [tail, head]");
    const long long tail = r.integer_value(a[0], field);
    const long long head = r.integer_value(a[1], field);
    if (tail < 0 || head < 0 || tail >= n || head >= n) r.fail(field, "vertex out of range");
    const Arc arc{static_cast<int>(tail), static_cast<int>(head)};
    if (arc.tail == arc.head) r.fail(field, "loop arc");
    if (!seen.insert(arc).second) r.fail(field, "duplicate arc");
    list.push_back(arc);
  }
  return Digraph(n, list);
}

std::vector<std::vector<DegreePair>> read_lists(const Reader& r, int expected, int bound) {
  const json& lists = r.get("lists");
  if (!lists.is_array()) r.fail("lists", "expected one list per vertex");
  if (static_cast<int>(lists.size()) != expected) {
    r.fail("lists", std::to_string(lists.size()) + " lists for " + std::to_string(expected) + " entries");
  }
  std::vector<std::vector<DegreePair>> out;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    const std::string field = "lists[" + std::to_string(v) + "]";
    out.push_back(r.pairs(lists[v], field));
    for (std::size_t j = 0; j < out.back().size(); ++j) {
      if (out.back()[j].max_component() > bound) {
        r.fail(field + "[" + std::to_string(j) + "]", "component exceeds bound " + std::to_string(bound));
      }
    }
  }
  return out;
}

std::string certificate_object(const Certificate& c, int indent) {
  ObjectWriter w(indent);
  w.boolean("insertable", c.insertable)
      .boolean("within_budget", c.within_budget)
      .boolean("degree_lists", c.degree_lists)
      .boolean("sequence_property", c.sequence_property)
      .text("route", c.route);
  return w.str();
}

}  // namespace

std::string emit_instance(const ProblemInstance& instance) { return instance_object(instance, 0) + "\n"; }

ProblemInstance parse_instance(std::string_view text) {
  const json root = parse_json(text);
  const Reader r(text, root, "degcomp-instance");
  const std::string name = r.string("problem");
  const auto problem = problem_from_string(name);
  if (!problem) r.fail("problem", "unknown problem \"" + name + "\"");
  Digraph d = read_digraph(r);
  const int n = d.num_vertices();
  switch (*problem) {
    case Problem::ddconc: {
      r.only({"format", "version", "problem", "vertices", "arcs", "budget", "bound", "lists"});
      const int bound = r.count("bound");
      return ProblemInstance::ddconc(std::move(d), r.count("budget"),
                                     DegreeListFunction(read_lists(r, n, bound), bound));
    }
    case Problem::ddseqc: {
      r.only({"format", "version", "problem", "vertices", "arcs", "target"});
      auto target = r.pairs("target");
      if (static_cast<int>(target.size()) != n) {
        r.fail("target", std::to_string(target.size()) + " entries for " + std::to_string(n) + " vertices");
      }
      std::sort(target.begin(), target.end());
      return ProblemInstance::ddseqc(std::move(d), DegreeSequence(std::move(target)));
    }
    case Problem::dda: {
      r.only({"format", "version", "problem", "vertices", "arcs", "anonymity", "budget"});
      const int k = r.count("anonymity");
      if (k < 1) r.fail("anonymity", "must be positive");
      return ProblemInstance::dda(std::move(d), k, r.count("budget"));
    }
  }
  r.fail("problem", "unsupported");
}

std::string emit_solution(Problem problem, const std::optional<Solution>& solution) {
  ObjectWriter w(0);
  w.text("format", "degcomp-solution")
      .number("version", kVersion)
      .text("problem", to_string(problem))
      .text("decision", solution ? "yes" : "no");
  if (solution) {
    std::vector<Arc> arcs = solution->arcs;
    std::sort(arcs.begin(), arcs.end());
    w.number("size", static_cast<long long>(arcs.size()))
        .raw("arcs", arcs_text(arcs))
        .raw("certificate", certificate_object(solution->certificate, 2));
  } else {
    w.number("size", 0).raw("arcs", "[]").raw("certificate", "null");
  }
  return w.str() + "\n";
}

SolutionFile parse_solution(std::string_view text) {
  const json root = parse_json(text);
  const Reader r(text, root, "degcomp-solution");
  r.only({"format", "version", "problem", "decision", "size", "arcs", "certificate"});
  SolutionFile file;
  const auto problem = problem_from_string(r.string("problem"));
  if (!problem) r.fail("problem", "unknown problem");
  file.problem = *problem;
  const std::string decision = r.string("decision");
  if (decision == "no") return file;
  if (decision != "yes") r.fail("decision", "expected \"yes\" or \"no\"");

  Solution solution;
  const json& arcs = r.get("arcs");
  if (!arcs.is_array()) r.fail("arcs", "expected an array of arcs");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string field = "arcs[" + std::to_string(i) + "]";
    if (!arcs[i].is_array() || arcs[i].size() != 2) r.fail(field, "expected [tail, head]");
    const long long tail = r.integer_value(arcs[i][0], field);
    const long long head = r.integer_value(arcs[i][1], field);
    if (tail < 0 || head < 0 || tail > 1'000'000'000 || head > 1'000'000'000) r.fail(field, "bad vertex");
    solution.arcs.push_back({static_cast<int>(tail), static_cast<int>(head)});
  }
  const json& cert = r.get("certificate");
  if (cert.is_object()) {
    auto flag = [&](const char* key) { return cert.contains(key) && cert[key].is_boolean() && cert[key].get<bool>(); };
    solution.certificate.insertable = flag("insertable");
    solution.certificate.within_budget = flag("within_budget");
    solution.certificate.degree_lists = flag("degree_lists");
    solution.certificate.sequence_property = flag("sequence_property");
    if (cert.contains("route") && cert["route"].is_string()) solution.certificate.route = cert["route"].get<std::string>();
  }
  file.solution = std::move(solution);
  return file;
}

std::string emit_kernel(const KernelResult& result) {
  std::string kept = "[";
  bool first = true;
  for (const auto& [kernel_vertex, original] : result.kept) {
    if (!first) kept += ", ";
    first = false;
    kept += "[" + std::to_string(kernel_vertex) + ", " + std::to_string(original) + "]";
  }
  kept += "]";
  ObjectWriter w(0);
  w.text("format", "degcomp-kernel")
      .number("version", kVersion)
      .text("verdict", to_string(result.verdict))
      .text("reason", result.reason)
      .raw("kept", kept)
      .raw("added", ints_text(result.added))
      .raw("instance", instance_object(result.instance, 2));
  return w.str() + "\n";
}

std::string emit_sequence_file(const SequenceFile& file) {
  ObjectWriter w(0);
  w.text("format", "degcomp-sequence").number("version", kVersion).text("problem", file.problem);
  w.raw("sequence", pairs_text(file.sequence.entries()));
  if (file.problem == "nddcc") {
    std::string lists = "[";
    for (Vertex v = 0; v < file.lists.size(); ++v) {
      if (v) lists += ", ";
      lists += pairs_text(file.lists.allowed(v));
    }
    lists += "]";
    w.number("budget", file.budget).number("bound", file.lists.bound()).raw("lists", lists);
  } else if (file.problem == "nddsc") {
    w.raw("target", pairs_text(file.target.entries()));
  } else {
    w.number("budget", file.budget).number("anonymity", file.anonymity);
    if (file.bound) w.number("bound", *file.bound);
  }
  return w.str() + "\n";
}

SequenceFile parse_sequence_file(std::string_view text) {
  const json root = parse_json(text);
  const Reader r(text, root, "degcomp-sequence");
  SequenceFile file;
  file.problem = r.string("problem");
  file.sequence = DegreeSequence(r.pairs("sequence"));
  if (file.problem == "nddcc") {
    r.only({"format", "version", "problem", "sequence", "budget", "bound", "lists"});
    file.budget = r.count("budget");
    file.bound = r.count("bound");
    file.lists = DegreeListFunction(read_lists(r, file.sequence.size(), *file.bound), *file.bound);
  } else if (file.problem == "nddsc") {
    r.only({"format", "version", "problem", "sequence", "target"});
    file.target = DegreeSequence(r.pairs("target"));
    if (file.target.size() != file.sequence.size()) r.fail("target", "length differs from sequence");
  } else if (file.problem == "nda") {
    r.only({"format", "version", "problem", "sequence", "budget", "anonymity", "bound"});
    file.budget = r.count("budget");
    file.anonymity = r.count("anonymity");
    if (file.anonymity < 1) r.fail("anonymity", "must be positive");
    if (r.has("bound")) {
      file.bound = r.count("bound");
      if (*file.bound < file.sequence.max_component()) r.fail("bound", "below a sequence component");
    }
  } else {
    r.fail("problem", "expected nddcc, nddsc or nda");
  }
  return file;
}

std::string emit_number_solution(const std::string& problem,
                                 const std::optional<NumberSolution>& solution) {
  ObjectWriter w(0);
  w.text("format", "degcomp-number-solution")
      .number("version", kVersion)
      .text("problem", problem)
      .text("decision", solution ? "yes" : "no");
  if (solution) {
    w.raw("target", pairs_text(solution->target.entries()))
        .raw("demands_in", ints_text(solution->demands.in))
        .raw("demands_out", ints_text(solution->demands.out));
  }
  return w.str() + "\n";
}

std::string emit_bijection(const std::optional<Bijection>& bijection) {
  ObjectWriter w(0);
  w.text("format", "degcomp-number-solution")
      .number("version", kVersion)
      .text("problem", "nddsc")
      .text("decision", bijection ? "yes" : "no");
  if (bijection) w.raw("bijection", ints_text(bijection->pi));
  return w.str() + "\n";
}

}  // namespace degcomp
