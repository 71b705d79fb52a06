#include "cybe/problem.hpp"

#include <algorithm>
#include <set>

namespace cybe {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      bad(path, "unknown key '" + key + "'");
    }
  }
}

std::uint64_t read_uint(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
    bad(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::size_t read_index(const json& v, std::size_t dim, const std::string& path) {
  const std::uint64_t i = read_uint(v, path);
  if (i < 1 || i > dim) bad(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

Scalar read_scalar(const json& v, FieldSpec field, const std::string& path) {
  if (!v.is_string()) bad(path, "coefficients must be strings such as \"-4\" or \"1/2\"");
  try {
    return Scalar::parse(v.get<std::string>(), field);
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

FieldSpec parse_field(const json& v) {
  allow_keys(v, "field", {"kind", "p"});
  if (!v.contains("kind") || !v["kind"].is_string()) bad("field.kind", "expected \"rational\" or \"prime\"");
  const std::string kind = v["kind"].get<std::string>();
  if (kind == "rational") {
    if (v.contains("p")) bad("field.p", "not allowed for the rationals");
    return FieldSpec::rational();
  }
  if (kind != "prime") bad("field.kind", "expected \"rational\" or \"prime\"");
  if (!v.contains("p")) bad("field.p", "required for a prime field");
  const std::uint64_t p = read_uint(v["p"], "field.p");
  try {
    return FieldSpec::prime(p);
  } catch (const InputError& e) {
    bad("field.p", e.what());
  }
}

AlgebraSpec parse_algebra(const json& v, FieldSpec field) {
  AlgebraSpec out;
  if (v.is_object() && v.contains("family")) {
    allow_keys(v, "algebra", {"family", "dim", "alpha", "beta", "delta"});
    if (!v["family"].is_string()) bad("algebra.family", "expected a family name");
    FamilyParams fp;
    try {
      fp.family = parse_family(v["family"].get<std::string>());
    } catch (const InputError& e) {
      bad("algebra.family", e.what());
    }
    auto want = [&](const char* key, bool required) -> std::optional<Scalar> {
      const std::string path = std::string("algebra.") + key;
      if (!v.contains(key)) {
        if (required) bad(path, "required for family " + family_name(fp.family));
        return std::nullopt;
      }
      if (!required) bad(path, "not a parameter of family " + family_name(fp.family));
      return read_scalar(v[key], field, path);
    };
    const bool cyclic = fp.family == Family::II;
    const bool semidirect = fp.family == Family::IV;
    fp.alpha = want("alpha", cyclic);
    fp.beta = want("beta", cyclic || semidirect);
    fp.delta = want("delta", semidirect);
    if (fp.family == Family::I) {
      if (!v.contains("dim")) bad("algebra.dim", "required for family I");
      fp.dim = static_cast<std::size_t>(read_uint(v["dim"], "algebra.dim"));
      if (fp.dim < 1) bad("algebra.dim", "must be at least 1");
    } else if (v.contains("dim")) {
      bad("algebra.dim", "only family I takes a dimension");
    }
    out.dim = fp.family == Family::I ? fp.dim : (fp.family == Family::VI ? 2 : 3);
    out.family = fp;
    return out;
  }

  allow_keys(v, "algebra", {"dim", "brackets", "label"});
  if (!v.contains("dim")) bad("algebra", "expected either \"family\" or \"dim\" with \"brackets\"");
  out.dim = static_cast<std::size_t>(read_uint(v["dim"], "algebra.dim"));
  if (out.dim < 1) bad("algebra.dim", "must be at least 1");
  if (v.contains("label")) {
    if (!v["label"].is_string()) bad("algebra.label", "expected a string");
    out.label = v["label"].get<std::string>();
  }
  const json brackets = v.value("brackets", json::array());
  if (!brackets.is_array()) bad("algebra.brackets", "expected an array");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const std::string path = "algebra.brackets[" + std::to_string(n) + "]";
    const json& b = brackets[n];
    allow_keys(b, path, {"i", "j", "k", "c"});
    for (const char* key : {"i", "j", "k", "c"}) {
      if (!b.contains(key)) bad(path, std::string("missing '") + key + "'");
    }
    std::size_t i = read_index(b["i"], out.dim, path + ".i");
    std::size_t j = read_index(b["j"], out.dim, path + ".j");
    const std::size_t k = read_index(b["k"], out.dim, path + ".k");
    Scalar c = read_scalar(b["c"], field, path + ".c");
    if (i == j) bad(path, "[e_i, e_i] is zero and cannot be assigned");
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    if (!seen.insert({i, j, k}).second) bad(path, "duplicate constant for ([e_i, e_j], e_k)");
    if (!c.is_zero()) out.brackets.push_back(BracketEntry{i + 1, j + 1, k + 1, c});
  }
  std::sort(out.brackets.begin(), out.brackets.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  return out;
}

Tensor2 parse_tensor(const json& v, std::size_t dim, FieldSpec field, const std::string& path) {
  if (!v.is_object()) bad(path, "expected an object");
  Tensor2 r(dim, field);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto assign = [&](std::size_t i, std::size_t j, Scalar c, const std::string& where) {
    if (!seen.insert({i, j}).second) bad(where, "duplicate entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    r(i, j) = std::move(c);
  };
  for (const auto& [key, value] : v.items()) {
    if (key == "entries") {
      if (!value.is_array()) bad(path + ".entries", "expected an array");
      for (std::size_t n = 0; n < value.size(); ++n) {
        const std::string where = path + ".entries[" + std::to_string(n) + "]";
        const json& e = value[n];
        if (!e.is_array() || e.size() != 3) bad(where, "expected [i, j, \"coefficient\"]");
        assign(read_index(e[0], dim, where), read_index(e[1], dim, where), read_scalar(e[2], field, where), where);
      }
      continue;
    }
    const auto pos = key.size() == 1 ? named_position(key[0]) : std::nullopt;
    if (!pos) bad(path, "unknown key '" + key + "'");
    if (dim != 3) bad(path + "." + key, "named coefficients need a dim-3 algebra");
    assign(pos->first, pos->second, read_scalar(value, field, path + "." + key), path + "." + key);
  }
  return r;
}

ProblemOptions parse_options(const json& v, FieldSpec field) {
  allow_keys(v, "options", {"budget", "workers", "generate"});
  ProblemOptions out;
  if (v.contains("budget")) out.budget = read_uint(v["budget"], "options.budget");
  if (v.contains("workers")) out.workers = static_cast<unsigned>(read_uint(v["workers"], "options.workers"));
  if (v.contains("generate")) {
    const json& g = v["generate"];
    allow_keys(g, "options.generate", {"case", "params"});
    if (!g.contains("case") || !g["case"].is_string()) bad("options.generate.case", "expected a case name");
    GenerateSpec spec;
    try {
      spec.solution_case = parse_case(g["case"].get<std::string>());
    } catch (const InputError& e) {
      bad("options.generate.case", e.what());
    }
    const json params = g.value("params", json::object());
    if (!params.is_object()) bad("options.generate.params", "expected an object");
    for (const auto& [key, value] : params.items()) {
      const std::string where = "options.generate.params." + key;
      if (key.size() != 1 || !named_position(key[0])) bad(where, "unknown parameter");
      spec.params.emplace(key[0], read_scalar(value, field, where));
    }
    out.generate = std::move(spec);
  }
  return out;
}

ordered_json scalar_json(const Scalar& s) { return s.to_string(); }

bool same_family(const FamilyParams& a, const FamilyParams& b) {
  auto eq = [](const std::optional<Scalar>& x, const std::optional<Scalar>& y) {
    return x.has_value() == y.has_value() && (!x || *x == *y);
  };
  return a.family == b.family && a.dim == b.dim && eq(a.alpha, b.alpha) && eq(a.beta, b.beta) &&
         eq(a.delta, b.delta);
}

} // namespace

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.family.has_value() != b.family.has_value()) return false;
  if (a.family) return same_family(*a.family, *b.family);
  return a.dim == b.dim && a.brackets == b.brackets && a.label == b.label;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  auto same_generate = [](const std::optional<GenerateSpec>& x, const std::optional<GenerateSpec>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->solution_case == y->solution_case && x->params == y->params);
  };
  return a.field == b.field && a.algebra == b.algebra && a.tensors == b.tensors &&
         a.options.budget == b.options.budget && a.options.workers == b.options.workers &&
         same_generate(a.options.generate, b.options.generate);
}

ProblemFile parse_problem(const json& doc) {
  allow_keys(doc, "problem", {"field", "algebra", "tensor", "tensors", "options"});
  ProblemFile out;
  out.field = doc.contains("field") ? parse_field(doc["field"]) : FieldSpec::rational();
  if (!doc.contains("algebra")) bad("problem", "missing 'algebra'");
  out.algebra = parse_algebra(doc["algebra"], out.field);
  if (doc.contains("tensor") && doc.contains("tensors")) bad("problem", "give either 'tensor' or 'tensors'");
  if (doc.contains("tensor")) out.tensors.push_back(parse_tensor(doc["tensor"], out.algebra.dim, out.field, "tensor"));
  if (doc.contains("tensors")) {
    if (!doc["tensors"].is_array()) bad("tensors", "expected an array");
    for (std::size_t n = 0; n < doc["tensors"].size(); ++n) {
      out.tensors.push_back(
          parse_tensor(doc["tensors"][n], out.algebra.dim, out.field, "tensors[" + std::to_string(n) + "]"));
    }
  }
  if (doc.contains("options")) out.options = parse_options(doc["options"], out.field);
  return out;
}

ProblemFile parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ordered_json tensor_entries_json(const Tensor2& r) {
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (!r(i, j).is_zero()) entries.push_back(ordered_json::array({i + 1, j + 1, r(i, j).to_string()}));
    }
  }
  return entries;
}

ordered_json serialize_problem(const ProblemFile& problem) {
  ordered_json out;
  ordered_json field;
  if (problem.field.is_prime()) {
    field["kind"] = "prime";
    field["p"] = problem.field.modulus();
  } else {
    field["kind"] = "rational";
  }
  out["field"] = field;

  ordered_json alg;
  if (problem.algebra.family) {
    const FamilyParams& fp = *problem.algebra.family;
    alg["family"] = family_name(fp.family);
    if (fp.family == Family::I) alg["dim"] = fp.dim;
    if (fp.alpha) alg["alpha"] = scalar_json(*fp.alpha);
    if (fp.beta) alg["beta"] = scalar_json(*fp.beta);
    if (fp.delta) alg["delta"] = scalar_json(*fp.delta);
  } else {
    alg["dim"] = problem.algebra.dim;
    if (!problem.algebra.label.empty()) alg["label"] = problem.algebra.label;
    ordered_json list = ordered_json::array();
    for (const auto& b : problem.algebra.brackets) {
      ordered_json e;
      e["i"] = b.i;
      e["j"] = b.j;
      e["k"] = b.k;
      e["c"] = b.c.to_string();
      list.push_back(e);
    }
    alg["brackets"] = list;
  }
  out["algebra"] = alg;

  if (!problem.tensors.empty()) {
    ordered_json list = ordered_json::array();
    for (const auto& r : problem.tensors) list.push_back(ordered_json{{"entries", tensor_entries_json(r)}});
    out["tensors"] = list;
  }

  const ProblemOptions& o = problem.options;
  if (o.budget || o.workers || o.generate) {
    ordered_json opts;
    if (o.budget) opts["budget"] = *o.budget;
    if (o.workers) opts["workers"] = *o.workers;
    if (o.generate) {
      ordered_json params = ordered_json::object();
      for (const auto& [name, value] : o.generate->params) params[std::string(1, name)] = value.to_string();
      opts["generate"] = ordered_json{{"case", case_name(o.generate->solution_case)}, {"params", params}};
    }
    out["options"] = opts;
  }
  return out;
}

LieAlgebra build_algebra(const ProblemFile& problem) {
  const AlgebraSpec& a = problem.algebra;
  if (a.family) return make_family(*a.family, problem.field);
  std::vector<Scalar> constants(a.dim * a.dim * a.dim, Scalar::zero(problem.field));
  for (const auto& b : a.brackets) {
    const std::size_t i = b.i - 1, j = b.j - 1, k = b.k - 1;
    constants[(i * a.dim + j) * a.dim + k] = b.c;
    constants[(j * a.dim + i) * a.dim + k] = -b.c;
  }
  return LieAlgebra(a.dim, problem.field, std::move(constants), a.label.empty() ? "explicit" : a.label);
}

} // namespace cybe
