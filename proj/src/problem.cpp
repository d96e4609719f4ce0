#include "zonotopal/problem.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

namespace zonotopal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) fail("/", std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t parse_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

Rat parse_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(mpz_class(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "rationals must be strings or integers");
}

VecQ parse_vector(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of rationals");
  if (v.size() != n) fail(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  VecQ out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_scalar(v[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<VecQ> parse_vectors(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of vectors");
  std::vector<VecQ> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_vector(v[i], n, where + "/" + std::to_string(i)));
  return out;
}

std::vector<std::size_t> parse_indices(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an index list");
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto here = where + "/" + std::to_string(i);
    const auto e = parse_count(v[i], here);
    if (e >= bound) fail(here, "index " + std::to_string(e) + " out of range (N = " + std::to_string(bound) + ")");
    if (!seen.insert(e).second) fail(here, "duplicate index " + std::to_string(e));
    out.push_back(e);
  }
  return out;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");

  Problem p;
  p.n = parse_count(field(doc, "n"), "/n");
  if (p.n == 0) fail("/n", "dimension must be positive");
  p.x = parse_vectors(field(doc, "X"), p.n, "/X");
  if (p.x.size() > 20) fail("/X", "at most 20 vectors are supported");

  if (doc.contains("assignment_mode")) {
    const auto& m = doc.at("assignment_mode");
    if (m == "flats")
      p.mode = AssignmentMode::flats;
    else if (m == "subsets")
      p.mode = AssignmentMode::subsets;
    else
      fail("/assignment_mode", "expected \"flats\" or \"subsets\"");
  }

  const auto& a = field(doc, "assignment");
  if (!a.is_array()) fail("/assignment", "expected an array of {subset, value} objects");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto where = "/assignment/" + std::to_string(i);
    if (!a[i].is_object() || !a[i].contains("subset") || !a[i].contains("value"))
      fail(where, "expected an object with \"subset\" and \"value\"");
    RawAssignmentValue v;
    v.subset = parse_indices(a[i].at("subset"), p.x.size(), where + "/subset");
    v.value = static_cast<unsigned>(parse_count(a[i].at("value"), where + "/value"));
    p.assignment.push_back(std::move(v));
  }

  if (doc.contains("Y")) p.y = parse_vectors(doc.at("Y"), p.n, "/Y");
  if (doc.contains("lambda")) {
    const auto& l = doc.at("lambda");
    if (!l.is_array()) fail("/lambda", "expected an array of rationals");
    std::vector<Rat> lambda;
    for (std::size_t i = 0; i < l.size(); ++i) lambda.push_back(parse_scalar(l[i], "/lambda/" + std::to_string(i)));
    p.lambda = std::move(lambda);
  }
  if (doc.contains("order")) {
    auto order = parse_indices(doc.at("order"), p.x.size(), "/order");
    if (order.size() != p.x.size()) fail("/order", "must list every X index exactly once");
    p.order = std::move(order);
  }
  if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    if (!s.is_number_unsigned()) fail("/seed", "expected a nonnegative integer");
    p.seed = s.get<std::uint64_t>();
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_problem(text);
}

Instance make_instance(Problem problem) {
  VectorMatroid x(problem.n, problem.x);
  auto assignment = validate_assignment(x, problem.assignment, problem.mode);
  ConfigurationRequest request;
  request.n = problem.n;
  request.x = problem.x;
  request.y = problem.y;
  request.lambda = problem.lambda;
  request.x_order = problem.order;
  request.seed = problem.seed;
  request.y_count = required_y_size(x, assignment);
  auto config = make_configuration(request);
  return Instance{std::move(problem), std::move(x), std::move(assignment), std::move(config)};
}

}  // namespace zonotopal
