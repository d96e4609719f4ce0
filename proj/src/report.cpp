#include "zonotopal/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "zonotopal/lagrange.hpp"
#include "zonotopal/leastmap.hpp"
#include "zonotopal/split_tree.hpp"

namespace zonotopal {

using nlohmann::ordered_json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "validate") return Command::validate;
  if (name == "enumerate") return Command::enumerate;
  if (name == "pspace") return Command::pspace;
  if (name == "dspace") return Command::dspace;
  if (name == "certify") return Command::certify;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::enumerate: return "enumerate";
    case Command::pspace: return "pspace";
    case Command::dspace: return "dspace";
    case Command::certify: return "certify";
  }
  return "";
}

namespace {

class Session {
 public:
  Session(Instance inst, const RunOptions& options) : inst_(std::move(inst)), options_(options) {}

  RunResult run(Command command) {
    RunResult r;
    auto& out = r.report;
    out["command"] = command_name(command);
    out["validate"] = validate();
    if (command != Command::validate) out["enumerate"] = enumerate();
    if (command == Command::pspace || command == Command::certify) out["pspace"] = pspace();
    if (command == Command::dspace || command == Command::certify) out["dspace"] = dspace();
    if (command == Command::certify) {
      out["duality"] = duality();
      out["lagrange"] = lagrange();
      out["central_lagrange"] = central();
    }

    if (!violations_.empty())
      r.exit_code = exit_consistency;
    else if (!inst_.assignment.solid())
      r.exit_code = exit_validation;
    out["status"] = !violations_.empty()          ? "certificate failure"
                    : !inst_.assignment.solid() ? "assignment not solid"
                                                : "ok";
    out["violations"] = violations_;
    if (options_.timings) out["timings_ms"] = timings_;
    return r;
  }

 private:
  const Configuration& config() const { return inst_.config; }
  const Assignment& a() const { return inst_.assignment; }
  bool solid() const { return a().solid(); }
  bool solid_incremental() const { return a().solid() && a().incremental(); }

  std::string label(std::size_t g) const {
    return g < config().x_count() ? "x" + std::to_string(g + 1) : "y" + std::to_string(g - config().x_count() + 1);
  }
  ordered_json set(IndexSet s) const {
    ordered_json j = ordered_json::array();
    for (auto e : config().order())
      if (s.contains(e)) j.push_back(label(e));
    return j;
  }
  static ordered_json vec(const VecQ& v) {
    ordered_json j = ordered_json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
  }
  static ordered_json mat(const MatQ& m) {
    ordered_json j = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      j.push_back(row);
    }
    return j;
  }
  static ordered_json hilbert(const HilbertTable& h) {
    ordered_json j = ordered_json::array();
    if (h.values.empty()) return j;
    for (unsigned d = 0; d <= h.values.rbegin()->first; ++d) j.push_back(h.at(d));
    return j;
  }

  template <typename F>
  auto timed(const char* stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    timings_[stage] = std::chrono::duration<double, std::milli>(elapsed).count();
    return result;
  }

  void violation(const std::string& what) { violations_.push_back(what); }

  const ExternalBases& bk() {
    if (!bk_) bk_ = timed("enumerate_bk", [&] { return enumerate_bk(config(), a()); });
    return *bk_;
  }
  const PolySpace& pk() {
    if (!pk_) pk_ = timed("pk_space", [&] { return pk_space(inst_.x, a(), options_.degree_cap); });
    return *pk_;
  }
  const LeastSpace& least() {
    if (!least_) least_ = timed("least_space", [&] { return d_space(config(), bk()); });
    return *least_;
  }

  ordered_json validate() {
    ordered_json j;
    ordered_json as;
    as["mode"] = a().factors_through_span() ? "flats" : "subsets";
    as["factors_through_span"] = a().factors_through_span();
    as["solid"] = a().solid();
    if (const auto& w = a().solidity_witness())
      as["solidity_witness"] = {{"smaller", set(w->smaller)}, {"larger", set(w->larger)}};
    else
      as["solidity_witness"] = nullptr;
    as["incremental"] = a().incremental();
    if (const auto& w = a().incrementality_witness())
      as["incrementality_witness"] = {{"base", set(w->base)}, {"added", label(w->added)}};
    else
      as["incrementality_witness"] = nullptr;
    ordered_json flat_values = ordered_json::array();
    for (auto f : flats(inst_.x)) flat_values.push_back({{"flat", set(f)}, {"k", a().value(f)}});
    as["flats"] = flat_values;
    j["assignment"] = as;

    ordered_json c;
    c["n"] = config().n();
    c["N"] = config().x_count();
    c["seed"] = config().seed();
    c["order"] = set(config().x_set());
    ordered_json y = ordered_json::array();
    for (const auto& v : config().y()) y.push_back(vec(v));
    c["Y"] = y;
    c["lambda"] = vec(config().lambda());
    c["general_position"] = verify_general_position(config().n(), config().x(), config().y()) ? "fail" : "pass";
    c["generic_lambda"] =
        verify_generic_lambda(config().n(), config().ground_vectors(), config().lambda()) ? "fail" : "pass";
    j["configuration"] = c;
    return j;
  }

  ordered_json enumerate() {
    ordered_json j;
    const auto& xm = inst_.x;
    const auto independent = independents(xm);
    j["independent_sets"] = independent.size();
    const auto bx = bases(xm).members;
    ordered_json bxj = ordered_json::array();
    for (auto b : bx) bxj.push_back(set(b));
    j["bases_X"] = {{"count", bx.size()}, {"members", bxj}};
    j["required_Y_size"] = required_y_size(xm, a());
    const auto closed = count_bk(xm, a());
    j["count_Bk"] = closed.get_str();
    const auto& family = bk();
    j["enumerated_Bk"] = family.family.size();
    if (closed != family.family.size()) violation("count_Bk differs from the enumerated B_k");

    ordered_json groups = ordered_json::array();
    for (auto i : family.independent_sets) {
      ordered_json ext = ordered_json::array();
      for (auto b : family.ex(i)) ext.push_back(set(b));
      groups.push_back({{"I", set(i)},
                        {"k", a().value(i)},
                        {"m", m_value(i, a(), config().n())},
                        {"extensions", ext}});
    }
    j["groups"] = groups;

    if (!solid()) {
      j["split_tree"] = nullptr;
      return j;
    }
    const auto tree = timed("split_tree", [&] { return split_tree(family, config(), a()); });
    bool placable = true;
    for (const auto& node : tree.nodes)
      if (node.element && !is_placable(node.family, *node.element)) placable = false;
    auto leaves = tree.leaves();
    auto members = family.family.members;
    std::sort(leaves.begin(), leaves.end());
    std::sort(members.begin(), members.end());
    const bool bijective = leaves == members && tree.leaf_count() == members.size();
    j["split_tree"] = {{"nodes", tree.nodes.size()},
                       {"leaves", tree.leaf_count()},
                       {"depth", tree.depth()},
                       {"placability_verified", placable},
                       {"leaves_match_Bk", bijective}};
    if (!placable || !bijective) violation("split tree certificate failed");
    return j;
  }

  ordered_json pspace() {
    ordered_json j;
    const auto& space = pk();
    const auto direct = space.hilbert();
    ordered_json p;
    p["dim"] = space.dim();
    p["degree_cap"] = options_.degree_cap.value_or(default_degree_cap(inst_.x, a()));
    p["generators"] = space.spanning().size();
    p["hilbert_direct"] = hilbert(direct);
    const auto count = bk().family.size();
    p["count_Bk"] = count;
    p["dim_vs_count"] = space.dim() == count ? "equal" : space.dim() > count ? "greater" : "less";
    if (solid_incremental()) {
      const auto formula = hilbert_formula(config(), a());
      p["hilbert_formula"] = hilbert(formula);
      p["formula_matches"] = formula.same_values(direct);
      if (!formula.same_values(direct)) violation("Hilbert formula differs from the direct table");
      if (space.dim() != count) violation("dim P_k differs from #B_k for a solid incremental assignment");
    } else {
      p["hilbert_formula"] = nullptr;
      p["formula_matches"] = nullptr;
    }
    if (solid() && space.dim() < count) violation("dim P_k below #B_k for a solid assignment");
    j["P_k"] = p;

    const auto c = central_basis(config());
    ordered_json cj;
    cj["dim"] = c.space.dim();
    cj["rank_deficient"] = c.rank_deficient;
    cj["hilbert"] = hilbert(c.space.hilbert());
    ordered_json cb = ordered_json::array();
    for (std::size_t i = 0; i < c.bases.size(); ++i)
      cb.push_back({{"B", set(c.bases[i])}, {"greedy", set(c.greedy[i])},
                    {"poly", p_product(config(), c.greedy[i]).to_string()}});
    cj["basis"] = cb;
    if (c.space.dim() != c.bases.size()) violation("central basis is dependent");
    j["central"] = cj;

    if (!solid()) {
      j["homogeneous_basis"] = nullptr;
      j["inhomogeneous_basis"] = nullptr;
      return j;
    }
    const auto hom = timed("homogeneous_basis", [&] { return homogeneous_basis_bk(config(), a(), bk(), space); });
    ordered_json hj;
    hj["rank"] = hom.rank;
    hj["independent"] = hom.rank == hom.polys.size();
    hj["spans_P_k"] = hom.spans_pk;
    ordered_json hp = ordered_json::array();
    for (std::size_t i = 0; i < hom.polys.size(); ++i)
      hp.push_back({{"B", set(hom.bases[i])}, {"poly", hom.polys[i].to_string()}});
    hj["members"] = hp;
    if (hom.rank != hom.polys.size()) violation("homogeneous B_k family is dependent");
    j["homogeneous_basis"] = hj;

    if (!solid_incremental()) {
      j["inhomogeneous_basis"] = nullptr;
      return j;
    }
    const auto inh = timed("inhomogeneous_basis", [&] { return inhomogeneous_basis_bk(config(), a(), bk(), space); });
    ordered_json ij;
    ij["rank"] = inh.rank;
    ij["spans_P_k"] = inh.spans_pk;
    ordered_json ip = ordered_json::array();
    for (std::size_t i = 0; i < inh.polys.size(); ++i)
      ip.push_back({{"B", set(inh.bases[i])}, {"poly", inh.polys[i].to_string()}});
    ij["members"] = ip;
    if (!inh.spans_pk) violation("inhomogeneous basis does not span P_k");
    j["inhomogeneous_basis"] = ij;
    return j;
  }

  ordered_json dspace() {
    ordered_json j;
    const auto vertices = vertex_set_vk(config(), bk());
    ordered_json vj = ordered_json::array();
    for (const auto& v : vertices) vj.push_back({{"B", set(v.basis)}, {"point", vec(v.point)}});
    j["vertices"] = vj;

    const auto& d = least();
    ordered_json lj;
    lj["dim"] = d.space.dim();
    lj["truncation_degree"] = d.truncation_degree;
    lj["hilbert"] = hilbert(d.space.hilbert());
    ordered_json basis = ordered_json::array();
    for (const auto& f : d.space.basis()) basis.push_back(f.to_string());
    lj["basis"] = basis;
    const auto eval_rank = rank(evaluation_matrix(d.space.basis(), points_of(vertices)));
    lj["restriction_nonsingular"] = eval_rank == vertices.size();
    if (eval_rank != vertices.size()) violation("least space does not interpolate on V_k");
    j["least_space"] = lj;

    const auto g = timed("ideal_generators",
                         [&] { return ideal_generators(config(), bk().family.members, options_.transversal_cap); });
    ordered_json gj;
    gj["count"] = g.sets.size();
    gj["size_cap"] = g.size_cap;
    gj["complete"] = g.complete;
    ordered_json gs = ordered_json::array();
    for (auto z : g.sets) gs.push_back(set(z));
    gj["sets"] = gs;
    j["generators"] = gj;

    const auto c = timed("coherence", [&] { return coherence_check(config(), a(), bk(), d, g); });
    ordered_json cj;
    cj["count_Bk"] = c.count_bk;
    cj["dim_least_space"] = c.least_dim;
    cj["dim_kernel"] = c.kernel_dim;
    cj["kernel_hilbert"] = hilbert(c.kernel_hilbert);
    if (c.witness)
      cj["annihilation"] = {{"status", "fail"},
                            {"basis_index", c.witness->basis_index},
                            {"generator", set(c.witness->generator)},
                            {"image", c.witness->image.to_string()}};
    else
      cj["annihilation"] = {{"status", "pass"}};
    cj["lower_bound"] = c.lower_bound;
    cj["coherent"] = c.coherent;
    cj["verdict"] = c.certified ? "certified" : "no certificate";
    if (!c.annihilation) violation("least space is not annihilated by the ideal generators");
    if (solid() && g.complete && !c.coherent) violation("B_k is not coherent for a solid assignment");
    j["coherence"] = cj;
    return j;
  }

  ordered_json duality() {
    ordered_json j;
    const auto& p = pk();
    const auto& d = least();
    if (p.dim() != d.space.dim()) {
      j["status"] = "no duality certificate";
      j["reason"] = "dimension mismatch: dim P_k = " + std::to_string(p.dim()) + ", dim D_k = " +
                    std::to_string(d.space.dim());
      if (solid_incremental()) violation("P_k and D_k differ in dimension for a solid incremental assignment");
      return j;
    }
    const auto gram = timed("duality_gram", [&] { return duality_gram(p.basis(), d.space.basis()); });
    j["status"] = gram.nonsingular ? "nonsingular" : "singular";
    j["rank"] = gram.rank;
    j["gram"] = mat(gram.gram);
    if (solid_incremental() && !gram.nonsingular) violation("duality Gram matrix is singular");
    return j;
  }

  ordered_json lagrange() {
    ordered_json j;
    if (!solid()) {
      j["status"] = "requires a solid assignment";
      return j;
    }
    const auto suite = timed("lagrange", [&] { return lagrange_basis(config(), a()); });
    const auto v = verify_lagrange(suite, pk());
    j["Y_length"] = suite.config.y_count();
    ordered_json data = ordered_json::array();
    for (const auto& d : suite.data) {
      ordered_json dj;
      dj["B"] = set(d.b);
      dj["Q_B"] = d.q_b.to_string();
      ordered_json surv = ordered_json::array();
      for (auto s : d.survivors) surv.push_back(set(s));
      dj["survivors"] = surv;
      dj["I_dd"] = set(d.i_dd);
      dj["y_prime"] = d.y_prime ? ordered_json(label(*d.y_prime)) : ordered_json(nullptr);
      ordered_json coeffs = ordered_json::object();
      for (const auto& [x, c] : d.coeffs) coeffs[label(x)] = to_string(c);
      dj["coeffs"] = coeffs;
      dj["ell"] = d.ell.to_string();
      dj["L"] = d.l.to_string();
      data.push_back(dj);
    }
    j["data"] = data;
    j["evaluation"] = mat(v.evaluation);
    j["diagonal"] = v.diagonal;
    j["in_P_k"] = v.all_in_space;
    j["rank"] = v.rank;
    j["basis_of_P_k"] = v.all_in_space && v.rank == pk().dim();
    j["status"] = v.pass() ? "pass" : "fail";
    if (!v.pass()) violation("Lagrange verification failed");
    if (solid_incremental() && v.rank != pk().dim()) violation("Lagrange family does not span P_k");
    return j;
  }

  ordered_json central() {
    ordered_json j;
    const auto c = central_basis(config());
    if (c.rank_deficient) {
      j["status"] = "rank deficient X";
      return j;
    }
    const auto lag = central_lagrange(config());
    const auto v = verify_lagrange(lag.polys, lag.vertices, c.space);
    ordered_json vj = ordered_json::array();
    for (std::size_t i = 0; i < lag.bases.size(); ++i)
      vj.push_back({{"B", set(lag.bases[i])}, {"point", vec(lag.vertices[i].point)}, {"L", lag.polys[i].to_string()}});
    j["vertices"] = vj;
    j["diagonal"] = v.diagonal;
    j["in_P_X"] = v.all_in_space;
    j["status"] = v.pass() ? "pass" : "fail";
    if (!v.pass()) violation("central Lagrange verification failed");
    return j;
  }

  Instance inst_;
  RunOptions options_;
  std::optional<ExternalBases> bk_;
  std::optional<PolySpace> pk_;
  std::optional<LeastSpace> least_;
  std::vector<std::string> violations_;
  ordered_json timings_ = ordered_json::object();
};

void render(std::ostringstream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    const bool scalar_list =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& e) { return !e.is_structured(); });
    if (v.is_object() || (v.is_array() && !scalar_list && !v.empty())) {
      out << pad << it.key() << ":\n";
      if (v.is_object()) {
        render(out, v, indent + 1);
      } else {
        std::size_t i = 0;
        for (const auto& e : v) {
          if (e.is_object()) {
            out << pad << "  [" << i++ << "]\n";
            render(out, e, indent + 2);
          } else {
            out << pad << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
          }
        }
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

RunResult run_command(Command command, Problem problem, const RunOptions& options) {
  if (options.seed) problem.seed = *options.seed;
  Session session(make_instance(std::move(problem)), options);
  return session.run(command);
}

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace zonotopal
