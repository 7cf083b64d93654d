// Command-line front end: thin wrappers around the library, JSON or text out.
//
// Exit codes: 0 ok, 1 error, 2 negative verdict (check: violated,
// indecomposable: Decomposable), 3 node budget exhausted.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dressian/dressian.hpp"

namespace {

using dressian::io::json;
namespace io = dressian::io;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;
constexpr int kBudget = 3;

const std::vector<std::string> kVerbs{"info",           "octahedra", "check", "subdivide", "fan",
                                      "indecomposable", "stiefel",   "tree",  "sum",       "project"};

struct Options {
  std::string matroid_path;
  std::string named;
  std::vector<std::string> weights;
  std::string tree_path;
  std::string matrix_path;
  std::vector<int> parallel;
  std::string format = "json";
  std::size_t budget = dressian::kDefaultBudget;
  int threads = 0;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  int run(const std::string& verb) {
    if (verb == "info") return info();
    if (verb == "octahedra") return octahedra();
    if (verb == "check") return check();
    if (verb == "subdivide") return subdivide();
    if (verb == "fan") return fan();
    if (verb == "indecomposable") return indecomposable();
    if (verb == "stiefel") return stiefel();
    if (verb == "tree") return tree();
    if (verb == "sum") return sum();
    if (verb == "project") return project();
    throw dressian::Error(dressian::ErrorCode::InvalidParameters, "UnknownVerb: " + verb);
  }

 private:
  bool text() const { return o_.format == "text"; }

  void emit(const json& j, const std::string& report) const {
    if (text()) {
      std::cout << report;
    } else {
      std::cout << j.dump(2) << '\n';
    }
  }

  std::optional<dressian::Matroid> maybe_matroid() const {
    if (!o_.matroid_path.empty() && !o_.named.empty()) {
      throw dressian::Error(dressian::ErrorCode::InvalidParameters, "give either --matroid or --named, not both");
    }
    if (!o_.matroid_path.empty()) return io::matroid_from_json(io::read_file(o_.matroid_path));
    if (!o_.named.empty()) return dressian::named(o_.named);
    return std::nullopt;
  }

  dressian::Matroid matroid() const {
    auto m = maybe_matroid();
    if (!m) throw dressian::Error(dressian::ErrorCode::InvalidParameters, "this verb needs --matroid or --named");
    return *m;
  }

  dressian::WeightVector weights(std::size_t which = 0) const {
    if (o_.weights.size() <= which) {
      throw dressian::Error(dressian::ErrorCode::InvalidParameters, "this verb needs --weights");
    }
    const auto m = maybe_matroid();
    return io::weights_from_json(io::read_file(o_.weights[which]), m ? &*m : nullptr);
  }

  static std::string elements(dressian::Subset s) { return s.empty() ? "{}" : s.to_string(); }

  int info() {
    const auto m = matroid();
    json components = json::array();
    for (auto k : dressian::connected_components(m)) components.push_back(io::to_json(k));
    const auto binary = dressian::is_binary(m);
    const auto oct = dressian::octahedra(m).size();
    json j{{"n", m.size()},
           {"rank", m.rank()},
           {"basis_count", m.basis_count()},
           {"polytope_dim", dressian::polytope_dim(m)},
           {"components", components},
           {"loops", io::to_json(dressian::loops(m))},
           {"coloops", io::to_json(dressian::coloops(m))},
           {"binary", binary.binary},
           {"lineality_dim", dressian::lineality_dim(m)},
           {"octahedra", oct}};
    if (binary.witness) {
      j["u24_minor"] = {{"contract", io::to_json(binary.witness->contract)}, {"delete", io::to_json(binary.witness->del)}};
    }
    std::string r = "matroid on " + std::to_string(m.size()) + " elements, rank " + std::to_string(m.rank()) + ", " +
                    std::to_string(m.basis_count()) + " bases\n";
    r += "polytope dimension " + std::to_string(dressian::polytope_dim(m)) + ", " +
         std::to_string(components.size()) + " connected components\n";
    r += "loops " + elements(dressian::loops(m)) + ", coloops " + elements(dressian::coloops(m)) + "\n";
    r += std::string("binary: ") + (binary.binary ? "yes" : "no") + "\n";
    r += "octahedral faces: " + std::to_string(oct) + "\n";
    emit(j, r);
    return kOk;
  }

  int octahedra() {
    const auto faces = dressian::octahedra(matroid());
    std::string r = std::to_string(faces.size()) + " octahedral faces\n";
    for (const auto& f : faces) r += "  s=" + elements(f.s) + " t=" + f.t.to_string() + "\n";
    emit({{"count", faces.size()}, {"octahedra", io::to_json(faces)}}, r);
    return kOk;
  }

  int check() {
    const auto w = weights();
    const auto c = dressian::is_valuated(w);
    json j{{"valuated", c.valuated}};
    std::string r = c.valuated ? "valuated: every three-term relation attains its minimum twice\n" : "";
    if (!c.valuated) {
      const auto& rel = *c.violated;
      json sums = json::object();
      for (int k = 1; k <= 3; ++k) {
        const auto& f = rel.factors[static_cast<std::size_t>(k - 1)];
        if (f[0] && f[1]) sums[std::to_string(k)] = io::to_json(w[*f[0]] + w[*f[1]]);
      }
      j["violated"] = io::to_json(rel);
      j["violated"]["term_values"] = sums;
      r = "not valuated: relation s=" + elements(rel.s) + " quad=" + rel.quad_set().to_string() +
          " attains its minimum only once\n";
    }
    emit(j, r);
    return c.valuated ? kOk : kNegative;
  }

  int subdivide() {
    const auto s = dressian::regular_subdivision(weights());
    const json j = io::to_json(s);
    std::string r = std::to_string(s.cells.size()) + " maximal cells\n";
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      r += "  ";
      for (auto b : s.cell_bases(i)) r += b.to_string() + " ";
      r += "\n";
    }
    if (j.at("matroidal").get<bool>()) {
      r += std::string("matroidal, ") + j.at("classification").at("kind").get<std::string>();
      if (j.at("classification").contains("hyperplane")) {
        r += " along " + j.at("classification").at("hyperplane").at("text").get<std::string>();
      }
      r += "\n";
    } else {
      r += "not matroidal: cell " + std::to_string(j.at("offending_cell").get<std::size_t>()) +
           " violates basis exchange\n";
    }
    emit(j, r);
    return kOk;
  }

  static std::string fan_report(const dressian::Fan& f) {
    std::string r = std::to_string(f.maximal_cones.size()) + " maximal cones, lineality dimension " +
                    std::to_string(f.lineality_dim) + (f.complete ? "" : " (incomplete)") + "\n";
    for (const auto& c : f.maximal_cones) r += "  cone of dimension " + std::to_string(c.dim) + "\n";
    if (f.is_linear_space) r += "Dr(M) is a linear space\n";
    return r;
  }

  int fan() {
    try {
      const auto f = dressian::enumerate_fan(matroid(), o_.budget);
      emit(io::to_json(f), fan_report(f));
      return kOk;
    } catch (const dressian::BudgetExceeded& e) {
      emit(io::to_json(e.partial), fan_report(e.partial));
      std::cerr << e.what() << '\n';
      return kBudget;
    }
  }

  int indecomposable() {
    const auto r = dressian::is_indecomposable(matroid(), o_.budget);
    std::string t = std::string(dressian::to_string(r.verdict)) + ": " + r.reason + "\n";
    emit(io::to_json(r), t);
    switch (r.verdict) {
      case dressian::Decomposability::Indecomposable: return kOk;
      case dressian::Decomposability::Decomposable: return kNegative;
      case dressian::Decomposability::Unknown: return kBudget;
    }
    return kError;
  }

  std::string weight_report(const dressian::WeightVector& w) const {
    std::string r;
    for (std::size_t i = 0; i < w.matroid().basis_count(); ++i) {
      r += "  w(" + w.matroid().bases()[i].to_string() + ") = " + dressian::format_rational(w[i]) + "\n";
    }
    return r;
  }

  int stiefel() {
    if (o_.matrix_path.empty()) throw dressian::Error(dressian::ErrorCode::InvalidParameters, "stiefel needs --matrix");
    const auto w = dressian::stiefel(io::matrix_from_json(io::read_file(o_.matrix_path)));
    emit(io::to_json(w), weight_report(w));
    return kOk;
  }

  int tree() {
    if (o_.tree_path.empty()) throw dressian::Error(dressian::ErrorCode::InvalidParameters, "tree needs --tree");
    const auto w = dressian::tree_metric_weight(io::tree_from_json(io::read_file(o_.tree_path)));
    emit(io::to_json(w), weight_report(w));
    return kOk;
  }

  int sum() {
    if (o_.weights.size() != 2) throw dressian::Error(dressian::ErrorCode::InvalidParameters, "sum needs two --weights files");
    const auto w = dressian::tensor_weights(io::weights_from_json(io::read_file(o_.weights[0])),
                                            io::weights_from_json(io::read_file(o_.weights[1])));
    emit(io::to_json(w), weight_report(w));
    return kOk;
  }

  int project() {
    if (o_.parallel.size() != 2) throw dressian::Error(dressian::ErrorCode::InvalidParameters, "project needs --parallel e e'");
    const auto w = dressian::parallel_projection(weights(), o_.parallel[0], o_.parallel[1]);
    emit(io::to_json(w), weight_report(w));
    return kOk;
  }

  const Options& o_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with matroids, valuated matroids and local Dressians"};
  Options o;
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--threads", o.threads, "Worker threads (falls back to DRESSIAN_THREADS)");
  };
  const auto add_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", o.matroid_path, "Matroid JSON file");
    sub->add_option("--named", o.named, "Catalog matroid name");
  };
  for (const auto& verb : kVerbs) {
    auto* sub = app.add_subcommand(verb);
    add_format(sub);
    if (verb != "stiefel" && verb != "tree" && verb != "sum") add_matroid(sub);
    if (verb == "check" || verb == "subdivide" || verb == "sum" || verb == "project") {
      sub->add_option("--weights", o.weights, "Weight vector JSON file");
    }
    if (verb == "fan" || verb == "indecomposable") sub->add_option("--budget", o.budget, "Node budget");
    if (verb == "stiefel") sub->add_option("--matrix", o.matrix_path, "Tropical matrix JSON file");
    if (verb == "tree") sub->add_option("--tree", o.tree_path, "Phylogenetic tree JSON file");
    if (verb == "project") sub->add_option("--parallel", o.parallel, "Parallel pair e e'")->expected(2);
  }

  if (argc > 1 && argv[1][0] != '-') {
    const std::string verb = argv[1];
    if (std::find(kVerbs.begin(), kVerbs.end(), verb) == kVerbs.end()) {
      std::cerr << "UnknownVerb: " << verb << '\n';
      return kError;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (o.threads <= 0) {
    if (const char* env = std::getenv("DRESSIAN_THREADS")) o.threads = std::atoi(env);
  }
  if (o.threads > 0) dressian::set_worker_threads(o.threads);

  try {
    return Runner(o).run(app.get_subcommands().front()->get_name());
  } catch (const dressian::Error& e) {
    std::cerr << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
