#include "csg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "csg/check.hpp"
#include "csg/decomposition.hpp"
#include "csg/gaps.hpp"
#include "csg/invariants.hpp"
#include "csg/kernels.hpp"
#include "csg/verify.hpp"

namespace csg::cli {

namespace {

using Json = nlohmann::ordered_json;

Int parse_int_token(const std::string& token) {
  std::size_t start = token.size() > 1 && token[0] == '-' ? 1 : 0;
  if (token.empty() || start == token.size() ||
      token.find_first_not_of("0123456789", start) != std::string::npos) {
    throw std::invalid_argument("not an integer: '" + token + "'");
  }
  return Int(token);
}

Int json_int(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_string()) return parse_int_token(v.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + v.dump());
}

IntVec json_vector(const nlohmann::json& v) {
  if (!v.is_array()) throw std::invalid_argument("expected an array of integers, got " + v.dump());
  std::vector<Int> entries;
  for (const auto& e : v) entries.push_back(json_int(e));
  return IntVec(std::move(entries));
}

std::vector<IntVec> json_vectors(const nlohmann::json& v, const char* field) {
  if (!v.is_array()) throw std::invalid_argument(std::string("\"") + field + "\" must be an array of vectors");
  std::vector<IntVec> out;
  for (const auto& row : v) out.push_back(json_vector(row));
  return out;
}

void check_shape(const std::vector<IntVec>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t p = gens.front().dim();
  if (p == 0) throw std::invalid_argument("generators of dimension 0");
  for (const IntVec& g : gens) {
    if (g.dim() != p) throw std::invalid_argument("generator " + g.to_string() + ": expected dimension " + std::to_string(p));
    if (!g.is_nonnegative()) throw std::invalid_argument("generator " + g.to_string() + " has a negative entry");
  }
}

Problem parse_json(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text.begin(), text.end());
  if (!doc.is_object() || !doc.contains("generators")) throw std::invalid_argument("missing \"generators\"");
  Problem p;
  p.generators = json_vectors(doc.at("generators"), "generators");
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw std::invalid_argument("\"label\" must be a string");
    p.label = doc.at("label").get<std::string>();
  }
  if (doc.contains("ray_semigroups")) {
    const auto& lists = doc.at("ray_semigroups");
    if (!lists.is_array()) throw std::invalid_argument("\"ray_semigroups\" must be an array of integer lists");
    std::vector<std::vector<Int>> parsed;
    for (const auto& list : lists) {
      if (!list.is_array()) throw std::invalid_argument("\"ray_semigroups\" must be an array of integer lists");
      std::vector<Int>& row = parsed.emplace_back();
      for (const auto& n : list) row.push_back(json_int(n));
    }
    p.ray_semigroups = std::move(parsed);
  }
  if (doc.contains("extra_generators")) p.extra_generators = json_vectors(doc.at("extra_generators"), "extra_generators");
  return p;
}

Problem parse_text(std::string_view text) {
  Problem p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Int> entries;
    std::string token;
    while (fields >> token) entries.push_back(parse_int_token(token));
    if (!entries.empty()) p.generators.emplace_back(std::move(entries));
  }
  return p;
}

Json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  throw DomainError("integer " + v.str() + " does not fit JSON output; use --format text");
}

Json vector_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_json(x));
  return out;
}

Json vectors_json(std::span<const IntVec> vs) {
  Json out = Json::array();
  for (const IntVec& v : vs) out.push_back(vector_json(v));
  return out;
}

template <typename T>
Json numbers_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const T& x : xs) out.push_back(x);
  return out;
}

std::string vector_text(const IntVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

void vectors_text(std::ostream& os, std::span<const IntVec> vs) {
  for (const IntVec& v : vs) os << vector_text(v) << '\n';
}

template <typename T>
std::string numbers_text(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string failure_name(CheckFailure f) {
  switch (f) {
    case CheckFailure::none: return "none";
    case CheckFailure::ray_uncovered: return "ray_uncovered";
    case CheckFailure::ray_gaps_infinite: return "ray_gaps_infinite";
    case CheckFailure::gamma_uncovered: return "gamma_uncovered";
  }
  return "unknown";
}

struct Outcome {
  std::vector<IntVec> generators;  // echoed in the report
  std::function<Json()> result;  // built only for JSON output
  std::string text;
  std::optional<VerifyReport> verification;
};

Outcome run_check(const AffineSemigroup& s, bool verify) {
  const CheckResult r = check_c_semigroup(s);
  Outcome o;
  o.result = [r] {
    Json result;
    result["is_c_semigroup"] = r.is_c_semigroup;
    if (!r.is_c_semigroup) {
      result["failure"] = failure_name(r.failure);
      result["ray"] = vector_json(r.ray_vector);
      if (r.failure == CheckFailure::gamma_uncovered) result["missing"] = vector_json(r.missing);
      result["message"] = r.message();
    }
    return result;
  };
  std::ostringstream text;
  text << (r.is_c_semigroup ? "true" : "false") << '\n';
  if (!r.is_c_semigroup) text << r.message() << '\n';
  o.text = text.str();
  if (verify && r.is_c_semigroup) o.verification = verify_gaps(s, compute_gaps(s));
  return o;
}

Outcome run_gap_listing(const std::string& command, const AffineSemigroup& s, bool verify) {
  const std::vector<IntVec> gaps = compute_gaps(s);
  Outcome o;
  std::vector<IntVec> listed;
  if (command == "gaps") {
    listed = gaps;
    o.result = [gaps] {
      Json result;
      result["count"] = gaps.size();
      result["gaps"] = vectors_json(gaps);
      return result;
    };
    if (verify) o.verification = verify_gaps(s, gaps);
  } else {
    const std::vector<IntVec> pf = pseudo_frobenius(s, gaps);
    const std::vector<IntVec> sg = special_gaps(s, gaps);
    listed = command == "pf" ? pf : sg;
    o.result = [key = command == "pf" ? "pseudo_frobenius" : "special_gaps", listed] {
      Json result;
      result[key] = vectors_json(listed);
      return result;
    };
    if (verify) {
      VerifyReport v = verify_gaps(s, gaps);
      v.merge(verify_special_gaps(s, gaps, pf, sg));
      o.verification = std::move(v);
    }
  }
  std::ostringstream text;
  vectors_text(text, listed);
  o.text = text.str();
  return o;
}

void bound_json(const BoundReport& b, Json& result) {
  result["bound"] = b.bound;
  result["embedding_dimension"] = b.embedding_dimension;
  result["ray_semigroup_dims"] = numbers_json(b.ray_semigroup_dims);
  result["gamma_dims"] = numbers_json(b.gamma_dims);
  result["unit_generators"] = vectors_json(b.unit_generators);
  result["coverage"] = numbers_json(b.coverage);
}

void bound_text(const BoundReport& b, std::ostream& text) {
  text << "bound " << b.bound << '\n'
       << "embedding_dimension " << b.embedding_dimension << '\n'
       << "ray_semigroup_dims " << numbers_text(b.ray_semigroup_dims) << '\n'
       << "gamma_dims " << numbers_text(b.gamma_dims) << '\n'
       << "unit_generators\n";
  vectors_text(text, b.unit_generators);
  text << "coverage " << numbers_text(b.coverage) << '\n';
}

Outcome run_bound(const AffineSemigroup& s, bool verify) {
  const BoundReport b = embedding_bound(s);
  Outcome o;
  std::ostringstream text;
  bound_text(b, text);
  o.result = [b] {
    Json result;
    bound_json(b, result);
    return result;
  };
  o.text = text.str();
  if (verify) o.verification = verify_bound(s, b);
  return o;
}

Outcome run_decompose(const AffineSemigroup& s, bool verify) {
  const std::vector<IntVec> gaps = compute_gaps(s);
  const GapSemigroup start(s.cone(), gaps);
  std::vector<Component> components;
  for (const GapSemigroup& part : decompose_gaps(start)) {
    components.push_back(Component{part.gaps(), generators_from_gaps(part)});
  }
  Outcome o;
  o.result = [components] {
    Json list = Json::array();
    for (const Component& component : components) {
      Json c;
      c["generators"] = vectors_json(component.generators);
      c["gaps"] = vectors_json(component.gaps);
      list.push_back(std::move(c));
    }
    Json result;
    result["components"] = std::move(list);
    return result;
  };
  std::ostringstream text;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) text << '\n';
    text << "component " << k + 1 << "\ngenerators\n";
    vectors_text(text, components[k].generators);
    text << "gaps\n";
    vectors_text(text, components[k].gaps);
  }
  o.text = text.str();
  if (verify) o.verification = verify_decomposition(s, gaps, components);
  return o;
}

Outcome run_rays(const AffineSemigroup& s) {
  const Cone& cone = s.cone();
  Outcome o;
  o.result = [cone] {
    Json facets = Json::array();
    for (const Hyperplane& h : cone.facets()) facets.push_back(vector_json(h.normal));
    Json rays = Json::array();
    for (const RayData& r : cone.rays()) {
      Json entry;
      entry["vector"] = vector_json(r.a);
      entry["facets"] = numbers_json(r.facets);
      rays.push_back(std::move(entry));
    }
    Json result;
    result["facets"] = std::move(facets);
    result["rays"] = std::move(rays);
    return result;
  };
  std::ostringstream text;
  text << "facets\n";
  for (const Hyperplane& h : cone.facets()) text << vector_text(h.normal) << '\n';
  text << "rays\n";
  for (const RayData& r : cone.rays()) {
    text << vector_text(r.a) << " | facets " << numbers_text(r.facets) << '\n';
  }
  o.text = text.str();
  return o;
}

Outcome run_construct_family(const Problem& problem, bool verify) {
  if (!problem.ray_semigroups || !problem.extra_generators) {
    throw std::invalid_argument("construct-family needs \"ray_semigroups\" and \"extra_generators\" in a JSON problem file");
  }
  const Cone cone = Cone::from_generators(problem.generators);
  const AffineSemigroup family = construct_tight_family(cone, *problem.ray_semigroups, *problem.extra_generators);
  const BoundReport b = embedding_bound(family);
  Outcome o;
  o.generators = canonical_set(problem.generators);
  o.result = [gens = family.generators(), b] {
    Json result;
    result["generators"] = vectors_json(gens);
    bound_json(b, result);
    return result;
  };
  std::ostringstream text;
  text << "generators\n";
  vectors_text(text, family.generators());
  bound_text(b, text);
  o.text = text.str();
  if (verify) {
    VerifyReport v = verify_bound(family, b);
    v.checks.push_back("bound attained");
    if (b.bound != static_cast<std::int64_t>(b.embedding_dimension)) {
      v.failures.push_back("bound " + std::to_string(b.bound) + " differs from e(S) = " +
                           std::to_string(b.embedding_dimension));
    }
    o.verification = std::move(v);
  }
  return o;
}

Outcome dispatch(const std::string& command, const Problem& problem, bool verify) {
  check_shape(problem.generators);
  if (command == "construct-family") return run_construct_family(problem, verify);

  const AffineSemigroup s(problem.generators);
  Outcome o;
  if (command == "check") {
    o = run_check(s, verify);
  } else if (command == "gaps" || command == "pf" || command == "sg") {
    o = run_gap_listing(command, s, verify);
  } else if (command == "bound") {
    o = run_bound(s, verify);
  } else if (command == "decompose") {
    o = run_decompose(s, verify);
  } else if (command == "rays") {
    o = run_rays(s);
  } else {
    throw std::invalid_argument("unknown command " + command);
  }
  o.generators = s.generators();
  return o;
}

// Restores the default worker cap when a run ends.
struct WorkerCap {
  explicit WorkerCap(int n) { kernels::set_max_workers(n); }
  ~WorkerCap() { kernels::set_max_workers(0); }
  WorkerCap(const WorkerCap&) = delete;
  WorkerCap& operator=(const WorkerCap&) = delete;
};

}  // namespace

Problem parse_problem(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  Problem p = first != std::string_view::npos && text[first] == '{' ? parse_json(text) : parse_text(text);
  check_shape(p.generators);
  return p;
}

Problem read_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string input_digest(std::span<const IntVec> gens) {
  std::uint64_t hash = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const IntVec& g : gens) feed(g.to_string());
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine C-semigroup toolkit", "csg"};
  std::string command;
  std::string file;
  std::string format = "text";
  int parallel = 0;
  bool verify = false;
  bool timing = false;
  app.add_option("command", command, "check | gaps | pf | sg | bound | decompose | rays | construct-family")
      ->required()
      ->check(CLI::IsMember({"check", "gaps", "pf", "sg", "bound", "decompose", "rays", "construct-family"}));
  app.add_option("file", file, "Problem file (JSON or plain text)")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallel", parallel, "Maximum worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_flag("--verify", verify, "Cross-check the result by brute force");
  app.add_flag("--timing", timing, "Report elapsed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  const WorkerCap cap(parallel);
  try {
    const Problem problem = read_problem(file);
    const auto started = std::chrono::steady_clock::now();
    Outcome o = dispatch(command, problem, verify);
    const std::int64_t elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();

    if (format == "json") {
      Json report;
      report["command"] = command;
      if (problem.label) report["label"] = *problem.label;
      report["input_digest"] = input_digest(canonical_set(problem.generators));
      report["generators"] = vectors_json(o.generators);
      report["result"] = o.result();
      if (o.verification) {
        Json v;
        v["ok"] = o.verification->ok();
        v["checks"] = o.verification->checks;
        v["failures"] = o.verification->failures;
        report["verification"] = std::move(v);
      }
      if (timing) report["elapsed_ms"] = elapsed;
      out << report.dump(2) << '\n';
    } else {
      out << o.text;
      if (o.verification) {
        if (o.verification->ok()) {
          out << "verify ok (" << o.verification->checks.size() << " checks)\n";
        } else {
          out << "verify FAILED\n";
          for (const std::string& f : o.verification->failures) out << "  " << f << '\n';
        }
      }
      if (timing) err << "elapsed_ms " << elapsed << '\n';
    }
    if (o.verification && !o.verification->ok()) {
      err << "error: verification failed\n";
      return 1;
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace csg::cli
