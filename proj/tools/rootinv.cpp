// rootinv: command-line front end for lattice reduction, root invariants,
// reconstruction and the brute-force oracle.
//
// Exit codes: 0 success or equivalent, 1 not equivalent, 2 bad input,
// 3 reduction step cap hit, 4 invariant not realizable, 5 oracle window
// exhausted.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <vector>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootinv/errors.hpp"
#include "rootinv/invariant.hpp"
#include "rootinv/io.hpp"
#include "rootinv/oracle.hpp"
#include "rootinv/reconstruct.hpp"
#include "rootinv/reduction.hpp"

using namespace rootinv;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDiffer = 1, kBadInput = 2, kCap = 3, kNotRealizable = 4, kWindow = 5 };

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  bool json = false;
};

InvariantOptions options(const Globals& g) {
  InvariantOptions opt;
  opt.snap_tol = g.tol;
  opt.compare_tol = g.tol;
  return opt;
}

std::string join(const auto& values) {
  std::string s;
  for (double v : values) {
    if (!s.empty())
      s += ' ';
    s += format_number(v);
  }
  return s;
}

std::string vec_text(const Vec3& v) { return join(std::array<double, 3>{v.x, v.y, v.z}); }

std::string invariant_text(const RootInvariant& ri) {
  return to_string(ri.type) + " " + join(ri.values);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_reduce(const Globals& g, const std::string& path, int max_steps) {
  Reduction red = reduce_to_obtuse(read_lattice_file(path), max_steps);
  CoForm cf = conorms(red.superbase);
  VoForm vf = vonorms(red.superbase);
  if (g.json) {
    json steps = json::array();
    for (const auto& s : red.trace.steps)
      steps.push_back({{"i", s.i}, {"j", s.j}, {"epsilon", round12(s.epsilon)}});
    json sb = json::array();
    for (const Vec3& v : red.superbase.v)
      sb.push_back(to_json(v));
    print_json({{"superbase", sb},
                {"coform", to_json(cf)},
                {"vonorms", to_json(vf)},
                {"iterations", red.trace.iterations},
                {"steps", steps}});
    return kOk;
  }
  for (int i = 0; i < 4; ++i)
    std::cout << "v" << i << ": " << vec_text(red.superbase[i]) << '\n';
  std::cout << "coform (p23 p13 p12; p01 p02 p03): " << join(std::array{cf[0], cf[1], cf[2]})
            << "; " << join(std::array{cf[3], cf[4], cf[5]}) << '\n';
  auto v = vf.values();
  std::cout << "vonorms (v0 v1 v2 v3; v01 v02 v03): "
            << join(std::array{v[0], v[1], v[2], v[3]}) << "; "
            << join(std::array{v[4], v[5], v[6]}) << '\n';
  std::cout << "steps: " << red.trace.iterations << '\n';
  for (const auto& s : red.trace.steps)
    std::cout << "  (" << s.i << "," << s.j << ") eps " << format_number(s.epsilon) << '\n';
  return kOk;
}

int cmd_invariant(const Globals& g, const std::string& path, const std::string& batch) {
  std::vector<Basis3> lattices;
  if (!batch.empty())
    lattices = parse_csv_batch(read_text_file(batch));
  else
    lattices.push_back(read_lattice_file(path));
  std::vector<RootInvariant> out;
  for (const Basis3& b : lattices)
    out.push_back(root_invariant(b, options(g)));
  if (g.json) {
    if (batch.empty()) {
      print_json(to_json(out[0], g.tol));
    } else {
      json arr = json::array();
      for (const auto& ri : out)
        arr.push_back(to_json(ri, g.tol));
      print_json(arr);
    }
    return kOk;
  }
  for (const auto& ri : out)
    std::cout << invariant_text(ri) << '\n';
  return kOk;
}

int cmd_compare(const Globals& g, const std::string& p1, const std::string& p2, bool similarity) {
  RootInvariant a = root_invariant(read_lattice_file(p1), options(g));
  RootInvariant b = root_invariant(read_lattice_file(p2), options(g));
  bool same;
  std::string verdict;
  std::optional<double> s;
  if (similarity) {
    s = similarity_factor(a, b, g.tol);
    same = s.has_value();
    verdict = same ? "similar, s=" + format_number(*s) : "not similar";
  } else {
    same = invariants_equal(a, b, g.tol);
    verdict = same ? "isometric" : "not isometric";
  }
  if (g.json) {
    json j{{"first", to_json(a, g.tol)}, {"second", to_json(b, g.tol)}, {"equivalent", same}};
    if (similarity)
      j["factor"] = s ? json(round12(*s)) : json(nullptr);
    print_json(j);
  } else {
    std::cout << "first:  " << invariant_text(a) << '\n'
              << "second: " << invariant_text(b) << '\n'
              << verdict << '\n';
  }
  return same ? kOk : kDiffer;
}

int cmd_reconstruct(const Globals& g, const std::string& path) {
  std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                 : read_text_file(path);
  ParsedInvariant in = parse_invariant_json(text);
  CoForm cf = coform_from_invariant(in.invariant);
  Superbase sb = superbase_from_coform(cf);
  InvariantOptions opt = options(g);
  opt.compare_tol = in.tol;
  RootInvariant back = root_invariant(sb.basis(), opt);
  bool match = invariants_equal(in.invariant, back, in.tol);
  if (g.json) {
    json vs = json::array();
    for (const Vec3& v : sb.v)
      vs.push_back(to_json(v));
    print_json({{"superbase", vs},
                {"coform", to_json(cf)},
                {"round_trip", to_json(back, in.tol)},
                {"match", match}});
  } else {
    for (int i = 0; i < 4; ++i)
      std::cout << "v" << i << ": " << vec_text(sb[i]) << '\n';
    std::cout << "round trip: " << invariant_text(back) << (match ? " (match)" : " (MISMATCH)")
              << '\n';
  }
  return kOk;
}

int expected_superbases(VoronoiType t) {
  switch (t) {
    case VoronoiType::V1: return 2;
    case VoronoiType::V2: return 4;
    case VoronoiType::V3: return 6;
    case VoronoiType::V4: return 12;
    case VoronoiType::V5: return 32;
  }
  return 0;
}

int cmd_oracle(const Globals& g, const std::string& path, const std::string& check) {
  Basis3 basis = read_lattice_file(path);
  if (check == "dc7") {
    DC7Vector d = dc7(basis);
    if (g.json) {
      json arr = json::array();
      for (double x : d.d)
        arr.push_back(round12(x));
      print_json({{"dc7", arr}});
    } else {
      std::cout << "dc7: " << join(d.d) << '\n';
    }
    return kOk;
  }
  RootInvariant ri = root_invariant(basis, options(g));
  if (check == "voronoi") {
    int strict = strict_count(basis);
    // V3 loses one face pair to each of its two zero conorms, but both
    // pairs are the same
    constexpr int kStrict[] = {7, 6, 6, 4, 3};
    bool pass = strict == kStrict[int(ri.type) - 1];
    if (g.json)
      print_json({{"strict", strict}, {"vtype", to_string(ri.type)}, {"pass", pass}});
    else
      std::cout << strict << " strict, " << to_string(ri.type) << ", "
                << (pass ? "PASS" : "FAIL") << '\n';
    return kOk;
  }
  auto found = enumerate_obtuse_superbases(basis);
  // length signatures equal up to rounding share a class
  std::vector<std::pair<std::array<double, 4>, int>> classes;
  for (const auto& sb : found) {
    auto sig = squared_length_signature(basis, sb);
    auto same = [&](const auto& c) {
      for (int k = 0; k < 4; ++k)
        if (std::fabs(c.first[k] - sig[k]) > 1e-9 * sig[3])
          return false;
      return true;
    };
    auto it = std::find_if(classes.begin(), classes.end(), same);
    if (it == classes.end())
      classes.push_back({sig, 1});
    else
      ++it->second;
  }
  bool pass = int(found.size()) == expected_superbases(ri.type);
  if (g.json) {
    json sig = json::array();
    for (const auto& [s, n] : classes)
      sig.push_back({{"squared_lengths", {round12(s[0]), round12(s[1]), round12(s[2]),
                                          round12(s[3])}},
                     {"count", n}});
    print_json({{"superbases", found.size()},
                {"classes", sig},
                {"vtype", to_string(ri.type)},
                {"pass", pass}});
  } else {
    std::cout << found.size() << " superbases, " << classes.size() << " classes, "
              << (pass ? "PASS" : "FAIL") << '\n';
    for (const auto& [s, n] : classes)
      std::cout << "  squared lengths " << join(s) << ": " << n << '\n';
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root invariants of 3D lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "relative tolerance")
      ->envname("ROOTINV_TOL")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized checks")->envname("ROOTINV_SEED");
  app.add_flag("--json", g.json, "machine-readable output")->envname("ROOTINV_JSON");

  std::string in1, in2, batch, check = "superbases";
  bool similarity = false;

  auto* reduce = app.add_subcommand("reduce", "reduce to an obtuse superbase");
  reduce->add_option("input", in1, "basis or cell file")->required();
  int max_steps = kDefaultMaxIterations;
  reduce->add_option("--max-steps", max_steps, "reduction step cap")->check(CLI::PositiveNumber);

  auto* invariant = app.add_subcommand("invariant", "root invariant");
  invariant->add_option("input", in1, "basis or cell file");
  invariant->add_option("--batch", batch, "CSV file, one lattice per row");

  auto* compare = app.add_subcommand("compare", "compare two lattices");
  compare->add_option("first", in1)->required();
  compare->add_option("second", in2)->required();
  compare->add_flag("--similarity", similarity, "compare up to uniform scaling");

  auto* reconstruct = app.add_subcommand("reconstruct", "superbase from an invariant JSON");
  reconstruct->add_option("input", in1, "JSON file or - for stdin")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force checks");
  oracle->add_option("input", in1)->required();
  oracle->add_option("--check", check)
      ->check(CLI::IsMember({"superbases", "voronoi", "dc7"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (reduce->parsed())
      return cmd_reduce(g, in1, max_steps);
    if (invariant->parsed()) {
      if (in1.empty() == batch.empty())
        throw ParseError("give exactly one of an input file or --batch");
      return cmd_invariant(g, in1, batch);
    }
    if (compare->parsed())
      return cmd_compare(g, in1, in2, similarity);
    if (reconstruct->parsed())
      return cmd_reconstruct(g, in1);
    if (oracle->parsed())
      return cmd_oracle(g, in1, check);
  } catch (const NonTerminationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const NotRealizableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotRealizable;
  } catch (const WindowTooSmallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kWindow;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
