#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planes/families.hpp"
#include "planes/json_io.hpp"
#include "planes/verify.hpp"

namespace {

using planes::InputError;
using planes::Json;
using planes::Rat;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

planes::Plane load_plane(const std::string& path) {
  return planes::plane_from_json(planes::parse_text(read_input(path)));
}

void emit(const Json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

std::vector<Rat> parse_params(const std::string& csv) {
  std::vector<Rat> out;
  if (csv.empty()) return out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(planes::parse_rat(tok));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

std::vector<Rat> need_params(const std::string& csv, size_t n,
                             const std::string& family) {
  auto p = parse_params(csv);
  if (p.size() != n)
    throw InputError(family + " expects " + std::to_string(n) +
                     " comma-separated parameters");
  return p;
}

planes::Plane build_family(const std::string& name, const std::string& params,
                           unsigned long seed, int bound) {
  using namespace planes;
  if (name == "semisimple") {
    auto p = need_params(params, 3, name);
    return semisimple_three_plane({p[0], p[1], p[2]});
  }
  if (name == "tritangent") {
    auto p = need_params(params, 6, name);
    return tritangent_extension(p[0], p[1], p[2], p[3], p[4], p[5]);
  }
  if (name == "cayley") {
    auto p = need_params(params, 5, name);
    return cayley_plane(p[0], p[1], p[2], p[3], p[4]);
  }
  if (name == "type2") {
    need_params(params, 0, name);
    return type2_plane();
  }
  if (name == "type3") {
    auto p = parse_params(params);
    Vector6 u0, u1;
    if (p.empty()) {
      u0[5] = 1;
      u1[2] = 1;
    } else if (p.size() == 12) {
      for (int i = 0; i < 6; ++i) {
        u0[i] = p[i];
        u1[i] = p[6 + i];
      }
    } else {
      throw InputError("type3 expects 0 or 12 parameters (u0, u1)");
    }
    return type3_plane(u0, u1);
  }
  if (name == "determinantal") {
    auto p = need_params(params, 36, name);
    LinearFormMatrix m;
    int k = 0;
    for (auto& row : m)
      for (auto& entry : row)
        for (auto& c : entry) c = p[k++];
    return determinantal_plane(m);
  }
  if (name == "sample") {
    need_params(params, 0, name);
    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.coeff_bound = bound;
    return sample_V(cfg);
  }
  throw InputError("unknown family: " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"exact classification of 4-planes of alternating 2-forms"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string in_path;
  auto* cmd_membership =
      app.add_subcommand("membership", "membership report for a plane");
  cmd_membership->add_option("file", in_path, "plane JSON file or -")
      ->required();

  bool want_sing = false, want_split = false, want_cone = false;
  auto* cmd_surface =
      app.add_subcommand("surface", "characteristic cubic of a plane");
  cmd_surface->add_option("file", in_path)->required();
  cmd_surface->add_flag("--singularities", want_sing,
                        "locate and classify singular points");
  cmd_surface->add_flag("--split", want_split, "search for a linear factor");
  cmd_surface->add_flag("--cone", want_cone, "cone vertex test");

  std::string family_name, family_params;
  unsigned long seed = 1;
  int bound = 3;
  auto* cmd_family = app.add_subcommand("family", "emit a named plane family");
  cmd_family->add_option("name", family_name, "family name")->required();
  cmd_family->add_option("--params", family_params,
                         "comma-separated rational parameters");
  cmd_family->add_option("--seed", seed, "sampler seed");
  cmd_family->add_option("--bound", bound, "sampler coefficient bound");

  std::string u_csv;
  auto* cmd_flux = app.add_subcommand("flux", "solve the flux system at u");
  cmd_flux->add_option("file", in_path)->required();
  cmd_flux->add_option("--u", u_csv, "four rationals u1,u2,u3,u4")->required();

  auto* cmd_tangent =
      app.add_subcommand("tangent", "tangent dimension at a member plane");
  cmd_tangent->add_option("file", in_path)->required();

  auto* cmd_classify = app.add_subcommand(
      "classify-plane", "type (1-4) of a constant-rank-4 3-plane");
  cmd_classify->add_option("file", in_path)->required();

  std::string filter;
  auto* cmd_verify =
      app.add_subcommand("verify-paper", "run all golden verification cases");
  cmd_verify->add_option("--filter", filter, "run only cases matching this id substring");

  // accept --pretty after the subcommand name as well as before it
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2
  }

  if (cmd_membership->parsed()) {
    auto rep = planes::membership(load_plane(in_path));
    emit(planes::membership_to_json(rep), pretty);
    return 0;
  }

  if (cmd_surface->parsed()) {
    planes::Plane h = load_plane(in_path);
    planes::CubicForm f = planes::char_cubic(h);
    Json j = planes::cubic_to_json(f);
    if (want_sing) {
      auto res = planes::singular_points(f);
      Json pts = Json::array();
      for (const auto& p : res.points)
        pts.push_back(planes::singularity_to_json(planes::ade_type(f, p)));
      j["singular_points"] = pts;
      j["possibly_incomplete"] = res.possibly_incomplete;
    }
    if (want_split) {
      auto res = planes::find_linear_factor(f);
      if (res.split)
        j["split"] = planes::split_to_json(*res.split);
      else
        j["split"] = nullptr;
    }
    if (want_cone) {
      auto v = planes::cone_test(f);
      j["cone_vertex"] = v ? planes::point_to_json(*v) : Json(nullptr);
    }
    emit(j, pretty);
    return 0;
  }

  if (cmd_family->parsed()) {
    planes::Plane h = build_family(family_name, family_params, seed, bound);
    emit(planes::plane_to_json(h), pretty);
    return 0;
  }

  if (cmd_flux->parsed()) {
    planes::Plane h = load_plane(in_path);
    auto p = need_params(u_csv, 4, "--u");
    auto v = planes::solve_fluxes(h, {p[0], p[1], p[2], p[3]});
    if (!v) {
      emit(Json{{"fluxes", "degenerate"}}, pretty);
      return 0;
    }
    Json fluxes = Json::array();
    for (const auto& c : *v) fluxes.push_back(planes::rat_json(c));
    emit(Json{{"fluxes", fluxes}}, pretty);
    return 0;
  }

  if (cmd_tangent->parsed()) {
    int t = planes::tangent_dimension(load_plane(in_path));
    emit(Json{{"tangent_dimension", t}}, pretty);
    return 0;
  }

  if (cmd_classify->parsed()) {
    int t = planes::rank4_plane_type(load_plane(in_path));
    emit(Json{{"type", t}}, pretty);
    return 0;
  }

  if (cmd_verify->parsed()) {
    auto cases = planes::run_verify_cases(filter);
    Json arr = Json::array();
    bool all_pass = true;
    for (const auto& c : cases) {
      Json jc{{"id", c.id},
              {"description", c.description},
              {"status", c.pass ? "pass" : "fail"}};
      if (!c.pass) jc["details"] = c.detail;
      arr.push_back(jc);
      all_pass = all_pass && c.pass;
    }
    emit(Json{{"cases", arr}, {"all_pass", all_pass}}, pretty);
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const planes::PlanesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
