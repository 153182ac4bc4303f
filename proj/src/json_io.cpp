#include "planes/json_io.hpp"

namespace planes {

std::string rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw InputError("rational must be a string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

namespace {

bool one_based_convention(const Json& j) {
  std::string conv = j.value("convention", std::string("zero"));
  if (conv == "zero") return false;
  if (conv == "one") return true;
  throw InputError("convention must be \"zero\" or \"one\"");
}

TwoForm form_from_terms(const Json& terms, bool one_based) {
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  std::vector<std::tuple<int, int, Rat>> t;
  int lo = one_based ? 1 : 0, hi = one_based ? 6 : 5;
  for (const auto& term : terms) {
    if (!term.is_array() || term.size() != 3)
      throw InputError("each term must be [i, j, \"p/q\"]");
    if (!term[0].is_number_integer() || !term[1].is_number_integer())
      throw InputError("term indices must be integers");
    int i = term[0].get<int>(), j2 = term[1].get<int>();
    if (i < lo || i > hi || j2 < lo || j2 > hi || i == j2)
      throw InputError("term indices out of range");
    t.emplace_back(i, j2, rat_from_json(term[2]));
  }
  return TwoForm::from_terms(t, one_based);
}

Json terms_of_form(const TwoForm& w) {
  Json terms = Json::array();
  for (int p = 0; p < kNumPairs; ++p) {
    if (sgn(w.at(p)) == 0) continue;
    terms.push_back(Json::array({kPairs[p][0], kPairs[p][1], rat_json(w.at(p))}));
  }
  return terms;
}

}  // namespace

Json form_to_json(const TwoForm& w) {
  return Json{{"convention", "zero"}, {"terms", terms_of_form(w)}};
}

TwoForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw InputError("expected an object with a \"terms\" field");
  return form_from_terms(j["terms"], one_based_convention(j));
}

Json plane_to_json(const Plane& h) {
  Json forms = Json::array();
  for (const auto& w : h.basis()) forms.push_back(terms_of_form(w));
  return Json{{"convention", "zero"}, {"forms", forms}};
}

Plane plane_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("forms"))
    throw InputError("expected an object with a \"forms\" field");
  const Json& forms = j["forms"];
  if (!forms.is_array() || (forms.size() != 3 && forms.size() != 4))
    throw InputError("\"forms\" must list 3 or 4 forms");
  bool one_based = one_based_convention(j);
  std::vector<TwoForm> basis;
  for (const auto& f : forms) basis.push_back(form_from_terms(f, one_based));
  try {
    return Plane(std::move(basis));
  } catch (const IndependenceError& e) {
    throw InputError(e.what());
  }
}

Json membership_to_json(const MembershipReport& rep) {
  Json j{{"verdict", verdict_name(rep.verdict)},
         {"sym2_rank", rep.sym2_rank},
         {"kernel_dim", rep.kernel_dim}};
  if (rep.relation) {
    Json rel = Json::array();
    int k = rep.relation->dim();
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        Rat c = (a == b) ? rep.relation->at(a, a)
                         : 2 * rep.relation->at(a, b);
        if (sgn(c) != 0) rel.push_back(Json::array({a, b, rat_json(c)}));
      }
    j["relation"] = rel;
    j["qrank"] = rep.qrank;
  }
  return j;
}

Json point_to_json(const ProjPoint& p) {
  Json j = Json::array();
  for (const auto& c : p.x) j.push_back(rat_json(c));
  return j;
}

Json cubic_to_json(const CubicForm& f) {
  Json terms = Json::array();
  for (const auto& [a, b, c] : CubicForm::monomials()) {
    Rat v = f.coeff(a, b, c);
    if (sgn(v) != 0) terms.push_back(Json::array({a, b, c, rat_json(v)}));
  }
  return Json{{"cubic", terms}};
}

Json singularity_to_json(const SingularityReport& rep) {
  Json j{{"point", point_to_json(rep.point)}, {"corank", rep.corank}};
  if (rep.milnor) {
    j["milnor"] = *rep.milnor;
    if (rep.ade_k)
      j["type"] = "A" + std::to_string(*rep.ade_k);
    else
      j["type"] = "corank>1";
  } else {
    j["type"] = "NonIsolated";
  }
  return j;
}

Json split_to_json(const SplitReport& rep) {
  Json lf = Json::array();
  for (const auto& c : rep.linear_factor) lf.push_back(rat_json(c));
  Json q = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j2 = 0; j2 < 4; ++j2)
      row.push_back(rat_json(rep.residual_quadric.at(i, j2)));
    q.push_back(row);
  }
  Json j{{"linear_factor", lf},
         {"residual_quadric", q},
         {"quadric_rank", rep.quadric_rank}};
  if (rep.vertex) {
    j["vertex"] = point_to_json(*rep.vertex);
    j["vertex_on_plane"] = *rep.vertex_on_plane;
  }
  return j;
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

}  // namespace planes
