#include "torifol/io.hpp"

#include <fstream>
#include <sstream>

#include "torifol/divisor.hpp"

namespace torifol {

namespace {

[[noreturn]] void parse_error(const std::string& ptr, const std::string& msg) {
  throw LocatedError(ErrorKind::Parse, ptr, msg + " at " + (ptr.empty() ? "/" : ptr));
}

const Json& field(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) parse_error("/" + key, "missing field");
  return doc.at(key);
}

std::int64_t as_int(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) parse_error(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) parse_error(ptr, "expected an array");
  return j;
}

Rat as_rat(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) parse_error(ptr, "expected a fraction string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error&) {
    parse_error(ptr, "malformed fraction '" + j.get<std::string>() + "'");
  }
}

GaussRat as_gauss(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return GaussRat(Rat(static_cast<long>(j.get<std::int64_t>())));
  if (!j.is_string()) parse_error(ptr, "expected a Gaussian rational string");
  try {
    return GaussRat::parse(j.get<std::string>());
  } catch (const Error&) {
    parse_error(ptr, "malformed Gaussian rational '" + j.get<std::string>() + "'");
  }
}

std::string cone_pointer(const std::vector<ConeRays>& input, const std::vector<int>& witness) {
  for (std::size_t k = 0; k < input.size(); ++k) {
    ConeRays c = input[k];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c == witness) return "/max_cones/" + std::to_string(k);
  }
  return "/max_cones";
}

Json rows_json(const QMat& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json cones_json(const std::vector<ConeRays>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(c);
  return out;
}

template <typename F>
Json guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  }
}

}  // namespace

ToricFoliatedPair parse_problem(const Json& doc) {
  if (!doc.is_object()) parse_error("", "expected a JSON object");
  if (as_int(field(doc, "format"), "/format") != 1) parse_error("/format", "unsupported format version");
  const std::int64_t rank = as_int(field(doc, "rank"), "/rank");
  if (rank < 0) parse_error("/rank", "rank must be nonnegative");
  const auto n = static_cast<std::size_t>(rank);

  std::vector<IntVec> rays;
  const Json& jr = as_array(field(doc, "rays"), "/rays");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = "/rays/" + std::to_string(i);
    const Json& row = as_array(jr[i], p);
    IntVec v;
    for (std::size_t t = 0; t < row.size(); ++t) v.push_back(as_int(row[t], p + "/" + std::to_string(t)));
    rays.push_back(std::move(v));
  }
  std::vector<ConeRays> cones;
  const Json& jc = as_array(field(doc, "max_cones"), "/max_cones");
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string p = "/max_cones/" + std::to_string(k);
    const Json& row = as_array(jc[k], p);
    ConeRays c;
    for (std::size_t t = 0; t < row.size(); ++t) {
      const std::int64_t r = as_int(row[t], p + "/" + std::to_string(t));
      if (r < 0 || r >= static_cast<std::int64_t>(rays.size())) {
        throw LocatedError(ErrorKind::Validation, p + "/" + std::to_string(t), "unknown ray " + std::to_string(r));
      }
      c.push_back(static_cast<int>(r));
    }
    cones.push_back(std::move(c));
  }

  const Json& jw = field(doc, "W");
  if (!jw.is_object()) parse_error("/W", "expected an object");
  if (!jw.contains("basis")) parse_error("/W/basis", "missing field");
  const Json& jb = as_array(jw.at("basis"), "/W/basis");
  GMat basis;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    const std::string p = "/W/basis/" + std::to_string(i);
    const Json& row = as_array(jb[i], p);
    if (row.size() != n) throw LocatedError(ErrorKind::Validation, p, "basis vector has wrong length");
    GVec v;
    for (std::size_t t = 0; t < row.size(); ++t) v.push_back(as_gauss(row[t], p + "/" + std::to_string(t)));
    basis.push_back(std::move(v));
  }

  QVec delta(rays.size());
  if (doc.contains("delta")) {
    const Json& jd = doc.at("delta");
    if (!jd.is_object()) parse_error("/delta", "expected an object");
    for (const auto& [key, value] : jd.items()) {
      const std::string p = "/delta/" + key;
      std::size_t used = 0;
      long idx = -1;
      try {
        idx = std::stol(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty()) parse_error(p, "delta keys must be ray indices");
      if (idx < 0 || idx >= static_cast<long>(rays.size())) throw LocatedError(ErrorKind::Validation, p, "unknown ray " + key);
      delta[static_cast<std::size_t>(idx)] = as_rat(value, p);
    }
  }

  std::optional<Fan> fan;
  try {
    fan = Fan::make(static_cast<int>(rank), rays, cones);
  } catch (const Error& e) {
    std::string ptr = "/max_cones";
    if (e.kind() == ErrorKind::Validation && !e.witness().empty()) {
      ptr = "/rays/" + std::to_string(e.witness().back());
    } else if (!e.witness().empty()) {
      ptr = cone_pointer(cones, e.witness());
    }
    throw LocatedError(ErrorKind::Validation, ptr, e.what(), e.witness());
  }
  try {
    return ToricFoliatedPair(std::move(*fan), GaussianSubspace::span(static_cast<int>(rank), basis), std::move(delta));
  } catch (const Error& e) {
    const std::string ptr = e.kind() == ErrorKind::NotQCartier ? cone_pointer(cones, e.witness()) : "";
    throw LocatedError(ErrorKind::Validation, ptr, std::string(to_string(e.kind())) + ": " + e.what(), e.witness());
  }
}

ToricFoliatedPair load_problem(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw LocatedError(ErrorKind::Parse, "", std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ToricFoliatedPair load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LocatedError(ErrorKind::Parse, "", "cannot open " + path);
  return load_problem(in);
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const IntVec& v) { return Json(v); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json fan_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(to_json(r));
  return {{"rank", fan.rank()}, {"rays", rays}, {"max_cones", cones_json(fan.max_cones())}};
}

Json subspace_json(const GaussianSubspace& W) {
  Json basis = Json::array();
  for (const auto& row : W.basis()) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(z.str());
    basis.push_back(std::move(r));
  }
  return {{"basis", basis}};
}

Json pair_json(const ToricFoliatedPair& pair) {
  Json j = fan_json(pair.fan());
  j["format"] = 1;
  j["W"] = subspace_json(pair.W());
  Json delta = Json::object();
  for (std::size_t i = 0; i < pair.delta().size(); ++i) {
    if (!pair.delta()[i].is_zero()) delta[std::to_string(i)] = pair.delta()[i].str();
  }
  j["delta"] = delta;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j{{"value", v.value}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.cone) j["cone"] = *v.cone;
  if (v.point) j["point"] = *v.point;
  if (v.ray) j["ray"] = *v.ray;
  return j;
}

Json error_json(const Error& e) {
  Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (!e.witness().empty()) j["witness"] = e.witness();
  if (const auto* le = dynamic_cast<const LocatedError*>(&e)) j["location"] = le->pointer();
  return j;
}

Json morphism_json(const RefinementMorphism& m) {
  Json log = Json::array();
  for (const auto& u : m.log) log.push_back(to_json(u));
  Json added = Json::array();
  for (const auto& u : m.added_rays) added.push_back(to_json(u));
  return {{"target", fan_json(m.target)}, {"source", fan_json(m.source)}, {"log", log}, {"added_rays", added}};
}

Json wall_relation_json(const WallRelation& rel) {
  return {{"wall", rel.wall},       {"rays", rel.rays},         {"a", to_json(rel.a)},
          {"J_minus", rel.j_minus}, {"J_zero", rel.j_zero},     {"J_plus", rel.j_plus},
          {"alpha", rel.alpha()}};
}

Json extremal_ray_json(const ExtremalRay& r) {
  return {{"class", to_json(r.curve_class)}, {"walls", cones_json(r.walls)}, {"intersection", to_json(r.intersection)}};
}

Json step_json(const MMPStep& s) {
  Json j{{"kind", std::string(to_string(s.kind))}, {"before", pair_json(s.before)}};
  if (s.ray) {
    j["ray"] = extremal_ray_json(*s.ray);
    j["alpha"] = s.alpha;
  }
  if (s.after) j["after"] = pair_json(*s.after);
  if (s.contracted_ray) j["contracted_ray"] = to_json(*s.contracted_ray);
  if (s.kind == StepKind::Flip) {
    j["flip_centers"] = cones_json(s.flip_centers);
    j["removed_cones"] = cones_json(s.removed_cones);
    j["added_cones"] = cones_json(s.added_cones);
  }
  if (s.U) {
    j["U"] = rows_json(s.U->basis());
    Json proj = Json::array();
    for (const auto& row : *s.projection) proj.push_back(to_json(to_intvec(row)));
    j["projection"] = proj;
    j["u_in_w_certified"] = s.u_in_w_certified;
  }
  j["certificates"] = {{"non_dicritical_before", s.non_dicritical_before},
                       {"non_dicritical_after", s.non_dicritical_after},
                       {"f_dlt_before", s.f_dlt_before},
                       {"f_dlt_after", s.f_dlt_after}};
  if (s.kind == StepKind::Terminate) {
    Json nef = Json::array();
    for (const auto& wc : s.nef_certificate) {
      nef.push_back({{"wall", wc.relation.wall}, {"class", to_json(wc.curve_class)}, {"intersection", to_json(wc.intersection)}});
    }
    j["nef_certificate"] = nef;
  }
  return j;
}

Json trace_json(const MMPTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(step_json(s));
  return {{"format", 1}, {"selection", "lexicographically least negative extremal ray"}, {"steps", steps}};
}

Json certificates_json(const std::vector<ConeCertificate>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    out.push_back({{"ray", extremal_ray_json(c.ray)},
                   {"wall", c.wall},
                   {"ell", c.ell},
                   {"curve", c.curve},
                   {"tangent", c.tangent}});
  }
  return Json{{"certificates", out}};
}

Json fdlt_json(const FdltModification& m) {
  Json ex = Json::array();
  for (const auto& e : m.extracted) ex.push_back({{"ray", to_json(e.ray)}, {"phi", to_json(e.phi)}});
  return {{"morphism", morphism_json(m.morphism)}, {"pair", pair_json(m.pair)}, {"extracted", ex}, {"f_dlt", verdict_json(m.f_dlt)}};
}

Json check_report(const ToricFoliatedPair& pair) {
  const Fan& fan = pair.fan();
  Json j;
  j["fan"] = {{"simplicial", fan.is_simplicial()}, {"smooth", fan.is_smooth()}, {"complete", fan.is_complete()}};
  j["canonical_divisor"] = to_json(canonical_divisor(pair));
  j["iota"] = pair.iota();
  j["algebraically_integrable"] = is_algebraically_integrable(pair.W());
  j["non_dicritical"] = verdict_json(is_non_dicritical(fan, pair.W()));
  j["lc"] = verdict_json(is_log_canonical(pair));
  j["canonical"] = guarded([&] { return verdict_json(is_canonical(pair)); });
  j["f_dlt"] = guarded([&] { return verdict_json(is_f_dlt(pair)); });
  j["simple_singularities"] = guarded([&] { return verdict_json(has_simple_singularities(fan, pair.W())); });
  j["singular_locus"] = guarded([&] { return cones_json(singular_locus(fan, pair.W())); });
  j["terminal_at"] = guarded([&] {
    Json t = Json::array();
    for (const auto& c : fan.max_cones()) t.push_back({{"cone", c}, {"verdict", verdict_json(is_terminal_at(pair, c))}});
    return t;
  });
  Json tangency = Json::array();
  for (const auto& c : fan.cones()) {
    if (!c.empty() && is_tangent(fan, pair.W(), c)) tangency.push_back(c);
  }
  j["tangency"] = {{"tangent_cones", tangency}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torifol
