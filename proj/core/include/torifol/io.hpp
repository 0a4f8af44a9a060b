#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "torifol/errors.hpp"
#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"
#include "torifol/mmp.hpp"
#include "torifol/resolution.hpp"
#include "torifol/singularities.hpp"

namespace torifol {

using Json = nlohmann::json;  // std::map-backed: keys are always sorted

/// An Error carrying the JSON pointer of the offending problem-file field.
class LocatedError : public Error {
 public:
  LocatedError(ErrorKind kind, std::string pointer, const std::string& message, std::vector<int> witness = {})
      : Error(kind, message, std::move(witness)), pointer_(std::move(pointer)) {}
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Problem file, format 1:
///   {"format": 1, "rank": n, "rays": [[...]], "max_cones": [[...]],
///    "W": {"basis": [["1+2i", "0", ...], ...]}, "delta": {"<ray>": "p/q"}}
/// "delta" is optional. Throws LocatedError (kind Parse or Validation).
ToricFoliatedPair parse_problem(const Json& doc);
ToricFoliatedPair load_problem(std::istream& in);
ToricFoliatedPair load_problem_file(const std::string& path);

Json to_json(const Rat& r);
Json to_json(const IntVec& v);
Json to_json(const QVec& v);
Json fan_json(const Fan& fan);
Json subspace_json(const GaussianSubspace& W);
/// Problem-file form of a pair: emit(parse(f)) reproduces a canonical f.
Json pair_json(const ToricFoliatedPair& pair);
Json verdict_json(const Verdict& v);
Json error_json(const Error& e);
Json morphism_json(const RefinementMorphism& m);
Json wall_relation_json(const WallRelation& rel);
Json extremal_ray_json(const ExtremalRay& r);
Json step_json(const MMPStep& s);
Json trace_json(const MMPTrace& t);
Json certificates_json(const std::vector<ConeCertificate>& cs);
Json fdlt_json(const FdltModification& m);

/// Singularity report used by `check`. Predicates that do not apply to the
/// pair are reported as {"error": kind}.
Json check_report(const ToricFoliatedPair& pair);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace torifol
