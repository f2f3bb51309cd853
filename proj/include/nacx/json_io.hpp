// JSON schemas: workspace files (named field presentations, algebras, tower
// specs, budgets) and deterministic report serialization. Reports are built
// with ordered keys so repeated runs are byte-identical.

#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "nacx/autos.hpp"
#include "nacx/recognize.hpp"
#include "nacx/tower.hpp"

namespace nacx {

using Json = nlohmann::ordered_json;

struct Budgets {
  uint64_t enumeration = uint64_t{1} << 20;  // element sweeps, norm kernels
  uint64_t scan = uint64_t{1} << 16;         // zero-divisor pair scans
  uint64_t factor = uint64_t{1} << 22;       // monic right-factor candidates
};

struct Workspace {
  std::map<std::string, FieldPtr> fields;
  std::vector<std::string> field_order;
  std::map<std::string, PetitPtr> algebras;
  std::vector<std::string> algebra_order;
  std::map<std::string, Json> towers;  // raw tower specs, resolved on demand
  std::vector<std::string> tower_order;
  Budgets budgets;
  std::string output_dir = ".";
  uint64_t seed = 1;
};

Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Vec vec_from_json(const Json& j, const PrimeField& p, size_t expected_dim);
Json vec_to_json(const Vec& v);

// {"prime":2,"modulus":[1,1,1],"name":"F4"} or
// {"base":"F4","modulus":[[...],...],"name":"F64"} (base by name).
FieldPtr field_from_json(const Json& j, const Workspace& ws);
// {"frobenius": e} | {"generator_image": [coords]} | {"identity": true}
FieldAutomorphism automorphism_from_json(const Json& j, FieldPtr K);
// {"type":"field","K":"F4","sigma":{...}} |
// {"type":"cyclic","K":"F9","gamma":{...},"c":[...],"sigma_lift":{...}}
CoeffPtr coeffalg_from_json(const Json& j, const Workspace& ws);
// {"type":"petit","ring":{...},"f":{"m":2,"d":[coords]}}
PetitPtr petit_from_json(const Json& j, const Workspace& ws);
// {"dim":N,"prime":p,"constants":[...],"subring_basis":[[...]],"t":[...]}
RingTable table_from_json(const Json& j);
Json table_to_json(const RingTable& t);

struct TowerInputs {
  PetitPtr A;
  RingAut rho;
  Vec b;
  Vec k;
  int m = 1;
  std::optional<Vec> omega;
};
TowerInputs tower_from_json(const Json& j, const Workspace& ws);

Workspace load_workspace(const Json& j);
Workspace load_workspace_file(const std::string& path);

// --- report fragments -------------------------------------------------------

Json report_shell(const std::string& command);
Json field_report(const FieldPresentation& K);
Json algebra_report(const PetitAlgebra& A);
Json division_report(const PetitAlgebra& A, const PetitAlgebra::DivisionCheck& dc);
Json nuclei_report(const PetitAlgebra& A);
Json aut_list_report(const PetitAlgebra& A, const FullAutSweep& sweep);
Json cyclic_extension_report(const PetitAlgebra& A, const CyclicExtensionResult& res);
Json tower_report(const TowerSpec& spec, const TowerBuild& built);
Json skew_recognition_report(const SkewRecognition& rec);
Json cyclic_recognition_report(const CyclicRecognition& rec);

}  // namespace nacx
