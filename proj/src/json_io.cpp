#include "nacx/json_io.hpp"

#include <fstream>

namespace nacx {

namespace {

const Json& expect(const Json& j, const char* key) {
  if (!j.contains(key))
    throw InputError("missing field \"" + std::string(key) + "\" in " + j.dump());
  return j.at(key);
}

FieldPtr field_by_name(const Workspace& ws, const std::string& name) {
  auto it = ws.fields.find(name);
  if (it == ws.fields.end()) throw InputError("unknown field presentation: " + name);
  return it->second;
}

std::string verdict_name(DivisionStatus s) {
  switch (s) {
    case DivisionStatus::Division: return "division";
    case DivisionStatus::NotDivision: return "not_division";
    case DivisionStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string irred_name(IrredVerdict v) {
  switch (v) {
    case IrredVerdict::Irreducible: return "irreducible";
    case IrredVerdict::Reducible: return "reducible";
    case IrredVerdict::Inapplicable: return "inapplicable";
    case IrredVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<int64_t>());
  if (j.is_string()) return BigRat::parse(j.get<std::string>());
  throw InputError("scalar must be an integer or a \"p/q\" string: " + j.dump());
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_integer() && s.num().fits_int64()) return Json(s.num().to_int64());
  return Json(s.to_string());
}

Vec vec_from_json(const Json& j, const PrimeField& p, size_t expected_dim) {
  if (!j.is_array())
    throw InputError("element coordinates must be an array: " + j.dump());
  if (j.size() != expected_dim)
    throw InputError("element has " + std::to_string(j.size()) + " coordinates, expected " +
                     std::to_string(expected_dim));
  Vec out;
  out.reserve(expected_dim);
  for (const Json& c : j) out.push_back(p.canon(scalar_from_json(c)));
  return out;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(s));
  return out;
}

FieldPtr field_from_json(const Json& j, const Workspace& ws) {
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
  if (j.contains("base")) {
    FieldPtr base = field_by_name(ws, j.at("base").get<std::string>());
    std::vector<Vec> modulus;
    for (const Json& c : expect(j, "modulus")) {
      if (c.is_array())
        modulus.push_back(vec_from_json(c, base->prime(), base->dim()));
      else
        modulus.push_back(base->from_scalar(scalar_from_json(c)));
    }
    return FieldPresentation::extension(base, std::move(modulus), name);
  }
  BigInt p = BigInt::parse(expect(j, "prime").is_string()
                               ? j.at("prime").get<std::string>()
                               : std::to_string(j.at("prime").get<int64_t>()));
  if (!j.contains("modulus")) return FieldPresentation::prime_field(p, name);
  std::vector<Scalar> modulus;
  for (const Json& c : j.at("modulus")) modulus.push_back(scalar_from_json(c));
  return FieldPresentation::from_prime_modulus(p, modulus, name);
}

FieldAutomorphism automorphism_from_json(const Json& j, FieldPtr K) {
  if (j.contains("frobenius"))
    return FieldAutomorphism::frobenius(std::move(K), j.at("frobenius").get<unsigned>());
  if (j.contains("generator_image"))
    return FieldAutomorphism::from_generator_image(
        K, vec_from_json(j.at("generator_image"), K->prime(), K->dim()));
  if (j.contains("identity") && j.at("identity").get<bool>())
    return FieldAutomorphism::identity(std::move(K));
  throw InputError("automorphism must be {\"frobenius\": e}, {\"generator_image\": [...]} "
                   "or {\"identity\": true}: " + j.dump());
}

CoeffPtr coeffalg_from_json(const Json& j, const Workspace& ws) {
  std::string type = expect(j, "type").get<std::string>();
  FieldPtr K = field_by_name(ws, expect(j, "K").get<std::string>());
  if (type == "field") {
    return CoeffAlgebra::field_algebra(K, automorphism_from_json(expect(j, "sigma"), K));
  }
  if (type == "cyclic") {
    FieldAutomorphism gamma = automorphism_from_json(expect(j, "gamma"), K);
    Vec c = vec_from_json(expect(j, "c"), K->prime(), K->dim());
    FieldAutomorphism sigma = automorphism_from_json(expect(j, "sigma_lift"), K);
    return CoeffAlgebra::cyclic_algebra(K, std::move(gamma), std::move(c), std::move(sigma));
  }
  throw InputError("coefficient algebra type must be \"field\" or \"cyclic\": " + type);
}

PetitPtr petit_from_json(const Json& j, const Workspace& ws) {
  if (j.contains("type") && j.at("type").get<std::string>() != "petit")
    throw InputError("algebra type must be \"petit\"");
  CoeffPtr D = coeffalg_from_json(expect(j, "ring"), ws);
  auto R = std::make_shared<SkewPolyRing>(D, D->sigma());
  const Json& fj = expect(j, "f");
  size_t m = expect(fj, "m").get<size_t>();
  if (fj.contains("d")) {
    Vec d = vec_from_json(fj.at("d"), D->prime(), D->dim());
    return PetitAlgebra::make(R, sp_binomial(*R, m, d));
  }
  // General monic f given by its lower coefficients, ascending.
  std::vector<Vec> coeffs;
  for (const Json& c : expect(fj, "coeffs"))
    coeffs.push_back(vec_from_json(c, D->prime(), D->dim()));
  if (coeffs.size() != m) throw InputError("f.coeffs must list exactly m lower coefficients");
  coeffs.push_back(D->one());
  return PetitAlgebra::make(R, sp_make(*R, std::move(coeffs)));
}

RingTable table_from_json(const Json& j) {
  BigInt p = BigInt::parse(expect(j, "prime").is_string()
                               ? j.at("prime").get<std::string>()
                               : std::to_string(j.at("prime").get<int64_t>()));
  PrimeField prime(p);
  size_t dim = expect(j, "dim").get<size_t>();
  std::vector<Scalar> constants;
  for (const Json& c : expect(j, "constants")) constants.push_back(scalar_from_json(c));
  const Json& sb = expect(j, "subring_basis");
  Matrix<Scalar> basis(sb.size(), dim, prime.zero());
  for (size_t i = 0; i < sb.size(); ++i) basis.set_row(i, vec_from_json(sb.at(i), prime, dim));
  Vec t = vec_from_json(expect(j, "t"), prime, dim);
  return RingTable(std::move(prime), dim, std::move(constants), std::move(basis), std::move(t));
}

Json table_to_json(const RingTable& t) {
  Json out;
  out["dim"] = t.dim();
  out["prime"] = scalar_to_json(Scalar(t.prime().p()));
  Json constants = Json::array();
  for (size_t i = 0; i < t.dim(); ++i)
    for (size_t j = 0; j < t.dim(); ++j) {
      Vec prod = t.mul(t.basis_element(i), t.basis_element(j));
      for (const Scalar& s : prod) constants.push_back(scalar_to_json(s));
    }
  out["constants"] = std::move(constants);
  Json basis = Json::array();
  for (size_t i = 0; i < t.subring_basis().rows(); ++i)
    basis.push_back(vec_to_json(t.subring_basis().row(i)));
  out["subring_basis"] = std::move(basis);
  out["t"] = vec_to_json(t.t());
  return out;
}

TowerInputs tower_from_json(const Json& j, const Workspace& ws) {
  std::string aname = expect(j, "algebra").get<std::string>();
  auto it = ws.algebras.find(aname);
  if (it == ws.algebras.end()) throw InputError("unknown algebra: " + aname);
  PetitPtr A = it->second;
  const CoeffAlgebra& D = require_coeff_algebra(*A);

  const Json& rj = expect(j, "rho");
  std::optional<RingAut> rho;
  if (rj.contains("identity") && rj.at("identity").get<bool>()) {
    rho = RingAut::identity(*A);
  } else if (rj.contains("H_id_k")) {
    Vec k = vec_from_json(rj.at("H_id_k"), D.K().prime(), D.K().dim());
    rho = make_H_id(*A, k).map;
  } else {
    throw InputError("rho must be {\"identity\": true} or {\"H_id_k\": [...]}");
  }

  Vec b = vec_from_json(expect(j, "b"), A->prime(), A->dim());
  Vec k = vec_from_json(expect(j, "k"), D.K().prime(), D.K().dim());
  int m = expect(j, "m").get<int>();
  std::optional<Vec> omega;
  if (j.contains("omega"))
    omega = vec_from_json(j.at("omega"), D.K().prime(), D.K().dim());
  return TowerInputs{std::move(A), std::move(*rho), std::move(b), std::move(k), m,
                     std::move(omega)};
}

Workspace load_workspace(const Json& j) {
  Workspace ws;
  if (j.contains("budgets")) {
    const Json& b = j.at("budgets");
    if (b.contains("enumeration")) ws.budgets.enumeration = b.at("enumeration").get<uint64_t>();
    if (b.contains("scan")) ws.budgets.scan = b.at("scan").get<uint64_t>();
    if (b.contains("factor")) ws.budgets.factor = b.at("factor").get<uint64_t>();
    if (ws.budgets.enumeration == 0 || ws.budgets.scan == 0 || ws.budgets.factor == 0)
      throw InputError("budgets must be positive");
  }
  if (j.contains("output_dir")) ws.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("seed")) ws.seed = j.at("seed").get<uint64_t>();
  if (j.contains("fields")) {
    for (const Json& fj : j.at("fields")) {
      FieldPtr K = field_from_json(fj, ws);
      if (ws.fields.count(K->name())) throw InputError("duplicate field name: " + K->name());
      ws.fields[K->name()] = K;
      ws.field_order.push_back(K->name());
    }
  }
  if (j.contains("algebras")) {
    for (const Json& aj : j.at("algebras")) {
      std::string name = expect(aj, "name").get<std::string>();
      if (ws.algebras.count(name)) throw InputError("duplicate algebra name: " + name);
      ws.algebras[name] = petit_from_json(aj, ws);
      ws.algebra_order.push_back(name);
    }
  }
  if (j.contains("towers")) {
    for (const Json& tj : j.at("towers")) {
      std::string name = expect(tj, "name").get<std::string>();
      if (ws.towers.count(name)) throw InputError("duplicate tower name: " + name);
      ws.towers[name] = tj;
      ws.tower_order.push_back(name);
    }
  }
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return load_workspace(j);
}

// --- reports -----------------------------------------------------------------

Json report_shell(const std::string& command) {
  Json j;
  j["schema"] = "nacx-report/1";
  j["command"] = command;
  return j;
}

Json field_report(const FieldPresentation& K) {
  Json j;
  j["name"] = K.name();
  j["characteristic"] = scalar_to_json(Scalar(K.characteristic()));
  j["degree"] = K.dim();
  if (K.finite()) j["order"] = scalar_to_json(Scalar(K.order()));
  j["kind"] = K.kind() == FieldPresentation::Kind::Prime ? "prime" : "extension";
  if (K.kind() == FieldPresentation::Kind::Extension) {
    Json mod = Json::array();
    for (const Vec& c : K.modulus()) mod.push_back(vec_to_json(c));
    j["modulus_over_base"] = std::move(mod);
    j["base"] = K.base()->name();
  }
  j["modulus_irreducible"] = true;  // construction verifies it
  return j;
}

Json algebra_report(const PetitAlgebra& A) {
  Json j;
  j["description"] = A.describe();
  j["m"] = A.m();
  j["dimension_over_prime"] = A.dim();
  j["coefficient_ring"] = A.coeff().describe();
  if (const auto* D = dynamic_cast<const CoeffAlgebra*>(&A.coeff())) {
    j["tower"] = Json::array({D->f0_in_K().sub().name(), D->center_in_K().sub().name(),
                              D->K().name()});
  }
  if (A.binomial()) j["d"] = vec_to_json(A.d());
  const auto& f0 = A.f0_compute();
  j["f0"] = Json{{"name", f0.field_in_coeff.field->name()},
                 {"degree", f0.field_in_coeff.field->dim()},
                 {"matches_fixed_center", f0.matches_fix_sigma_center}};
  j["dimension_over_f0"] = A.dim() / f0.field_in_coeff.field->dim();
  RightInvarianceResult ri = is_right_invariant(A.f());
  j["right_invariant"] = ri.invariant;
  j["associative"] = A.all_associators_vanish();
  return j;
}

Json division_report(const PetitAlgebra& A, const PetitAlgebra::DivisionCheck& dc) {
  Json j;
  switch (dc.verdict) {
    case DivisionStatus::Division: j["division"] = true; break;
    case DivisionStatus::NotDivision: j["division"] = false; break;
    case DivisionStatus::Unknown: j["division"] = "unknown"; break;
  }
  j["method"] = dc.methods;
  if (!dc.note.empty()) j["note"] = dc.note;
  Json w;
  if (dc.criterion_witness) w["criterion_z"] = vec_to_json(*dc.criterion_witness);
  if (dc.criterion_witness_xy) {
    w["criterion_x"] = vec_to_json(dc.criterion_witness_xy->first);
    w["criterion_y"] = vec_to_json(dc.criterion_witness_xy->second);
  }
  if (dc.factorization) {
    Json g = Json::array(), h = Json::array();
    for (const Vec& c : dc.factorization->first.coeffs) g.push_back(vec_to_json(c));
    for (const Vec& c : dc.factorization->second.coeffs) h.push_back(vec_to_json(c));
    w["factor_left"] = std::move(g);
    w["factor_right"] = std::move(h);
  }
  if (dc.zero_divisor) {
    w["zero_divisor_x"] = vec_to_json(dc.zero_divisor->first);
    w["zero_divisor_y"] = vec_to_json(dc.zero_divisor->second);
  }
  if (!w.empty()) j["witnesses"] = std::move(w);
  (void)A;
  return j;
}

static Json nucleus_json(const PetitAlgebra::NucleusResult& n) {
  Json j;
  j["dim_over_f0"] = n.dim_over_f0;
  j["dim_over_prime"] = n.basis_rows.rows();
  Json basis = Json::array();
  for (size_t i = 0; i < n.basis_rows.rows(); ++i)
    basis.push_back(vec_to_json(n.basis_rows.row(i)));
  j["basis"] = std::move(basis);
  return j;
}

Json nuclei_report(const PetitAlgebra& A) {
  Json j;
  auto l = A.nucleus(PetitAlgebra::NucleusSide::Left);
  auto m = A.nucleus(PetitAlgebra::NucleusSide::Middle);
  auto r = A.nucleus(PetitAlgebra::NucleusSide::Right);
  j["left"] = nucleus_json(l);
  j["middle"] = nucleus_json(m);
  j["right"] = nucleus_json(r);
  Matrix<Scalar> alt = A.right_nucleus_by_remainder();
  j["right_by_remainder_characterization_matches"] = (alt == r.basis_rows);
  // Compare left/middle against the coefficient ring D.
  ScalarOps ops{&A.prime()};
  Matrix<Scalar> demb(A.coeff().dim(), A.dim(), A.prime().zero());
  for (size_t i = 0; i < A.coeff().dim(); ++i)
    demb.set_row(i, A.from_coeff(A.coeff().basis_element(i)));
  Matrix<Scalar> dcanon = canonical_rowspace(ops, demb);
  j["left_equals_coefficient_ring"] = (l.basis_rows == dcanon);
  j["middle_equals_coefficient_ring"] = (m.basis_rows == dcanon);
  return j;
}

Json aut_list_report(const PetitAlgebra& A, const FullAutSweep& sweep) {
  Json j;
  j["aut_count"] = sweep.group.elements.size();
  Json cls = Json::array();
  for (size_t i = 0; i < sweep.group.elements.size(); ++i) {
    const AutMap& am = sweep.group.elements[i];
    Json e;
    e["tau_power"] = sweep.classification[i].first;
    e["k"] = vec_to_json(am.k);
    e["order"] = am.order;
    if (am.inner_witness) e["inner_witness_c"] = vec_to_json(*am.inner_witness);
    cls.push_back(std::move(e));
  }
  j["classification"] = std::move(cls);
  j["all_extend_identity"] = sweep.all_extend_identity;
  j["inner_only_hypotheses"] =
      Json{{"no_nontrivial_root_of_unity", sweep.hyp_no_nontrivial_root},
           {"d_outside_proper_subfields", sweep.hyp_d_not_in_proper_subfield}};
  j["sweep_restriction"] =
      "candidates tau range over powers of sigma commuting with sigma; other "
      "coefficient automorphisms are outside the sweep";
  (void)A;
  return j;
}

Json cyclic_extension_report(const PetitAlgebra& A, const CyclicExtensionResult& res) {
  Json j;
  switch (res.verdict) {
    case CyclicExtensionResult::Verdict::True: j["verdict"] = true; break;
    case CyclicExtensionResult::Verdict::False: j["verdict"] = false; break;
    case CyclicExtensionResult::Verdict::NotApplicable: j["verdict"] = "not_applicable"; break;
    case CyclicExtensionResult::Verdict::Unknown: j["verdict"] = "unknown"; break;
  }
  j["clauses"] = Json{{"division", verdict_name(res.division)},
                      {"free_rank", res.free_rank_ok},
                      {"order_m_subgroup", res.subgroup_ok}};
  if (res.generator) {
    Json g;
    g["tau"] = "id";
    g["k"] = vec_to_json(res.generator->k);
    g["order"] = res.generator->order;
    j["generator"] = std::move(g);
  }
  j["detail"] = res.detail;
  (void)A;
  return j;
}

Json tower_report(const TowerSpec& spec, const TowerBuild& built) {
  Json j;
  j["q"] = spec.q;
  j["m"] = spec.m;
  j["omega"] = vec_to_json(spec.omega_K);
  j["k"] = vec_to_json(spec.k_K);
  Json c;
  c["1_tau_commutes_with_rho"] = built.conditions.commute;
  c["2_twisted_norm_scaling"] = built.conditions.scaling;
  c["3_kq_primitive_mth_root"] = built.conditions.kq_primitive;
  Json irr;
  irr["verdict"] = irred_name(built.conditions.irreducibility.verdict);
  if (!built.conditions.irreducibility.note.empty())
    irr["note"] = built.conditions.irreducibility.note;
  irr["complete"] = built.conditions.irreducibility.complete;
  c["4_irreducible"] = std::move(irr);
  c["5_finite_dimensional_over_f0_fix_rho"] =
      Json{{"holds", built.conditions.finite_dimensional},
           {"dimension", built.conditions.dim_over_intersection},
           {"alternatives", "associativity and right-nucleus clauses not evaluated"}};
  j["conditions"] = std::move(c);
  j["base_division_note"] = built.conditions.base_division_note;
  if (built.B) {
    j["B"] = Json{{"dimension_over_prime", built.B->dim()},
                  {"rank_over_base", spec.m},
                  {"rank_over_coefficient_ring", spec.m * spec.q}};
    j["automorphism"] = Json{{"order", built.order},
                             {"order_equals_mq", built.order_is_mq},
                             {"power_law_hq_equals_id_kq", built.hq_matches_id_kq}};
  }
  j["conclusion"] = built.conclusion;
  return j;
}

Json skew_recognition_report(const SkewRecognition& rec) {
  Json j;
  j["accepted"] = rec.accepted;
  if (!rec.accepted) {
    j["failed_condition"] = rec.failed_condition;
    j["detail"] = rec.detail;
    return j;
  }
  j["m"] = rec.m;
  j["subring_division"] = rec.subring_division;
  if (rec.subring_non_unit) j["subring_non_unit"] = vec_to_json(*rec.subring_non_unit);
  Json sig = Json::array();
  for (size_t i = 0; i < rec.sigma.rows(); ++i) sig.push_back(vec_to_json(rec.sigma.row(i)));
  j["sigma_matrix_rows"] = std::move(sig);
  j["delta_zero"] = rec.delta_zero;
  if (!rec.delta_zero) {
    Json del = Json::array();
    for (size_t i = 0; i < rec.delta.rows(); ++i) del.push_back(vec_to_json(rec.delta.row(i)));
    j["delta_matrix_rows"] = std::move(del);
    j["note"] = "nonzero delta recognized; no quotient algebra is constructed for it";
  }
  Json f = Json::array();
  for (const auto& c : rec.f_lower) {
    Vec v(c.begin(), c.end());
    f.push_back(vec_to_json(v));
  }
  j["f_lower_coefficients"] = std::move(f);
  return j;
}

Json cyclic_recognition_report(const CyclicRecognition& rec) {
  Json j = skew_recognition_report(rec.base);
  j["accepted"] = rec.accepted;
  if (!rec.accepted && rec.failed_condition) {
    j["failed_condition"] = rec.failed_condition;
    j["detail"] = rec.detail;
    return j;
  }
  j["d"] = [&] {
    Vec v(rec.d.begin(), rec.d.end());
    return vec_to_json(v);
  }();
  j["sigma_order"] = rec.sigma_order;
  j["fixed_ring_dimension"] = rec.fixed_ring_dim;
  j["associative"] = rec.associative;
  j["has_primitive_root"] = rec.has_primitive_root;
  if (rec.omega) j["omega_in_subring_coords"] = vec_to_json(*rec.omega);
  switch (rec.right_division) {
    case CyclicRecognition::RightDivision::Yes: j["right_division_ring"] = true; break;
    case CyclicRecognition::RightDivision::No: j["right_division_ring"] = false; break;
    case CyclicRecognition::RightDivision::Skipped: j["right_division_ring"] = "skipped"; break;
  }
  if (rec.right_division_witness)
    j["right_division_witness"] = vec_to_json(*rec.right_division_witness);
  j["cyclic_extension"] = rec.cyclic_extension_claim;
  return j;
}

}  // namespace nacx
