#include <doctest.h>

#include "common.hpp"
#include "nacx/json_io.hpp"

using namespace nacx;
using namespace nacx::testutil;

TEST_CASE("scalar round trips") {
  CHECK(scalar_from_json(Json(5)) == Scalar(5));
  CHECK(scalar_from_json(Json("-7/2")) == Scalar(BigInt(-7), BigInt(2)));
  CHECK(scalar_to_json(Scalar(42)) == Json(42));
  CHECK(scalar_to_json(Scalar(BigInt(1), BigInt(3))) == Json("1/3"));
  CHECK_THROWS_AS(scalar_from_json(Json(1.5)), InputError);
}

TEST_CASE("workspace loading builds fields and algebras") {
  Json ws_json = Json::parse(R"({
    "fields": [
      {"prime": 2, "modulus": [1, 1, 1], "name": "F4"},
      {"base": "F4", "modulus": [[0,1], [1,0], [1,0]], "name": "F16t"}
    ],
    "algebras": [
      {"name": "A", "type": "petit",
       "ring": {"type": "field", "K": "F4", "sigma": {"frobenius": 1}},
       "f": {"m": 2, "d": [0, 1]}}
    ],
    "budgets": {"scan": 4096},
    "seed": 7
  })");
  Workspace ws = load_workspace(ws_json);
  CHECK(ws.fields.size() == 2);
  CHECK(ws.fields.at("F4")->order() == BigInt(4));
  CHECK(ws.fields.at("F16t")->order() == BigInt(16));
  CHECK(ws.budgets.scan == 4096);
  CHECK(ws.seed == 7);
  PetitPtr A = ws.algebras.at("A");
  CHECK(A->m() == 2);
  CHECK(A->d() == ws.fields.at("F4")->element_at(2));
}

TEST_CASE("schema violations carry diagnostics") {
  CHECK_THROWS_AS(load_workspace(Json::parse(R"({"fields": [{"modulus": [1,1,1]}]})")),
                  InputError);
  CHECK_THROWS_AS(load_workspace(Json::parse(
                      R"({"fields": [{"prime": 2, "modulus": [1,1,1], "name": "X"},
                                     {"prime": 2, "modulus": [1,1,1], "name": "X"}]})")),
                  InputError);
  CHECK_THROWS_AS(load_workspace(Json::parse(R"({"budgets": {"scan": 0}})")), InputError);
  // wrong coordinate length
  Json bad = Json::parse(R"({
    "fields": [{"prime": 2, "modulus": [1,1,1], "name": "F4"}],
    "algebras": [{"name": "A", "type": "petit",
      "ring": {"type": "field", "K": "F4", "sigma": {"frobenius": 1}},
      "f": {"m": 2, "d": [0, 1, 0]}}]})");
  CHECK_THROWS_AS(load_workspace(bad), InputError);
}

TEST_CASE("cyclic coefficient algebras load from JSON") {
  Json ws_json = Json::parse(R"({
    "fields": [{"prime": 2, "modulus": [1, 1, 0, 0, 1], "name": "F16"}],
    "algebras": [
      {"name": "B", "type": "petit",
       "ring": {"type": "cyclic", "K": "F16", "gamma": {"frobenius": 2},
                "c": [1,0,0,0], "sigma_lift": {"frobenius": 1}},
       "f": {"m": 2, "d": [1,0,0,0, 0,0,0,0]}}
    ]})");
  Workspace ws = load_workspace(ws_json);
  PetitPtr B = ws.algebras.at("B");
  CHECK(B->coeff().dim() == 8);
  CHECK(B->m() == 2);
}

TEST_CASE("table round trip") {
  auto A = petit_over(F9(), 1, 2, 4);
  RingTable t = RingTable::from_algebra(*A);
  Json j = table_to_json(t);
  RingTable t2 = table_from_json(j);
  CHECK(t2.dim() == t.dim());
  for (size_t i = 0; i < t.dim(); ++i)
    for (size_t k = 0; k < t.dim(); ++k)
      CHECK(t2.mul(t2.basis_element(i), t2.basis_element(k)) ==
            t.mul(t.basis_element(i), t.basis_element(k)));
}

TEST_CASE("reports serialize deterministically") {
  auto A = petit_over(F9(), 1, 2, 4);
  Json r1 = report_shell("alg division");
  r1.update(division_report(*A, A->is_division()));
  auto A2 = petit_over(F9(), 1, 2, 4);
  Json r2 = report_shell("alg division");
  r2.update(division_report(*A2, A2->is_division()));
  CHECK(r1.dump(2) == r2.dump(2));
  CHECK(r1["schema"] == "nacx-report/1");
}

TEST_CASE("tower inputs resolve against the workspace") {
  Json ws_json = Json::parse(R"({
    "fields": [{"prime": 5, "modulus": [2, 0, 1], "name": "F25"}],
    "algebras": [
      {"name": "A25", "type": "petit",
       "ring": {"type": "field", "K": "F25", "sigma": {"frobenius": 1}},
       "f": {"m": 2, "d": [1, 0]}}
    ],
    "towers": [
      {"name": "T", "algebra": "A25", "rho": {"identity": true},
       "b": [0,0,0,1], "k": [2,0], "m": 2}
    ]})");
  Workspace ws = load_workspace(ws_json);
  TowerInputs in = tower_from_json(ws.towers.at("T"), ws);
  CHECK(in.m == 2);
  CHECK(in.A->dim() == 4);
  TowerSpec spec = make_tower_spec(in.A, in.rho, in.b, in.k, in.m, in.omega);
  CHECK(spec.q == 2);
}
