#include "mp2/json_io.hpp"

#include <nlohmann/json.hpp>

namespace mp2 {

namespace {

using nlohmann::ordered_json;

std::string root_to_string(const RootOfUnity& r) {
  return "zeta_" + std::to_string(r.order) + "^" + std::to_string(r.exp);
}

RootOfUnity root_from_string(const std::string& s) {
  if (s == "1") return RootOfUnity{1, 0};
  if (s == "-1") return RootOfUnity{2, 1};
  auto underscore = s.find('_');
  auto caret = s.find('^');
  if (s.rfind("zeta_", 0) != 0 || caret == std::string::npos)
    throw DomainError("bad root of unity literal '" + s + "'");
  i64 order = std::stoll(s.substr(underscore + 1, caret - underscore - 1));
  i64 exp = std::stoll(s.substr(caret + 1));
  return RootOfUnity::make(order, exp);
}

ordered_json parse(const std::string& s) {
  return ordered_json::parse(s);  // throws nlohmann exceptions on bad input
}

}  // namespace

std::string unit_character_to_json(const UnitCharacter& eta) {
  ordered_json j;
  j["kind"] = "unit";
  j["p"] = eta.p();
  j["level"] = eta.conductor();
  j["exponent"] = eta.exponent();
  return j.dump();
}

UnitCharacter unit_character_from_json(const FieldConfig& cfg, const std::string& s) {
  auto j = parse(s);
  if (j.value("kind", "unit") != "unit") throw DomainError("expected a unit character");
  if (j.contains("p") && (i64)j["p"] != cfg.p())
    throw DomainError("character prime does not match the configuration");
  return UnitCharacter(cfg, j.value("level", 0), j.value("exponent", (i64)0));
}

std::string mult_character_to_json(const MultCharacter& mu) {
  ordered_json j;
  j["kind"] = "mult";
  j["p"] = mu.unit_part().p();
  j["level"] = mu.unit_part().conductor();
  j["exponent"] = mu.unit_part().exponent();
  j["varpi_root"] = root_to_string(mu.varpi_root());
  j["varpi_qexp"] = mu.varpi_qexp().to_string();
  return j.dump();
}

MultCharacter mult_character_from_json(const FieldConfig& cfg, const std::string& s) {
  auto j = parse(s);
  if (j.value("kind", "mult") != "mult")
    throw DomainError("expected a multiplicative character");
  if (j.contains("p") && (i64)j["p"] != cfg.p())
    throw DomainError("character prime does not match the configuration");
  UnitCharacter unit(cfg, j.value("level", 0), j.value("exponent", (i64)0));
  RootOfUnity root = root_from_string(j.value("varpi_root", std::string("1")));
  Rational qexp = Rational::parse(j.value("varpi_qexp", std::string("0")));
  return MultCharacter(unit, root, qexp);
}

std::string additive_character_to_json(const AdditiveCharacter& psi) {
  ordered_json j;
  j["kind"] = "additive";
  j["p"] = psi.p();
  j["shift_val"] = psi.shift().val();
  j["shift_unit"] = psi.shift().unit().to_string();
  return j.dump();
}

AdditiveCharacter additive_character_from_json(const FieldConfig& cfg,
                                               const std::string& s) {
  auto j = parse(s);
  if (j.value("kind", "additive") != "additive")
    throw DomainError("expected an additive character");
  int val = j.value("shift_val", 0);
  Rational unit = Rational::parse(j.value("shift_unit", std::string("1")));
  return AdditiveCharacter(cfg, ScaledPAdic::make(cfg.p(), val, unit));
}

std::string descriptor_to_json(const ReprDescriptor& repr) {
  ordered_json j;
  if (const auto* ps = std::get_if<PrincipalSeriesRep>(&repr)) {
    j["kind"] = "ps";
    j["mu"] = ordered_json::parse(mult_character_to_json(ps->mu));
  } else if (const auto* ew = std::get_if<EvenWeilRep>(&repr)) {
    j["kind"] = "even_weil";
    j["chi"] = to_string(ew->chi);
  } else if (const auto* ow = std::get_if<OddWeilRep>(&repr)) {
    j["kind"] = "odd_weil";
    j["chi"] = to_string(ow->chi);
  } else if (const auto* st = std::get_if<SteinbergRep>(&repr)) {
    j["kind"] = "steinberg";
    j["chi"] = to_string(st->chi);
  } else {
    const auto& sc = std::get<SupercuspidalRep>(repr);
    j["kind"] = "sc";
    j["delta"] = sc.delta;
    j["c_sigma"] = sc.c_sigma;
    j["defect"] = sc.defect;
    j["central_sign"] = sc.central_sign;
    j["odd_weil"] = sc.is_odd_weil;
  }
  return j.dump();
}

ReprDescriptor descriptor_from_json(const FieldConfig& cfg, const std::string& s) {
  auto j = parse(s);
  std::string kind = j.value("kind", "");
  ReprDescriptor repr;
  if (kind == "ps") {
    repr = PrincipalSeriesRep{mult_character_from_json(cfg, j["mu"].dump())};
  } else if (kind == "even_weil") {
    repr = EvenWeilRep{square_class_from_string(j.value("chi", "1"))};
  } else if (kind == "odd_weil") {
    repr = OddWeilRep{square_class_from_string(j.value("chi", "1"))};
  } else if (kind == "steinberg") {
    repr = SteinbergRep{square_class_from_string(j.value("chi", "1"))};
  } else if (kind == "sc") {
    SupercuspidalRep sc;
    sc.delta = j.value("delta", 0);
    sc.c_sigma = j.value("c_sigma", 1);
    sc.defect = j.value("defect", 0);
    sc.central_sign = j.value("central_sign", 1);
    sc.is_odd_weil = j.value("odd_weil", false);
    repr = sc;
  } else {
    throw DomainError("unknown representation kind '" + kind + "'");
  }
  validate_descriptor(cfg, repr);
  return repr;
}

}  // namespace mp2
