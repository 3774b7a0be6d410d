#include "ulrc/serialization.hpp"

#include <fstream>

namespace ulrc {

using nlohmann::json;

const LinearCode& code_of(const CodeFile& file) {
  return std::visit(
      [](const auto& v) -> const LinearCode& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearCode>)
          return v;
        else
          return v.code;
      },
      file);
}

json field_to_json(const FieldSpec& field) {
  return json{{"p", field.characteristic()},
              {"w", field.base_degree()},
              {"m", field.ext_degree()},
              {"base_modulus", field.base_modulus()},
              {"ext_modulus", field.ext_modulus()}};
}

FieldPtr field_from_json(const json& j) {
  return FieldSpec::make_checked(j.at("p").get<std::uint64_t>(), j.at("w").get<unsigned>(),
                                 j.at("m").get<unsigned>(),
                                 j.at("base_modulus").get<std::vector<Elem>>(),
                                 j.at("ext_modulus").get<std::vector<Elem>>());
}

json code_to_json(const LinearCode& code) {
  json j{{"field", field_to_json(*code.field())},
         {"n", code.length()},
         {"k", code.dimension()},
         {"columns", code.columns()}};
  if (code.systematic_positions()) j["systematic_positions"] = *code.systematic_positions();
  return j;
}

LinearCode code_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  auto columns = j.at("columns").get<std::vector<std::vector<Elem>>>();
  std::optional<std::vector<std::size_t>> systematic;
  if (j.contains("systematic_positions"))
    systematic = j.at("systematic_positions").get<std::vector<std::size_t>>();
  LinearCode code(std::move(field), std::move(columns), std::move(systematic));
  if (j.at("n").get<std::size_t>() != code.length() ||
      j.at("k").get<std::size_t>() != code.dimension())
    throw PreconditionError("code file: declared (n, k) does not match the generator columns");
  return code;
}

namespace {

json pyramid_descriptor(const PyramidCode& pc) {
  json groups = json::array();
  for (const auto& g : pc.groups)
    groups.push_back(json{{"locality_class", g.locality_class},
                          {"members", g.members},
                          {"parity_coordinate", g.parity_coordinate}});
  return json{{"kind", "pyramid"},
              {"requested_profile", pc.requested_profile.counts},
              {"designed_profile", pc.designed_profile.counts},
              {"d", pc.d_design},
              {"groups", std::move(groups)}};
}

PyramidCode pyramid_from_json(LinearCode code, const json& d) {
  PyramidCode pc{std::move(code),
                 InfoLocalityProfile{d.at("requested_profile").get<std::vector<int>>()},
                 InfoLocalityProfile{d.at("designed_profile").get<std::vector<int>>()},
                 d.at("d").get<int>(),
                 {}};
  pc.requested_profile.validate();
  pc.designed_profile.validate();
  for (const auto& g : d.at("groups")) {
    PyramidCode::Group group;
    group.locality_class = g.at("locality_class").get<int>();
    group.members = g.at("members").get<std::vector<std::size_t>>();
    group.parity_coordinate = g.at("parity_coordinate").get<std::size_t>();
    if (group.parity_coordinate >= pc.code.length())
      throw PreconditionError("code file: pyramid group parity out of range");
    for (std::size_t m : group.members)
      if (m >= pc.code.length()) throw PreconditionError("code file: pyramid member out of range");
    pc.groups.push_back(std::move(group));
  }
  return pc;
}

json gabidulin_descriptor(const GabidulinLRC& lrc) {
  return json{{"kind", "gabidulin"},
              {"nprofile", lrc.intended_profile.counts},
              {"N", lrc.precode_length},
              {"evaluation_points", lrc.evaluation_points},
              {"effective_points", lrc.effective_points},
              {"groups", lrc.groups},
              {"design_distance", lrc.design_distance}};
}

GabidulinLRC gabidulin_from_json(LinearCode code, const json& d) {
  const std::size_t n = code.length();
  GabidulinLRC lrc{std::move(code),
                   AllSymbolLocalityProfile{d.at("nprofile").get<std::vector<int>>()},
                   d.at("N").get<std::size_t>(),
                   d.at("evaluation_points").get<std::vector<Elem>>(),
                   d.at("effective_points").get<std::vector<Elem>>(),
                   d.at("groups").get<std::vector<std::vector<std::size_t>>>(),
                   {},
                   d.at("design_distance").get<long long>()};
  lrc.intended_profile.validate();
  if (lrc.effective_points.size() != n)
    throw PreconditionError("code file: effective point list does not cover the code");
  lrc.group_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t g = 0; g < lrc.groups.size(); ++g) {
    for (std::size_t c : lrc.groups[g]) {
      if (c >= n || seen[c]) throw PreconditionError("code file: malformed local groups");
      seen[c] = true;
      lrc.group_of[c] = g;
    }
  }
  for (bool s : seen)
    if (!s) throw PreconditionError("code file: local groups do not cover the code");
  return lrc;
}

}  // namespace

json code_file_to_json(const CodeFile& file) {
  json j = code_to_json(code_of(file));
  if (const auto* pc = std::get_if<PyramidCode>(&file))
    j["construction"] = pyramid_descriptor(*pc);
  else if (const auto* lrc = std::get_if<GabidulinLRC>(&file))
    j["construction"] = gabidulin_descriptor(*lrc);
  return j;
}

CodeFile code_file_from_json(const json& j) {
  LinearCode code = code_from_json(j);
  if (!j.contains("construction")) return code;
  const auto& d = j.at("construction");
  const auto kind = d.at("kind").get<std::string>();
  if (kind == "pyramid") return pyramid_from_json(std::move(code), d);
  if (kind == "gabidulin") return gabidulin_from_json(std::move(code), d);
  throw PreconditionError("code file: unknown construction kind '" + kind + "'");
}

void save_code_file(const std::string& path, const CodeFile& file) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot open '" + path + "' for writing");
  out << code_file_to_json(file).dump(2) << '\n';
}

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PreconditionError("cannot parse '" + path + "': " + e.what());
  }
  try {
    return code_file_from_json(j);
  } catch (const json::exception& e) {
    throw PreconditionError("malformed code file '" + path + "': " + e.what());
  }
}

json bound_report_to_json(const BoundReport& report) {
  const char* kind = report.kind == BoundReport::Kind::Gopalan  ? "gopalan"
                     : report.kind == BoundReport::Kind::Info   ? "info"
                                                                : "all-symbol";
  json j{{"kind", kind},          {"n", report.n},       {"k", report.k},
         {"profile", report.profile}, {"terms", report.terms}, {"bound", report.bound}};
  if (report.kind == BoundReport::Kind::AllSymbol) {
    j["k_prime"] = report.k_prime;
    j["r_prime"] = report.r_prime;
    j["r"] = report.r;
  }
  return j;
}

json witness_to_json(const WitnessSet& witness) {
  json steps = json::array();
  for (const auto& s : witness.log)
    steps.push_back(json{{"picked", s.picked},
                         {"locality", s.locality},
                         {"size_delta", s.size_delta},
                         {"rank_delta", s.rank_delta},
                         {"truncated", s.truncated}});
  return json{{"coordinates", witness.coordinates},
              {"rank", witness.rank},
              {"size", witness.coordinates.size()},
              {"log", std::move(steps)}};
}

json sim_report_to_json(const SimReport& report) {
  json sizes = json::object();
  for (const auto& [size, count] : report.pattern_size_histogram)
    sizes[std::to_string(size)] = count;
  json repairs = json::object();
  for (const auto& [loc, count] : report.local_repair_histogram)
    repairs[std::to_string(loc)] = count;
  return json{{"trials", report.trials},
              {"erasures", report.erasures},
              {"seed", report.seed},
              {"decode_successes", report.decode_successes},
              {"pattern_size_histogram", std::move(sizes)},
              {"local_repair_histogram", std::move(repairs)},
              {"locally_unrepairable", report.locally_unrepairable}};
}

}  // namespace ulrc
