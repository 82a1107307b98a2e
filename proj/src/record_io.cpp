#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "bei/errors.hpp"
#include "bei/pipeline.hpp"

namespace bei {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string record_to_json(const ClassRecord& r) {
  Json j;
  j["certificate"] = r.certificate.bytes;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["indecomposable"] = opt(r.indecomposable);
  j["unmixed"] = opt(r.unmixed);
  j["accessible"] = opt(r.accessible);
  j["strongly_unmixed"] = opt(r.strongly_unmixed);
  j["s2"] = opt(r.s2);
  j["f_vector"] = opt(r.f_vector);
  j["h_vector"] = opt(r.h_vector);
  j["multiplicity"] = opt(r.multiplicity);
  if (!r.witness) {
    j["witness"] = nullptr;
  } else if (r.witness->kind == Witness::Kind::Cutset) {
    j["witness"] = Json{{"cutset", r.witness->cutset.to_vector()}};
  } else {
    j["witness"] = Json{{"face", format_face(r.n, r.witness->face)}};
  }
  return j.dump();
}

ClassRecord record_from_json(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("bad record: ") + e.what());
  }
  try {
    ClassRecord r;
    r.certificate.bytes = j.at("certificate").get<std::string>();
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.edge_count = j.at("edge_count").get<int>();
    r.indecomposable = get_opt<bool>(j, "indecomposable");
    r.unmixed = get_opt<bool>(j, "unmixed");
    r.accessible = get_opt<bool>(j, "accessible");
    r.strongly_unmixed = get_opt<bool>(j, "strongly_unmixed");
    r.s2 = get_opt<bool>(j, "s2");
    r.f_vector = get_opt<std::vector<std::int64_t>>(j, "f_vector");
    r.h_vector = get_opt<std::vector<std::int64_t>>(j, "h_vector");
    r.multiplicity = get_opt<std::int64_t>(j, "multiplicity");
    if (j.contains("witness") && !j.at("witness").is_null()) {
      const Json& w = j.at("witness");
      Witness out;
      if (w.contains("cutset")) {
        out.kind = Witness::Kind::Cutset;
        for (int v : w.at("cutset").get<std::vector<int>>()) out.cutset = out.cutset.with(v);
      } else {
        out.kind = Witness::Kind::Face;
        out.face = parse_face(r.n, w.at("face").get<std::string>());
      }
      r.witness = out;
    }
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad record: ") + e.what());
  }
}

std::vector<ClassRecord> read_records(const std::filesystem::path& jsonl) {
  std::ifstream in(jsonl);
  if (!in) throw IoError("cannot open " + jsonl.string());
  std::vector<ClassRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(line));
  }
  if (in.bad()) throw IoError("read failure on " + jsonl.string());
  return out;
}

EquivalenceReport verify_equivalence(const std::vector<ClassRecord>& records) {
  EquivalenceReport rep;
  for (const ClassRecord& r : records) {
    if (r.accessible && r.strongly_unmixed && *r.accessible != *r.strongly_unmixed) {
      (*r.accessible ? rep.accessible_only : rep.strongly_unmixed_only).push_back(r.graph6);
    }
    if (r.s2 && r.accessible) {
      rep.s2_checked = true;
      if (*r.s2 != *r.accessible) (*r.accessible ? rep.accessible_not_s2 : rep.s2_not_accessible).push_back(r.graph6);
    }
  }
  rep.verified = rep.accessible_only.empty() && rep.strongly_unmixed_only.empty() && rep.accessible_not_s2.empty() &&
                 rep.s2_not_accessible.empty();
  return rep;
}

std::string format_report(const EquivalenceReport& rep) {
  std::ostringstream out;
  auto list = [&](const char* label, const std::vector<std::string>& v) {
    out << label << ": " << v.size() << '\n';
    for (const auto& g6 : v) out << "  " << g6 << '\n';
  };
  out << "equivalence " << (rep.verified ? "verified" : "FAILED") << '\n';
  list("accessible but not strongly unmixed", rep.accessible_only);
  list("strongly unmixed but not accessible", rep.strongly_unmixed_only);
  if (rep.s2_checked) {
    list("accessible but not s2", rep.accessible_not_s2);
    list("s2 but not accessible", rep.s2_not_accessible);
  } else {
    out << "s2: not computed\n";
  }
  return out.str();
}

std::string summary_csv(const RunSummary& s) {
  std::ostringstream out;
  out << "n,generated,indecomposable,indecomposable_unmixed,accessible,strongly_unmixed,s2,completed,"
         "equivalence_verified,wall_time_seconds,workers\n";
  out << s.n << ',' << s.generated << ',' << s.indecomposable << ',' << s.indecomposable_unmixed << ','
      << s.accessible << ',' << s.strongly_unmixed << ',' << (s.s2 ? std::to_string(*s.s2) : std::string()) << ','
      << (s.completed ? "true" : "false") << ',' << (s.equivalence_verified ? "true" : "false") << ','
      << std::fixed << std::setprecision(3) << s.wall_time_seconds << ',' << s.workers << '\n';
  return out.str();
}

}  // namespace bei
