#include "wcpx/report_json.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <json.hpp>

namespace wcpx {

#ifndef WCPX_VERSION
#define WCPX_VERSION "0.0.0"
#endif

std::string_view tool_version() { return WCPX_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

namespace {

nlohmann::json one_based(const std::vector<std::size_t>& idx) {
  auto a = nlohmann::json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

}  // namespace

std::string emit_report(const Report& report, const ReportMeta& meta) {
  using nlohmann::json;
  json doc;
  doc["tool"] = {{"name", "wcpx"}, {"version", std::string(tool_version())}};
  if (!meta.command.empty()) doc["command"] = meta.command;
  doc["inputs"] = meta.input_digests;
  auto records = json::array();
  for (const auto& r : report.records()) {
    json j;
    j["id"] = r.id;
    j["anchor"] = anchor_for(r.id);
    j["status"] = std::string(to_string(r.status));
    if (!r.subject.empty()) j["subject"] = r.subject;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.witness) {
      const Witness& w = *r.witness;
      if (w.shape_mismatch) {
        j["witness"] = {{"shape_mismatch", true}};
      } else {
        j["witness"] = {{"input", one_based(w.input)},
                        {"output", one_based(w.output)},
                        {"lhs", w.lhs.to_string()},
                        {"rhs", w.rhs.to_string()}};
      }
    }
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  doc["facts"] = json::object();
  for (const auto& [k, v] : report.facts()) doc["facts"][k] = v;
  doc["summary"] = {{"pass", report.count(Status::pass)}, {"fail", report.count(Status::fail)}};
  return doc.dump(2) + "\n";
}

}  // namespace wcpx
