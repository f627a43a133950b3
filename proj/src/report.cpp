#include "cannon/report.hpp"

#include <sstream>

namespace cannon {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ball_csv(const DistanceMap& map) {
  std::ostringstream out;
  out << "x,y,layer,dist\n";
  for (const auto& [g, d] : map.sorted()) {
    out << g.x << ',' << g.y << ',' << to_string(g.layer) << ',' << d << '\n';
  }
  return out.str();
}

std::string scan_rows_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "word,endpoint,word_len,geo_len,min_k,witness\n";
  for (const FellowReport& r : scan.rows) {
    out << csv_field(r.word.to_string()) << ',' << csv_field(r.endpoint.to_string()) << ','
        << r.word_len << ',' << r.geo_len << ',' << r.min_k << ',' << csv_field(r.witness.to_string())
        << '\n';
  }
  return out.str();
}

std::string scan_summary_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "len,count_nongeodesic,max_min_k\n";
  for (const ScanSummaryRow& s : scan.summary) {
    out << s.len << ',' << s.count_nongeodesic << ',' << s.max_min_k << '\n';
  }
  return out.str();
}

nlohmann::ordered_json report_json(const FellowReport& r) {
  return {{"word", r.word.to_string()},   {"endpoint", r.endpoint.to_string()},
          {"word_len", r.word_len},       {"geo_len", r.geo_len},
          {"min_k", r.min_k},             {"witness", r.witness.to_string()}};
}

nlohmann::ordered_json scan_json(const ScanResult& scan) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"command", "fftp-scan"}, {"max_len", scan.max_len}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const FellowReport& r : scan.rows) doc["rows"].push_back(report_json(r));
  doc["summary"] = nlohmann::ordered_json::array();
  for (const ScanSummaryRow& s : scan.summary) {
    doc["summary"].push_back(
        {{"len", s.len}, {"count_nongeodesic", s.count_nongeodesic}, {"max_min_k", s.max_min_k}});
  }
  return doc;
}

std::string word_lines(const std::set<Word>& words) {
  std::string out;
  for (const Word& w : words) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

std::string family_counts_csv(const std::vector<GeodesicFamily>& families) {
  std::ostringstream out;
  out << "target,count\n";
  for (const GeodesicFamily& f : families) {
    out << csv_field(f.target.to_string()) << ',' << f.words.size() << '\n';
  }
  return out.str();
}

std::string distance_table(const FellowReport& r) {
  const auto pw = path_points(r.word);
  const auto pv = path_points(r.witness);
  std::ostringstream out;
  out << "t,w(t),v(t),d\n";
  for (std::size_t t = 0; t < pw.size(); ++t) {
    const GroupElement& v = pv[std::min(t, pv.size() - 1)];
    out << t << ',' << csv_field(pw[t].to_string()) << ',' << csv_field(v.to_string()) << ','
        << distance(pw[t], v) << '\n';
  }
  return out.str();
}

}  // namespace cannon
