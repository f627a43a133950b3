#pragma once

// Text, CSV and JSON renderings shared by the CLI and the tests.

#include <string>
#include <vector>

#include <json.hpp>

#include "cannon/cayley.hpp"
#include "cannon/fellow.hpp"
#include "cannon/geodesics.hpp"

namespace cannon {

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// `x,y,layer,dist`, rows in (layer, x, y) order.
std::string ball_csv(const DistanceMap& map);

/// `word,endpoint,word_len,geo_len,min_k,witness`
std::string scan_rows_csv(const ScanResult& scan);
/// `len,count_nongeodesic,max_min_k`
std::string scan_summary_csv(const ScanResult& scan);
/// {"config": {...}, "rows": [...], "summary": [...]}
nlohmann::ordered_json scan_json(const ScanResult& scan);

nlohmann::ordered_json report_json(const FellowReport& r);

/// One word per line, lexicographic.
std::string word_lines(const std::set<Word>& words);

/// `target,count`
std::string family_counts_csv(const std::vector<GeodesicFamily>& families);

/// Step table t, w(t), v(t), d for a report and its witness.
std::string distance_table(const FellowReport& r);

}  // namespace cannon
