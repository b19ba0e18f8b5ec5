#pragma once

#include "ctri/conic_pipeline.hpp"
#include "ctri/generators.hpp"
#include "ctri/search.hpp"
#include "ctri/triple_system.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ctri {

inline constexpr const char* kReportVersion = "ctri-report v1";

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(std::string_view bytes);

// "# set A|B|C [infinity]" headers followed by "x y" or "x y w" lines.
LabeledSets parse_pointset(std::string_view text);
std::string format_pointset(const LabeledSets& sets, const std::string& comment = {});

// "i j" per line, or the literal "all" for every pair of n points.
std::vector<IndexPair> parse_pairs(std::string_view text, std::size_t n);

std::string format_triples(const TripleSystem& system, const std::string& pointset_name, const std::string& hash);

// Line-oriented report: versioned header, key lines, then claim lines that
// verify_report can re-check against the pointset.
class Report {
 public:
  explicit Report(std::string command);

  void set(const std::string& key, const std::string& value);
  void claim(const std::string& text);
  void note(const std::string& text);

  std::string str(bool with_timestamp = true) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> claims_;
  std::vector<std::string> notes_;
};

// Claim encodings.
std::string edge_list(std::span<const Edge> edges);  // "i,j,k;i,j,k"
std::string index_list(std::span<const Index> idx);  // "i,j,k"
std::string claim_collinear(const Edge& e);
std::string claim_config63(const Config63& c);
std::string claim_tictactoe(const TicTacToe& t);
std::string claim_config129(const Config129& c);
std::string claim_ksystem(const KSystem& k);
std::string claim_conic(const Conic& c);
std::string claim_on_conic(std::span<const Index> a, std::span<const Index> b);
std::string claim_similar(const IndexTriple& first, const IndexTriple& second);

struct ClaimResult {
  std::string claim;
  bool ok = false;
  std::string reason;
};

struct VerifyResult {
  std::vector<ClaimResult> claims;
  bool ok() const;
};

// Checks every claim line of a report (or planted sidecar) against the pointset.
VerifyResult verify_claims(std::string_view report_text, const LabeledSets& sets);

// Value of "key: value" in a report, or empty.
std::string report_field(std::string_view report_text, const std::string& key);

}  // namespace ctri
