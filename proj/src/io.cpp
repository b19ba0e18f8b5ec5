#include "ctri/io.hpp"

#include "ctri/error.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ctri {

namespace fs = std::filesystem;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInput, "cannot write " + path.string());
  out << text;
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    pos = end + 1;
  }
  return out;
}

Index parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::kInput, "bad index '" + s + "'");
  return static_cast<Index>(std::stoul(s));
}

}  // namespace

LabeledSets parse_pointset(std::string_view text) {
  LabeledSets sets;
  std::vector<HPoint>* cur = nullptr;
  bool cur_infinite = false;
  std::size_t lineno = 0;
  for (std::string_view line : lines_of(text)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "#") {
      if (toks.size() >= 3 && toks[1] == "set") {
        const std::string& name = toks[2];
        if (name == "A") cur = &sets.a;
        else if (name == "B") cur = &sets.b;
        else if (name == "C") cur = &sets.c;
        else throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": unknown set " + name);
        cur_infinite = toks.size() >= 4 && toks[3] == "infinity";
        if (cur_infinite && cur != &sets.c)
          throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": only C may be at infinity");
        if (cur == &sets.c) sets.c_at_infinity = cur_infinite;
      }
      continue;
    }
    if (toks[0][0] == '#') continue;
    if (!cur) throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": point before any set header");
    if (toks.size() != 2 && toks.size() != 3)
      throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": expected 'x y' or 'x y w'");
    try {
      const Rat x = parse_rat(toks[0]);
      const Rat y = parse_rat(toks[1]);
      const Rat w = toks.size() == 3 ? parse_rat(toks[2]) : Rat(1);
      cur->push_back(HPoint::homogeneous(x, y, w));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInput, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    sets.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kInput, e.what());
  }
  return sets;
}

std::string format_pointset(const LabeledSets& sets, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  auto emit = [&](const char* name, const std::vector<HPoint>& pts, bool inf) {
    if (pts.empty() && std::string(name) != "A") return;
    out << "# set " << name << (inf ? " infinity" : "") << "\n";
    for (const auto& p : pts) {
      if (p.is_finite()) out << to_string(p.ax()) << " " << to_string(p.ay()) << "\n";
      else out << to_string(p.x()) << " " << to_string(p.y()) << " 0\n";
    }
  };
  emit("A", sets.a, false);
  emit("B", sets.b, false);
  emit("C", sets.c, sets.c_at_infinity);
  return out.str();
}

std::vector<IndexPair> parse_pairs(std::string_view text, std::size_t n) {
  const auto trimmed = split_ws(text);
  if (trimmed.size() == 1 && trimmed[0] == "all") return all_pairs(n);
  std::vector<IndexPair> out;
  std::size_t lineno = 0;
  for (std::string_view line : lines_of(text)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 2) throw Error(ErrorCode::kInput, "pairs line " + std::to_string(lineno) + ": expected 'i j'");
    const Index i = parse_index(toks[0]);
    const Index j = parse_index(toks[1]);
    if (i >= n || j >= n || i == j)
      throw Error(ErrorCode::kInput, "pairs line " + std::to_string(lineno) + ": invalid pair");
    out.emplace_back(i, j);
  }
  return out;
}

std::string format_triples(const TripleSystem& system, const std::string& pointset_name, const std::string& hash) {
  std::ostringstream out;
  out << "# triples pointset=" << pointset_name << " hash=" << hash << " count=" << system.num_edges() << "\n";
  for (const Edge& e : system.edges()) out << e.a << " " << e.b << " " << e.c << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : fields_)
    if (k == key) {
      v = value;
      return;
    }
  fields_.emplace_back(key, value);
}

void Report::claim(const std::string& text) { claims_.push_back(text); }
void Report::note(const std::string& text) { notes_.push_back(text); }

std::string Report::str(bool with_timestamp) const {
  std::ostringstream out;
  out << kReportVersion << "\n";
  out << "command: " << command_ << "\n";
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "timestamp: " << buf << "\n";
  }
  for (const auto& [k, v] : fields_) out << k << ": " << v << "\n";
  for (const auto& n : notes_) out << "note: " << n << "\n";
  for (const auto& c : claims_) out << "claim " << c << "\n";
  return out.str();
}

std::string report_field(std::string_view text, const std::string& key) {
  const std::string prefix = key + ": ";
  for (std::string_view line : lines_of(text))
    if (line.substr(0, prefix.size()) == prefix) return std::string(line.substr(prefix.size()));
  return {};
}

// ---------------------------------------------------------------------------

std::string edge_list(std::span<const Edge> edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(edges[i].a) + "," + std::to_string(edges[i].b) + "," + std::to_string(edges[i].c);
  }
  return out;
}

std::string index_list(std::span<const Index> idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out;
}

std::string claim_collinear(const Edge& e) {
  return "collinear " + std::to_string(e.a) + " " + std::to_string(e.b) + " " + std::to_string(e.c);
}

std::string claim_config63(const Config63& c) { return "config63 e=" + edge_list(c.edges); }

std::string claim_tictactoe(const TicTacToe& t) {
  return "tictactoe rows=" + edge_list(t.rows) + " cols=" + edge_list(t.cols);
}

std::string claim_config129(const Config129& c) { return "config129 e=" + edge_list(c.edges); }

std::string claim_ksystem(const KSystem& k) {
  auto blocks = [](const std::vector<std::vector<Index>>& bs) {
    std::string out;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (i) out += ";";
      out += index_list(bs[i]);
    }
    return out;
  };
  return "ksystem k=" + std::to_string(k.k) + " a=" + blocks(k.a_blocks) + " c=" + blocks(k.c_blocks) +
         " centers=" + blocks(k.centers);
}

std::string claim_conic(const Conic& c) {
  std::string out = "conic q=";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += to_string(c[i]);
  }
  return out;
}

std::string claim_on_conic(std::span<const Index> a, std::span<const Index> b) {
  return "on-conic A=" + index_list(a) + " B=" + index_list(b);
}

std::string claim_similar(const IndexTriple& first, const IndexTriple& second) {
  return "similar first=" + index_list(first) + " second=" + index_list(second);
}

// ---------------------------------------------------------------------------

bool VerifyResult::ok() const {
  for (const auto& c : claims)
    if (!c.ok) return false;
  return true;
}

namespace {

std::map<std::string, std::string> keyed(const std::vector<std::string>& toks) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos) continue;
    out[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return out;
}

std::vector<Index> parse_index_list(const std::string& s) {
  std::vector<Index> out;
  if (s.empty()) return out;
  for (const auto& t : split(s, ',')) out.push_back(parse_index(t));
  return out;
}

std::vector<std::vector<Index>> parse_blocks(const std::string& s) {
  std::vector<std::vector<Index>> out;
  for (const auto& t : split(s, ';')) out.push_back(parse_index_list(t));
  return out;
}

std::vector<Edge> parse_edges(const std::string& s) {
  std::vector<Edge> out;
  for (const auto& t : split(s, ';')) {
    auto v = parse_index_list(t);
    if (v.size() != 3) throw Error(ErrorCode::kInput, "edge needs three indices");
    out.push_back(Edge{v[0], v[1], v[2]});
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw Error(ErrorCode::kInput, "missing " + key + "=");
  return it->second;
}

class ClaimChecker {
 public:
  explicit ClaimChecker(const LabeledSets& sets) : sets_(sets) {}

  // Empty string on success, otherwise the reason.
  std::string check(const std::vector<std::string>& toks) {
    const std::string& kind = toks[0];
    const auto kv = keyed(toks);
    if (kind == "collinear") {
      if (toks.size() != 4) return "expected three indices";
      return collinear_edges({Edge{parse_index(toks[1]), parse_index(toks[2]), parse_index(toks[3])}});
    }
    if (kind == "config63") {
      auto es = parse_edges(need(kv, "e"));
      if (es.size() != 3) return "expected three edges";
      if (auto r = collinear_edges(es); !r.empty()) return r;
      if (!make_config63(es[0], es[1], es[2])) return "edges do not form a (6,3) configuration";
      return {};
    }
    if (kind == "tictactoe") {
      auto rows = parse_edges(need(kv, "rows"));
      auto cols = parse_edges(need(kv, "cols"));
      if (rows.size() != 3 || cols.size() != 3) return "expected three rows and three columns";
      std::vector<Edge> all(rows);
      all.insert(all.end(), cols.begin(), cols.end());
      if (auto r = collinear_edges(all); !r.empty()) return r;
      TicTacToe t{{rows[0], rows[1], rows[2]}, {cols[0], cols[1], cols[2]}};
      return tictactoe_violation(t, graph_of(all));
    }
    if (kind == "config129") {
      auto es = parse_edges(need(kv, "e"));
      if (es.size() != 9) return "expected nine edges";
      if (auto r = collinear_edges(es); !r.empty()) return r;
      std::set<std::pair<int, Index>> verts;
      for (const auto& e : es) {
        verts.insert({0, e.a});
        verts.insert({1, e.b});
        verts.insert({2, e.c});
      }
      if (verts.size() != 12) return "edges span " + std::to_string(verts.size()) + " vertices, not 12";
      if (!find_tictactoe_exhaustive(graph_of(es))) return "no tic-tac-toe among the nine edges";
      return {};
    }
    if (kind == "ksystem") {
      KSystem ks;
      ks.k = parse_index(need(kv, "k"));
      ks.a_blocks = parse_blocks(need(kv, "a"));
      ks.c_blocks = parse_blocks(need(kv, "c"));
      ks.centers = parse_blocks(need(kv, "centers"));
      const std::size_t k = ks.k;
      if (ks.a_blocks.size() != k || ks.c_blocks.size() != k || ks.centers.size() != k)
        return "block counts differ from k";
      std::vector<Edge> req;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t l = 0; l < k; ++l) {
            if (ks.a_blocks[i].size() != k || ks.c_blocks[j].size() != k || ks.centers[i].size() != k)
              return "block sizes differ from k";
            req.push_back(Edge{ks.a_blocks[i][l], ks.centers[i][j], ks.c_blocks[j][k - 1 - l]});
          }
      if (auto r = collinear_edges(req); !r.empty()) return r;
      return k_system_violation(ks, graph_of(req));
    }
    if (kind == "conic") {
      auto q = split(need(kv, "q"), ',');
      if (q.size() != 6) return "expected six coefficients";
      std::array<Rat, 6> c;
      for (int i = 0; i < 6; ++i) c[i] = parse_rat(q[i]);
      conic_.emplace(c);
      return {};
    }
    if (kind == "on-conic") {
      if (!conic_) return "no conic claimed before";
      for (const char* name : {"A", "B", "C"}) {
        auto it = kv.find(name);
        if (it == kv.end()) continue;
        const Part p = name[0] == 'A' ? Part::kA : name[0] == 'B' ? Part::kB : Part::kC;
        for (Index i : parse_index_list(it->second)) {
          if (i >= sets_.set(p).size()) return std::string(name) + std::to_string(i) + " out of range";
          if (!on_conic(*conic_, sets_.set(p)[i])) return std::string(name) + std::to_string(i) + " is off the conic";
        }
      }
      return {};
    }
    if (kind == "similar") {
      auto f = parse_index_list(need(kv, "first"));
      auto s = parse_index_list(need(kv, "second"));
      if (f.size() != 3 || s.size() != 3) return "expected two triples";
      for (Index i : f)
        if (i >= sets_.a.size()) return "index out of range";
      for (Index i : s)
        if (i >= sets_.a.size()) return "index out of range";
      Triangle t1{sets_.a[f[0]], sets_.a[f[1]], sets_.a[f[2]]};
      Triangle t2{sets_.a[s[0]], sets_.a[s[1]], sets_.a[s[2]]};
      if (!similar_rel_line(t1, t2, c_line(sets_))) return "triples are not similar relative to the C line";
      return {};
    }
    if (kind == "order-valid") {
      auto r = verify_order(build_triples(sets_).graph());
      if (!r.ok) return "ordering bullet " + std::to_string(r.bullet) + " fails";
      return {};
    }
    if (kind == "triple-count") {
      if (toks.size() != 2) return "expected a count";
      const auto n = build_triples(sets_).num_edges();
      if (std::to_string(n) != toks[1]) return "found " + std::to_string(n) + " triples";
      return {};
    }
    if (kind == "direction-count") {
      if (toks.size() != 2) return "expected a count";
      std::set<HPoint> dirs;
      for (std::size_t i = 0; i < sets_.a.size(); ++i)
        for (std::size_t j = i + 1; j < sets_.a.size(); ++j) dirs.insert(direction_of(sets_.a[i], sets_.a[j]));
      if (std::to_string(dirs.size()) != toks[1]) return "found " + std::to_string(dirs.size()) + " directions";
      return {};
    }
    if (kind == "mutually-avoiding") {
      auto r = mutually_avoiding(sets_);
      return r.ok ? std::string() : r.violation;
    }
    if (kind == "avoiding-one-sided") {
      auto r = avoiding_one_sided(sets_);
      return r.ok ? std::string() : r.violation;
    }
    return "unknown claim kind '" + kind + "'";
  }

 private:
  std::string collinear_edges(const std::vector<Edge>& es) const {
    for (const Edge& e : es) {
      if (e.a >= sets_.a.size() || e.b >= sets_.b.size() || e.c >= sets_.c.size())
        return "edge " + index_list(std::array<Index, 3>{e.a, e.b, e.c}) + " out of range";
      if (!is_collinear_edge(sets_, e))
        return "edge " + index_list(std::array<Index, 3>{e.a, e.b, e.c}) + " is not collinear";
    }
    return {};
  }

  Hypergraph3 graph_of(const std::vector<Edge>& es) const {
    return Hypergraph3(sets_.a.size(), sets_.b.size(), sets_.c.size(), es);
  }

  const LabeledSets& sets_;
  std::optional<Conic> conic_;
};

}  // namespace

VerifyResult verify_claims(std::string_view report_text, const LabeledSets& sets) {
  VerifyResult out;
  ClaimChecker checker(sets);
  for (std::string_view line : lines_of(report_text)) {
    if (line.substr(0, 6) != "claim ") continue;
    ClaimResult r;
    r.claim = std::string(line.substr(6));
    try {
      const auto toks = split_ws(r.claim);
      r.reason = toks.empty() ? "empty claim" : checker.check(toks);
    } catch (const std::exception& e) {
      r.reason = e.what();
    }
    r.ok = r.reason.empty();
    out.claims.push_back(std::move(r));
  }
  return out;
}

}  // namespace ctri
