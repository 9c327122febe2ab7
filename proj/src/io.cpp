#include "forestlcs/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

// Splits on blanks and parses every token as a non-negative integer.
bool parse_numbers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<std::pair<Vertex, Vertex>> pair_list(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw CertificateError(CertificateErrc::malformed, std::string("missing array field '") + field + "'");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& item : j[field]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw CertificateError(CertificateErrc::malformed, std::string("entries of '") + field + "' must be [u, v]");
    out.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return out;
}

std::vector<Edge> edge_list(const nlohmann::json& j, const char* field) {
  std::vector<Edge> out;
  for (const auto& [u, v] : pair_list(j, field)) out.emplace_back(u, v);
  return out;
}

}  // namespace

Forest parse_forest(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::size_t> parent;
  std::vector<std::uint64_t> numbers;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto cut = text.find('\n');
    const std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;
    if (is_skippable(line)) continue;
    if (!parse_numbers(line, numbers)) throw ParseError(ParseErrc::malformed, line_no, "expected non-negative integers");
    if (!order) {
      if (numbers.size() != 1) throw ParseError(ParseErrc::malformed, line_no, "expected a single vertex count");
      order = numbers[0];
      parent.resize(*order);
      std::iota(parent.begin(), parent.end(), 0);
      continue;
    }
    if (numbers.size() != 2) throw ParseError(ParseErrc::malformed, line_no, "expected an edge 'u v'");
    if (numbers[0] >= *order || numbers[1] >= *order)
      throw ParseError(ParseErrc::vertex_out_of_range, line_no,
                       "vertex id must be below the declared count " + std::to_string(*order));
    if (numbers[0] == numbers[1]) throw ParseError(ParseErrc::self_loop, line_no, "self-loop");
    const Edge e(static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1]));
    if (!seen.insert(e).second) throw ParseError(ParseErrc::duplicate_edge, line_no, "duplicate edge");
    const auto ru = find_root(parent, e.u);
    const auto rv = find_root(parent, e.v);
    if (ru == rv) throw ParseError(ParseErrc::cycle, line_no, "edge closes a cycle");
    parent[rv] = ru;
    edges.push_back(e);
  }
  if (!order) throw ParseError(ParseErrc::missing_header, line_no, "missing vertex count");
  return Forest(*order, std::move(edges));
}

std::string serialize_forest(const Forest& f) {
  std::ostringstream out;
  out << f.order() << '\n';
  for (const Edge& e : f.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateError(CertificateErrc::malformed, e.what());
  }
  if (!j.is_object()) throw CertificateError(CertificateErrc::malformed, "certificate must be a JSON object");
  Certificate c;
  c.edges1 = edge_list(j, "edges1");
  c.edges2 = edge_list(j, "edges2");
  c.vertex_map = pair_list(j, "map");
  if (!j.contains("size") || !j["size"].is_number_unsigned())
    throw CertificateError(CertificateErrc::malformed, "missing integer field 'size'");
  if (j["size"].get<std::size_t>() != c.edges1.size())
    throw CertificateError(CertificateErrc::size_mismatch, "'size' does not match the length of edges1");
  return c;
}

std::string serialize_certificate(const Certificate& c) {
  auto pairs = [](const auto& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b] : list) arr.push_back({a, b});
    return arr;
  };
  std::vector<std::pair<Vertex, Vertex>> e1, e2;
  for (const Edge& e : c.edges1) e1.emplace_back(e.u, e.v);
  for (const Edge& e : c.edges2) e2.emplace_back(e.u, e.v);
  nlohmann::json j;
  j["edges1"] = pairs(e1);
  j["edges2"] = pairs(e2);
  j["map"] = pairs(c.vertex_map);
  j["size"] = c.edges1.size();
  return j.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace forestlcs
