#include "lea/catalog_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <tuple>

#include "lea/text_format.hpp"

namespace lea {

namespace {

constexpr const char* kHeader = "lea-catalog v1";

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

bool has_remaining_content(std::istringstream& in) {
  std::streampos pos = in.tellg();
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      in.clear();
      in.seekg(pos);
      return true;
    }
    pos = in.tellg();
  }
  in.clear();
  in.seekg(pos);
  return false;
}

} // namespace

void write_catalog(const Catalog& c, std::ostream& out) {
  std::ostringstream body;
  for (int n = 1; n < static_cast<int>(c.entries.size()); ++n)
    for (const auto& entry : c.entries[n]) {
      write_algebra(body, entry.groupoid);
      body << "\n";
    }
  const std::string body_text = body.str();

  out << kHeader << "\n";
  out << body_text;
  out << "counts:";
  for (int n = 1; n <= c.size_bound; ++n)
    out << " " << n << ":" << c.entries[n].size();
  out << "\n";
  out << "checksum: fnv1a64:" << fnv1a64_hex(body_text) << "\n";
}

std::string catalog_to_text(const Catalog& c) {
  std::ostringstream oss;
  write_catalog(c, oss);
  return oss.str();
}

void save_catalog_file(const Catalog& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_catalog(c, out);
}

Catalog read_catalog(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty catalog file", 1);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != kHeader)
    throw FormatError("bad header '" + header + "', expected '" +
                          std::string(kHeader) + "'",
                      1);

  std::string body;
  std::string counts_line;
  std::string line;
  bool have_counts = false;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("counts:", 0) == 0) {
      counts_line = line.substr(7);
      have_counts = true;
      break;
    }
    body += line;
    body += "\n";
  }
  if (!have_counts)
    throw FormatError("truncated catalog: no 'counts:' footer", line_no);

  std::string checksum_line;
  if (!std::getline(in, checksum_line))
    throw FormatError("truncated catalog: no 'checksum:' footer", line_no + 1);
  if (!checksum_line.empty() && checksum_line.back() == '\r')
    checksum_line.pop_back();
  const std::string expected = "checksum: fnv1a64:" + fnv1a64_hex(body);
  if (checksum_line != expected)
    throw FormatError("checksum mismatch: body hashes to fnv1a64:" +
                          fnv1a64_hex(body),
                      line_no + 1);

  // Parse the body into groupoid entries.
  Catalog catalog;
  std::istringstream body_in(body);
  std::vector<EffectGroupoid> parsed;
  while (has_remaining_content(body_in)) {
    AnyAlgebra any = read_algebra(body_in);
    auto* g = std::get_if<EffectGroupoid>(&any);
    if (!g) throw FormatError("catalog entries must be effect-groupoids");
    parsed.push_back(std::move(*g));
  }
  if (parsed.empty()) throw FormatError("catalog has no entries");

  int max_size = 0;
  for (const auto& g : parsed) max_size = std::max(max_size, g.size);
  catalog.size_bound = max_size;
  catalog.entries.resize(max_size + 1);
  for (auto& g : parsed) {
    const int n = g.size;
    AxiomReport report = check_ng_axioms(g);
    if (!report.structural_ok)
      throw FormatError("invalid catalog entry: " + report.structural_error);
    for (const auto& check : report.checks)
      if (!check.passed)
        throw FormatError("catalog entry of size " + std::to_string(n) +
                          " violates axiom " + check.id + " (" + check.detail +
                          ")");
    if (!same_tables(canonical_form(g), g))
      throw FormatError("catalog entry of size " + std::to_string(n) +
                        " is not in canonical form");
    CatalogEntry entry;
    entry.commutative = is_commutative(g);
    entry.idempotent = is_idempotent(g);
    entry.associative = is_associative(g);
    entry.block_count = static_cast<int>(blocks(g).size());
    entry.groupoid = std::move(g);
    catalog.entries[n].push_back(std::move(entry));
  }

  for (int n = 1; n <= max_size; ++n) {
    const auto& list = catalog.entries[n];
    for (std::size_t i = 1; i < list.size(); ++i) {
      auto key = [](const CatalogEntry& e) {
        return std::tie(e.groupoid.dot, e.groupoid.inv);
      };
      if (!(key(list[i - 1]) < key(list[i])))
        throw FormatError("catalog entries of size " + std::to_string(n) +
                          " are not sorted and unique");
    }
  }

  // Cross-check the counts footer.
  std::istringstream counts_in(counts_line);
  std::string tok;
  std::vector<std::pair<int, int>> declared;
  while (counts_in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw FormatError("malformed counts entry '" + tok + "'");
    try {
      declared.emplace_back(std::stoi(tok.substr(0, colon)),
                            std::stoi(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      throw FormatError("malformed counts entry '" + tok + "'");
    }
  }
  for (auto [n, count] : declared) {
    if (n < 1 || n > max_size || static_cast<int>(catalog.entries[n].size()) != count)
      throw FormatError("counts footer does not match entries at size " +
                        std::to_string(n));
  }
  for (int n = 1; n <= max_size; ++n) {
    bool found = false;
    for (auto [dn, dc] : declared)
      if (dn == n) found = true;
    if (!found && !catalog.entries[n].empty())
      throw FormatError("counts footer is missing size " + std::to_string(n));
  }

  return catalog;
}

Catalog parse_catalog(const std::string& text) {
  std::istringstream iss(text);
  return read_catalog(iss);
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_catalog(in);
}

} // namespace lea
