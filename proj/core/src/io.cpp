#include "rcx/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace rcx {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw IoError(line, "expected an integer, got '" + tok + "'");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

LatticeSet read_point_set(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!tokens_of(line).empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw IoError(1, "missing header 'd n'");
  auto header = tokens_of(line);
  if (header.size() != 2) throw IoError(lineno, "header must be 'd n'");
  const long long d = parse_int(header[0], lineno);
  const long long n = parse_int(header[1], lineno);
  if (d < 1) throw IoError(lineno, "dimension must be positive");
  if (n < 0) throw IoError(lineno, "negative point count");

  std::vector<LatticePoint> pts;
  std::set<LatticePoint> seen;
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw IoError(lineno + 1, "expected a point line");
    const auto toks = tokens_of(line);
    if (static_cast<long long>(toks.size()) != d) {
      throw IoError(lineno, "expected " + std::to_string(d) + " coordinates");
    }
    LatticePoint p(d);
    for (long long k = 0; k < d; ++k) p[k] = parse_int(toks[k], lineno);
    if (!seen.insert(p).second) throw IoError(lineno, "duplicate point");
    pts.push_back(std::move(p));
  }
  return LatticeSet(static_cast<int>(d), std::move(pts));
}

LatticeSet read_point_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_point_set(in);
}

std::string format_point_set(const LatticeSet& set) {
  std::ostringstream out;
  out << set.dim() << " " << set.size() << "\n";
  for (const auto& p : set.points()) {
    for (int k = 0; k < set.dim(); ++k) {
      if (k) out << " ";
      out << p[k];
    }
    out << "\n";
  }
  return out.str();
}

void write_point_file(const std::string& path, const LatticeSet& set) {
  std::ofstream out(path);
  if (!out) throw IoError(0, "cannot write '" + path + "'");
  out << format_point_set(set);
}

HPolyhedron read_hrep(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!tokens_of(line).empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw IoError(1, "missing header 'd m'");
  auto header = tokens_of(line);
  if (header.size() != 2) throw IoError(lineno, "header must be 'd m'");
  const long long d = parse_int(header[0], lineno);
  const long long m = parse_int(header[1], lineno);
  if (d < 1) throw IoError(lineno, "dimension must be positive");
  if (m < 0) throw IoError(lineno, "negative row count");

  HPolyhedron p;
  p.dim = static_cast<int>(d);
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw IoError(lineno + 1, "expected an inequality line");
    const auto toks = tokens_of(line);
    if (static_cast<long long>(toks.size()) != d + 1) {
      throw IoError(lineno, "expected " + std::to_string(d + 1) + " entries");
    }
    Inequality row;
    row.a.resize(d);
    try {
      for (long long k = 0; k < d; ++k) row.a[k] = parse_rat(toks[k]);
      row.b = parse_rat(toks[d]);
    } catch (const std::invalid_argument& e) {
      throw IoError(lineno, e.what());
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

HPolyhedron read_hrep_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_hrep(in);
}

std::string format_hrep(const HPolyhedron& p) {
  std::ostringstream out;
  out << p.dim << " " << p.rows.size() << "\n";
  for (const auto& row : p.rows) {
    for (int k = 0; k < p.dim; ++k) out << rat_str(row.a[k]) << " ";
    out << rat_str(row.b) << "\n";
  }
  return out.str();
}

void write_hrep_file(const std::string& path, const HPolyhedron& p) {
  std::ofstream out(path);
  if (!out) throw IoError(0, "cannot write '" + path + "'");
  out << format_hrep(p);
}

std::string certificate_to_json(const SeparationCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["k"] = cert.k;
  auto& ineqs = doc["inequalities"] = nlohmann::ordered_json::array();
  for (const auto& row : cert.inequalities) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    for (const auto& c : row.a) entry.push_back(rat_str(c));
    entry.push_back(rat_str(row.b));
    ineqs.push_back(std::move(entry));
  }
  auto& assignment = doc["assignment"] = nlohmann::ordered_json::object();
  for (const auto& [point, index] : cert.assignment) {
    std::ostringstream key;
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (k) key << " ";
      key << point[k];
    }
    assignment[key.str()] = index;
  }
  return doc.dump(2) + "\n";
}

void write_certificate_file(const std::string& path, const SeparationCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw IoError(0, "cannot write '" + path + "'");
  out << certificate_to_json(cert);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(0, "cannot open '" + path + "'");
  unsigned long long h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace rcx
