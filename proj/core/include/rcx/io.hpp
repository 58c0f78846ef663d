#pragma once

#include "rcx/lattice_set.hpp"
#include "rcx/polyhedron.hpp"
#include "rcx/separation.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rcx {

/// Malformed input file; `line` is 1-based.
class IoError : public std::runtime_error {
 public:
  IoError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Point-set text format: first line "d n", then n lines of d integers.
/// Duplicate point lines are rejected.
LatticeSet read_point_set(std::istream& in);
LatticeSet read_point_file(const std::string& path);
std::string format_point_set(const LatticeSet& set);
void write_point_file(const std::string& path, const LatticeSet& set);

/// H-polyhedron text format: first line "d m", then m lines
/// "a_1 ... a_d b" with entries as integers or rationals "p/q".
HPolyhedron read_hrep(std::istream& in);
HPolyhedron read_hrep_file(const std::string& path);
std::string format_hrep(const HPolyhedron& p);
void write_hrep_file(const std::string& path, const HPolyhedron& p);

/// Certificate JSON: fields "k", "inequalities" (each an array of rational
/// strings a_1..a_d, b), "assignment" (outer point -> inequality index).
std::string certificate_to_json(const SeparationCertificate& cert);
void write_certificate_file(const std::string& path, const SeparationCertificate& cert);

/// FNV-1a digest of a file's raw bytes, rendered as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace rcx
