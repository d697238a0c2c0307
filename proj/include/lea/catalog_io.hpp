#ifndef LEA_CATALOG_IO_HPP
#define LEA_CATALOG_IO_HPP

#include <iosfwd>
#include <string>

#include "lea/enumerate.hpp"

namespace lea {

/// Catalog file format:
///   lea-catalog v1
///   <algebra blocks in the shared text format, one blank line after each>
///   counts: 1:1 2:1 ...
///   checksum: fnv1a64:<16 hex digits of the body>
/// The body covered by the checksum is everything between the header line
/// and the counts line. read validates the checksum, the counts, NG0-NG8 for
/// every entry, canonical form and per-size sorted order, so
/// write(read(write(c))) is byte-identical to write(c).

void write_catalog(const Catalog& c, std::ostream& out);
std::string catalog_to_text(const Catalog& c);
void save_catalog_file(const Catalog& c, const std::string& path);

Catalog read_catalog(std::istream& in);
Catalog parse_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

} // namespace lea

#endif
